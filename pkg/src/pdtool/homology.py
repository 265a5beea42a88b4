"""Integral homology and cohomology of finite groups with trivial coefficients.

Every route goes through a free resolution ``F`` of Z over ZG: tensoring
(or Hom-ing) into Z leaves a complex of free abelian groups whose boundary
``d_k`` is ``F.chain_matrix(k)``.  Then

* ``H_n``: torsion = non-unit Smith pivots of ``d_{n+1}``,
  free rank = ``r_n - rank d_n - rank d_{n+1}``;
* ``H^n``: torsion = non-unit Smith pivots of ``d_n`` (the cokernel of its
  transpose), same free rank.

Routes: ``"free"`` (kernel-built resolution, the default), ``"bar"``
(normalized bar complex, budgeted) and ``"periodic"`` (cyclic groups only).
"""

from dataclasses import dataclass
from functools import reduce

from sympy import factorint

from pdtool.config import get_config
from pdtool.errors import BudgetExceeded, InvalidInput
from pdtool.linalg import IntMatrix, certified_rank, elementary_divisors
from pdtool.resolutions import (
    bar_chain_matrix,
    bar_cochain_rows,
    free_resolution,
    periodic_cyclic_resolution,
)

METHODS = ("free", "bar", "periodic")


def invariant_factors(orders):
    """Canonical invariant factors of a direct sum of cyclic groups of the given orders."""
    by_prime = {}
    for m in orders:
        if m == 0:
            raise ValueError("use free_rank for infinite cyclic summands")
        for p, e in factorint(abs(m)).items():
            by_prime.setdefault(p, []).append(e)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for p, exps in by_prime.items():
        exps = sorted(exps, reverse=True)
        for i, e in enumerate(exps):
            factors[length - 1 - i] *= p**e
    return tuple(f for f in factors if f > 1)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def order(self):
        """Order of the group, or ``None`` when it is infinite."""
        if self.free_rank:
            return None
        return reduce(lambda a, b: a * b, self.torsion, 1)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def is_cyclic_of_order(self, m):
        if self.free_rank:
            return False
        return self.torsion == ((m,) if m > 1 else ())

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["free_rank"]), tuple(int(x) for x in obj["torsion"]))

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _check_degree(n, cap=None):
    cap = get_config().degree_cap if cap is None else cap
    if n < 0:
        raise InvalidInput(f"degree must be >= 0, got {n}")
    if n > cap:
        raise BudgetExceeded("cohomological degree", n, cap)


class ChainComplex:
    """Boundaries ``d_k: Z^{r_k} -> Z^{r_{k-1}}`` of the trivial-coefficient complex."""

    def __init__(self, G, method):
        if method not in METHODS:
            raise InvalidInput(f"unknown method {method!r}; expected one of {METHODS}")
        self.G = G
        self.method = method
        self._mats = {}

    def rank_of_chains(self, k):
        if k < 0:
            return 0
        if self.method == "bar":
            return (self.G.order - 1) ** k
        return self._resolution(k).ranks[k]

    def _resolution(self, k):
        if self.method == "free":
            return free_resolution(self.G, k)
        return periodic_cyclic_resolution(self.G, k)

    def d(self, k):
        if k <= 0:
            return IntMatrix(0, self.rank_of_chains(0))
        if k not in self._mats:
            if self.method == "bar":
                self._mats[k] = bar_chain_matrix(self.G, k)
            else:
                self._mats[k] = self._resolution(k).chain_matrix(k)
        return self._mats[k]

    def pivots(self, k):
        """Nonzero Smith pivots of ``d_k``."""
        if k <= 0:
            return []
        if self.method == "bar" and k not in self._mats:
            # build the transpose directly and eliminate it in place
            return elementary_divisors(bar_cochain_rows(self.G, k), consume=True)
        return elementary_divisors(self.d(k))

    def rank_upto(self, k, upper):
        """Rational rank of ``d_k`` given that it cannot exceed ``upper``.

        On the bar complex ``dS + Sd = |G|`` in positive degrees (see
        :func:`~pdtool.resolutions.norm_homotopy`), so ``d_k`` attains the
        bound for ``k >= 2`` and no elimination is needed.
        """
        if self.method == "bar" and k >= 2:
            return upper
        M = self.d(k)
        if M.cols * M.rows <= 250_000:
            return len(elementary_divisors(M))
        return certified_rank(M, upper)


def _complex(G, method):
    if method == "periodic" and not any(o == G.order for o in G.element_orders):
        raise InvalidInput("the periodic route needs a cyclic group")
    return ChainComplex(G, method)


def homology(G, n, method="free"):
    """``H_n(G; Z)`` as abelian invariants.

    >>> from pdtool.families import from_family
    >>> str(homology(from_family("C2"), 1))
    'Z/2'
    """
    _check_degree(n)
    C = _complex(G, method)
    piv_n = C.pivots(n)
    piv_next = C.pivots(n + 1)
    free = C.rank_of_chains(n) - len(piv_n) - len(piv_next)
    return AbelianInvariants(free, tuple(p for p in piv_next if p > 1))


def cohomology(G, n, method="free"):
    """``H^n(G; Z)`` as abelian invariants.

    >>> from pdtool.families import from_family
    >>> str(cohomology(from_family("C6"), 2))
    'Z/6'
    """
    _check_degree(n)
    C = _complex(G, method)
    piv_n = C.pivots(n)
    kernel_dim = C.rank_of_chains(n) - len(piv_n)
    free = kernel_dim - C.rank_upto(n + 1, kernel_dim)
    return AbelianInvariants(free, tuple(p for p in piv_n if p > 1))


def tate_cohomology(G, n, method="free"):
    """Tate cohomology in positive degrees, where it agrees with ordinary cohomology."""
    if n <= 0:
        raise InvalidInput("only positive Tate degrees are supported")
    return cohomology(G, n, method)
