"""Counting free homotopy representations through units in Tate cohomology.

A free homotopy representation of dimension ``d`` exists exactly when
``d + 1`` is a unit degree, i.e. ``H^{d+1}(G; Z) = Z/|G|``.  Its k-invariant is
then a generator of that group; generators correspond to the units of
``Z/|G|`` once an isomorphism is fixed, which gives ``phi(|G|)`` oriented
classes.  Reversing orientation negates the k-invariant, and for ``|G| > 2``
no unit is its own negative, so the unoriented count is half.

Residue labels depend on the chosen isomorphism ``H^{d+1} = Z/|G|``; the
counts do not.
"""

import threading
import weakref
from dataclasses import dataclass, field
from math import gcd

from pdtool.config import get_config
from pdtool.errors import BudgetExceeded, InvalidInput
from pdtool.homology import tate_cohomology
from pdtool.periodicity import period

NONE, TRIVIAL_GROUP, ORDER_TWO = "none", "trivial_group", "order_two"

_PERIODS = weakref.WeakKeyDictionary()
_LOCK = threading.Lock()
_MISSING = object()


def _period(G, bound):
    """``period(G, bound)``, memoized per group and bound."""
    with _LOCK:
        cached = _PERIODS.get(G, {}).get(bound, _MISSING)
    if cached is not _MISSING:
        return cached
    p = period(G, bound)
    with _LOCK:
        _PERIODS.setdefault(G, {})[bound] = p
    return p


def _check_degree(n):
    cap = get_config().degree_cap
    if n > cap:
        raise BudgetExceeded("cohomological degree", n, cap)


def is_unit_degree(G, n):
    """True iff ``H^n(G; Z) = Z/|G|`` for ``n >= 1``."""
    if G.order == 1:
        raise InvalidInput("unit degrees of the trivial group are not defined")
    if n < 1:
        raise InvalidInput(f"unit degrees are positive, got {n}")
    _check_degree(n)
    unit = tate_cohomology(G, n).is_cyclic_of_order(G.order)
    p = _period(G, get_config().degree_cap)
    if p is not None and unit != (n % p == 0):
        # cannot happen for a correct cohomology computation
        raise AssertionError(f"degree {n} disagrees with period {p}")
    return unit


def units_mod(m):
    return [r for r in range(1, m) if gcd(r, m) == 1] if m > 1 else [0]


@dataclass(frozen=True)
class SwanClassification:
    group: object
    dimension: int
    oriented_count: int
    unoriented_count: int
    k_invariants: tuple = field(default=())
    special_case: str = NONE

    def to_json(self):
        return {
            "group": getattr(self.group, "origin", None),
            "order": self.group.order,
            "dimension": self.dimension,
            "oriented_count": self.oriented_count,
            "unoriented_count": self.unoriented_count,
            "k_invariants": list(self.k_invariants),
            "special_case": self.special_case,
        }


def classify_hreps(G, d):
    """Oriented and unoriented counts of free homotopy representations of dimension ``d``.

    >>> from pdtool.families import from_family
    >>> c = classify_hreps(from_family("Q8"), 3)
    >>> c.oriented_count, c.unoriented_count, c.k_invariants
    (4, 2, (1, 3, 5, 7))
    """
    if d < 1:
        raise InvalidInput(f"dimension must be >= 1, got {d}")
    _check_degree(d + 1)
    if G.order == 1:
        return SwanClassification(G, d, 1, 1, (0,), TRIVIAL_GROUP)
    if G.order == 2:
        # the antipodal sphere is the only one in every dimension
        return SwanClassification(G, d, 1, 1, (1,), ORDER_TWO)
    if not is_unit_degree(G, d + 1):
        return SwanClassification(G, d, 0, 0)
    ks = tuple(units_mod(G.order))
    return SwanClassification(G, d, len(ks), len(ks) // 2, ks)


def count_free_invertible_spectra(G, d):
    """Free invertible G-spectra of dimension ``d``; in bijection with unoriented classes."""
    return classify_hreps(G, d).unoriented_count
