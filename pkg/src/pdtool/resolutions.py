"""Free resolutions of the trivial module over the integral group ring.

A resolution is stored with group-ring coefficients: ``differentials[k]`` is
the boundary from degree ``k`` to degree ``k - 1`` as a list of columns, one
per free generator in degree ``k``, each a dict ``{(row, element): coeff}``.
``expanded(k)`` turns it into an ordinary integer matrix on the Z-basis
``g * e_i`` (position ``i * |G| + g``), and ``chain_matrix(k)`` applies the
augmentation entrywise, giving the boundary of the chain complex with
trivial coefficients.

Three constructions:

* :func:`bar_resolution`: the normalized bar resolution, rank ``(|G|-1)^k``.
* :func:`periodic_cyclic_resolution`: ``(t - 1)`` and the norm element
  alternating, for cyclic groups only; used as an independent oracle.
* :func:`free_resolution`: built degree by degree from integer kernels, with
  group-ring generators chosen greedily.  Ranks stay small, so this is the
  workhorse for cohomology at the fixture sizes.
"""

import logging
import threading
import weakref
from dataclasses import dataclass, field

from pdtool.config import get_config
from pdtool.errors import BudgetExceeded, InvalidInput
from pdtool.groups import prime_divisors
from pdtool.lattice import saturated_rank, short_kernel_basis
from pdtool.linalg import DEFAULT_PRIME, IntMatrix, elementary_divisors

log = logging.getLogger(__name__)


@dataclass
class Resolution:
    group: object
    kind: str
    ranks: list
    differentials: list = field(default_factory=list)  # index 0 unused

    @property
    def length(self):
        return len(self.ranks) - 1

    def expanded(self, k):
        """Integer matrix of the degree-``k`` boundary (``k = 0`` is the augmentation)."""
        G = self.group
        n = G.order
        if k == 0:
            return IntMatrix(1, n * self.ranks[0], {0: {g: 1 for g in range(n * self.ranks[0])}})
        t = G.table
        data = {}
        for j, col in enumerate(self.differentials[k]):
            for h in range(n):
                c = j * n + h
                for (i, x), v in col.items():
                    r = i * n + t[h][x]
                    row = data.setdefault(r, {})
                    row[c] = row.get(c, 0) + v
        return IntMatrix(n * self.ranks[k - 1], n * self.ranks[k], data)

    def chain_matrix(self, k):
        """Boundary ``Z^{r_k} -> Z^{r_{k-1}}`` after tensoring with the trivial module."""
        data = {}
        for j, col in enumerate(self.differentials[k]):
            for (i, _), v in col.items():
                row = data.setdefault(i, {})
                row[j] = row.get(j, 0) + v
        return IntMatrix(self.ranks[k - 1], self.ranks[k], data)

    def check(self):
        """Verify the resolution invariants on expanded matrices; raises AssertionError."""
        G = self.group
        aug = self.expanded(0)
        assert self.ranks[0] >= 1 and aug.nnz > 0, "augmentation must be surjective"
        mats = [aug] + [self.expanded(k) for k in range(1, self.length + 1)]
        for k in range(1, len(mats)):
            assert (mats[k - 1] @ mats[k]).is_zero(), f"d{k - 1} o d{k} != 0"
        # exactness in degrees 0..n-1: image of d_{k+1} is the full kernel of d_k
        for k in range(0, len(mats) - 1):
            rk = len(elementary_divisors(mats[k]))
            piv = elementary_divisors(mats[k + 1])
            assert all(p == 1 for p in piv), f"image of d{k + 1} is not saturated"
            assert rk + len(piv) == G.order * self.ranks[k], f"not exact in degree {k}"
        return True


def _bar_digits(index, k, base):
    out = [0] * k
    for pos in range(k - 1, -1, -1):
        index, r = divmod(index, base)
        out[pos] = r + 1
    return out


def _bar_index(word, base):
    idx = 0
    for e in word:
        idx = idx * base + (e - 1)
    return idx


def _check_bar_budget(G, k, budget):
    need = (G.order - 1) ** k * (k + 1)
    if need > budget:
        raise BudgetExceeded(f"bar differential d{k} of a group of order {G.order}", need, budget)


def _bar_boundary(G, word):
    """Terms ``(coefficient, element, face)`` of the normalized bar boundary of ``word``."""
    k = len(word)
    t = G.table
    terms = [(1, word[0], word[1:])]
    for i in range(k - 1):
        prod = t[word[i]][word[i + 1]]
        if prod:
            terms.append(((-1) ** (i + 1), 0, word[:i] + [prod] + word[i + 2:]))
    terms.append(((-1) ** k, 0, word[:-1]))
    return terms


def bar_resolution(G, n, budget=None):
    """Normalized bar resolution truncated at degree ``n``; rank ``(|G|-1)^k`` in degree ``k``."""
    if n < 1:
        raise InvalidInput("bar resolution degree must be >= 1")
    budget = get_config().matrix_budget if budget is None else budget
    for k in range(1, n + 1):
        _check_bar_budget(G, k, budget)
    base = G.order - 1
    ranks = [1] + [base**k for k in range(1, n + 1)]
    diffs = [None]
    for k in range(1, n + 1):
        cols = []
        for j in range(ranks[k]):
            word = _bar_digits(j, k, base)
            col = {}
            for c, x, face in _bar_boundary(G, word):
                key = (_bar_index(face, base), x)
                col[key] = col.get(key, 0) + c
            cols.append({key: v for key, v in col.items() if v})
        diffs.append(cols)
    return Resolution(G, "bar", ranks, diffs)


def bar_chain_matrix(G, k, budget=None):
    """Degree-``k`` boundary of the normalized bar complex with trivial coefficients.

    Equal to ``bar_resolution(G, k).chain_matrix(k)`` but built directly.
    """
    budget = get_config().matrix_budget if budget is None else budget
    _check_bar_budget(G, k, budget)
    base = G.order - 1
    rows = base ** (k - 1)
    cols = base**k
    data = {}
    if base == 0:
        return IntMatrix(rows if k > 1 else 1, 0)
    t = G.table
    for j in range(cols):
        word = _bar_digits(j, k, base)
        # first and last faces
        _acc(data, _bar_index(word[1:], base), j, 1)
        for i in range(k - 1):
            prod = t[word[i]][word[i + 1]]
            if prod:
                _acc(data, _bar_index(word[:i] + [prod] + word[i + 2:], base), j, (-1) ** (i + 1))
        _acc(data, _bar_index(word[:-1], base), j, (-1) ** k)
    return IntMatrix(rows, cols, data)


def bar_cochain_rows(G, k, budget=None):
    """Transpose of :func:`bar_chain_matrix` as a plain ``{row: {col: value}}`` dict.

    One row per degree-``k`` bar cell, so each row is written in one go; this
    is the memory-lean input for :func:`~pdtool.linalg.elementary_divisors`.
    """
    budget = get_config().matrix_budget if budget is None else budget
    _check_bar_budget(G, k, budget)
    base = G.order - 1
    t = G.table
    out = {}
    for j in range(base**k):
        word = _bar_digits(j, k, base)
        row = {}
        _acc_row(row, _bar_index(word[1:], base), 1)
        for i in range(k - 1):
            prod = t[word[i]][word[i + 1]]
            if prod:
                _acc_row(row, _bar_index(word[:i] + [prod] + word[i + 2:], base), (-1) ** (i + 1))
        _acc_row(row, _bar_index(word[:-1], base), (-1) ** k)
        if row:
            out[j] = row
    return out


def _acc_row(row, i, v):
    nv = row.get(i, 0) + v
    if nv:
        row[i] = nv
    else:
        del row[i]


def norm_homotopy(G, chain):
    """``S(x) = sum_g [g|x]`` on normalized bar chains with trivial coefficients.

    ``chain`` maps words (tuples of nonidentity elements) to coefficients.  On
    positive degrees ``dS + Sd = |G| * id``, so the complex is rationally
    acyclic there; :func:`transfer_identity_holds` checks this cell by cell.
    """
    out = {}
    for word, c in chain.items():
        for g in range(1, G.order):
            key = (g,) + tuple(word)
            out[key] = out.get(key, 0) + c
    return out


def bar_boundary_chain(G, chain):
    """Normalized bar boundary of a chain given as ``{word: coeff}``."""
    out = {}
    for word, c in chain.items():
        if not word:
            continue
        for s, _, face in _bar_boundary(G, list(word)):
            key = tuple(face)
            out[key] = out.get(key, 0) + s * c
    return {w: v for w, v in out.items() if v}


def transfer_identity_holds(G, k):
    """Check ``dS + Sd = |G| * id`` on every normalized bar cell of degree ``k >= 1``."""
    base = G.order - 1
    for j in range(base**k):
        word = tuple(_bar_digits(j, k, base))
        x = {word: 1}
        lhs = bar_boundary_chain(G, norm_homotopy(G, x))
        for w, v in norm_homotopy(G, bar_boundary_chain(G, x)).items():
            lhs[w] = lhs.get(w, 0) + v
        lhs = {w: v for w, v in lhs.items() if v}
        if lhs != {word: G.order}:
            return False
    return True


def _acc(data, i, j, v):
    row = data.setdefault(i, {})
    nv = row.get(j, 0) + v
    if nv:
        row[j] = nv
    else:
        del row[j]


def cyclic_generator(G):
    """Lowest-index element generating ``G``, or ``None`` if ``G`` is not cyclic."""
    return next((g for g in range(G.order) if G.element_orders[g] == G.order), None)


def periodic_cyclic_resolution(G, n):
    """The 2-periodic resolution of a cyclic group: ``t - 1`` in odd, the norm in even degrees."""
    t = cyclic_generator(G)
    if t is None:
        raise InvalidInput("periodic resolution needs a cyclic group")
    diffs = [None]
    for k in range(1, n + 1):
        if k % 2:
            col = {(0, t): 1, (0, 0): -1} if t else {}
        else:
            col = {(0, g): 1 for g in range(G.order)}
        diffs.append([col])
    return Resolution(G, "periodic", [1] * (n + 1), diffs)


def _orbit(G, v, n):
    t = G.table
    for h in range(G.order):
        yield {(p // n) * n + t[h][p % n]: c for p, c in v.items()}


class _ModSpan:
    """Row echelon basis over GF(p); only used to rank candidate generators."""

    def __init__(self, p=DEFAULT_PRIME):
        self.p = p
        self.basis = {}

    def __len__(self):
        return len(self.basis)

    def copy(self):
        other = _ModSpan(self.p)
        other.basis = dict(self.basis)
        return other

    def add(self, v):
        p = self.p
        v = {k: x % p for k, x in v.items() if x % p}
        while v:
            c = min(v)
            b = self.basis.get(c)
            if b is None:
                inv = pow(v[c], -1, p)
                self.basis[c] = {k: x * inv % p for k, x in v.items()}
                return True
            f = v[c]
            for k, x in b.items():
                nv = (v.get(k, 0) - f * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return False


def _spans_kernel(vectors, r, width):
    """True iff the vectors span a saturated rank-``r`` lattice in ``Z^width``.

    Applied to vectors inside a saturated rank-``r`` kernel, this says they
    span the whole kernel.
    """
    if r == 0:
        return True
    return saturated_rank(vectors, width) == r


MAX_CANDIDATES = 24


class _MultiSpan:
    """Spans modulo several primes at once; full rank mod every prime is the target."""

    def __init__(self, primes):
        self.spans = [_ModSpan(p) for p in primes]

    def copy(self):
        other = _MultiSpan(())
        other.spans = [s.copy() for s in self.spans]
        return other

    def add(self, v):
        for s in self.spans:
            s.add(v)

    def ranks(self):
        return [len(s) for s in self.spans]


def _best_candidate(pool, chosen, span, orbit_of, r):
    base = sum(span.ranks())
    best = None
    for idx in pool:
        if idx in chosen:
            continue
        trial = span.copy()
        for w in orbit_of(idx):
            trial.add(w)
        gain = sum(trial.ranks()) - base
        if gain and (best is None or gain > best[0]):
            best = (gain, idx, trial)
            if min(trial.ranks()) == r:
                break
    return best


def _generators(G, kernel, width):
    """Kernel vectors whose group-ring orbits span the kernel lattice.

    Candidates are chosen greedily by the rank they add modulo a large prime
    and modulo each prime dividing ``|G|`` (where index defects show up); the
    result is then checked exactly and redundant generators are pruned.
    """
    n = G.order
    r = len(kernel)
    orbits = {}

    def orbit_of(idx):
        if idx not in orbits:
            orbits[idx] = list(_orbit(G, kernel[idx], n))
        return orbits[idx]

    primes = [DEFAULT_PRIME] + prime_divisors(n)
    span = _MultiSpan(primes)
    chosen = []
    order = sorted(range(r), key=lambda i: (sum(x * x for x in kernel[i].values()), i))
    while min(span.ranks()) < r:
        best = _best_candidate(order[:MAX_CANDIDATES], chosen, span, orbit_of, r)
        if best is None:
            best = _best_candidate(order, chosen, span, orbit_of, r)
        chosen.append(best[1])
        span = best[2]

    def spans(idxs):
        return _spans_kernel([w for i in idxs for w in orbit_of(i)], r, width)

    def spans_mod(idxs):
        trial = _MultiSpan(primes)
        for i in idxs:
            for w in orbit_of(i):
                trial.add(w)
        return min(trial.ranks()) == r

    if not spans(chosen):
        for idx in order:
            if idx not in chosen:
                chosen.append(idx)
                if spans(chosen):
                    break
    for pos in range(len(chosen) - 1, -1, -1):
        rest = chosen[:pos] + chosen[pos + 1:]
        if spans_mod(rest) and spans(rest):
            chosen = rest
    return [kernel[i] for i in chosen]


def _extend(res):
    """Append one degree to a kernel-built resolution."""
    G = res.group
    n = G.order
    k = res.length
    M = res.expanded(k)
    kernel = short_kernel_basis(M)
    gens = _generators(G, kernel, M.cols)
    cols = []
    for v in gens:
        cols.append({(p // n, p % n): c for p, c in v.items()})
    res.ranks.append(len(gens))
    res.differentials.append(cols)
    log.debug("free resolution of order-%d group: degree %d rank %d", n, k + 1, len(gens))


_CACHE = weakref.WeakKeyDictionary()
_LOCK = threading.Lock()


def free_resolution(G, n):
    """Kernel-built free resolution of length at least ``n`` (cached per group)."""
    with _LOCK:
        res = _CACHE.get(G)
        if res is None:
            res = Resolution(G, "free", [1], [None])
            _CACHE[G] = res
        while res.length < n:
            _extend(res)
        return Resolution(G, "free", res.ranks[: n + 1], res.differentials[: n + 1])
