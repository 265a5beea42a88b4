"""Exact integer linear algebra: sparse matrices, Smith normal form, ranks, kernels.

Two Smith normal form paths are provided.  :func:`smith_normal_form` keeps the
unimodular transforms and is meant for small and medium matrices.
:func:`elementary_divisors` returns pivots only and is built for the large,
very sparse boundary matrices of bar complexes: it first eliminates unit
pivots sparsely (Markowitz-style choice to limit fill-in) and only then hands
the remaining core to the dense routine.
"""

import logging
from dataclasses import dataclass
from math import gcd

import numpy as np

log = logging.getLogger(__name__)

# largest prime below 2**31; products of two residues fit in int64
DEFAULT_PRIME = 2147483629


class IntMatrix:
    """Sparse integer matrix, stored row-wise without explicit zeros."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, data=None):
        self.rows = int(rows)
        self.cols = int(cols)
        clean = {}
        for i, row in (data or {}).items():
            r = {j: v for j, v in row.items() if v}
            if r:
                clean[i] = r
        self._data = clean

    @classmethod
    def from_triplets(cls, rows, cols, triplets):
        data = {}
        for i, j, v in triplets:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
            row = data.setdefault(int(i), {})
            row[int(j)] = row.get(int(j), 0) + int(v)
        return cls(rows, cols, data)

    @classmethod
    def from_dense(cls, dense, cols=None):
        dense = [list(r) for r in dense]
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if dense else 0
        data = {i: {j: int(v) for j, v in enumerate(r) if v} for i, r in enumerate(dense)}
        return cls(rows, cols, data)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: 1} for i in range(n)})

    def triplets(self):
        return [(i, j, self._data[i][j]) for i in sorted(self._data) for j in sorted(self._data[i])]

    def row_dict(self):
        return {i: dict(r) for i, r in self._data.items()}

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, row in self._data.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    @property
    def nnz(self):
        return sum(len(r) for r in self._data.values())

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data.get(i, {}).get(j, 0)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def transpose(self):
        data = {}
        for i, row in self._data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return IntMatrix(self.cols, self.rows, data)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        data = {}
        odata = other._data
        for i, row in self._data.items():
            acc = {}
            for k, a in row.items():
                for j, b in odata.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + a * b
            data[i] = acc
        return IntMatrix(self.rows, other.cols, data)

    def is_zero(self):
        return not self._data

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "triplets": [[i, j, str(v)] for i, j, v in self.triplets()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls.from_triplets(obj["rows"], obj["cols"], [(i, j, int(v)) for i, j, v in obj["triplets"]])


@dataclass(frozen=True)
class SmithForm:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    pivots: tuple


def _swap_rows(M, a, b):
    M[a], M[b] = M[b], M[a]


def _swap_cols(M, a, b):
    for row in M:
        row[a], row[b] = row[b], row[a]


def _round_div(a, p):
    # nearest-integer quotient keeps remainders within |p|/2
    return (2 * a + p) // (2 * p) if p > 0 else -((2 * a - p) // (-2 * p))


def _pick_pivot(M, t, m, n):
    """Smallest-magnitude entry of the trailing block, ties broken by Markowitz cost."""
    colcount = [0] * n
    rowcount = {}
    smallest = None
    for i in range(t, m):
        row = M[i]
        c = 0
        for j in range(t, n):
            v = row[j]
            if v:
                c += 1
                colcount[j] += 1
                a = abs(v)
                if smallest is None or a < smallest:
                    smallest = a
        rowcount[i] = c
    if smallest is None:
        return None
    best = None
    for i in range(t, m):
        row = M[i]
        for j in range(t, n):
            if row[j] and abs(row[j]) == smallest:
                cost = (rowcount[i] - 1) * (colcount[j] - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j)
    return best


def _dense_snf(M, m, n, U=None, V=None):
    """In-place diagonalisation of the dense list-of-lists ``M``.

    Row operations are mirrored on ``U`` and column operations on ``V`` when
    given.  Returns the positive pivots in divisibility order.
    """
    pivots = []
    t = 0
    while t < min(m, n):
        best = _pick_pivot(M, t, m, n)
        if best is None:
            break
        _, i, j = best
        if i != t:
            _swap_rows(M, i, t)
            if U is not None:
                _swap_rows(U, i, t)
        if j != t:
            _swap_cols(M, j, t)
            if V is not None:
                _swap_cols(V, j, t)

        while True:
            p = M[t][t]
            dirty = False
            rt = M[t]
            for i in range(t + 1, m):
                a = M[i][t]
                if not a:
                    continue
                q = _round_div(a, p)
                if q:
                    ri = M[i]
                    for k in range(t, n):
                        if rt[k]:
                            ri[k] -= q * rt[k]
                    if U is not None:
                        ut, ui = U[t], U[i]
                        for k in range(len(ut)):
                            if ut[k]:
                                ui[k] -= q * ut[k]
                if M[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                a = rt[j]
                if not a:
                    continue
                q = _round_div(a, p)
                if q:
                    for i in range(t, m):
                        if M[i][t]:
                            M[i][j] -= q * M[i][t]
                    if V is not None:
                        for row in V:
                            if row[t]:
                                row[j] -= q * row[t]
                if rt[j]:
                    dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; move it to (t, t)
                best = None
                for i in range(t, m):
                    if M[i][t] and (best is None or abs(M[i][t]) < best[0]):
                        best = (abs(M[i][t]), i, t)
                for j in range(t, n):
                    if rt[j] and (best is None or abs(rt[j]) < best[0]):
                        best = (abs(rt[j]), t, j)
                _, i, j = best
                if i != t:
                    _swap_rows(M, i, t)
                    if U is not None:
                        _swap_rows(U, i, t)
                    rt = M[t]
                if j != t:
                    _swap_cols(M, j, t)
                    if V is not None:
                        _swap_cols(V, j, t)
                continue
            # enforce divisibility on the remaining block
            p = M[t][t]
            bad = None
            for i in range(t + 1, m):
                row = M[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rb = M[bad]
            for k in range(t, n):
                rt[k] += rb[k]
            if U is not None:
                ut, ub = U[t], U[bad]
                for k in range(len(ut)):
                    ut[k] += ub[k]
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        pivots.append(M[t][t])
        t += 1
    return pivots


def smith_normal_form(A):
    """Smith normal form ``U @ A @ V == D`` with unimodular ``U`` and ``V``.

    >>> smith_normal_form(IntMatrix.from_dense([[2, 0], [0, 3]])).pivots
    (1, 6)
    """
    m, n = A.shape
    M = A.to_dense()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots = _dense_snf(M, m, n, U, V)
    return SmithForm(IntMatrix.from_dense(U, m), IntMatrix.from_dense(M, n), IntMatrix.from_dense(V, n), tuple(pivots))


class _Sparse:
    """Mutable row/column incidence structure used by sparse elimination."""

    def __init__(self, rows, copy=True):
        if copy:
            self.rows = {i: dict(r) for i, r in rows.items() if r}
        else:
            self.rows = rows
        self.cols = {}
        for i, r in self.rows.items():
            for j in r:
                self.cols.setdefault(j, set()).add(i)

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def eliminate(self, i, j, inv, mod=None):
        """Pivot on (i, j); ``inv`` is the inverse of the pivot entry."""
        prow = self.rows.pop(i)
        cols = self.cols
        for c in prow:
            cols[c].discard(i)
        others = cols.pop(j)
        for r in others:
            row = self.rows[r]
            f = row[j] * inv
            if mod is not None:
                f %= mod
            for c, w in prow.items():
                if c == j:
                    continue
                nv = row.get(c, 0) - f * w
                if mod is not None:
                    nv %= mod
                if nv:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            del row[j]
            if not row:
                del self.rows[r]
        for c in prow:
            if not cols.get(c, True):
                del cols[c]

    def merge_parallel_rows(self, min_len):
        """Collapse rows that are multiples of one primitive vector (integer rows only).

        Rows ``a u`` and ``b u`` are replaced by ``gcd(a, b) u`` and zero, a
        unimodular row operation, so the row lattice and the Smith form are
        unchanged.  Elimination tends to produce many such rows in a low-rank
        residual; merging them early keeps fill-in down.
        """
        groups = {}
        for i, row in self.rows.items():
            if len(row) < min_len:
                continue
            first = min(row)
            g = 0
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if row[first] < 0:
                g = -g
            key = frozenset((c, v // g) for c, v in row.items())
            groups.setdefault(key, []).append((i, g))
        merged = 0
        for members in groups.values():
            if len(members) < 2:
                continue
            keep, g0 = members[0]
            g = abs(g0)
            for i, c in members[1:]:
                g = gcd(g, c)
                for col in self.rows.pop(i):
                    self.cols[col].discard(i)
                merged += 1
            if g != abs(g0):
                row = self.rows[keep]
                for col in row:
                    row[col] = row[col] // g0 * g
        for c in [c for c, rs in self.cols.items() if not rs]:
            del self.cols[c]
        return merged

    def unit_pass(self, mod=None, stop=None, count=0):
        """One Markowitz-ordered sweep over columns pivoting on unit entries.

        Ties are broken towards higher column indices, which measured lower
        fill-in on bar-complex boundaries.
        """
        done = 0
        order = sorted(self.cols, key=lambda c: (len(self.cols[c]), -c))
        check_at = len(order) // 16 + 1
        base_nnz = self.nnz() if mod is None else 0
        for j in order:
            if stop is not None and count + done >= stop:
                break
            rows_j = self.cols.get(j)
            if not rows_j:
                continue
            best = None
            for i in rows_j:
                v = self.rows[i][j]
                if mod is not None or v in (1, -1):
                    cost = len(self.rows[i])
                    if best is None or cost < best[0] or (cost == best[0] and i < best[1]):
                        best = (cost, i)
            if best is None:
                continue
            i = best[1]
            v = self.rows[i][j]
            inv = pow(v, -1, mod) if mod is not None else v
            self.eliminate(i, j, inv, mod)
            done += 1
            if mod is None and done % check_at == 0:
                nnz = self.nnz()
                if nnz > 2 * base_nnz:
                    self.merge_parallel_rows(min_len=64)
                    base_nnz = max(base_nnz, self.nnz())
        return done


def _divisible_pass(S):
    """Pivot on entries that divide their whole row and column.

    Clearing such a column with integral row operations (and then the row with
    column operations, which touch nothing else) splits off a 1x1 block, so
    the entry is an elementary divisor up to reordering.
    """
    found = []
    order = sorted(S.cols, key=lambda c: (len(S.cols[c]), c))
    for j in order:
        rows_j = S.cols.get(j)
        if not rows_j:
            continue
        i = min(rows_j, key=lambda r: (abs(S.rows[r][j]), len(S.rows[r]), r))
        v = S.rows[i][j]
        if any(S.rows[r][j] % v for r in rows_j) or any(w % v for w in S.rows[i].values()):
            continue
        _eliminate_exact(S, i, j, v)
        found.append(abs(v))
    return found


def _eliminate_exact(S, i, j, v):
    prow = S.rows.pop(i)
    cols = S.cols
    for c in prow:
        cols[c].discard(i)
    for r in cols.pop(j):
        row = S.rows[r]
        f = row.pop(j) // v
        for c, w in prow.items():
            if c == j:
                continue
            nv = row.get(c, 0) - f * w
            if nv:
                if c not in row:
                    cols[c].add(r)
                row[c] = nv
            elif c in row:
                del row[c]
                cols[c].discard(r)
        if not row:
            del S.rows[r]
    for c in prow:
        if not cols.get(c, True):
            del cols[c]


def _smith_chain(values):
    """Smith pivots with the same cokernel as ``diag(values)`` (nonzero entries)."""
    from sympy import factorint

    by_prime = {}
    for m in values:
        for p, e in factorint(m).items():
            by_prime.setdefault(p, []).append(e)
    out = [1] * len(values)
    for p, exps in by_prime.items():
        for pos, e in enumerate(sorted(exps)):
            out[len(values) - len(exps) + pos] *= p**e
    return out


def elementary_divisors(A, dense_limit=4_000_000, consume=False):
    """Nonzero Smith pivots of ``A`` (ones included), without transforms.

    Wide matrices are eliminated through their transpose (same pivots), which
    keeps fill-in much lower on bar-complex boundaries.  ``A`` may also be a
    plain ``{row: {col: value}}`` dict; with ``consume=True`` it is eliminated
    in place, which saves a copy on very large inputs.
    """
    if isinstance(A, IntMatrix):
        S = _Sparse(A.transpose()._data if A.cols > A.rows else A._data)
    else:
        S = _Sparse(A, copy=not consume)
    found = []
    while S.rows:
        k = S.unit_pass()
        found += [1] * k
        if k:
            continue
        more = _divisible_pass(S)
        if not more:
            break
        found += more
    if not S.rows:
        return _smith_chain(found)
    row_ids = sorted(S.rows)
    col_ids = sorted(S.cols)
    size = len(row_ids) * len(col_ids)
    log.debug("sparse elimination left a %dx%d core", len(row_ids), len(col_ids))
    if size > dense_limit:
        from pdtool.errors import BudgetExceeded

        raise BudgetExceeded(f"dense Smith core after {len(found)} sparse pivots", size, dense_limit)
    cpos = {c: k for k, c in enumerate(col_ids)}
    M = []
    for i in row_ids:
        row = [0] * len(col_ids)
        for c, v in S.rows[i].items():
            row[cpos[c]] = v
        M.append(row)
    rest = _dense_snf(M, len(row_ids), len(col_ids))
    return _smith_chain(found + rest)


def rank(A):
    return len(elementary_divisors(A))


def rank_mod_p(A, p=DEFAULT_PRIME, stop=None):
    """Rank of ``A`` over GF(p); with ``stop`` the elimination halts once that rank is reached.

    This is a lower bound for the rank over the rationals.
    """
    rows = A.row_dict() if isinstance(A, IntMatrix) else A
    S = _Sparse({i: {j: v % p for j, v in r.items() if v % p} for i, r in rows.items()})
    r = 0
    while S.rows and (stop is None or r < stop):
        k = S.unit_pass(mod=p, stop=stop, count=r)
        r += k
        if not k:
            break
    return r


def certified_rank(A, upper, primes=(DEFAULT_PRIME, 2147483587, 2147483579)):
    """Exact rational rank of ``A`` when it is known to be at most ``upper``.

    The rank over GF(p) never exceeds the rational rank, so reaching ``upper``
    modulo some prime settles it.  Otherwise fall back to exact elimination.
    """
    for p in primes:
        if rank_mod_p(A, p, stop=upper) >= upper:
            return upper
    return rank(A)


def det(A):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in (A.to_dense() if isinstance(A, IntMatrix) else A)]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * M[n - 1][n - 1]


def matmul_exact(A, B):
    """Dense exact product; uses int64 BLAS-free numpy when no overflow is possible."""
    A = [list(r) for r in A]
    B = [list(r) for r in B]
    if not A or not B or not B[0]:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    ma = max((abs(x) for r in A for x in r), default=0)
    mb = max((abs(x) for r in B for x in r), default=0)
    if ma * mb * max(len(B), 1) < 2**62:
        return (np.array(A, dtype=np.int64) @ np.array(B, dtype=np.int64)).tolist()
    return [[sum(a * b for a, b in zip(row, col) if a) for col in zip(*B)] for row in A]
