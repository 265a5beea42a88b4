"""Integer kernels with short bases, backed by FLINT's HNF and LLL."""

import flint


def short_kernel_basis(A):
    """LLL-reduced Z-basis of ``{x : A x = 0}`` as sparse dicts over column indices.

    The Hermite form of ``[A^T | I]`` puts a basis of the integer kernel in
    the rows whose left block vanishes; LLL then shortens it so that later
    differentials built from these vectors keep small coefficients.
    """
    m, n = A.shape
    if n == 0:
        return []
    aug = [[0] * (m + n) for _ in range(n)]
    for i, row in A.row_dict().items():
        for j, v in row.items():
            aug[j][i] = v
    for j in range(n):
        aug[j][m + j] = 1
    H = flint.fmpz_mat(aug).hnf()
    rows = []
    for i in range(n):
        entries = [int(H[i, c]) for c in range(m + n)]
        if not any(entries[:m]) and any(entries[m:]):
            rows.append(entries[m:])
    if not rows:
        return []
    L = flint.fmpz_mat(rows).lll()
    out = []
    for i in range(L.nrows()):
        v = {c: int(L[i, c]) for c in range(n) if L[i, c] != 0}
        if v:
            out.append(v)
    return out


def saturated_rank(vectors, width):
    """Rank of the lattice spanned by ``vectors`` if it is saturated in ``Z^width``, else -1.

    Saturated means every Smith invariant of a basis equals 1.
    """
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    dense = [[0] * width for _ in vectors]
    for row, v in zip(dense, vectors):
        for c, x in v.items():
            row[c] = x
    H = flint.fmpz_mat(dense).hnf()
    basis = [row for row in H.tolist() if any(row)]
    D = flint.fmpz_mat(basis).snf()
    if any(D[i, i] != 1 for i in range(len(basis))):
        return -1
    return len(basis)
