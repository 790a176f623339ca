"""Truncated integral simplicial homology via Smith normal form.

Coefficients are exact (Python integers).  Homology is reported only in
degrees <= N-1 for a complex truncated at level N; degrees at and above
the truncation are undefined, not zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TwoCatError
from .simplicial import SimplicialMap, TruncatedSimplicialSet


# ---------------------------------------------------------------------------
# integer matrices as lists of rows
# ---------------------------------------------------------------------------

def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def mat_mul(A, B, cols=None):
    n = len(A)
    k = len(B[0]) if B else (cols if cols is not None else 0)
    out = zeros(n, k)
    for i in range(n):
        Ai = A[i]
        for j, a in enumerate(Ai):
            if a:
                Bj = B[j]
                Oi = out[i]
                for c in range(k):
                    Oi[c] += a * Bj[c]
    return out


def is_zero(A):
    return all(all(v == 0 for v in row) for row in A)


def smith_normal_form(A):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (diag, V, Vinv) where diag is the list of nonzero invariant
    factors d_1 | d_2 | ... and V, Vinv are the column transformation and
    its inverse: A . V has the diagonal in its leading block, and Vinv
    expresses original coordinates in the transformed basis.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [row[:] for row in A]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]

    def add_row(i, j, k):  # row_i += k * row_j
        Si, Sj = S[i], S[j]
        for c in range(n):
            Si[c] += k * Sj[c]

    def neg_row(i):
        S[i] = [-v for v in S[i]]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_col(i, j, k):  # col_i += k * col_j ; Vinv: row_j -= k * row_i
        for row in S:
            row[i] += k * row[j]
        for row in V:
            row[i] += k * row[j]
        Ri, Rj = Vinv[i], Vinv[j]
        for c in range(n):
            Rj[c] -= k * Ri[c]

    def neg_col(i):
        for row in S:
            row[i] = -row[i]
        for row in V:
            row[i] = -row[i]
        Vinv[i] = [-v for v in Vinv[i]]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(S[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if S[t][t] < 0:
            neg_row(t)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t]:
                        swap_rows(t, i)
                        if S[t][t] < 0:
                            neg_row(t)
                        dirty = True
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        if S[t][t] < 0:
                            neg_col(t)
                        dirty = True
            if not dirty:
                break
        # divisibility: fold any non-multiple into the pivot block
        d = S[t][t]
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if S[i][j] % d:
                    add_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
            if t >= min(m, n):
                break

    diag = [S[k][k] for k in range(min(m, n)) if S[k][k]]
    return diag, V, Vinv


def solve_in_lattice(Vinv, rank, B, cols):
    """Express columns of B (which must lie in the kernel lattice) in the
    kernel basis given by the trailing columns of V."""
    coords = mat_mul(Vinv, B, cols=cols)
    for i in range(rank):
        if any(v != 0 for v in coords[i]):
            raise TwoCatError("solve_in_lattice: column not in kernel lattice")
    return coords[rank:]


# ---------------------------------------------------------------------------
# chain complexes
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class ChainComplex:
    n_max: int
    basis: dict       # degree -> tuple of nondegenerate simplices
    boundary: dict    # degree n (1..n_max) -> matrix C_n -> C_{n-1}
    name: str = ""

    def dim(self, n):
        return len(self.basis.get(n, ()))


@dataclass(frozen=True)
class HomologyResult:
    degree: int
    betti: int
    torsion: tuple

    def __str__(self):
        parts = ["Z"] * self.betti + [f"Z/{t}" for t in self.torsion]
        return f"H_{self.degree} = " + (" + ".join(parts) if parts else "0")


def nondegenerate_levels(X: TruncatedSimplicialSet):
    levels = {0: tuple(X.level(0))}
    for n in range(1, X.n_max + 1):
        degenerate = set()
        for i in range(n):
            degenerate.update(X.degens[(n - 1, i)].values())
        levels[n] = tuple(x for x in X.level(n) if x not in degenerate)
    return levels


def normalized_chain_complex(X: TruncatedSimplicialSet) -> ChainComplex:
    """Bases are the nondegenerate simplices; the boundary is the alternating
    face sum projected to the nondegenerate quotient.  Verifies dd = 0."""
    basis = nondegenerate_levels(X)
    index = {n: {x: k for k, x in enumerate(basis[n])} for n in basis}
    boundary = {}
    for n in range(1, X.n_max + 1):
        M = zeros(len(basis[n - 1]), len(basis[n]))
        for col, x in enumerate(basis[n]):
            for i in range(n + 1):
                y = X.face(n, i, x)
                row = index[n - 1].get(y)
                if row is not None:
                    M[row][col] += (-1) ** i
        boundary[n] = M
    cc = ChainComplex(X.n_max, basis, boundary, name=X.name)
    for n in range(2, X.n_max + 1):
        if not is_zero(mat_mul(boundary[n - 1], boundary[n])):
            raise TwoCatError(f"normalized complex of {X.name}: dd != 0 at degree {n}")
    return cc


def homology(cc: ChainComplex, degree: int) -> HomologyResult:
    """H_i = ker d_i / im d_{i+1} over the integers, degrees <= N-1 only."""
    if degree < 0 or degree > cc.n_max - 1:
        raise TwoCatError(f"homology: degree {degree} outside validated range "
                          f"0..{cc.n_max - 1}")
    diag_in = smith_normal_form(cc.boundary[degree + 1])[0]
    if degree == 0:
        cycles = cc.dim(0)
    else:
        cycles = cc.dim(degree) - len(smith_normal_form(cc.boundary[degree])[0])
    torsion = tuple(d for d in diag_in if d > 1)
    return HomologyResult(degree, cycles - len(diag_in), torsion)


# ---------------------------------------------------------------------------
# induced maps
# ---------------------------------------------------------------------------

def chain_map(f: SimplicialMap):
    """Matrices of the induced map on normalized complexes; degenerate images
    project to zero.  The chain-map identity is asserted."""
    src = normalized_chain_complex(f.source)
    tgt = normalized_chain_complex(f.target)
    index = {n: {x: k for k, x in enumerate(tgt.basis[n])} for n in tgt.basis}
    mats = {}
    for n in range(f.source.n_max + 1):
        M = zeros(tgt.dim(n), src.dim(n))
        for col, x in enumerate(src.basis[n]):
            row = index[n].get(f.at(n, x))
            if row is not None:
                M[row][col] += 1
        mats[n] = M
    for n in range(1, f.source.n_max + 1):
        lhs = mat_mul(tgt.boundary[n], mats[n], cols=src.dim(n))
        rhs = mat_mul(mats[n - 1], src.boundary[n], cols=src.dim(n))
        if lhs != rhs:
            raise TwoCatError(f"chain_map: not a chain map at degree {n}")
    return src, tgt, mats


def _presentation(cc: ChainComplex, degree: int):
    """H_degree presented as coker(R) on the kernel lattice: returns
    (kernel basis K, relation matrix R, cycle-coordinate data (Vinv, rank))."""
    dim = cc.dim(degree)
    if degree == 0:
        K = [[int(i == j) for j in range(dim)] for i in range(dim)]
        return K, cc.boundary[1], (None, 0)
    diag, V, Vinv = smith_normal_form(cc.boundary[degree])
    r = len(diag)
    K = [[V[i][j] for j in range(r, dim)] for i in range(dim)]
    R = solve_in_lattice(Vinv, r, cc.boundary[degree + 1], cols=cc.dim(degree + 1))
    return K, R, (Vinv, r)


def _cycle_coords(coord_data, cycles, dim, n_cols):
    Vinv, r = coord_data
    if Vinv is None:
        return cycles
    return solve_in_lattice(Vinv, r, cycles, cols=n_cols)


def induced_homology_map(f: SimplicialMap, degree: int):
    """Matrix of the induced chain-level map on homology generators, written
    in kernel-basis coordinates of source and target."""
    src, tgt, mats = chain_map(f)
    if degree > f.source.n_max - 1:
        raise TwoCatError("induced_homology_map: degree outside validated range")
    K_s, _, _ = _presentation(src, degree)
    _, _, coords_t = _presentation(tgt, degree)
    k_s = len(K_s[0]) if K_s else 0
    fK = mat_mul(mats[degree], K_s, cols=k_s)
    return _cycle_coords(coords_t, fK, tgt.dim(degree), k_s)


def is_homology_iso_upto(f: SimplicialMap, k: int) -> bool:
    """True iff the induced map is an isomorphism on H_i for all i <= k:
    equal betti numbers and torsion plus surjectivity of the induced map
    (finitely generated abelian groups are Hopfian, so a surjection between
    abstractly isomorphic groups is an isomorphism)."""
    src, tgt, mats = chain_map(f)
    for degree in range(k + 1):
        hs, ht = homology(src, degree), homology(tgt, degree)
        if (hs.betti, hs.torsion) != (ht.betti, ht.torsion):
            return False
        K_s, _, _ = _presentation(src, degree)
        K_t, R_t, coords_t = _presentation(tgt, degree)
        k_s = len(K_s[0]) if K_s else 0
        k_t = len(K_t[0]) if K_t else 0
        if k_t == 0:
            continue
        fK = mat_mul(mats[degree], K_s, cols=k_s)
        M = _cycle_coords(coords_t, fK, tgt.dim(degree), k_s)
        # surjective iff the columns of M together with the relations span
        augmented = [M[i] + R_t[i] for i in range(k_t)]
        diag = smith_normal_form(augmented)[0]
        if len(diag) != k_t or any(d != 1 for d in diag):
            return False
    return True
