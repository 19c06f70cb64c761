"""Exact integer linear algebra for graded-piece kernels.

A graded piece of one of the computed rings is a direct sum of cyclic
groups: one copy of R per basis line with k = 0 and one copy of R/2R per
line with k >= 1.  A ring map restricted to a graded piece is a map of
such sums, and its kernel is computed here by lifting everything to Z:

    kernel = L / D,
    L = { x in Z^a : M x lies in the lattice spanned by the t_j e_j },
    D = the lattice spanned by the s_i e_i,

with s_i, t_j the annihilators of the source and target lines (0 for a
free line).  L is the projection of an ordinary integer matrix kernel,
and L/D is read off a diagonalization of D expressed in a basis of L.
"""

from __future__ import annotations

from fractions import Fraction


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def integer_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the lattice {v in Z^ncols : rows . v = 0}.

    Unimodular column operations drive the matrix to column echelon form;
    the identity matrix dragged along turns the vanished columns into a
    kernel basis (the full kernel lattice, not a finite-index sublattice,
    because the transform is unimodular).
    """
    m = [list(r) for r in rows]
    u = _identity(ncols)

    def neg_col(j: int) -> None:
        for row in m:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]

    def addmul_col(dst: int, src: int, q: int) -> None:
        for row in m:
            row[dst] += q * row[src]
        for row in u:
            row[dst] += q * row[src]

    def swap_cols(a: int, b: int) -> None:
        for row in m:
            row[a], row[b] = row[b], row[a]
        for row in u:
            row[a], row[b] = row[b], row[a]

    pivot = 0
    for r in range(len(m)):
        while True:
            live = [j for j in range(pivot, ncols) if m[r][j]]
            if len(live) <= 1:
                break
            j0 = min(live, key=lambda j: abs(m[r][j]))
            if m[r][j0] < 0:
                neg_col(j0)
            for j in live:
                if j != j0:
                    q = m[r][j] // m[r][j0]
                    if q:
                        addmul_col(j, j0, -q)
        live = [j for j in range(pivot, ncols) if m[r][j]]
        if live:
            if live[0] != pivot:
                swap_cols(live[0], pivot)
            pivot += 1
    return [[u[i][j] for i in range(ncols)] for j in range(pivot, ncols)]


def diagonalize(mat: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Unimodular R, S with R . mat . S diagonal; returns (diagonal, R^{-1}).

    Only the inverse of the row transform is tracked: the callers feed a
    matrix of lattice generators, and column operations do not change the
    lattice the columns generate.
    """
    a = [list(r) for r in mat]
    nr = len(a)
    nc = len(a[0]) if a else 0
    rinv = _identity(nr)

    def row_addmul(dst: int, src: int, q: int) -> None:
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        for row in rinv:  # right-multiply rinv by the inverse row operation
            row[src] -= q * row[dst]

    def row_swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in rinv:
            row[i], row[j] = row[j], row[i]

    def row_neg(i: int) -> None:
        a[i] = [-x for x in a[i]]
        for row in rinv:
            row[i] = -row[i]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]

    def col_swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < nr and t < nc:
        entries = [(i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not entries:
            break
        i0, j0 = min(entries, key=lambda ij: abs(a[ij[0]][ij[1]]))
        if i0 != t:
            row_swap(t, i0)
        if j0 != t:
            col_swap(t, j0)
        if a[t][t] < 0:
            row_neg(t)
        dirty = False
        for i in range(t + 1, nr):
            q = a[i][t] // a[t][t]
            if q:
                row_addmul(i, t, -q)
            if a[i][t]:
                dirty = True
        for j in range(t + 1, nc):
            q = a[t][j] // a[t][t]
            if q:
                col_addmul(j, t, -q)
            if a[t][j]:
                dirty = True
        if dirty:
            continue  # residues are smaller than the pivot; repeat at the same t
        t += 1
    diag = [a[i][i] for i in range(min(nr, nc))]
    return diag, rinv


def solve_integer(basis: list[list[int]], targets: list[list[int]]) -> list[list[int]]:
    """Integer coordinates of each target vector in the given lattice basis.

    Returns the coefficient matrix C (len(basis) rows, one column per
    target) with basis . C = targets; raises ValueError when a target is
    not in the lattice.
    """
    nb = len(basis)
    if nb == 0:
        if any(any(t) for t in targets):
            raise ValueError("vector outside the lattice (empty basis)")
        return []
    dim = len(basis[0])
    nt = len(targets)
    # solve the dim x nb system with exact fractions, all targets at once
    aug = [[Fraction(basis[b][r]) for b in range(nb)] + [Fraction(t[r]) for t in targets]
           for r in range(dim)]
    pivots = []
    row = 0
    for col in range(nb):
        sel = next((r for r in range(row, dim) if aug[r][col]), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(dim):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    # basis vectors are independent, so every column must have a pivot
    if len(pivots) != nb:
        raise ValueError("basis vectors are not independent")
    for r in range(row, dim):
        if any(aug[r][nb + t] for t in range(nt)):
            raise ValueError("vector outside the lattice")
    coeffs = [[Fraction(0)] * nt for _ in range(nb)]
    for r, col in enumerate(pivots):
        for t in range(nt):
            coeffs[col][t] = aug[r][nb + t]
    out = []
    for r in range(nb):
        line = []
        for t in range(nt):
            v = coeffs[r][t]
            if v.denominator != 1:
                raise ValueError("vector outside the lattice (fractional coordinates)")
            line.append(int(v))
        out.append(line)
    return out


def module_kernel(matrix: list[list[int]], src_moduli: list[int],
                  tgt_moduli: list[int]) -> list[tuple[list[int], int]]:
    """Generators of the kernel of a map between direct sums of cyclic groups.

    matrix has one row per target line and one column per source line
    (modulus 0 marks a copy of Z).  Returns (vector, order) pairs giving
    independent generators of the kernel subgroup, order 0 marking a free
    generator; coordinates come back reduced modulo their line modulus.
    """
    a = len(src_moduli)
    aug_cols = [j for j, t in enumerate(tgt_moduli) if t != 0]
    rows = []
    for j, row in enumerate(matrix):
        r = list(row)
        r.extend(-tgt_moduli[jj] if jj == j else 0 for jj in aug_cols)
        rows.append(r)
    lifted = integer_kernel(rows, a + len(aug_cols))
    # the projection to the source block is injective on the lifted kernel
    basis = [v[:a] for v in lifted]
    d_cols = [[s if i == r else 0 for i in range(a)]
              for r, s in enumerate(src_moduli) if s != 0]
    coeffs = solve_integer(basis, d_cols)
    diag, rinv = diagonalize(coeffs)
    out = []
    for t in range(len(basis)):
        order = abs(diag[t]) if t < len(diag) else 0
        if order == 1:
            continue
        vec = [sum(rinv[i][t] * basis[i][coord] for i in range(len(basis)))
               for coord in range(a)]
        vec = [v % s if s else v for v, s in zip(vec, src_moduli)]
        if any(vec):
            out.append((vec, order))
    return out
