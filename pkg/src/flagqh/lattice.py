"""Integer lattice utilities: Hermite form, integer kernels, Smith invariants."""

from __future__ import annotations

from fractions import Fraction


def hermite_rows(rows) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns a basis in echelon form with positive pivots and entries above
    each pivot reduced into ``[0, pivot)``.  Zero rows are dropped.
    """
    mat = [list(map(int, r)) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    basis: list[list[int]] = []
    pivot_row = 0
    for col in range(ncols):
        # gcd-combine every remaining row into the pivot position
        active = [r for r in mat[pivot_row:] if r[col]]
        rest = [r for r in mat[pivot_row:] if not r[col]]
        if not active:
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            head = active[0]
            nxt = [head]
            for r in active[1:]:
                q = r[col] // head[col]
                r = [a - q * b for a, b in zip(r, head)]
                (nxt if r[col] else rest).append(r)
            active = nxt
        head = active[0]
        if head[col] < 0:
            head = [-a for a in head]
        mat = mat[:pivot_row] + [head] + rest
        pivot_row += 1
        if pivot_row == len(mat):
            break
    basis = [r for r in mat if any(r)]
    # reduce above pivots
    for k, row in enumerate(basis):
        p = next(i for i, a in enumerate(row) if a)
        for m in range(k):
            q = basis[m][p] // row[p]
            if q:
                basis[m] = [a - q * b for a, b in zip(basis[m], row)]
    return basis


def integer_kernel(matrix) -> list[list[int]]:
    """Basis of ``{x in Z^n : A x = 0}`` for an ``m x n`` integer matrix."""
    a = [list(map(int, r)) for r in matrix]
    m = len(a)
    n = len(a[0]) if a else 0
    if m == 0:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    # rows of [A^T | I]; unimodular row operations preserve the I-part lattice
    aug = [[a[i][k] for i in range(m)] + [int(j == k) for j in range(n)] for k in range(n)]
    reduced = hermite_rows(aug)
    kernel = [r[m:] for r in reduced if not any(r[:m])]
    return hermite_rows(kernel)


def smith_invariants(rows) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    mat = [list(map(int, r)) for r in rows]
    if not mat or not mat[0]:
        return []
    m, n = len(mat), len(mat[0])
    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(mat[i][j]), i, j) for i in range(t, m) for j in range(t, n) if mat[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        mat[t], mat[pi] = mat[pi], mat[t]
        for row in mat:
            row[t], row[pj] = row[pj], row[t]
        done = False
        while not done:
            done = True
            p = mat[t][t]
            for i in range(t + 1, m):
                q = mat[i][t] // p
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[t])]
                if mat[i][t]:
                    mat[t], mat[i] = mat[i], mat[t]
                    done = False
                    break
            if not done:
                continue
            p = mat[t][t]
            for j in range(t + 1, n):
                q = mat[t][j] // p
                if q:
                    for row in mat:
                        row[j] -= q * row[t]
                if mat[t][j]:
                    for row in mat:
                        row[t], row[j] = row[j], row[t]
                    done = False
                    break
            if not done:
                continue
            # enforce divisibility of the remaining block
            for i in range(t + 1, m):
                if any(mat[i][j] % p for j in range(t + 1, n)):
                    mat[t] = [a + b for a, b in zip(mat[t], mat[i])]
                    done = False
                    break
        diag.append(abs(mat[t][t]))
        t += 1
    return diag


def reduce_mod(vec, hermite_basis) -> tuple[int, ...]:
    """Canonical representative of ``vec`` modulo a lattice in Hermite form."""
    v = list(vec)
    for row in hermite_basis:
        p = next(i for i, a in enumerate(row) if a)
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def in_lattice(vec, hermite_basis) -> bool:
    return not any(reduce_mod(vec, hermite_basis))


def solve_rational(matrix, rhs) -> list[Fraction] | None:
    """Unique solution of a square rational system, or ``None`` if singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def inverse_rational(matrix) -> list[list[Fraction]]:
    n = len(matrix)
    cols = [solve_rational(matrix, [int(i == j) for i in range(n)]) for j in range(n)]
    if any(c is None for c in cols):
        raise ZeroDivisionError("singular matrix")
    return [[cols[j][i] for j in range(n)] for i in range(n)]
