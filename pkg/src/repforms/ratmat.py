"""Exact linear algebra over Fractions for small (n <= 4) matrices.

Matrices are tuples of row tuples; vectors are tuples.  Everything stays
in exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def as_fraction_matrix(rows):
    """Copy a nested sequence into an immutable Fraction matrix."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n):
    """The n x n identity matrix."""
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(a):
    """Matrix transpose."""
    return tuple(zip(*a))


def mat_mul(a, b):
    """Matrix product a @ b."""
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, x):
    """Matrix-vector product a @ x."""
    return tuple(sum(c * v for c, v in zip(row, x)) for row in a)


def vec_mat(x, a):
    """Row-vector product x @ a."""
    return tuple(sum(v * a[i][j] for i, v in enumerate(x)) for j in range(len(a[0])))


def mat_add(a, b):
    """Entrywise sum."""
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    """Entrywise difference."""
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a):
    """Scalar multiple c * a."""
    return tuple(tuple(c * x for x in row) for row in a)


def det_exact(a):
    """Determinant by cofactor expansion (fine for n <= 4)."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = Fraction(0)
    sign = 1
    for j in range(n):
        if a[0][j]:
            minor = tuple(tuple(row[k] for k in range(n) if k != j) for row in a[1:])
            total += sign * a[0][j] * det_exact(minor)
        sign = -sign
    return total


def mat_inv(a):
    """Inverse by Gauss-Jordan elimination; raises ZeroDivisionError if singular."""
    n = len(a)
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv = Fraction(1) / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def solve_exact(rows, rhs):
    """Solve a (possibly overdetermined) exact linear system.

    Returns the unique solution as a tuple of Fractions.  Raises
    ArithmeticError if the system is inconsistent or underdetermined --
    callers use that as a self-check.
    """
    m = len(rows)
    if m == 0:
        raise ArithmeticError("empty system")
    ncols = len(rows[0])
    work = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = Fraction(1) / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(m):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if work[i][ncols]:
            raise ArithmeticError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ArithmeticError("underdetermined linear system")
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = work[i][ncols]
    return tuple(solution)
