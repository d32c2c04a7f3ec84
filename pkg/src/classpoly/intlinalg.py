"""Exact linear algebra over the integers and rationals.

Vectors are tuples, matrices are tuples of row tuples.  Everything here is
exact: integer rows stay integer, rational solves use ``fractions.Fraction``.
No floats enter any computation in this module.
"""

from __future__ import annotations

from fractions import Fraction

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0.

    >>> xgcd(12, 18)
    (-1, 1, 6)
    """
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def dot(u, v):
    """Exact dot product; works for int and Fraction entries."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(u, v))


def identity_matrix(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    """Matrix times column vector."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v, a):
    """Row vector times matrix."""
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]) if a else 0))


def transpose(a):
    return tuple(zip(*a))


def mat_fraction_inverse(a) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_int_inverse(a) -> IntMat:
    """Inverse of an integer matrix that is invertible over the integers."""
    inv = mat_fraction_inverse(a)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not invertible over the integers")
            irow.append(int(x))
        out.append(tuple(irow))
    return tuple(out)


def solve_fraction(a, b):
    """Solve A x = b exactly (A square, column convention); None if singular/inconsistent."""
    n = len(a)
    m = len(a[0]) if a else 0
    aug = [[Fraction(a[i][j]) for j in range(m)] + [Fraction(b[i])] for i in range(n)]
    pivots = []
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    # inconsistent rows
    for r in range(row, n):
        if aug[r][m] != 0:
            return None
    x = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        x[col] = aug[r][m]
    return tuple(x)


def fraction_rank(a) -> int:
    """Rank of a matrix over the rationals."""
    rows = [[Fraction(x) for x in row] for row in a]
    rank = 0
    n = len(rows)
    m = len(rows[0]) if rows else 0
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, n) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        for r in range(row + 1, n):
            if rows[r][col] != 0:
                f = rows[r][col] / rows[row][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[row])]
        row += 1
        rank += 1
    return rank


class IntRowSpan:
    """The integer row span of a set of integer vectors, with membership tests.

    The basis is kept in a Hermite-style echelon form: each basis row has a
    pivot column, pivots are strictly increasing, and reduction of a candidate
    vector succeeds exactly when the vector lies in the span.

    >>> L = IntRowSpan([(2, 0), (0, 3)])
    >>> (2, 3) in L, (1, 0) in L
    (True, False)
    """

    def __init__(self, rows, width=None):
        rows = [tuple(r) for r in rows]
        if width is None:
            if not rows:
                raise ValueError("width required for an empty generating set")
            width = len(rows[0])
        self.width = width
        self.basis: list[list[int]] = []
        for r in rows:
            self.add(r)

    def add(self, vec) -> None:
        vec = list(vec)
        if len(vec) != self.width:
            raise ValueError("dimension mismatch")
        for row in self.basis:
            j = next(i for i, x in enumerate(row) if x)
            if vec[j]:
                a, b = row[j], vec[j]
                if b % a == 0:
                    q = b // a
                    for k in range(self.width):
                        vec[k] -= q * row[k]
                else:
                    x, y, g = xgcd(a, b)
                    new_row = [x * r + y * v for r, v in zip(row, vec)]
                    mult_r, mult_v = a // g, b // g
                    vec = [mult_r * v - mult_v * r for r, v in zip(row, vec)]
                    row[:] = new_row
        if any(vec):
            self.basis.append(vec)
            self.basis.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
            self._renormalize()

    def _renormalize(self):
        # restore echelon shape after inserting a row
        changed = True
        while changed:
            changed = False
            self.basis.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
            for i in range(len(self.basis)):
                for k in range(i + 1, len(self.basis)):
                    ri = self.basis[i]
                    rk = self.basis[k]
                    ji = next(a for a, x in enumerate(ri) if x)
                    jk = next(a for a, x in enumerate(rk) if x)
                    if ji == jk:
                        a, b = ri[ji], rk[jk]
                        x, y, g = xgcd(a, b)
                        new_i = [x * p + y * q for p, q in zip(ri, rk)]
                        new_k = [(a // g) * q - (b // g) * p for p, q in zip(ri, rk)]
                        self.basis[i] = new_i
                        if any(new_k):
                            self.basis[k] = new_k
                        else:
                            del self.basis[k]
                        changed = True
                        break
                if changed:
                    break

    def __contains__(self, vec) -> bool:
        vec = list(vec)
        if len(vec) != self.width:
            raise ValueError("dimension mismatch")
        for row in self.basis:
            j = next(i for i, x in enumerate(row) if x)
            if vec[j]:
                if vec[j] % row[j] != 0:
                    return False
                q = vec[j] // row[j]
                for k in range(self.width):
                    vec[k] -= q * row[k]
        return not any(vec)


def smith_normal_form(mat) -> tuple[list[int], IntMat, IntMat]:
    """Smith normal form with transforms.

    Returns (d, U, V) where U*mat*V is diagonal with diagonal entries d
    (nonnegative, each dividing the next) and U, V are unimodular.

    >>> d, U, V = smith_normal_form(((2, 4), (6, 8)))
    >>> d
    [2, 4]
    """
    A = [list(r) for r in mat]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [list(r) for r in identity_matrix(m)]
    V = [list(r) for r in identity_matrix(n)]

    def row_add(i, j, c):  # row i += c * row j
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_add(i, j, c):  # col i += c * col j
        for r in range(m):
            A[r][i] += c * A[r][j]
        for r in range(n):
            V[r][i] += c * V[r][j]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def row_scale(i, c):
        A[i] = [c * a for a in A[i]]
        U[i] = [c * a for a in U[i]]

    t = 0
    while t < min(m, n):
        # locate a pivot of minimal absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            piv = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t] % piv != 0:
                    done = False
                q = A[i][t] // piv
                if q:
                    row_add(i, t, -q)
            for j in range(t + 1, n):
                if A[t][j] % piv != 0:
                    done = False
                q = A[t][j] // piv
                if q:
                    col_add(j, t, -q)
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                # smaller remainder became available; re-pick pivot
                best = None
                for i in range(t, m):
                    for j in range(t, n):
                        if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                            best = (i, j)
                row_swap(t, best[0])
                col_swap(t, best[1])
                continue
            if done:
                # pivot must also divide the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % piv != 0:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is not None:
                    row_add(t, bad, 1)
                    continue
                break
        if A[t][t] < 0:
            row_scale(t, -1)
        t += 1
    d = [A[i][i] for i in range(min(m, n))]
    return d, tuple(tuple(r) for r in U), tuple(tuple(r) for r in V)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
