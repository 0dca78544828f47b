"""Exact rational linear algebra on dense list-of-rows matrices.

Scalars are ``int`` or :class:`fractions.Fraction`; a matrix is a list of
rows.  Nothing here mutates its arguments.  Integer matrices go through
fraction-free Bareiss elimination, everything else through plain Gaussian
elimination over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Sequence

from .errors import DimensionError, SingularMatrixError

Rat = Fraction


def to_rat(x) -> int | Fraction:
    """Coerce a scalar to ``int`` (when integral) or ``Fraction``."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return to_rat(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return to_rat(Fraction(x))
    # numpy integer scalars and the like
    if hasattr(x, "__index__"):
        return int(x)
    raise TypeError(f"cannot use {x!r} as an exact rational")


def matrix(rows) -> list[list]:
    """Return a fresh list-of-rows copy with exact entries.

    Accepts nested sequences and 2-d numpy integer/object arrays.
    """
    out = [[to_rat(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("ragged matrix")
    return out


def vector(v) -> list:
    return [to_rat(x) for x in v]


def shape(A) -> tuple[int, int]:
    return len(A), (len(A[0]) if len(A) else 0)


def is_integer_matrix(A) -> bool:
    return all(isinstance(x, int) for row in A for x in row)


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> list[list[int]]:
    return [[0] * n for _ in range(m)]


def transpose(A, ncols: int | None = None) -> list[list]:
    """Transpose; ``ncols`` gives the width of a matrix with no rows."""
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A, B) -> list[list]:
    m, k = shape(A)
    k2, n = shape(B)
    if A and k != len(B):
        raise DimensionError(f"cannot multiply {m}x{k} by {k2}x{n}")
    Bt = transpose(B, n)
    return [[to_rat(sum(a * b for a, b in zip(row, col))) for col in Bt] for row in A]


def matvec(A, x) -> list:
    if A and len(A[0]) != len(x):
        raise DimensionError(f"cannot multiply {shape(A)} matrix by vector of length {len(x)}")
    return [to_rat(sum(a * b for a, b in zip(row, x))) for row in A]


def columns(A, idx: Sequence[int]) -> list[list]:
    """Submatrix made of the columns ``idx`` (in that order)."""
    return [[row[j] for j in idx] for row in A]


def hstack(*blocks) -> list[list]:
    rows = len(blocks[0])
    if any(len(b) != rows for b in blocks):
        raise DimensionError("hstack needs equal row counts")
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows)]


def diag(entries) -> list[list]:
    n = len(entries)
    return [[to_rat(entries[i]) if i == j else 0 for j in range(n)] for i in range(n)]


def scale_to_integer(A) -> tuple[list[list[int]], int]:
    """Return ``(s*A, s)`` with ``s`` the least positive integer making ``s*A`` integral."""
    s = 1
    for row in A:
        for x in row:
            if isinstance(x, Fraction):
                s = lcm(s, x.denominator)
    return [[int(x * s) for x in row] for row in A], s


def primitive(v) -> list[int]:
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    s = 1
    for x in v:
        if isinstance(x, Fraction):
            s = lcm(s, x.denominator)
    w = [int(x * s) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return [x // g for x in w]


# -- determinants -----------------------------------------------------------


def _bareiss(A: list[list[int]]) -> int:
    M = [row[:] for row in A]
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def det(A):
    """Exact determinant of a square matrix.

    >>> det([[-1, 0], [1, -1]])
    1
    """
    m, n = shape(A)
    if m != n:
        raise DimensionError(f"determinant of non-square {m}x{n} matrix")
    if n == 0:
        return 1
    A = matrix(A)
    if is_integer_matrix(A):
        return _bareiss(A)
    M = [[Fraction(x) for x in row] for row in A]
    result = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            M[k], M[p] = M[p], M[k]
            result = -result
        pivot = M[k][k]
        result *= pivot
        for i in range(k + 1, n):
            f = M[i][k] / pivot
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
    return to_rat(result)


# -- elimination --------------------------------------------------------------


def rref(A) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the list of pivot columns."""
    M = [[Fraction(x) for x in row] for row in A]
    m, n = shape(M)
    pivots = []
    r = 0
    for j in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][j] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][j]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][j] != 0:
                f = M[i][j]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(j)
        r += 1
    return M, pivots


def rank(A) -> int:
    """Rank over Q."""
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def solve(A, b) -> list | None:
    """Some exact solution of ``A x = b``, or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    m, n = shape(A)
    if len(b) != m:
        raise DimensionError(f"right-hand side of length {len(b)} for {m} equations")
    if m == 0:
        return [0] * n
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(pivots):
        x[j] = R[i][n]
    return [to_rat(v) for v in x]


def inverse(A) -> list[list]:
    m, n = shape(A)
    if m != n:
        raise DimensionError(f"inverse of non-square {m}x{n} matrix")
    aug = [list(row) + ident for row, ident in zip(A, identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [[to_rat(x) for x in row[n:]] for row in R]


def kernel_basis(A, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel of ``A``, returned as the columns of an n x k matrix.

    The basis is the standard one read off the reduced row echelon form: one
    vector per free column.  For a unimodular integer matrix every entry of
    the echelon form lies in {-1, 0, 1} (Cramer's rule on a unimodular basis),
    so the returned basis is integral.
    """
    n = len(A[0]) if A else (ncols or 0)
    if not A:
        return identity(n)
    R, pivots = rref(A)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append([to_rat(x) for x in v])
    return transpose(basis, n) if basis else [[] for _ in range(n)]


def gram_det(B):
    """``det(B^T B)``: the squared volume of the parallelepiped on the columns of ``B``."""
    Bt = transpose(B)
    return det(matmul(Bt, B)) if Bt else 1


# -- characteristic polynomial ----------------------------------------------


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact coefficients; ``coeffs[i]`` multiplies x**i."""

    coeffs: tuple

    def __post_init__(self):
        c = [to_rat(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return to_rat(acc)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                x = "x" if i == 1 else f"x^{i}"
                term = x if mag == 1 else f"{mag}{x}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)


def char_poly(A) -> Poly:
    """``det(xI - A)`` by the Faddeev-LeVerrier recurrence over Q."""
    m, n = shape(A)
    if m != n:
        raise DimensionError(f"characteristic polynomial of non-square {m}x{n} matrix")
    A = matrix(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = zeros(n, n)
    for k in range(1, n + 1):
        AM = matmul(A, Mk)
        c_prev = coeffs[n - k + 1]
        Mk = [[AM[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        AMk = matmul(A, Mk)
        trace = sum(AMk[i][i] for i in range(n))
        coeffs[n - k] = Fraction(-trace, 1) / k
    return Poly(tuple(coeffs))


def is_symmetric(A) -> bool:
    m, n = shape(A)
    return m == n and all(A[i][j] == A[j][i] for i in range(n) for j in range(i))


def product_nonzero_eigenvalues(A):
    """Product of the nonzero eigenvalues of a symmetric matrix, read off ``char_poly``.

    A symmetric matrix is diagonalizable, so if ``c_k`` is the lowest nonzero
    coefficient of its characteristic polynomial, zero has multiplicity ``k``
    and ``(-1)**(n-k) * c_k`` is the product of the remaining ``n-k``
    eigenvalues.  For a zero matrix the empty product 1 is returned.
    """
    if not is_symmetric(A):
        raise ValueError("product_nonzero_eigenvalues needs a symmetric matrix")
    p = char_poly(A)
    n = p.degree
    k = next(i for i, c in enumerate(p.coeffs) if c != 0)
    return to_rat((-1) ** (n - k) * p.coeffs[k])
