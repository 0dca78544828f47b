"""Integer lattices given by generator columns.

Everything is keyed on the column-style Hermite normal form: two generator
matrices span the same lattice exactly when their HNFs are identical.
"""

from __future__ import annotations

from functools import cached_property

from .errors import DimensionError
from .linalg import (
    det,
    identity,
    kernel_basis,
    matrix,
    primitive,
    shape,
    solve,
    to_rat,
    transpose,
)


def row_hnf_transform(A) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form with its transformation.

    Returns ``(H, U)`` with ``U`` unimodular and ``U A = H``.  ``H`` is in
    echelon form with nonzero rows first, strictly increasing pivot columns,
    positive pivots, and every entry above a pivot reduced into
    ``[0, pivot)``.
    """
    H = [list(map(int, row)) for row in matrix(A)]
    m, n = shape(H)
    U = identity(m)
    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][j]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            if len(nz) == 1:
                break
            for i in range(r + 1, m):
                if H[i][j]:
                    q = H[i][j] // H[r][j]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][j] // H[r][j]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U


def row_hnf(A) -> list[list[int]]:
    """Nonzero rows of the row-style HNF of ``A``."""
    H, _ = row_hnf_transform(A)
    return [row for row in H if any(row)]


def hnf(A) -> list[list[int]]:
    """Column-style Hermite normal form of the lattice spanned by the columns of ``A``.

    The result is ``rows(A) x rank(A)``: a lower staircase whose pivots are
    positive and whose entries to the left of each pivot lie in
    ``[0, pivot)``.  It depends only on the lattice, not on the generators.
    """
    d = len(A)
    Ht = row_hnf(transpose(A))
    return transpose(Ht, d) if Ht else [[] for _ in range(d)]


def integer_kernel(C, ncols: int | None = None) -> list[list[int]]:
    """Z-basis (as columns) of ``{x in Z^n : C x = 0}`` for an integer matrix ``C``."""
    n = len(C[0]) if C else (ncols or 0)
    if not C:
        return identity(n)
    H, U = row_hnf_transform(transpose(C))
    kernel_rows = [U[i] for i in range(n) if not any(H[i])]
    return transpose(kernel_rows, n) if kernel_rows else [[] for _ in range(n)]


def induced_lattice_basis(A) -> list[list[int]]:
    """Z-basis of ``Z^d`` intersected with the rational column space of ``A``.

    Obtained by saturation: the column space is cut out by integer normals
    ``W`` and the lattice is the integer kernel of ``W^T``.  Returned in
    column HNF.
    """
    A = matrix(A)
    d = len(A)
    if d == 0:
        return []
    left = kernel_basis(transpose(A), d)  # d x k, columns orthogonal to col(A)
    k = len(left[0]) if left else 0
    if k == 0:
        return identity(d)
    normals = [primitive(col) for col in transpose(left)]
    return hnf(integer_kernel(normals, d))


def lattices_equal(A, B) -> bool:
    """Do the columns of ``A`` and ``B`` generate the same lattice?"""
    if len(A) != len(B):
        return False
    return hnf(A) == hnf(B)


def lattice_contains(A, v) -> bool:
    """Is the integer vector ``v`` an integer combination of the columns of ``A``?"""
    H = hnf(A)
    if not H or not H[0]:
        return not any(v)
    # H has full column rank, so a solution is unique when it exists
    x = solve(H, list(v))
    return x is not None and all(isinstance(to_rat(c), int) for c in x)


class Lattice:
    """Lattice spanned by the integer columns of ``generators``; the HNF is computed lazily."""

    def __init__(self, generators):
        self.generators = [list(map(int, row)) for row in matrix(generators)]

    @classmethod
    def induced(cls, A) -> "Lattice":
        """The lattice ``Z^d`` intersected with the column space of ``A``."""
        return cls(induced_lattice_basis(A))

    @cached_property
    def hnf(self) -> list[list[int]]:
        return hnf(self.generators)

    @property
    def basis(self) -> list[list[int]]:
        return self.hnf

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def rank(self) -> int:
        return len(self.hnf[0]) if self.hnf else 0

    def __contains__(self, v) -> bool:
        return lattice_contains(self.hnf, v)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.dim == other.dim and self.hnf == other.hnf

    def __hash__(self):
        return hash(tuple(map(tuple, self.hnf)))

    def __repr__(self):
        return f"Lattice(rank={self.rank}, dim={self.dim}, hnf={self.hnf})"

    def coordinates(self, cols) -> list[list]:
        """Matrix ``T`` with ``cols = basis @ T``; raises if some column leaves the span."""
        K = self.basis
        cols = matrix(cols)
        if len(cols) != self.dim:
            raise DimensionError(f"vectors of length {len(cols)} in a lattice of dimension {self.dim}")
        out = []
        for c in transpose(cols):
            t = solve(K, c) if self.rank else ([] if not any(c) else None)
            if t is None:
                raise DimensionError("vector lies outside the span of the lattice")
            out.append(t)
        return transpose(out, self.rank) if out else [[] for _ in range(self.rank)]


def normalized_volume(cols, ambient) -> int | object:
    """Volume of the parallelepiped on ``cols`` in units of a fundamental cell of ``ambient``.

    ``ambient`` is a :class:`Lattice` (or a generator matrix).  Computed as
    ``|det T|`` where ``cols = basis(ambient) @ T``; that equals
    ``sqrt(gram_det(cols) / gram_det(basis))`` without leaving Q.
    """
    if not isinstance(ambient, Lattice):
        ambient = Lattice(ambient)
    T = ambient.coordinates(cols)
    k = len(T[0]) if T else 0
    if k != ambient.rank:
        raise DimensionError(f"{k} vectors given for a lattice of rank {ambient.rank}")
    return abs(det(T))
