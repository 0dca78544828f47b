"""Matroids represented by integer matrices.

A :class:`RepMatroid` wraps a representation matrix and caches its bases
and signed cocircuits.  Matrices that are not of full row rank are first
brought to full row rank by integer row operations (the nonzero rows of the
row Hermite normal form); this keeps the column matroid, the row space and
the lattice generated by the columns, so "maximal minor" always means a
minor of size ``rank(M)``.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from .errors import InstanceTooLarge, InvariantViolation, NotUnimodularError
from .lattice import row_hnf
from .linalg import det, kernel_basis, matrix, primitive, rank, rref, transpose

DEFAULT_CAP = 200_000


class SignVector(tuple):
    """A vector over {-1, 0, +1}."""

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if any(x not in (-1, 0, 1) for x in entries):
            raise ValueError(f"sign vector entries must be -1, 0 or 1: {entries}")
        return super().__new__(cls, entries)

    @classmethod
    def of(cls, v) -> "SignVector":
        """Componentwise sign of a real vector."""
        return cls((x > 0) - (x < 0) for x in v)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self) if x)

    def __neg__(self) -> "SignVector":
        return SignVector(-x for x in self)

    def canonical(self) -> "SignVector":
        """Representative of the pair ``{v, -v}`` whose first nonzero entry is +1."""
        for x in self:
            if x:
                return self if x > 0 else -self
        return self

    def conforms_to(self, other) -> bool:
        """True when no coordinate has opposite nonzero signs."""
        return all(a * b >= 0 for a, b in zip(self, other))

    def __repr__(self):
        return "SignVector(" + "".join({1: "+", -1: "-", 0: "0"}[x] for x in self) + ")"


def full_row_rank_form(M) -> list[list[int]]:
    """Full-row-rank integer matrix with the same columns matroid, row space and column lattice."""
    M = matrix(M)
    return row_hnf(M) if M else []


def _check_cap(count: int, cap: int | None, what: str = "column subsets"):
    if cap is not None and count > cap:
        raise InstanceTooLarge(count, cap, what)


def is_unimodular(M, cap: int | None = DEFAULT_CAP) -> bool:
    """Are all rank-sized minors of ``M`` in {-1, 0, 1}?

    Minors are taken after reducing to full row rank with integer row
    operations, which makes the answer independent of which rows are kept.
    Non-integer matrices are never unimodular.
    """
    M = matrix(M)
    if any(not isinstance(x, int) for row in M for x in row):
        return False
    T = full_row_rank_form(M)
    if not T:
        return True
    r, n = len(T), len(T[0])
    _check_cap(comb(n, r), cap)
    for B in itertools.combinations(range(n), r):
        if det([[row[j] for j in B] for row in T]) not in (-1, 0, 1):
            return False
    return True


def is_totally_unimodular(M, cap: int | None = DEFAULT_CAP) -> bool:
    """Is every square minor of ``M`` in {-1, 0, 1}?

    Minors of size k are expanded along their first row from the memoized
    minors of size k-1, so each minor costs O(k) multiplications.
    """
    M = matrix(M)
    m = len(M)
    n = len(M[0]) if M else 0
    total = sum(comb(m, k) * comb(n, k) for k in range(1, min(m, n) + 1))
    _check_cap(total, cap, "square minors")
    if any(x not in (-1, 0, 1) for row in M for x in row):
        return False
    prev = {((i,), (j,)): M[i][j] for i in range(m) for j in range(n)}
    for k in range(2, min(m, n) + 1):
        cur = {}
        for R in itertools.combinations(range(m), k):
            top, rest = R[0], R[1:]
            for C in itertools.combinations(range(n), k):
                val = 0
                for pos, c in enumerate(C):
                    a = M[top][c]
                    if a:
                        sub = prev[(rest, C[:pos] + C[pos + 1:])]
                        val += a * sub if pos % 2 == 0 else -a * sub
                if val not in (-1, 0, 1):
                    return False
                cur[(R, C)] = val
        prev = cur
    return True


class RepMatroid:
    """Column matroid of an integer (or rational) matrix, with cached bases and cocircuits.

    ``ncols`` is only needed for matrices with no rows.
    """

    def __init__(self, M, ncols: int | None = None, cap: int | None = DEFAULT_CAP):
        self.matrix = matrix(M)
        self.n = len(self.matrix[0]) if self.matrix else (ncols or 0)
        self.cap = cap

    @cached_property
    def reduced(self) -> list[list]:
        """Full-row-rank representation of the same matroid (integer when possible)."""
        M = self.matrix
        if all(isinstance(x, int) for row in M for x in row):
            return full_row_rank_form(M)
        R, piv = rref(M)
        return R[: len(piv)]

    @cached_property
    def rank(self) -> int:
        return len(self.reduced)

    def _minor(self, B: Sequence[int]):
        return det([[row[j] for j in B] for row in self.reduced])

    @cached_property
    def _bases(self) -> tuple[tuple[int, ...], ...]:
        r, n = self.rank, self.n
        _check_cap(comb(n, r), self.cap)
        return tuple(B for B in itertools.combinations(range(n), r) if self._minor(B) != 0)

    def bases(self) -> list[tuple[int, ...]]:
        """All bases as sorted 0-based index tuples, in lexicographic order."""
        return list(self._bases)

    def independent(self, S: Iterable[int]) -> bool:
        S = list(S)
        if any(not 0 <= j < self.n for j in S):
            raise IndexError(f"column index out of range 0..{self.n - 1}: {S}")
        if len(set(S)) != len(S):
            return False
        if not S:
            return True
        return rank([[row[j] for j in S] for row in self.reduced]) == len(S) if self.reduced else False

    @cached_property
    def _cocircuits(self) -> tuple[SignVector, ...]:
        T = self.reduced
        r, n = self.rank, self.n
        if r == 0:
            return ()
        _check_cap(comb(n, r - 1), self.cap)
        found = set()
        for S in itertools.combinations(range(n), r - 1):
            sub = [[row[j] for j in S] for row in T]
            if r > 1 and rank(sub) != r - 1:
                continue
            # u spans the left kernel of T_S; c = u^T T vanishes exactly on the flat of S
            u = [row[0] for row in kernel_basis(transpose(sub, r), r)] if r > 1 else [1]
            c = [sum(ui * row[j] for ui, row in zip(u, T)) for j in range(n)]
            c = primitive(c)
            if any(x not in (-1, 0, 1) for x in c):
                raise NotUnimodularError(
                    f"cocircuit direction {c} has entries outside {{-1,0,1}}: matrix is not unimodular"
                )
            found.add(SignVector(c).canonical())
        return tuple(sorted(found, reverse=True))

    def cocircuits(self) -> list[SignVector]:
        """Signed cocircuits (one per +/- pair, first nonzero entry +1).

        For every independent set S of size rank-1, the row-space vector that
        vanishes on S is scaled to a primitive integer vector.  For a
        unimodular matrix that vector is already a {-1,0,1} vector, namely the
        cocircuit of the hyperplane spanned by S.
        """
        return list(self._cocircuits)

    @cached_property
    def _dual(self) -> list[list]:
        T = self.reduced
        n = self.n
        K = kernel_basis(T, n) if T else [[int(i == j) for j in range(n)] for i in range(n)]
        D = transpose(K) if K and K[0] else []
        return D

    def dual_representation(self) -> list[list]:
        """Matrix whose rows are a basis of ker M (a representation of the dual matroid)."""
        D = self._dual
        if any(not isinstance(x, int) for row in D for x in row):
            raise InvariantViolation("kernel basis of a unimodular matrix should be integral")
        return [row[:] for row in D]

    def dual(self) -> "RepMatroid":
        return RepMatroid(self.dual_representation(), ncols=self.n, cap=self.cap)

    def circuits(self) -> list[SignVector]:
        """Signed circuits: minimal-support {-1,0,1} kernel vectors (the dual's cocircuits)."""
        return self.dual().cocircuits()

    def is_unimodular(self) -> bool:
        return is_unimodular(self.matrix, cap=self.cap)

    def __repr__(self):
        return f"RepMatroid(rank={self.rank}, n={self.n})"


def _as_matroid(M) -> RepMatroid:
    return M if isinstance(M, RepMatroid) else RepMatroid(M)


def bases(M) -> list[tuple[int, ...]]:
    return _as_matroid(M).bases()


def independent(M, S) -> bool:
    return _as_matroid(M).independent(S)


def cocircuits(M) -> list[SignVector]:
    return _as_matroid(M).cocircuits()


def circuits(M) -> list[SignVector]:
    return _as_matroid(M).circuits()


def dual_representation(M) -> list[list]:
    return _as_matroid(M).dual_representation()


def cocircuit_matrix(M) -> list[list[int]]:
    """Cocircuits stacked as the columns of an n x k matrix."""
    mat = _as_matroid(M)
    C = mat.cocircuits()
    return transpose([list(c) for c in C], mat.n) if C else [[] for _ in range(mat.n)]
