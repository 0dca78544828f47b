"""Zonotopes generated by the columns of a matrix.

Volumes are exact and lattice-normalized: a rank-r zonotope in R^d is
measured in units of a fundamental cell of the lattice ``Z^d`` intersected
with its linear span, which is ordinary volume when r = d.  The volume is
the sum over the bases of the column matroid of the parallelepiped volumes.

The two dissect-and-rearrange maps live here too: :class:`Rearrangement`
carries the centered zonotope of a full-row-rank unimodular ``M`` onto the
parallelepiped of ``L = M M^T``, and :class:`BarycenterRearrangement` carries
the zonotope on ``{beta} + {b_i - beta}`` onto the parallelepiped on the
``b_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, InvariantViolation, SingularMatrixError
from .lattice import Lattice, induced_lattice_basis
from .linalg import (
    det,
    hstack,
    inverse,
    is_integer_matrix,
    kernel_basis,
    matmul,
    matrix,
    matvec,
    primitive,
    rank,
    scale_to_integer,
    shape,
    to_rat,
    transpose,
    vector,
)
from .lp import in_zonotope
from .matroid import DEFAULT_CAP, RepMatroid, SignVector, _check_cap


@dataclass(frozen=True)
class Zonotope:
    """Minkowski sum of the segments ``[0, M_j]``, or of ``[-M_j/2, M_j/2]`` when ``centered``."""

    generators: tuple
    centered: bool = False

    def __init__(self, generators, centered: bool = False):
        object.__setattr__(self, "generators", tuple(map(tuple, matrix(generators))))
        object.__setattr__(self, "centered", centered)

    @property
    def matrix(self) -> list[list]:
        return [list(r) for r in self.generators]

    @property
    def dimension(self) -> int:
        return rank(self.matrix)

    @property
    def center(self) -> list:
        """Barycenter of the origin-cornered copy: half the row sums."""
        return [to_rat(Fraction(sum(r), 2)) for r in self.generators]

    def volume(self, cap: int | None = DEFAULT_CAP):
        return volume(self.matrix, cap=cap)

    def __contains__(self, p) -> bool:
        return contains(self.matrix, p, centered=self.centered)


def _volume_integer(M, cap):
    d, n = shape(M)
    K = induced_lattice_basis(M)
    T = Lattice(K).coordinates(M)  # r x n, integer because M lies in the lattice
    r = len(T)
    if r == 0:
        return 1
    _check_cap(comb(n, r), cap)
    total = 0
    for B in itertools.combinations(range(n), r):
        total += abs(det([[row[j] for j in B] for row in T]))
    return total


def volume(M, cap: int | None = DEFAULT_CAP):
    """Exact lattice-normalized volume of ``Z(M)``.

    Rational generators are scaled to integers first; an r-dimensional
    zonotope scaled by s has its volume scaled by s**r.

    >>> volume([[-1, 0], [1, -1]])
    1
    """
    M = matrix(M)
    if not M or not M[0]:
        return 1
    Mi, s = scale_to_integer(M)
    v = _volume_integer(Mi, cap)
    if s == 1:
        return v
    return to_rat(Fraction(v, s ** rank(Mi)))


def euclidean_volume_numeric(M, cap: int | None = DEFAULT_CAP) -> float:
    """Euclidean volume of ``Z(M)`` in its own span, in double precision.

    The generators are first written in an orthonormal basis of their span,
    after which the volume is the sum of ``|det|`` over rank-sized column
    subsets.  (Summing ``sqrt(det(M_B^T M_B))`` instead would turn rounding
    noise on dependent subsets into errors of order 1e-8.)
    """
    A = np.asarray(M, dtype=float)
    if A.ndim != 2:
        raise DimensionError("expected a 2-d matrix")
    d, n = A.shape
    if d == 0 or n == 0:
        return 1.0
    r = int(np.linalg.matrix_rank(A))
    if r == 0:
        return 1.0
    _check_cap(comb(n, r), cap)
    U = np.linalg.svd(A)[0][:, :r]
    C = U.T @ A
    return float(sum(abs(np.linalg.det(C[:, B])) for B in itertools.combinations(range(n), r)))


def contains(M, p, centered: bool = False) -> bool:
    """Exact membership of ``p`` in ``Z(M)`` (or in the centered ``Z0(M)``)."""
    M = matrix(M)
    p = vector(p)
    if len(p) != len(M):
        raise DimensionError(f"point of length {len(p)} for generators in R^{len(M)}")
    if centered:
        p = [x + Fraction(sum(row), 2) for x, row in zip(p, M)]
    return in_zonotope(M, p)


def facet_barycenter_matrix(M) -> list[list]:
    """Scaled barycenter matrix ``B = M C*``: twice the facet barycenters of ``Z0(M)``.

    One column per +/- pair of cocircuits, in the order of
    :meth:`RepMatroid.cocircuits`.
    """
    M = matrix(M)
    C = RepMatroid(M).cocircuits()
    if not C:
        return [[] for _ in M]
    return matmul(M, transpose([list(c) for c in C]))


# -- the rearrangement of Z0(M) onto Z(L) -------------------------------------


@dataclass(frozen=True)
class RearrangeCell:
    """Sign pattern ``epsilon`` (entries +1/-1) and the translation ``shift`` applied to its piece."""

    epsilon: SignVector
    shift: tuple

    @classmethod
    def from_epsilon(cls, epsilon, L) -> "RearrangeCell":
        d = len(L)
        shift = tuple(
            to_rat(sum(L[k][i] for i in range(d) if epsilon[i] < 0)) for k in range(d)
        )
        return cls(SignVector(epsilon), shift)


def _in_unit_box(x) -> bool:
    return all(0 <= c <= 1 for c in x)


class Rearrangement:
    """Piecewise translation of ``Z0(M)`` onto ``Z(L)``, ``L = M M^T``, for full-row-rank unimodular ``M``.

    A point ``p = sum alpha_i L_i`` of the centered zonotope is shifted by
    the sum of the ``L_i`` whose ``alpha_i`` is negative.  The image lies in
    ``Z(L)`` only when every ``|alpha_i| <= 1``, which holds on the whole of
    ``Z0(M)`` for some representations (reduced K3, K4) and fails for others
    (a path on four vertices); ``coefficient_bound`` decides which.
    """

    def __init__(self, M):
        self.M = matrix(M)
        d, n = shape(self.M)
        if rank(self.M) != d:
            raise DimensionError("rearrangement needs a full-row-rank matrix")
        self.L = matmul(self.M, transpose(self.M))
        self.L_inv = inverse(self.L)

    def coefficients(self, p) -> list:
        return matvec(self.L_inv, vector(p))

    def coefficient_bound(self) -> tuple:
        """Exact maximum of ``|alpha_i|`` over ``Z0(M)``, the coordinate attaining it, and a witness.

        ``alpha = L^{-1} M t`` is linear in ``t`` on the cube ``[-1/2, 1/2]^n``,
        so the maximum of ``|alpha_i|`` is half the l1 norm of row ``i`` of
        ``L^{-1} M``, attained at ``t = sign(row) / 2``.  The forward map is
        defined on all of ``Z0(M)`` exactly when the bound is at most 1.
        """
        A = matmul(self.L_inv, self.M)
        norms = [sum(abs(x) for x in row) for row in A]
        i = max(range(len(A)), key=lambda k: norms[k])
        t = [Fraction(1 if x >= 0 else -1, 2) for x in A[i]]
        return to_rat(Fraction(norms[i], 2)), i, [to_rat(x) for x in t]

    def forward(self, p, check_membership: bool = False) -> tuple[RearrangeCell, list]:
        if check_membership and not contains(self.M, p, centered=True):
            raise ValueError(f"{p} is not in the centered zonotope")
        alpha = self.coefficients(p)
        if any(abs(a) > 1 for a in alpha):
            raise InvariantViolation(f"coefficient outside [-1, 1]: alpha = {alpha}")
        eps = [1 if a >= 0 else -1 for a in alpha]
        cell = RearrangeCell.from_epsilon(eps, self.L)
        q = [to_rat(a + b) for a, b in zip(vector(p), cell.shift)]
        delta = [a + (1 if e < 0 else 0) for a, e in zip(alpha, eps)]
        if not _in_unit_box(delta) or delta != self.coefficients(q):
            raise InvariantViolation(f"image {q} left Z(L): coefficients {delta}")
        return cell, q

    def locate(self, q) -> tuple[int, ...]:
        """Some ``a`` in {0,1}^d with ``q - L a`` in ``Z0(M)``.

        The candidate that puts every coefficient of ``q - L a`` in
        ``[-1/2, 1/2]`` is tried first, then the rest in order of Hamming
        distance from it.
        """
        gamma = self.coefficients(q)
        if not _in_unit_box(gamma):
            raise ValueError(f"{q} is not in Z(L)")
        d = len(gamma)
        guess = tuple(1 if g > Fraction(1, 2) else 0 for g in gamma)
        order = sorted(
            itertools.product((0, 1), repeat=d),
            key=lambda a: (sum(x != y for x, y in zip(a, guess)), a),
        )
        for a in order:
            shifted = [q[k] - sum(self.L[k][i] * a[i] for i in range(d)) for k in range(d)]
            if contains(self.M, shifted, centered=True):
                return a
        raise InvariantViolation(f"no tile of Z0(M) + L{{0,1}}^d contains {q}")


def rearrange_forward(M, p, check_membership: bool = True) -> tuple[RearrangeCell, list]:
    """Send ``p`` in the centered zonotope ``Z0(M)`` to its image ``q`` in ``Z(M M^T)``."""
    return Rearrangement(M).forward(p, check_membership=check_membership)


def tile_locate(M, L, q) -> tuple[int, ...]:
    """Find ``a`` in {0,1}^d such that ``q - L a`` lies in ``Z0(M)``, for ``q`` in ``Z(L)``."""
    R = Rearrangement(M)
    if matrix(L) != R.L:
        raise ValueError("L must equal M M^T")
    return R.locate(q)


# -- barycenter construction ---------------------------------------------------


def barycenter_generators(Bmat) -> list[list]:
    """Columns ``beta, b_1 - beta, ..., b_n - beta`` where ``beta`` is the mean of the ``b_i``."""
    B = matrix(Bmat)
    n = len(B[0]) if B else 0
    beta = [to_rat(Fraction(sum(row), n)) for row in B]
    return [[beta[k]] + [to_rat(x - beta[k]) for x in row] for k, row in enumerate(B)]


def _require_invertible(B):
    d, n = shape(B)
    if d != n or n == 0:
        raise DimensionError(f"need a nonempty square matrix, got {d}x{n}")
    if det(B) == 0:
        raise SingularMatrixError("the b_i must span R^n")


def thm4_volumes(Bmat) -> tuple:
    """``(vol Z(b_1..b_n), vol Z(beta, b_1-beta, ..., b_n-beta))``."""
    B = matrix(Bmat)
    _require_invertible(B)
    G = barycenter_generators(B)
    n = len(B)
    vol_P = 0
    for S in itertools.combinations(range(n + 1), n):
        vol_P += abs(det([[row[j] for j in S] for row in G]))
    return abs(det(B)), to_rat(vol_P)


class BarycenterRearrangement:
    """Map from the zonotope on ``{beta} + {b_i - beta}`` onto the parallelepiped on the ``b_i``."""

    def __init__(self, Bmat):
        self.B = matrix(Bmat)
        _require_invertible(self.B)
        self.B_inv = inverse(self.B)
        self.P = barycenter_generators(self.B)

    def coefficients(self, p) -> list:
        return matvec(self.B_inv, vector(p))

    def forward(self, p, check_membership: bool = False) -> tuple[list, list]:
        """Return ``(gamma, q)`` where ``p = sum gamma_i b_i`` and ``q`` is the image in the parallelepiped."""
        if check_membership and not contains(self.P, p):
            raise ValueError(f"{p} is not in the barycenter zonotope")
        gamma = self.coefficients(p)
        if any(abs(g) > 1 for g in gamma):
            raise InvariantViolation(f"coefficient outside [-1, 1]: gamma = {gamma}")
        n = len(gamma)
        neg = [i for i in range(n) if gamma[i] < 0]
        q = [to_rat(p[k] + sum(self.B[k][i] for i in neg)) for k in range(n)]
        coeffs = [g + (1 if g < 0 else 0) for g in gamma]
        if not _in_unit_box(coeffs):
            raise InvariantViolation(f"image {q} left the parallelepiped")
        return gamma, q


def thm4_forward(Bmat, p, check_membership: bool = True) -> list:
    """Image in ``Z(B)`` of a point ``p`` of the barycenter zonotope."""
    return BarycenterRearrangement(Bmat).forward(p, check_membership=check_membership)[1]


# -- prisms -----------------------------------------------------------------------


class PrismVolumes(NamedTuple):
    lhs: object
    rhs: object
    height: int
    base_volume: object


def primitive_normal(P) -> list[int]:
    """Primitive integer normal of the hyperplane spanned by the columns of ``P``."""
    P = matrix(P)
    m = len(P)
    if rank(P) != m - 1:
        raise DimensionError(f"columns must span a hyperplane of R^{m}")
    left = kernel_basis(transpose(P), m)
    u = primitive([row[0] for row in left])
    first = next(x for x in u if x)
    return u if first > 0 else [-x for x in u]


def prism_volume_check(Pgens, v) -> PrismVolumes:
    """Volume of ``Z([P | v])`` against lattice height of ``v`` times the volume of ``Z(P)``."""
    P = matrix(Pgens)
    v = vector(v)
    if not P or not P[0]:
        raise DimensionError("need at least one generator")
    if not is_integer_matrix(P) or not all(isinstance(x, int) for x in v):
        raise ValueError("prism check needs integer data")
    u = primitive_normal(P)
    h = abs(sum(a * b for a, b in zip(u, v)))
    if h == 0:
        raise DimensionError("v lies in the span of the base")
    lhs = volume(hstack(P, [[x] for x in v]))
    base = volume(P)
    return PrismVolumes(lhs, to_rat(h * base), h, base)
