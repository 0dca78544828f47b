import itertools
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import L_K4, L_P3, M_P3, N_K3, N_K4, brute_force_basis_volume, oracle_det
from zonomtt import graph as gr
from zonomtt.errors import DimensionError, InvariantViolation, SingularMatrixError
from zonomtt.linalg import identity, matmul, matvec, transpose
from zonomtt.lp import box_feasible_point, in_zonotope
from zonomtt.matroid import RepMatroid, is_unimodular
from zonomtt.zonotope import (
    BarycenterRearrangement,
    Rearrangement,
    Zonotope,
    barycenter_generators,
    contains,
    euclidean_volume_numeric,
    facet_barycenter_matrix,
    primitive_normal,
    prism_volume_check,
    rearrange_forward,
    thm4_forward,
    thm4_volumes,
    tile_locate,
    volume,
)

K3_REDUCED = gr.reduced_incidence(gr.complete_graph(3))
K4_REDUCED = gr.reduced_incidence(gr.complete_graph(4))


def vertex_oracle_contains(M, p):
    """Membership in a full-dimensional zonotope via its vertex set and all candidate facet normals.

    Facet normals of Z(M) are normals to hyperplanes spanned by d-1
    generators; ``p`` is inside iff it satisfies ``<u, p> <= max_v <u, v>``
    and ``>= min_v`` over the 2^n subset-sum vertices, for every such ``u``.
    """
    d, n = len(M), len(M[0])
    cols = [sympy.Matrix([M[i][j] for i in range(d)]) for j in range(n)]
    verts = [sum((cols[j] for j in range(n) if mask >> j & 1), sympy.zeros(d, 1)) for mask in range(2 ** n)]
    normals = []
    if d == 1:
        normals = [sympy.Matrix([1])]
    for S in itertools.combinations(range(n), d - 1):
        if d == 1:
            break
        A = sympy.Matrix.hstack(*[cols[j] for j in S])
        ns = A.T.nullspace()
        if len(ns) == 1:
            normals.append(ns[0])
    P = sympy.Matrix([sympy.Rational(x) for x in p])
    for u in normals:
        vals = [(u.T * v)[0] for v in verts]
        x = (u.T * P)[0]
        if x > max(vals) or x < min(vals):
            return False
    return True


@st.composite
def full_rank_generators(draw, max_d=3, max_n=6):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(d, max_n))
    M = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=d, max_size=d))
    if sympy.Matrix(M).rank() < d:
        M[0] = [1] + M[0][1:]
        for i in range(1, d):
            M[i] = [0] * n
            M[i][i] = 1
    return M


class TestVolume:
    def test_k4_incidence(self):
        assert volume(N_K4) == 16

    def test_path(self):
        assert volume(M_P3) == 1

    def test_k4_laplacian(self):
        assert volume(L_K4) == 64

    def test_rational_generators(self):
        assert volume([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == Fraction(1, 6)
        assert volume([[Fraction(3, 2)], [0]]) == Fraction(3, 2)

    def test_empty(self):
        assert volume([[], []]) == 1

    def test_zonotope_object(self):
        Z = Zonotope(N_K4)
        assert Z.volume() == 16 and Z.dimension == 3
        assert Z.center == [Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]

    @given(full_rank_generators())
    def test_full_rank_matches_basis_sum(self, M):
        assert volume(M) == brute_force_basis_volume(M)

    @given(full_rank_generators(), st.randoms(use_true_random=False))
    def test_permute_and_negate(self, M, rnd):
        n = len(M[0])
        perm = list(range(n))
        rnd.shuffle(perm)
        signs = [rnd.choice((-1, 1)) for _ in range(n)]
        M2 = [[row[perm[j]] * signs[j] for j in range(n)] for row in M]
        assert volume(M2) == volume(M)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graphs_equal_basis_count(self, n):
        N = gr.incidence_matrix(gr.complete_graph(n))
        assert volume(N) == len(RepMatroid(N).bases()) == n ** (n - 2)

    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=3, max_size=3))
    def test_dependent_row_keeps_volume(self, M):
        # a dependent extra row is a lattice isomorphism onto the new span
        M4 = M + [[M[0][j] + M[1][j] for j in range(4)]]
        assert volume(M4) == volume(M)


class TestEuclideanVolume:
    def test_identity(self):
        assert euclidean_volume_numeric(identity(3)) == pytest.approx(1.0)

    def test_segment(self):
        assert euclidean_volume_numeric([[3], [4]]) == pytest.approx(5.0)

    def test_rank_deficient(self):
        # K3 incidence spans a plane; each tree triangle has area sqrt(3)
        assert euclidean_volume_numeric(N_K3) == pytest.approx(3 * math.sqrt(3))

    @given(full_rank_generators())
    def test_full_rank_equals_exact(self, M):
        assert euclidean_volume_numeric(M) == pytest.approx(float(volume(M)), rel=1e-9, abs=1e-12)


class TestContains:
    def test_origin_and_far_vertex(self):
        assert contains(N_K4, [0, 0, 0, 0])
        assert contains(N_K4, [sum(row) for row in N_K4])

    def test_twice_a_generator_is_outside(self):
        p = [2 * row[0] for row in N_K4]
        assert not contains(N_K4, p)

    def test_centered(self):
        assert contains(M_P3, [0, 0], centered=True)
        assert contains(M_P3, [0, 0])  # a vertex of the origin-cornered copy
        assert not contains(M_P3, [Fraction(1), Fraction(1)], centered=True)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            contains(N_K3, [0, 0])

    @given(full_rank_generators(max_n=5), st.data())
    def test_matches_vertex_oracle(self, M, data):
        d = len(M)
        p = [Fraction(data.draw(st.integers(-8, 8)), 2) for _ in range(d)]
        assert contains(M, p) == vertex_oracle_contains(M, p)

    @given(full_rank_generators(max_n=5), st.data())
    def test_feasible_point_is_a_certificate(self, M, data):
        t = [Fraction(data.draw(st.integers(0, 4)), 4) for _ in M[0]]
        p = matvec(M, t)
        x = box_feasible_point(M, p)
        assert x is not None
        assert matvec(M, x) == p and all(0 <= v <= 1 for v in x)

    def test_lp_rank_deficient(self):
        assert in_zonotope(N_K3, [-1, 1, 0])
        assert not in_zonotope(N_K3, [1, 1, 0])  # off the plane of zero coordinate sum


class TestBarycenterMatrix:
    def test_k3(self):
        B = facet_barycenter_matrix(N_K3)
        assert len(B[0]) == 3
        assert [-2, 1, 1] in transpose(B)

    def test_rank_one(self):
        assert facet_barycenter_matrix([[1, 1]]) == [[2]]

    def test_columns_are_twice_facet_barycenters(self):
        # barycenter of the facet of Z0(M) in direction c: sum of M_j c_j / 2 over the support of c
        for c, col in zip(RepMatroid(N_K4).cocircuits(), transpose(facet_barycenter_matrix(N_K4))):
            beta = [sum(Fraction(row[j] * c[j], 2) for j in range(6)) for row in N_K4]
            assert [2 * x for x in beta] == col


class TestRearrangement:
    def test_zero(self):
        cell, q = rearrange_forward(K3_REDUCED, [0, 0])
        assert tuple(cell.epsilon) == (1, 1) and q == [0, 0]

    def test_path_example_pipeline(self):
        # oracle: solve L alpha = p with sympy, then shift the negative coordinates by one
        p = matvec(M_P3, [Fraction(1, 2), Fraction(-1, 3)])
        alpha = list(sympy.Matrix(L_P3).solve(sympy.Matrix(p)))
        cell, q = rearrange_forward(M_P3, p)
        assert list(cell.epsilon) == [1 if a >= 0 else -1 for a in alpha]
        delta = list(sympy.Matrix(L_P3).solve(sympy.Matrix(q)))
        assert all(0 <= x <= 1 for x in delta)
        assert [a + (1 if a < 0 else 0) for a in alpha] == delta

    def test_tie_on_a_wall(self):
        # alpha has a zero coordinate; either sign choice lands in Z(L), the map uses +
        R = Rearrangement(K3_REDUCED)
        p = matvec(R.L, [0, Fraction(-1, 4)])
        cell, q = R.forward(p, check_membership=True)
        assert cell.epsilon[0] == 1
        alt = [q[k] + R.L[k][0] for k in range(2)]
        assert contains(R.L, q) and contains(R.L, alt)

    def test_outside_point_raises(self):
        with pytest.raises(ValueError):
            rearrange_forward(K3_REDUCED, [5, 5])

    def test_needs_full_row_rank(self):
        with pytest.raises(DimensionError):
            Rearrangement(N_K3)

    def test_locate_zero_and_far_vertex(self):
        L = matmul(K4_REDUCED, transpose(K4_REDUCED))
        assert tile_locate(K4_REDUCED, L, [0, 0, 0]) == (0, 0, 0)
        far = [sum(row) for row in L]
        a = tile_locate(K4_REDUCED, L, far)
        assert a == (1, 1, 1)

    def test_locate_rejects_wrong_laplacian(self):
        with pytest.raises(ValueError):
            tile_locate(K3_REDUCED, identity(2), [0, 0])

    def test_k4_random_locate(self):
        rng = random.Random(3)
        R = Rearrangement(K4_REDUCED)
        for _ in range(200):
            gamma = [Fraction(rng.randint(0, 60), 60) for _ in range(3)]
            q = matvec(R.L, gamma)
            a = R.locate(q)
            shifted = [q[k] - sum(R.L[k][i] * a[i] for i in range(3)) for k in range(3)]
            assert vertex_oracle_contains(K4_REDUCED, [x + Fraction(sum(row), 2) for x, row in zip(shifted, K4_REDUCED)])

    @given(st.lists(st.integers(-49, 49), min_size=3, max_size=3))
    def test_forward_lands_in_parallelepiped(self, t):
        p = matvec(K3_REDUCED, [Fraction(x, 100) for x in t])
        _, q = rearrange_forward(K3_REDUCED, p)
        L = matmul(K3_REDUCED, transpose(K3_REDUCED))
        assert vertex_oracle_contains(L, q)

    def test_round_trip(self):
        rng = random.Random(5)
        R = Rearrangement(K3_REDUCED)
        for _ in range(200):
            t = [Fraction(rng.randint(-49, 49), 100) for _ in range(3)]
            p = matvec(K3_REDUCED, t)
            cell, q = R.forward(p)
            a = R.locate(q)
            back = [q[k] - sum(R.L[k][i] * a[i] for i in range(2)) for k in range(2)]
            assert contains(K3_REDUCED, back, centered=True)

    def test_injective_on_samples(self):
        rng = random.Random(9)
        R = Rearrangement(K3_REDUCED)
        seen = {}
        for _ in range(500):
            t = [Fraction(rng.randint(-499, 499), 1000) for _ in range(3)]
            p = tuple(matvec(K3_REDUCED, t))
            alpha = R.coefficients(p)
            if any(a in (-1, 0, 1) for a in alpha):
                continue
            q = tuple(R.forward(p)[1])
            assert seen.setdefault(q, p) == p

    @pytest.mark.parametrize(
        "M, bound",
        [
            (K3_REDUCED, Fraction(2, 3)),
            (K4_REDUCED, Fraction(3, 4)),
            (M_P3, 1),
            (gr.reduced_incidence(gr.path_graph(4)), Fraction(3, 2)),
            ([[1, 2], [0, 1]], Fraction(3, 2)),
        ],
    )
    def test_coefficient_bound(self, M, bound):
        R = Rearrangement(M)
        b, i, t = R.coefficient_bound()
        assert b == bound
        # oracle: maximise |alpha_i| over all cube vertices
        A = sympy.Matrix(R.L).inv() * sympy.Matrix(M)
        n = len(M[0])
        best = max(abs((A * sympy.Matrix(v))[k]) for v in itertools.product((-0.5, 0.5), repeat=n) for k in range(len(M)))
        assert sympy.nsimplify(best) == bound
        assert abs(sum(A[i, j] * t[j] for j in range(n))) == bound

    def test_forward_fails_past_the_bound(self):
        # unimodular, yet the corner of Z0(M) has a coefficient of size 3/2
        M = gr.reduced_incidence(gr.path_graph(4))
        R = Rearrangement(M)
        _, _, t = R.coefficient_bound()
        p = matvec(M, t)
        assert contains(M, p, centered=True)
        with pytest.raises(InvariantViolation):
            R.forward(p)


class TestThm4:
    def test_k3_lambda(self):
        assert thm4_volumes([[3, 0, 0], [0, 3, 0], [0, 0, 3]]) == (27, 27)

    def test_identity(self):
        assert thm4_volumes(identity(3)) == (1, 1)

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            thm4_volumes([[1, 1], [1, 1]])

    def test_k3_gamma_subsets(self):
        # each 3-subset of [L | 1] that is a basis has |det| 9
        G = gr.gamma_matrix(gr.complete_graph(3))
        dets = [abs(oracle_det([[row[j] for j in S] for row in G])) for S in itertools.combinations(range(4), 3)]
        assert sorted(dets) == [0, 9, 9, 9]

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
    def test_random_4x4(self, B):
        if oracle_det(B) == 0:
            return
        vol_pi, vol_p = thm4_volumes(B)
        assert vol_pi == abs(oracle_det(B))
        G = barycenter_generators(B)
        oracle = sum(abs(sympy.Matrix([[row[j] for j in S] for row in G]).det())
                     for S in itertools.combinations(range(5), 4))
        assert vol_p == oracle == vol_pi

    def test_forward_zero_and_barycenter(self):
        B = [[2, 1, 0], [0, 1, 1], [1, 0, 3]]
        assert thm4_forward(B, [0, 0, 0]) == [0, 0, 0]
        beta = [Fraction(sum(row), 3) for row in B]
        assert thm4_forward(B, beta) == beta

    def test_forward_injective_and_inside(self):
        B = [[2, 1, 0], [0, 1, 1], [1, 0, 3]]
        R = BarycenterRearrangement(B)
        rng = random.Random(1)
        seen = {}
        for _ in range(200):
            a = [Fraction(rng.randint(1, 99), 100) for _ in range(4)]
            p = tuple(matvec(R.P, a))
            gamma, q = R.forward(p)
            assert vertex_oracle_contains(B, q)
            if all(g != 0 for g in gamma):
                assert seen.setdefault(tuple(q), p) == p


class TestPrism:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_path_incidence_with_ones(self, n):
        N = gr.incidence_matrix(gr.path_graph(n))
        square = [row + [1] for row in N]
        assert abs(oracle_det(square)) == n
        res = prism_volume_check(N, [1] * n)
        assert res.lhs == res.rhs == n and res.height == n and res.base_volume == 1

    def test_single_column(self):
        res = prism_volume_check([[1], [0]], [0, 3])
        assert (res.lhs, res.height, res.base_volume) == (3, 3, 1)

    def test_k3(self):
        res = prism_volume_check(N_K3, [1, 1, 1])
        assert (res.lhs, res.rhs, res.height, res.base_volume) == (9, 9, 3, 3)

    def test_primitive_normal(self):
        assert primitive_normal(N_K3) == [1, 1, 1]

    def test_vector_in_span(self):
        with pytest.raises(DimensionError):
            prism_volume_check(N_K3, [1, -1, 0])

    def test_wrong_rank(self):
        with pytest.raises(DimensionError):
            prism_volume_check(identity(3), [1, 1, 1])
