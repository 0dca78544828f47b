"""Checkers for the polyhedral matrix tree theorems.

Each checker recomputes the quantities a result relates (volumes, counts,
eigenvalue products, lattices) by independent routes and reports whether
they agree exactly.  Inputs outside a checker's hypotheses (a matrix that is
not unimodular, a disconnected graph) give a failed report with an
explanatory note rather than an exception, so a suite never passes silently
on bad input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

import numpy as np

from . import graph as gr
from .errors import InstanceTooLarge, InvariantViolation, ZonoMTTError
from .lattice import Lattice, lattices_equal, normalized_volume
from .linalg import (
    det,
    diag,
    is_integer_matrix,
    matmul,
    matrix,
    matvec,
    product_nonzero_eigenvalues,
    rank,
    to_rat,
    transpose,
)
from .matroid import DEFAULT_CAP, RepMatroid, full_row_rank_form, is_unimodular
from .zonotope import (
    BarycenterRearrangement,
    Rearrangement,
    barycenter_generators,
    euclidean_volume_numeric,
    facet_barycenter_matrix,
    prism_volume_check,
    thm4_volumes,
    volume,
)

# checker ids, in suite order; they double as CLI check names
THEOREM_IDS = (
    "mtt",
    "matroid-mtt",
    "cocircuit-lattice",
    "barycenter-lattice",
    "scaled",
    "weighted",
    "zl-decomposition",
    "corank",
    "rearrange",
    "mcmullen",
    "prism",
    "thm4",
)

# the 3x3 incidence matrix of K3 and the cocircuit basis printed alongside it
N_K3 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
COCIRCUIT_BASIS_K3 = [[1, 1, 0], [0, 1, 1]]

DEFAULT_DENOMINATOR = 1000


def format_rational(x) -> str:
    """``p/q``, or just ``p`` for integers; floats use ``repr``."""
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, bool):
        return str(x).lower()
    x = to_rat(x)
    return str(x)


def format_rational_vector(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


@dataclass
class CheckReport:
    theorem: str
    passed: bool
    quantities: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "quantities": {k: format_rational(v) for k, v in self.quantities.items()},
            "notes": self.notes,
        }

    def __bool__(self):
        return self.passed


def _fail(theorem, notes, **quantities) -> CheckReport:
    return CheckReport(theorem, False, dict(quantities), notes=notes)


def _unimodular_or_report(theorem, M, cap):
    """``None`` when ``M`` is unimodular, otherwise a failed report saying why."""
    try:
        if is_unimodular(M, cap=cap):
            return None
        return _fail(theorem, "input matrix is not unimodular; hypotheses of the theorem do not hold")
    except InstanceTooLarge as exc:
        return _fail(theorem, f"unimodularity could not be certified: {exc}")


def _all_equal(values) -> bool:
    values = list(values)
    return all(v == values[0] for v in values)


# -- full-rank matroid theorem -------------------------------------------------------


def check_matroid_mtt(M, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """Bases of a regular matroid vs. zonotope volumes vs. eigenvalues of ``L = M M^T``.

    ``M`` is reduced to full row rank first, then ``vol Z(M)``,
    ``vol Z(L)``, ``det L``, the product of the nonzero eigenvalues of ``L``
    and the number of bases must all coincide.
    """
    name = "matroid-mtt"
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    T = full_row_rank_form(M)
    n = len(matrix(M)[0]) if matrix(M) else 0
    if not T:
        return CheckReport(name, True, {"bases": 1, "volume_ZM": 1, "volume_ZL": 1, "det_L": 1,
                                        "eigenvalue_product": 1}, notes="rank 0: all quantities are empty products")
    L = matmul(T, transpose(T))
    q = {
        "bases": len(RepMatroid(T, ncols=n, cap=cap).bases()),
        "volume_ZM": volume(T, cap=cap),
        "volume_ZL": volume(L, cap=cap),
        "det_L": det(L),
        "eigenvalue_product": product_nonzero_eigenvalues(L),
    }
    notes = "" if len(T) == len(matrix(M)) else f"reduced from {len(matrix(M))} to {len(T)} rows"
    return CheckReport(name, _all_equal(q.values()), q, {"L": L}, notes)


def check_classical_mtt(G: gr.Graph) -> CheckReport:
    """Product of the nonzero Laplacian eigenvalues equals ``n`` times the tree count.

    Also checks the three full-dimensional volume identities relating
    ``Lambda = L + J`` and ``Gamma = [L | 1]``.
    """
    name = "mtt"
    if not gr.is_connected(G):
        return _fail(name, "graph is disconnected")
    n = G.n
    s = gr.spanning_tree_count(G)
    L = gr.laplacian(G)
    eig = product_nonzero_eigenvalues(L)
    vol_lambda = abs(det(gr.lambda_matrix(G)))
    vol_gamma = volume(gr.gamma_matrix(G))
    vol_L = volume(L) if n > 1 else 1
    q = {
        "vertices": n,
        "spanning_trees": s,
        "eigenvalue_product": eig,
        "n_times_trees": n * s,
        "volume_ZL": vol_L,
        "volume_Lambda": vol_lambda,
        "volume_Gamma": vol_gamma,
    }
    checks = {
        "product = n s": eig == n * s,
        "vol Z(Lambda) = n product": vol_lambda == n * eig,
        "vol Z(Gamma) = n vol Z(L)": vol_gamma == n * vol_L,
        "vol Z(Lambda) = vol Z(Gamma)": vol_lambda == vol_gamma,
    }
    failed = [k for k, ok in checks.items() if not ok]
    return CheckReport(name, not failed, q, notes="; ".join(f"failed: {k}" for k in failed))


# -- lattices -------------------------------------------------------------------------


def remark_covector_probe() -> CheckReport:
    """Covectors need not lie in the row space of a cocircuit basis.

    With the K3 incidence matrix, ``y = (1, 2, 1)`` is in the row space
    and its sign pattern ``(1, 1, 1)`` is a covector, yet ``(1, 1, 1)`` is
    not in the row space of the two printed cocircuits.
    """
    C = COCIRCUIT_BASIS_K3
    x = [0, 1, 2]
    y = matvec(transpose(N_K3), x)
    sigma = [(v > 0) - (v < 0) for v in y]
    cocircuits = {tuple(c) for c in RepMatroid(N_K3).cocircuits()}
    q = {
        "y_in_rowspace_C": rank(C + [y]) == rank(C),
        "sign_is_covector": sigma == [1, 1, 1],
        "sign_in_rowspace_C": rank(C + [sigma]) == rank(C),
        "printed_rows_are_cocircuits": all(tuple(c) in cocircuits for c in C),
        "printed_rows_span_lattice": lattices_equal(transpose(C), transpose(N_K3)),
    }
    passed = (
        q["y_in_rowspace_C"] and q["sign_is_covector"] and not q["sign_in_rowspace_C"]
        and q["printed_rows_are_cocircuits"] and q["printed_rows_span_lattice"]
    )
    return CheckReport("covector-probe", passed, q, {"y": y, "covector": sigma})


def check_cocircuit_lattice(M, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """The rows of ``M`` and the cocircuits of its oriented matroid generate the same lattice."""
    name = "cocircuit-lattice"
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    M = matrix(M)
    n = len(M[0]) if M else 0
    C = RepMatroid(M, ncols=n, cap=cap).cocircuits()
    Ccols = transpose([list(c) for c in C], n) if C else [[] for _ in range(n)]
    Mt = transpose(M, n)
    equal = lattices_equal(Mt, Ccols)
    q = {"cocircuits": len(C), "lattice_rank": Lattice(Mt).rank, "lattices_equal": equal}
    witnesses = {"hnf_rows": Lattice(Mt).hnf, "hnf_cocircuits": Lattice(Ccols).hnf}
    notes = ""
    passed = equal
    if M == N_K3:
        probe = remark_covector_probe()
        q["covector_probe"] = probe.passed
        passed = passed and probe.passed
        notes = "K3 covector probe: (1,2,1) is in the row space, its sign (1,1,1) is not in the cocircuit row space"
    return CheckReport(name, passed, q, witnesses, notes)


def check_barycenter_lattice(M, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """Columns of ``L = M M^T`` and of the scaled barycenter matrix generate the same lattice."""
    name = "barycenter-lattice"
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    M = matrix(M)
    L = matmul(M, transpose(M))
    B = facet_barycenter_matrix(M)
    equal = lattices_equal(L, B)
    q = {"facet_pairs": len(B[0]) if B else 0, "lattices_equal": equal}
    return CheckReport(name, equal, q, {"L": L, "B": B, "hnf": Lattice(L).hnf})


# -- scaled and weighted ----------------------------------------------------------------


def _basis_weight_sum(T, w, cap):
    n = len(T[0])
    return to_rat(sum(prod((w[i] for i in B), start=Fraction(1)) for B in RepMatroid(T, ncols=n, cap=cap).bases()))


def check_scaled(M, D, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """``vol Z(M D) = vol Z(M D M^T)`` for an integer diagonal ``D`` (given as its diagonal)."""
    name = "scaled"
    D = [to_rat(x) for x in D]
    if any(not isinstance(x, int) for x in D):
        raise ValueError("scaling factors must be integers")
    if any(x < 0 for x in D):
        raise ValueError("negative scaling factors are not supported: signs would not cancel in M D M^T")
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    T = full_row_rank_form(M)
    n = len(T[0]) if T else len(D)
    if len(D) != n:
        raise ValueError(f"{len(D)} scaling factors for {n} columns")
    MD = matmul(T, diag(D))
    LD = matmul(MD, transpose(T))
    q = {"volume_ZMD": volume(MD, cap=cap), "volume_ZL": volume(LD, cap=cap), "det_L": det(LD)}
    return CheckReport(name, _all_equal(q.values()), q, {"L": LD})


def check_weighted(M, w, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """``vol Z(M D) = vol Z(M D M^T)`` for a positive rational weight vector.

    Also compares with the basis weight sum and checks that ``M D M^T`` and
    the weighted barycenters ``M D C*`` span the same real space.
    """
    name = "weighted"
    w = [to_rat(x) for x in w]
    if any(x <= 0 for x in w):
        raise ValueError(
            "weights must be positive: with mixed signs vol Z(M D) sums |products| while det(M D M^T) does not"
        )
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    T = full_row_rank_form(M)
    n = len(T[0]) if T else len(w)
    if len(w) != n:
        raise ValueError(f"{len(w)} weights for {n} columns")
    MD = matmul(T, diag(w))
    LD = matmul(MD, transpose(T))
    vol_MD = volume(MD, cap=cap)
    det_L = det(LD)
    basis_sum = _basis_weight_sum(T, w, cap)
    C = RepMatroid(T, ncols=n, cap=cap).cocircuits()
    BD = matmul(MD, transpose([list(c) for c in C])) if C else [[] for _ in T]
    same_span = rank(LD) == rank(BD) == rank([a + b for a, b in zip(LD, BD)])
    q = {
        "volume_ZMD": vol_MD,
        "volume_ZL": volume(LD, cap=cap),
        "det_L": det_L,
        "basis_weight_sum": basis_sum,
        "barycenter_span_equal": same_span,
    }
    passed = vol_MD == q["volume_ZL"] == det_L == basis_sum and same_span
    return CheckReport(name, passed, q, {"L": LD})


# -- corank > 0 -------------------------------------------------------------------------


def check_zl_decomposition(M, G: gr.Graph | None = None, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """``Z(L)`` splits into ``|bases(M^T)|`` parallelepipeds of equal lattice-normalized volume.

    With a graph, additionally: there are ``n`` pieces and each has volume
    equal to the number of spanning trees.
    """
    name = "zl-decomposition"
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    M = matrix(M)
    d = len(M)
    L = matmul(M, transpose(M))
    pieces = RepMatroid(L, ncols=d, cap=cap).bases()
    count_Mt = len(RepMatroid(transpose(M), ncols=d, cap=cap).bases())
    ambient = Lattice.induced(L)
    vols = [normalized_volume([[row[j] for j in B] for row in L], ambient) for B in pieces]
    q = {"pieces": len(pieces), "bases_of_Mt": count_Mt, "piece_volume": vols[0] if vols else 0,
         "volume_ZL": volume(L, cap=cap)}
    passed = len(pieces) == count_Mt and _all_equal(vols) and q["volume_ZL"] == sum(vols)
    if G is not None:
        s = gr.spanning_tree_count(G)
        q["spanning_trees"] = s
        passed = passed and len(pieces) == G.n and all(v == s for v in vols)
    return CheckReport(name, passed, q, {"pieces": pieces})


def check_corank_mtt(M, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """``vol Z(M) = vol Z(Lbar)`` for every lattice basis ``Lbar`` of ``Z<L>`` chosen among the columns of ``L``."""
    name = "corank"
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    M = matrix(M)
    d = len(M)
    L = matmul(M, transpose(M))
    vol_M = volume(M, cap=cap)
    lattice_L = Lattice(L)
    checked, not_lattice_bases, mismatches = 0, 0, []
    for B in RepMatroid(L, ncols=d, cap=cap).bases():
        Lbar = [[row[j] for j in B] for row in L]
        if Lattice(Lbar) != lattice_L:
            not_lattice_bases += 1
            continue
        checked += 1
        v = volume(Lbar, cap=cap)
        if v != vol_M:
            mismatches.append((B, v))
    q = {"volume_ZM": vol_M, "lattice_bases_checked": checked, "real_bases_not_lattice_bases": not_lattice_bases}
    passed = checked > 0 and not mismatches
    notes = f"mismatches: {mismatches}" if mismatches else ""
    return CheckReport(name, passed, q, notes=notes)


# -- the rearrangement, sampled ------------------------------------------------------------


def _grid_point(rng, k, denominator, open_interval=True):
    lo, hi = (1, denominator - 1) if open_interval else (0, denominator)
    return [Fraction(rng.randint(lo, hi), denominator) for _ in range(k)]


def check_rearrange(M, samples: int = 1000, seed: int = 0, denominator: int = DEFAULT_DENOMINATOR,
                    cap: int | None = DEFAULT_CAP) -> CheckReport:
    """Sample the piecewise translation of ``Z0(M)`` onto ``Z(L)`` on a rational grid.

    Forward: ``p = M t`` with ``t`` in the open cube ``(-1/2, 1/2)^n`` is an
    interior point of ``Z0(M)``; its image must lie in ``Z(L)`` and distinct
    points must have distinct images.  Backward: every grid point ``q`` of
    ``Z(L)`` must be covered by one of the tiles ``Z0(M) + L a``,
    ``a`` in {0,1}^d.

    Sampling alone misses thin failure regions near the corners of the
    cube, so the exact bound on the coefficients ``alpha = L^{-1} p`` is
    computed first.  When it exceeds 1 the translation is not defined on all
    of ``Z0(M)`` and the report fails with a cube vertex as counterexample.
    """
    name = "rearrange"
    bad = _unimodular_or_report(name, M, cap)
    if bad is not None:
        return bad
    M = matrix(M)
    # the coefficient bound depends on the representation, so keep M itself when possible
    T = M if M and rank(M) == len(M) else full_row_rank_form(M)
    if not T:
        return CheckReport(name, True, {"samples": samples}, notes="rank 0: nothing to rearrange")
    R = Rearrangement(T)
    d, n = len(T), len(T[0])
    bound, coord, t_witness = R.coefficient_bound()
    witnesses = {}
    notes = []
    if bound > 1:
        p_witness = matvec(T, t_witness)
        witnesses = {"cube_point": t_witness, "point": p_witness, "coordinate": coord}
        try:
            R.forward(p_witness)
            notes.append("coefficient bound exceeds 1 but the witness mapped cleanly")  # cannot happen
        except InvariantViolation:
            notes.append(
                f"|alpha_{coord + 1}| reaches {format_rational(bound)} at M t with t = {format_rational_vector(t_witness)}: "
                "the sign-vector translation is not defined on all of Z0(M) for this matrix, "
                "although the volume identity itself may still hold"
            )
    rng = random.Random(seed)
    half = Fraction(1, 2)
    images = {}
    forward_failures = collisions = 0
    for _ in range(samples):
        t = [x - half for x in _grid_point(rng, n, denominator)]
        p = tuple(matvec(T, t))
        try:
            _, q = R.forward(p)
        except InvariantViolation:
            forward_failures += 1
            continue
        q = tuple(q)
        prev = images.setdefault(q, p)
        if prev != p:
            collisions += 1
    locate_failures = 0
    for _ in range(samples):
        gamma = _grid_point(rng, d, denominator, open_interval=False)
        q = matvec(R.L, gamma)
        try:
            R.locate(q)
        except InvariantViolation:
            locate_failures += 1
    q = {
        "max_abs_coefficient": bound,
        "samples": samples,
        "distinct_points": len({p for p in images.values()}),
        "forward_failures": forward_failures,
        "collisions": collisions,
        "locate_failures": locate_failures,
        "volume_ZM": volume(T, cap=cap),
        "det_L": det(R.L),
    }
    passed = (bound <= 1 and forward_failures == collisions == locate_failures == 0
              and q["volume_ZM"] == q["det_L"])
    if not samples:
        notes.append("no samples: only the exact coefficient bound was checked")
    return CheckReport(name, passed, q, witnesses, "; ".join(notes))


# -- projection volumes ------------------------------------------------------------------------


def _orthonormal_rows(A, r):
    """Orthonormal basis (as rows) of the row space of ``A`` and of its orthogonal complement."""
    A = np.asarray(A, dtype=float)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.zeros((0, n)), np.eye(n)
    _, _, Vt = np.linalg.svd(A)
    return Vt[:r], Vt[r:]


def check_mcmullen(M, tol: float = 1e-9, cap: int | None = DEFAULT_CAP) -> CheckReport:
    """Projections of the unit cube onto the row space and onto the kernel have equal volume.

    For unimodular ``M`` both volumes also equal ``sqrt(|bases|)``, which is
    checked as an exact-arithmetic cross-reference.
    """
    name = "mcmullen"
    M = matrix(M)
    n = len(M[0]) if M else 0
    r = rank(M)
    row_basis, ker_basis = _orthonormal_rows([[float(x) for x in row] for row in M], r)
    vol_row = euclidean_volume_numeric(row_basis, cap=cap) if r else 1.0
    vol_ker = euclidean_volume_numeric(ker_basis, cap=cap) if r < n else 1.0
    rel = abs(vol_row - vol_ker) / max(abs(vol_row), abs(vol_ker), 1e-300)
    q = {"dimension": r, "codimension": n - r, "volume_rowspace": vol_row, "volume_kernel": vol_ker,
         "relative_difference": rel}
    passed = rel <= tol
    notes = ""
    try:
        if is_unimodular(M, cap=cap):
            nb = len(RepMatroid(M, ncols=n, cap=cap).bases())
            q["bases"] = nb
            exact_ok = abs(vol_row ** 2 - nb) <= tol * max(nb, 1)
            q["squared_volume_matches_bases"] = exact_ok
            passed = passed and exact_ok
    except InstanceTooLarge:
        notes = "basis count skipped: instance too large"
    return CheckReport(name, passed, q, notes=notes)


# -- graphs: prism and barycenter -----------------------------------------------------------------


def check_prism(G: gr.Graph) -> CheckReport:
    """``vol Z([L | 1]) = n vol Z(L)``: the ones vector sits at lattice height ``n`` over the span of ``L``."""
    name = "prism"
    if not gr.is_connected(G):
        return _fail(name, "graph is disconnected")
    if G.n == 1:
        return CheckReport(name, True, {"vertices": 1}, notes="single vertex: L = 0, prism is a unit segment")
    L = gr.laplacian(G)
    res = prism_volume_check(L, [1] * G.n)
    q = {"vertices": G.n, "volume_Gamma": res.lhs, "height": res.height, "volume_ZL": res.base_volume,
         "n_times_volume_ZL": G.n * res.base_volume}
    passed = res.lhs == res.rhs and res.height == G.n
    return CheckReport(name, passed, q)


def check_thm4(Bmat, samples: int = 1000, seed: int = 0, gamma=None,
               denominator: int = DEFAULT_DENOMINATOR) -> CheckReport:
    """``vol Z(b_1..b_n) = vol Z(beta, b_1 - beta, ...)`` plus a sampled check of the rearrangement.

    ``gamma``, if given, is a generator matrix that must consist of exactly
    the columns ``beta, b_i - beta`` (up to order); for ``Lambda = L + J``
    that is ``Gamma = [L | 1]``.
    """
    name = "thm4"
    B = matrix(Bmat)
    try:
        vol_pi, vol_p = thm4_volumes(B)
    except ZonoMTTError as exc:
        return _fail(name, f"invalid input: {exc}")
    n = len(B)
    R = BarycenterRearrangement(B)
    rng = random.Random(seed)
    images = {}
    failures = collisions = 0
    for _ in range(samples):
        a = _grid_point(rng, n + 1, denominator)
        p = tuple(to_rat(sum(a[j] * row[j] for j in range(n + 1))) for row in R.P)
        try:
            coeffs, q = R.forward(p)
        except InvariantViolation:
            failures += 1
            continue
        if any(c == 0 for c in coeffs):
            continue  # on a cell wall, where images may legitimately coincide
        prev = images.setdefault(tuple(q), p)
        if prev != p:
            collisions += 1
    q = {"volume_Pi": vol_pi, "volume_P": vol_p, "samples": samples, "forward_failures": failures,
         "collisions": collisions}
    passed = vol_pi == vol_p and failures == 0 and collisions == 0
    if gamma is not None:
        P_cols = sorted(map(tuple, transpose(barycenter_generators(B))))
        G_cols = sorted(map(tuple, transpose(matrix(gamma))))
        q["gamma_matches_generators"] = P_cols == G_cols
        passed = passed and P_cols == G_cols
    return CheckReport(name, passed, q)


# -- suites -------------------------------------------------------------------------------------------


def _default_scaling(weights):
    if weights is not None and all(isinstance(to_rat(x), int) and x >= 0 for x in weights):
        return [to_rat(x) for x in weights], "scaling taken from the edge weights"
    return None, "no nonnegative integer weights given: D = identity"


def run_graph_checks(G: gr.Graph, names=THEOREM_IDS, samples: int = 1000, seed: int = 0,
                     tol: float = 1e-9, cap: int | None = DEFAULT_CAP, weights=None) -> list[CheckReport]:
    """Run the named checkers on the matrices a connected graph gives rise to."""
    weights = weights if weights is not None else G.weights
    N = gr.incidence_matrix(G)
    reports = []
    for name in names:
        if name != "mtt" and not gr.is_connected(G):
            reports.append(_fail(name, "graph is disconnected"))
            continue
        if name == "mtt":
            r = check_classical_mtt(G)
        elif name == "matroid-mtt":
            r = check_matroid_mtt(gr.reduced_incidence(G), cap=cap)
        elif name == "cocircuit-lattice":
            r = check_cocircuit_lattice(N, cap=cap)
        elif name == "barycenter-lattice":
            r = check_barycenter_lattice(N, cap=cap)
        elif name == "scaled":
            D, note = _default_scaling(weights)
            r = check_scaled(gr.reduced_incidence(G), D if D is not None else [1] * G.m, cap=cap)
            r.notes = "; ".join(x for x in (r.notes, note) if x)
        elif name == "weighted":
            w = weights if weights is not None else [1] * G.m
            r = check_weighted(gr.reduced_incidence(G), w, cap=cap)
            tree_sum = gr.weighted_tree_sum(G, w)
            r.quantities["weighted_tree_sum"] = tree_sum
            r.passed = r.passed and tree_sum == r.quantities.get("det_L")
            if weights is None:
                r.notes = "; ".join(x for x in (r.notes, "no weights given: unit weights") if x)
        elif name == "zl-decomposition":
            r = check_zl_decomposition(N, G, cap=cap)
        elif name == "corank":
            r = check_corank_mtt(N, cap=cap)
        elif name == "rearrange":
            r = check_rearrange(gr.reduced_incidence(G), samples=samples, seed=seed, cap=cap)
        elif name == "mcmullen":
            r = check_mcmullen(N, tol=tol, cap=cap)
        elif name == "prism":
            r = check_prism(G)
        elif name == "thm4":
            r = check_thm4(gr.lambda_matrix(G), samples=samples, seed=seed, gamma=gr.gamma_matrix(G))
        else:
            raise ValueError(f"unknown check {name!r}")
        reports.append(r)
    return reports


def run_matrix_checks(M, names=THEOREM_IDS, samples: int = 1000, seed: int = 0, tol: float = 1e-9,
                      cap: int | None = DEFAULT_CAP, weights=None) -> list[CheckReport]:
    """Run the named checkers on a representation matrix.

    ``mtt`` means the matroid version here.  ``prism`` needs a graph and
    ``thm4`` treats ``M`` itself as the (square, invertible) point set; both
    are reported as failures with a note when they do not apply.
    """
    M = matrix(M)
    n = len(M[0]) if M else 0
    reports = []
    for name in names:
        if name in ("mtt", "matroid-mtt"):
            r = check_matroid_mtt(M, cap=cap)
            r.theorem = name
        elif name == "cocircuit-lattice":
            r = check_cocircuit_lattice(M, cap=cap)
        elif name == "barycenter-lattice":
            r = check_barycenter_lattice(M, cap=cap)
        elif name == "scaled":
            D, note = _default_scaling(weights)
            r = check_scaled(M, D if D is not None else [1] * n, cap=cap)
            r.notes = "; ".join(x for x in (r.notes, note) if x)
        elif name == "weighted":
            r = check_weighted(M, weights if weights is not None else [1] * n, cap=cap)
        elif name == "zl-decomposition":
            r = check_zl_decomposition(M, cap=cap)
        elif name == "corank":
            r = check_corank_mtt(M, cap=cap)
        elif name == "rearrange":
            r = check_rearrange(M, samples=samples, seed=seed, cap=cap)
        elif name == "mcmullen":
            r = check_mcmullen(M, tol=tol, cap=cap)
        elif name == "prism":
            r = _fail(name, "the prism check needs a graph (--graph)")
        elif name == "thm4":
            r = check_thm4(M, samples=samples, seed=seed)
        else:
            raise ValueError(f"unknown check {name!r}")
        reports.append(r)
    return reports
