import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import settings

from zonomtt import graph as gr

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# printed fixtures
N_K3 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
N_K4 = [
    [-1, -1, -1, 0, 0, 0],
    [1, 0, 0, -1, -1, 0],
    [0, 1, 0, 1, 0, -1],
    [0, 0, 1, 0, 1, 1],
]
L_K4 = [[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]
M_P3 = [[-1, 0], [1, -1]]
L_P3 = [[1, -1], [-1, 2]]
COCIRCUITS_K3_PRINTED = [[1, 1, 0], [0, 1, 1]]


# -- independent oracles (no zonomtt code on these paths) ---------------------------


def sym(A):
    return sympy.Matrix(A)


def oracle_det(A):
    return sympy.Integer(0) if not A else sym(A).det()


def oracle_rank(A):
    return sym(A).rank() if A and A[0] else 0


def brute_force_tree_count(n, edges, weights=None):
    """Enumerate all (n-1)-edge subsets and keep the acyclic spanning ones."""
    weights = weights or [1] * len(edges)
    total = 0
    for S in itertools.combinations(range(len(edges)), n - 1):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for e in S:
            a, b = find(edges[e][0]), find(edges[e][1])
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            w = Fraction(1)
            for e in S:
                w *= Fraction(weights[e])
            total += w
    return total if n > 1 else 1


def brute_force_cocircuits(M):
    """Minimal-support {-1,0,1} vectors in the row space, canonical sign, by exhaustive search."""
    M = sym(M)
    n = M.cols
    # v is in the row space iff it is orthogonal to the kernel
    kernel = [list(k) for k in M.nullspace()]
    in_rowspace = []
    for v in itertools.product((-1, 0, 1), repeat=n):
        if not any(v):
            continue
        first = next(x for x in v if x)
        if first < 0:
            continue
        if all(sum(a * b for a, b in zip(v, k)) == 0 for k in kernel):
            in_rowspace.append(v)
    supports = [frozenset(i for i, x in enumerate(v) if x) for v in in_rowspace]
    minimal = []
    for v, s in zip(in_rowspace, supports):
        if not any(t < s for t in supports):
            minimal.append(v)
    return sorted(minimal)


def brute_force_basis_volume(M):
    """Sum of |maximal minors| over column subsets, for full-row-rank M."""
    d, n = len(M), len(M[0])
    return sum(abs(oracle_det([[row[j] for j in S] for row in M])) for S in itertools.combinations(range(n), d))


def random_connected_multigraph(rng, n, m):
    """Random spanning tree plus extra random edges (possibly parallel), random orientations."""
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    edges = []
    for i in range(1, n):
        a, b = verts[i], verts[rng.randrange(i)]
        edges.append((a, b) if rng.random() < 0.5 else (b, a))
    while len(edges) < m:
        a, b = rng.sample(range(1, n + 1), 2)
        edges.append((a, b))
    rng.shuffle(edges)
    return gr.Graph(n, tuple(edges))


@pytest.fixture
def rng():
    return random.Random(12345)


# -- acceptance summary ------------------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, label = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {key:2d}: {label}")
