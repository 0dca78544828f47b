"""Graphs, their incidence matrices and Laplacians, and file readers.

Vertices are ``1..n``; edges are ordered ``(tail, head)`` pairs and may be
loops or repeated.  Spanning trees are counted by deletion-contraction,
which shares no code with the determinant path it is used to check.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ZonoMTTError
from .linalg import hstack, matmul, to_rat, transpose


class ParseError(ZonoMTTError, ValueError):
    def __init__(self, message, lineno=None, source=None):
        where = f"{source or '<input>'}:{lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno


class DisconnectedGraphWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple | None = None

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        object.__setattr__(self, "edges", edges)
        for t, h in edges:
            if not (1 <= t <= self.n and 1 <= h <= self.n):
                raise ValueError(f"edge ({t}, {h}) has an endpoint outside 1..{self.n}")
        if self.weights is not None:
            w = tuple(to_rat(x) for x in self.weights)
            if len(w) != len(edges):
                raise ValueError(f"{len(w)} weights for {len(edges)} edges")
            object.__setattr__(self, "weights", w)

    @property
    def m(self) -> int:
        return len(self.edges)

    def with_weights(self, weights) -> "Graph":
        return Graph(self.n, self.edges, tuple(weights))


def complete_graph(n: int) -> Graph:
    """K_n with edges oriented ``i -> j`` for ``i < j``, in lexicographic order."""
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((n, 1),))


# -- parsing ----------------------------------------------------------------------


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_rational(token, lineno, source):
    try:
        return to_rat(Fraction(token))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {token!r}", lineno, source) from None


def _parse_int(token, lineno, source, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno, source) from None


def parse_graph(text: str, source: str | None = None) -> Graph:
    """Parse the edge-list format: vertex count, then ``tail head [weight]`` lines.

    Blank lines and ``#`` comments are ignored.  Weights are integers or
    ``p/q``; either every edge has one or none does.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file: expected the vertex count", 1, source)
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 1:
        raise ParseError(f"first line must be the vertex count, got {first!r}", lineno, source)
    n = _parse_int(parts[0], lineno, source, "vertex count")
    if n < 1:
        raise ParseError("vertex count must be positive", lineno, source)
    edges, weights = [], []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'tail head [weight]', got {line!r}", lineno, source)
        t = _parse_int(parts[0], lineno, source, "tail")
        h = _parse_int(parts[1], lineno, source, "head")
        for v in (t, h):
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno, source)
        edges.append((t, h))
        weights.append(_parse_rational(parts[2], lineno, source) if len(parts) == 3 else None)
    given = [w is not None for w in weights]
    if any(given) and not all(given):
        lineno = lines[1 + given.index(False)][0]
        raise ParseError("some edges have weights and this one does not", lineno, source)
    return Graph(n, tuple(edges), tuple(weights) if edges and all(given) else None)


def parse_matrix(text: str, source: str | None = None) -> list[list]:
    """Parse ``rows cols`` followed by that many rows of integers or ``p/q`` entries."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file: expected 'rows cols'", 1, source)
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2:
        raise ParseError(f"first line must be 'rows cols', got {first!r}", lineno, source)
    rows = _parse_int(parts[0], lineno, source, "row count")
    cols = _parse_int(parts[1], lineno, source, "column count")
    if rows < 0 or cols < 0:
        raise ParseError("dimensions must be nonnegative", lineno, source)
    body = lines[1:]
    if len(body) != rows:
        where = body[rows][0] if len(body) > rows else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {rows} rows, found {len(body)}", where, source)
    M = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != cols:
            raise ParseError(f"expected {cols} entries, found {len(parts)}", lineno, source)
        M.append([_parse_rational(tok, lineno, source) for tok in parts])
    return M


def parse_weights(text: str, source: str | None = None) -> list:
    """One rational per non-comment line."""
    out = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 1:
            raise ParseError(f"expected one weight per line, got {line!r}", lineno, source)
        out.append(_parse_rational(parts[0], lineno, source))
    return out


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(), source=str(path))


def read_matrix(path) -> list[list]:
    return parse_matrix(Path(path).read_text(), source=str(path))


def read_weights(path) -> list:
    return parse_weights(Path(path).read_text(), source=str(path))


# -- matrices -----------------------------------------------------------------------


def incidence_matrix(G: Graph) -> list[list[int]]:
    """Signed vertex-edge incidence matrix: +1 at the head, -1 at the tail, loops give 0 columns."""
    N = [[0] * G.m for _ in range(G.n)]
    for e, (t, h) in enumerate(G.edges):
        if t != h:
            N[h - 1][e] = 1
            N[t - 1][e] = -1
    return N


def laplacian(G: Graph) -> list[list[int]]:
    if not G.m:
        return [[0] * G.n for _ in range(G.n)]
    N = incidence_matrix(G)
    return matmul(N, transpose(N, G.m))


def weighted_laplacian(G: Graph, weights=None) -> list[list]:
    """``N D N^T`` with ``D`` the diagonal of edge weights."""
    w = weights if weights is not None else G.weights
    if w is None:
        raise ValueError("graph has no weights")
    if not G.m:
        return [[0] * G.n for _ in range(G.n)]
    N = incidence_matrix(G)
    ND = [[x * to_rat(w[e]) for e, x in enumerate(row)] for row in N]
    return matmul(ND, transpose(N, G.m))


def reduced_incidence(G: Graph, drop_vertex: int | None = None) -> list[list[int]]:
    """Incidence matrix with one vertex row removed (the last by default).

    For a connected graph this is a full-row-rank unimodular representation
    of the graphic matroid.
    """
    if not is_connected(G):
        raise ValueError("reduced incidence matrix needs a connected graph")
    v = G.n if drop_vertex is None else drop_vertex
    if not 1 <= v <= G.n:
        raise ValueError(f"vertex {v} outside 1..{G.n}")
    N = incidence_matrix(G)
    return [row for i, row in enumerate(N, start=1) if i != v]


def lambda_matrix(G: Graph) -> list[list[int]]:
    """``L + J``: the Laplacian with 1 added to every entry."""
    return [[x + 1 for x in row] for row in laplacian(G)]


def gamma_matrix(G: Graph) -> list[list[int]]:
    """``[L | 1]``: the Laplacian with a column of ones appended."""
    return hstack(laplacian(G), [[1] for _ in range(G.n)])


# -- connectivity and spanning trees -------------------------------------------------


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def components(G: Graph) -> int:
    parent = list(range(G.n + 1))
    count = G.n
    for t, h in G.edges:
        a, b = _find(parent, t), _find(parent, h)
        if a != b:
            parent[a] = b
            count -= 1
    return count


def is_connected(G: Graph) -> bool:
    return components(G) == 1


def _tree_sum(n, edges, memo):
    """Weighted spanning-tree sum of a multigraph on vertices 0..n-1 given as (u, v, w) triples."""
    edges = [e for e in edges if e[0] != e[1]]
    if n == 1:
        return 1
    if not edges:
        return 0
    key = (n, tuple(sorted((min(u, v), max(u, v), w) for u, v, w in edges)))
    if key in memo:
        return memo[key]
    u, v, w = edges[-1]
    rest = edges[:-1]
    deleted = _tree_sum(n, rest, memo)
    # contract v into u, then relabel the last vertex into v's slot
    last = n - 1

    def relabel(x):
        x = u if x == v else x
        return v if x == last and v != last else x

    contracted_edges = [(relabel(a), relabel(b), c) for a, b, c in rest]
    contracted = _tree_sum(n - 1, contracted_edges, memo)
    result = deleted + w * contracted
    memo[key] = result
    return result


def _deletion_contraction(G: Graph, weights):
    if not is_connected(G):
        warnings.warn("graph is disconnected: it has no spanning trees", DisconnectedGraphWarning, stacklevel=3)
        return 0
    edges = [(t - 1, h - 1, w) for (t, h), w in zip(G.edges, weights)]
    return to_rat(_tree_sum(G.n, edges, {}))


def spanning_tree_count(G: Graph) -> int:
    """Number of spanning trees, by deletion-contraction on the multigraph.

    A disconnected graph has none; a :class:`DisconnectedGraphWarning` is
    issued so the 0 is not mistaken for a computed count.
    """
    return _deletion_contraction(G, [1] * G.m)


def weighted_tree_sum(G: Graph, weights=None):
    """Sum over spanning trees of the product of their edge weights."""
    w = weights if weights is not None else G.weights
    if w is None:
        raise ValueError("graph has no weights")
    if len(w) != G.m:
        raise ValueError(f"{len(w)} weights for {G.m} edges")
    return _deletion_contraction(G, [to_rat(x) for x in w])
