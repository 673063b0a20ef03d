"""Simple undirected graphs, edge-list I/O, vertex orderings and capped neighborhoods."""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Literal, NamedTuple, Sequence


class GraphFormatError(ValueError):
    """Malformed edge-list input. ``line`` is 1-based, or None for whole-document problems."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Build instances with
    :meth:`from_edges` (validating) rather than the raw constructor.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(default=-1)

    def __post_init__(self):
        if self.m < 0:
            object.__setattr__(self, "m", sum(len(a) for a in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, ((),) * n, 0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency tuples are short on average; bisect only pays off for hubs
        if len(a) < 16:
            return v in a
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class GraphHeader(NamedTuple):
    """Declared vertex/edge counts from a ``p <n> <m>`` header line."""

    n: int
    m: int


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its vertex sequence; consecutive vertices (cyclically) are adjacent."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def relabel(self, labels: Sequence[int]) -> Cycle:
        return Cycle(tuple(labels[v] for v in self.vertices))

    def is_valid(self, g: Graph, length: int | None = None) -> bool:
        try:
            self.validate(g, length)
        except ValueError:
            return False
        return True

    def validate(self, g: Graph, length: int | None = None) -> None:
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {len(vs)}")
        if length is not None and len(vs) != length:
            raise ValueError(f"cycle has length {len(vs)}, expected {length}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"cycle repeats a vertex: {vs}")
        for u, v in self.edges():
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


# ---------------------------------------------------------------------------
# edge-list format


def _split_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphFormatError(f"malformed token {tok!r}", lineno) from None
    if val < 0:
        raise GraphFormatError(f"negative vertex id {val}", lineno)
    return val


def read_header(text: str) -> GraphHeader | None:
    """Return the declared counts if the first content line is a ``p`` header."""
    for lineno, line in _split_lines(text):
        toks = line.split()
        if toks[0] != "p":
            return None
        if len(toks) != 3:
            raise GraphFormatError("header must be 'p <n> <m>'", lineno)
        return GraphHeader(_parse_int(toks[1], lineno), _parse_int(toks[2], lineno))
    return None


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Lines are ``<u> <v>``; ``#`` starts a comment line; an optional first
    content line ``p <n> <m>`` fixes the vertex count (allowing isolated
    vertices) and the edge count. Without a header ``n = 1 + max id``.
    Self-loops, duplicate edges and malformed tokens are rejected with the
    offending line number.
    """
    header: GraphHeader | None = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    max_id = -1
    first = True
    for lineno, line in _split_lines(text):
        toks = line.split()
        if first and toks[0] == "p":
            first = False
            if len(toks) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            header = GraphHeader(_parse_int(toks[1], lineno), _parse_int(toks[2], lineno))
            continue
        first = False
        if toks[0] == "p":
            raise GraphFormatError("header line must come first", lineno)
        if len(toks) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {len(toks)} tokens", lineno)
        u, v = _parse_int(toks[0], lineno), _parse_int(toks[1], lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        if header is not None and max(u, v) >= header.n:
            raise GraphFormatError(f"vertex id {max(u, v)} exceeds declared n={header.n}", lineno)
        seen[key] = lineno
        edges.append(key)
        max_id = max(max_id, v if v > u else u)
    if header is not None:
        if header.m != len(edges):
            raise GraphFormatError(f"header declares m={header.m} but {len(edges)} edges were read")
        n = header.n
    else:
        n = max_id + 1
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# orderings


@dataclass(frozen=True, eq=False)
class DegreeOrder:
    """A total order on the vertices.

    ``order[j]`` is the ``(j+1)``-th vertex ``v_{j+1}`` and ``rank[v]`` its
    0-based position, so ``rank[order[j]] == j``. Despite the name any
    permutation can be wrapped; :func:`degree_order` builds the one the
    finder uses.
    """

    rank: tuple[int, ...]
    order: tuple[int, ...]

    @classmethod
    def from_sequence(cls, order: Sequence[int]) -> DegreeOrder:
        order = tuple(order)
        rank = [-1] * len(order)
        for pos, v in enumerate(order):
            if not 0 <= v < len(order) or rank[v] != -1:
                raise ValueError("order must be a permutation of range(n)")
            rank[v] = pos
        return cls(tuple(rank), order)

    def __len__(self) -> int:
        return len(self.order)

    def precedes(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]

    def respects_degrees(self, g: Graph) -> bool:
        """True iff ``deg(u) < deg(v)`` implies ``u`` comes before ``v``."""
        degs = [g.degree(v) for v in self.order]
        return all(a <= b for a, b in zip(degs, degs[1:]))


def degree_order(g: Graph) -> DegreeOrder:
    """Vertices by non-decreasing degree, ties broken by id."""
    adj = g.adj
    return DegreeOrder.from_sequence(sorted(range(g.n), key=lambda v: (len(adj[v]), v)))


def id_order(n: int) -> DegreeOrder:
    return DegreeOrder.from_sequence(range(n))


def random_order(n: int, seed: int) -> DegreeOrder:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return DegreeOrder.from_sequence(perm)


def parse_order_spec(spec: str, g: Graph) -> DegreeOrder:
    """``degree``, ``id`` or ``random:<seed>``."""
    if spec == "degree":
        return degree_order(g)
    if spec == "id":
        return id_order(g.n)
    if spec.startswith("random:"):
        return random_order(g.n, int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown ordering {spec!r}")


# ---------------------------------------------------------------------------
# capped neighborhoods


@dataclass(frozen=True)
class Neighborhood:
    """A subgraph relabelled to ``0..len(labels)-1``.

    ``labels[local] == original``; the root (``v_i``) is local vertex 0.
    """

    graph: Graph
    labels: tuple[int, ...]
    root: int = 0

    def to_original(self, cycle: Cycle) -> Cycle:
        return cycle.relabel(self.labels)

    def original_edges(self) -> set[tuple[int, int]]:
        lab = self.labels
        return {(min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in self.graph.edges}


def capped_neighborhood(g: Graph, ord: DegreeOrder, i: int, k: int) -> Neighborhood:
    """Build ``G_{<=i}^k`` for the ``i``-th vertex ``v_i`` (1-based ``i``).

    BFS from ``v_i`` through vertices of rank ``< i`` only (the subgraph
    induced by ``v_1..v_i``), then keep every edge of that induced subgraph
    with an endpoint at distance ``< k`` from ``v_i``.
    """
    n = g.n
    if not 1 <= i <= n:
        raise ValueError(f"i must lie in [1, {n}], got {i}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    rank = ord.rank
    adj = g.adj
    cap = i - 1
    root = ord.order[cap]

    local = {root: 0}
    labels = [root]
    frontier = [root]
    for _ in range(1, k):
        nxt = []
        for a in frontier:
            for b in adj[a]:
                if rank[b] <= cap and b not in local:
                    local[b] = len(labels)
                    labels.append(b)
                    nxt.append(b)
        frontier = nxt
        if not nxt:
            break
    inner = labels[:]
    n_inner = len(inner)

    nbrs: list[list[int]] = [[] for _ in range(n_inner)]
    for a in inner:
        la = local[a]
        for b in adj[a]:
            if rank[b] > cap:
                continue
            lb = local.get(b)
            if lb is not None and lb < n_inner and b < a:
                continue  # inner-inner edge, recorded from its smaller endpoint
            if lb is None:
                lb = local[b] = len(labels)
                labels.append(b)
                nbrs.append([])
            nbrs[la].append(lb)
            nbrs[lb].append(la)
    h = Graph(len(labels), tuple(tuple(sorted(x)) for x in nbrs))
    return Neighborhood(h, tuple(labels), 0)


# ---------------------------------------------------------------------------
# density shortcut


def exceeds_bondy_simonovits(n: int, m: int, k: int) -> bool:
    """Exact test of ``m >= 100 k n^(1+1/k)`` via ``m^k >= (100k)^k n^(k+1)``."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n <= 0:
        return False
    return m**k >= (100 * k) ** k * n ** (k + 1)


def bondy_simonovits_threshold(n: int, k: int) -> float:
    return 100 * k * n ** (1 + 1 / k)


def density_shortcut(g: Graph | GraphHeader, k: int) -> Literal["yes", "unknown"]:
    """``"yes"`` if the edge count alone guarantees a ``2k``-cycle, else ``"unknown"``.

    Accepts anything with ``n`` and ``m`` attributes, e.g. a declared header.
    """
    return "yes" if exceeds_bondy_simonovits(g.n, g.m, k) else "unknown"
