"""Triangle-to-2k-cycle reduction gadget.

From ``G`` build three copies ``A, B, C`` of the vertex set, join
``u_A-v_B``, ``u_B-v_C``, ``u_C-v_A`` for every edge in both orientations,
subdivide each of those edges into a path of length ``x = ceil((2k+1)/4)``
and stretch every ``u_A`` into a chain of ``2k - 3x + 1`` vertices. A 2k-cycle
then has to run ``u_A^1 -> v_B -> w_C -> u_A^last -> u_A^1`` over a triangle.

Vertex numbering (stable, so serialized gadgets are byte-identical):

* A-chains, grouped by original vertex: ``u * chain + (pos - 1)``
* B copies: ``n * chain + u``; C copies: ``n * chain + n + u``
* path-internal vertices, grouped by original edge ``(u, v)`` (canonical
  order), then by the six copy-pairs in :data:`COPY_PAIRS` order, then by
  position ``1..x-1`` counted from the first endpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .graph import Cycle, Graph
from .oracle import oracle_find_triangle, oracle_has_cycle

# (from copy, endpoint of original edge, to copy, endpoint) for edge (u, v)
COPY_PAIRS = (
    ("A", 0, "B", 1),
    ("B", 0, "C", 1),
    ("C", 0, "A", 1),
    ("A", 1, "B", 0),
    ("B", 1, "C", 0),
    ("C", 1, "A", 0),
)


class UnsupportedParameter(ValueError):
    pass


class Origin(NamedTuple):
    """Where a gadget vertex comes from.

    ``role`` is ``"A"``, ``"B"``, ``"C"`` for copies of an original vertex
    ``source`` (``position`` is the A-chain index, 1-based, else 1), or
    ``"AB"``/``"BC"``/``"CA"`` for a path-internal vertex on the subdivided
    edge from ``source[0]``'s first copy to ``source[1]``'s second copy.
    """

    role: str
    source: int | tuple[int, int]
    position: int


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    k: int
    x: int
    chain: int
    node_origin: tuple[Origin, ...]

    def back_map(self, cycle: Cycle) -> tuple[int, int, int]:
        """Original ``(u, v, w)`` with ``u_A, v_B, w_C`` on ``cycle``."""
        found: dict[str, set[int]] = {"A": set(), "B": set(), "C": set()}
        for z in cycle.vertices:
            o = self.node_origin[z]
            if o.role in found:
                found[o.role].add(o.source)
        if any(len(s) != 1 for s in found.values()):
            raise ValueError(f"cycle does not pass one copy of each side: {found}")
        return (found["A"].pop(), found["B"].pop(), found["C"].pop())

    def origin_json(self) -> list[dict]:
        out = []
        for o in self.node_origin:
            src = list(o.source) if isinstance(o.source, tuple) else o.source
            out.append({"role": o.role, "source": src, "position": o.position})
        return out


def subdivision_length(k: int) -> int:
    return math.ceil((2 * k + 1) / 4)


def chain_length(k: int) -> int:
    return max(1, 2 * k - 3 * subdivision_length(k) + 1)


def _check_k(k: int) -> None:
    if k < 3 or k == 4:
        raise UnsupportedParameter(
            f"k={k} unsupported: the reduction needs k >= 3 and k != 4 (2k >= 3x fails otherwise)"
        )


def build_tripartite(g: Graph) -> tuple[Graph, tuple[Origin, ...]]:
    """Three copies of ``V``; vertex ``u`` of copy ``A, B, C`` is ``u, n + u, 2n + u``."""
    n = g.n
    offs = {"A": 0, "B": n, "C": 2 * n}
    origin = tuple(Origin(side, u, 1) for side in "ABC" for u in range(n))
    edges = []
    for e in g.edges:
        for s1, i1, s2, i2 in COPY_PAIRS:
            edges.append((offs[s1] + e[i1], offs[s2] + e[i2]))
    return Graph.from_edges(3 * n, edges), origin


def build_gadget(g: Graph, k: int) -> GadgetGraph:
    _check_k(k)
    x = subdivision_length(k)
    chain = chain_length(k)
    n = g.n
    origin: list[Origin] = []
    for u in range(n):
        origin.extend(Origin("A", u, p) for p in range(1, chain + 1))
    origin.extend(Origin("B", u, 1) for u in range(n))
    origin.extend(Origin("C", u, 1) for u in range(n))

    def copy_vertex(side: str, u: int, entering_from: str) -> int:
        if side == "A":
            # paths from B attach at the chain head, paths from C at its tail
            return u * chain + (0 if entering_from == "B" else chain - 1)
        return n * chain + (u if side == "B" else n + u)

    edges: list[tuple[int, int]] = []
    for u in range(n):
        edges.extend((u * chain + p, u * chain + p + 1) for p in range(chain - 1))
    nxt = len(origin)
    for e in g.edges:
        for s1, i1, s2, i2 in COPY_PAIRS:
            a, b = e[i1], e[i2]
            start = copy_vertex(s1, a, s2)
            end = copy_vertex(s2, b, s1)
            prev = start
            for pos in range(1, x):
                origin.append(Origin(s1 + s2, (a, b), pos))
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, end))
    return GadgetGraph(Graph.from_edges(len(origin), edges), k, x, chain, tuple(origin))


def expected_size(n: int, m: int, k: int) -> tuple[int, int]:
    """``(|V|, |E|)`` of the gadget for a source graph with ``n`` vertices and ``m`` edges."""
    x, c = subdivision_length(k), chain_length(k)
    return n * (c + 2) + 6 * m * (x - 1), 6 * m * x + n * (c - 1)


@dataclass(frozen=True)
class ReductionCheck:
    agrees: bool
    has_triangle: bool
    has_cycle: bool
    triangle: tuple[int, int, int] | None
    witness: Cycle | None


def verify_reduction(g: Graph, k: int, budget: int = 10**8) -> ReductionCheck:
    """Compare triangle existence in ``g`` with 2k-cycle existence in its gadget.

    Both sides are decided by brute force. Raises :class:`BudgetExceeded`
    if the gadget is too large to search.
    """
    gad = build_gadget(g, k)
    tri = oracle_find_triangle(g)
    cyc = oracle_has_cycle(gad.graph, 2 * k, budget=budget)
    return ReductionCheck((tri is not None) == (cyc is not None), tri is not None, cyc is not None, tri, cyc)

