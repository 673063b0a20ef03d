"""Brute-force reference algorithms.

Everything here is exhaustive and slow on purpose; it is the ground truth the
fast paths are tested against. Cycle searches count node expansions and raise
:class:`BudgetExceeded` instead of ever returning a truncated answer.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Cycle, Graph

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The exhaustive search ran past its node-expansion budget."""


class _Counter:
    __slots__ = ("left", "budget")

    def __init__(self, budget: int):
        self.budget = budget
        self.left = budget

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"cycle search exceeded its budget of {self.budget} expansions")


def _bfs_dist(g: Graph, src: int, allowed_min: int = 0) -> dict[int, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        a = q.popleft()
        da = dist[a] + 1
        for b in g.adj[a]:
            if b >= allowed_min and b not in dist:
                dist[b] = da
                q.append(b)
    return dist


def _search_from(g: Graph, s: int, L: int, lo: int, counter: _Counter) -> list[int] | None:
    """Simple path ``s -> ... -> x_{L-1}`` over vertices ``>= lo`` closing back to ``s``.

    Only paths with ``x_1 < x_{L-1}`` are accepted, which fixes the traversal
    direction. ``dist`` prunes branches that cannot return to ``s`` in time.
    """
    dist = _bfs_dist(g, s, lo)
    adj = g.adj
    path = [s]
    on_path = {s}

    def extend(w: int) -> bool:
        depth = len(path) - 1
        if depth == L - 1:
            return path[1] < w and s in adj[w]
        remaining = L - depth - 1  # steps left after moving to the next vertex
        for x in adj[w]:
            if x < lo or x in on_path:
                continue
            dx = dist.get(x)
            if dx is None or dx > remaining:
                continue
            counter.tick()
            path.append(x)
            on_path.add(x)
            if extend(x):
                return True
            path.pop()
            on_path.discard(x)
        return False

    return path[:] if extend(s) else None


def oracle_has_cycle(g: Graph, L: int, budget: int = DEFAULT_BUDGET) -> Cycle | None:
    """Some simple cycle on exactly ``L`` vertices, or None.

    Each cycle is searched for once, from its minimum vertex.
    """
    if L < 3:
        raise ValueError(f"cycle length must be at least 3, got {L}")
    counter = _Counter(budget)
    for s in range(g.n):
        if len(g.adj[s]) < 2:
            continue
        found = _search_from(g, s, L, s, counter)
        if found is not None:
            return Cycle(tuple(found))
    return None


def oracle_cycle_through(g: Graph, u: int, L: int, budget: int = DEFAULT_BUDGET) -> Cycle | None:
    """Some simple ``L``-cycle containing ``u``, or None."""
    if L < 3:
        raise ValueError(f"cycle length must be at least 3, got {L}")
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} not in graph with n={g.n}")
    found = _search_from(g, u, L, 0, _Counter(budget))
    return Cycle(tuple(found)) if found is not None else None


def oracle_find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """First triangle ``(a, b, c)`` with ``a < b < c`` by plain triple loop over edges."""
    for a in range(g.n):
        na = set(g.adj[a])
        for b in g.adj[a]:
            if b <= a:
                continue
            for c in g.adj[b]:
                if c > b and c in na:
                    return (a, b, c)
    return None


def walk_vector(g: Graph, k: int) -> list[int]:
    """``X^k 1`` with exact integers: entry ``v`` counts k-walks starting at ``v``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    w = [1] * g.n
    adj = g.adj
    for _ in range(k):
        w = [sum(w[x] for x in adj[v]) for v in range(g.n)]
    return w


def oracle_count_k_walks(g: Graph, S: Iterable[int], k: int) -> int:
    """Exact number of walks ``(x_0, ..., x_k)`` with ``x_0`` in ``S``."""
    S = set(S)
    if not S:
        return 0
    w = walk_vector(g, k)
    return sum(w[v] for v in S)
