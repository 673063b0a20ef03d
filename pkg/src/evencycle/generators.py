"""Seeded test-instance factories."""

from __future__ import annotations

import math
import random
from collections import deque

import numpy as np

from .graph import Cycle, Graph


def _pair(t: int) -> tuple[int, int]:
    """Inverse of ``t = v(v-1)/2 + u`` for ``u < v``."""
    v = (1 + math.isqrt(1 + 8 * t)) // 2
    while v * (v - 1) // 2 > t:
        v -= 1
    while (v + 1) * v // 2 <= t:
        v += 1
    return t - v * (v - 1) // 2, v


def gen_random(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with exactly ``m`` edges."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"cannot place {m} edges on {n} vertices (max {total})")
    rng = random.Random(seed)
    return Graph.from_edges(n, (_pair(t) for t in rng.sample(range(total), m)))


def gen_planted_cycle(n: int, m: int, k: int, seed: int) -> tuple[Graph, Cycle]:
    """Random graph with ``m`` edges containing a planted ``2k``-cycle (returned too)."""
    L = 2 * k
    total = n * (n - 1) // 2
    if k < 2 or L > n:
        raise ValueError(f"need 2 <= k and 2k <= n, got k={k}, n={n}")
    if not L <= m <= total:
        raise ValueError(f"need 2k <= m <= {total}, got m={m}")
    rng = random.Random(seed)
    verts = rng.sample(range(n), L)
    cyc = Cycle(tuple(verts))
    chosen = {(min(a, b), max(a, b)) for a, b in cyc.edges()}
    rest = m - L
    if rest > (total - L) // 2:
        pool = [p for p in map(_pair, range(total)) if p not in chosen]
        chosen.update(rng.sample(pool, rest))
    else:
        while len(chosen) < m:
            chosen.add(_pair(rng.randrange(total)))
    return Graph.from_edges(n, chosen), cyc


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def projective_points(q: int) -> np.ndarray:
    """Normalized representatives of PG(2, q): first nonzero coordinate is 1."""
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return np.array(pts, dtype=np.int64)


def gen_c4_free_polarity(q: int) -> Graph:
    """Polarity graph of PG(2, q): points adjacent iff orthogonal. C4-free, ``n = q^2+q+1``.

    Self-orthogonal points stay as vertices of degree ``q``.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    P = projective_points(q)
    dots = (P @ P.T) % q
    us, vs = np.nonzero(np.triu(dots == 0, k=1))
    return Graph.from_edges(len(P), zip(us.tolist(), vs.tolist()))


def self_orthogonal_count(q: int) -> int:
    P = projective_points(q)
    return int(np.sum((P * P).sum(axis=1) % q == 0))


def _ball(adj: list[list[int]], src: int, radius: int) -> set[int]:
    seen = {src}
    frontier = [src]
    for _ in range(radius):
        nxt = []
        for a in frontier:
            for b in adj[a]:
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        if not nxt:
            break
        frontier = nxt
    return seen


def gen_high_girth(n: int, girth_target: int, seed: int, max_rounds: int | None = None) -> Graph:
    """Greedy graph with girth at least ``girth_target``.

    Rounds visit the vertices in random order; each vertex gets one new edge
    to a uniformly chosen vertex at distance ``>= girth_target - 1`` (so the
    edge closes no shorter cycle). Stops when a round adds nothing.
    """
    if girth_target < 3:
        raise ValueError(f"girth target must be at least 3, got {girth_target}")
    rng = random.Random(seed)
    adj: list[list[int]] = [[] for _ in range(n)]
    radius = girth_target - 2
    rounds = 0
    while max_rounds is None or rounds < max_rounds:
        rounds += 1
        added = 0
        order = list(range(n))
        rng.shuffle(order)
        for u in order:
            near = _ball(adj, u, radius)
            if len(near) == n:
                continue
            v = rng.randrange(n)
            while v in near:
                v = rng.randrange(n)
            adj[u].append(v)
            adj[v].append(u)
            added += 1
        if not added:
            break
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def girth(g: Graph) -> float:
    """Length of a shortest cycle (BFS from every vertex); ``inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            a = q.popleft()
            if 2 * dist[a] + 1 >= best:
                break
            for b in g.adj[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    parent[b] = a
                    q.append(b)
                elif parent[a] != b:
                    best = min(best, dist[a] + dist[b] + 1)
    return best
