"""Per-vertex 2k-cycle detector (the black box the finder calls).

Randomized mode is color-coding: color the vertices with ``2k`` colors and
look for a colorful cycle through ``u`` by dynamic programming over color
subsets. Reachable subsets of a vertex are kept as a Python int used as a
bitset indexed by subset mask, so extending every path by one vertex of color
``c`` is ``(bits & no_c) << (1 << c)``.

Exhaustive mode is a depth-bounded DFS and never misses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .graph import Cycle, Graph

Mode = Literal["randomized", "exhaustive"]

# bits per batched big-int; larger batches amortize Python overhead but
# waste work once a trial has succeeded
_BATCH_BITS = 1 << 14


@dataclass(frozen=True)
class DetectorConfig:
    k: int
    delta: float = 1e-6
    seed: int = 0
    mode: Mode = "randomized"

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"failure bound must lie in (0, 1), got {self.delta}")
        if self.mode not in ("randomized", "exhaustive"):
            raise ValueError(f"unknown detector mode {self.mode!r}")

    @property
    def trials(self) -> int:
        """``ceil(e^{2k} ln(1/delta))``: enough since a fixed cycle is colorful w.p. >= e^{-2k}."""
        return max(1, math.ceil(math.exp(2 * self.k) * math.log(1.0 / self.delta)))

    def with_seed(self, seed: int) -> DetectorConfig:
        return DetectorConfig(self.k, self.delta, seed, self.mode)


def colorful_probability(k: int) -> float:
    """Chance that a fixed 2k-cycle is colorful under a uniform 2k-coloring."""
    L = 2 * k
    return math.factorial(L) / L**L


def _subset_masks(L: int) -> list[int]:
    """``no_c[c]``: bitset over all subset masks that do not contain color ``c``."""
    size = 1 << L
    masks = []
    for c in range(L):
        bits = 0
        for s in range(size):
            if not s >> c & 1:
                bits |= 1 << s
        masks.append(bits)
    return masks


_MASK_CACHE: dict[int, list[int]] = {}


def _no_color_masks(L: int) -> list[int]:
    masks = _MASK_CACHE.get(L)
    if masks is None:
        masks = _MASK_CACHE[L] = _subset_masks(L)
    return masks


def colorful_path_dp(h: Graph, u: int, coloring: Sequence[int], k: int) -> Cycle | None:
    """Colorful 2k-cycle through ``u`` under ``coloring``, or None.

    ``layers[t][v]`` holds the color sets ``S`` (as bits) such that some path
    ``u = x_1, ..., x_t = v`` uses each color of ``S`` exactly once. A cycle
    exists iff a neighbour of ``u`` carries the full set at layer ``2k``; the
    witness is recovered by walking the layers backwards.
    """
    L = 2 * k
    if len(coloring) != h.n:
        raise ValueError("coloring must assign a color to every vertex")
    if any(not 0 <= c < L for c in coloring):
        raise ValueError(f"colors must lie in [0, {L})")
    no_c = _no_color_masks(L)
    adj = h.adj
    full = (1 << L) - 1

    layers: list[dict[int, int]] = [{u: 1 << (1 << coloring[u])}]
    for _ in range(L - 1):
        cur = layers[-1]
        acc: dict[int, int] = {}
        for w, bits in cur.items():
            for v in adj[w]:
                acc[v] = acc.get(v, 0) | bits
        nxt = {}
        for v, bits in acc.items():
            c = coloring[v]
            out = (bits & no_c[c]) << (1 << c)
            if out:
                nxt[v] = out
        if not nxt:
            return None
        layers.append(nxt)

    last = layers[-1]
    end = next((v for v in adj[u] if last.get(v, 0) >> full & 1), None)
    if end is None:
        return None

    path = [end]
    subset = full
    v = end
    for t in range(L - 1, 0, -1):
        subset ^= 1 << coloring[v]
        prev = layers[t - 1]
        v = next(w for w in adj[v] if prev.get(w, 0) >> subset & 1)
        path.append(v)
    assert v == u
    path.reverse()
    return Cycle(tuple(path))


def _block_masks(colors: np.ndarray, L: int, block_bytes: int) -> list[list[int]]:
    """``sel[v][c]``: big-int with all bits of trial block ``t`` set iff ``colors[t, v] == c``."""
    hit = colors.T[:, None, :] == np.arange(L)[None, :, None]
    raw = np.repeat(hit.astype(np.uint8) * np.uint8(0xFF), block_bytes, axis=2)
    return [[int.from_bytes(row.tobytes(), "little") for row in per_v] for per_v in raw]


def _first_success_in_batch(h: Graph, u: int, colors: np.ndarray, L: int) -> int | None:
    """Run ``B`` color-coding trials at once; return the lowest successful trial index.

    Bit ``t * 2^L + S`` of a vertex's int is set iff the path DP of trial
    ``t`` reached that vertex with color set ``S``.
    """
    B, n = colors.shape
    block = 1 << L
    block_bytes = block // 8
    sel = _block_masks(colors, L, block_bytes)
    no_c_one = _no_color_masks(L)
    ones_block = sum(1 << (t * block) for t in range(B))
    no_c = [no_c_one[c] * ones_block for c in range(L)]
    adj = h.adj

    start = 0
    for t in range(B):
        start |= 1 << (t * block + (1 << int(colors[t, u])))
    cur = {u: start}
    for _ in range(L - 1):
        acc: dict[int, int] = {}
        for w, bits in cur.items():
            for v in adj[w]:
                acc[v] = acc.get(v, 0) | bits
        nxt = {}
        for v, bits in acc.items():
            sv = sel[v]
            out = 0
            for c in range(L):
                part = bits & sv[c] & no_c[c]
                if part:
                    out |= part << (1 << c)
            if out:
                nxt[v] = out
        if not nxt:
            return None
        cur = nxt

    hits = 0
    for v in adj[u]:
        hits |= cur.get(v, 0)
    full = block - 1
    for t in range(B):
        if hits >> (t * block + full) & 1:
            return t
    return None


def _randomized(h: Graph, u: int, cfg: DetectorConfig) -> Cycle | None:
    L = 2 * cfg.k
    if len(h.adj[u]) < 2:
        return None
    rng = np.random.default_rng(cfg.seed)
    remaining = cfg.trials
    batch = max(1, _BATCH_BITS >> L)
    while remaining > 0:
        b = min(batch, remaining)
        colors = rng.integers(0, L, size=(b, h.n), dtype=np.int64)
        t = _first_success_in_batch(h, u, colors, L)
        if t is not None:
            cyc = colorful_path_dp(h, u, colors[t].tolist(), cfg.k)
            assert cyc is not None
            return cyc
        remaining -= b
    return None


def exhaustive_cycle_through(h: Graph, u: int, L: int) -> Cycle | None:
    """DFS over simple paths of ``L`` vertices from ``u``; closes when the last is adjacent to ``u``."""
    adj = h.adj
    if len(adj[u]) < 2:
        return None
    # distances from u bound how far a path may wander and still return
    dist = {u: 0}
    frontier = [u]
    d = 0
    while frontier and d < L // 2:
        d += 1
        nxt = []
        for a in frontier:
            for b in adj[a]:
                if b not in dist:
                    dist[b] = d
                    nxt.append(b)
        frontier = nxt
    half = L // 2
    path = [u]
    on_path = {u}

    def extend(w: int) -> bool:
        depth = len(path) - 1
        if depth == L - 1:
            return path[1] < w and u in adj[w]
        remaining = L - depth - 1
        for x in adj[w]:
            if x in on_path:
                continue
            # every vertex of an L-cycle through u lies within L/2 of u
            dx = dist.get(x, half + 1)
            if dx > remaining or dx > half:
                continue
            path.append(x)
            on_path.add(x)
            if extend(x):
                return True
            path.pop()
            on_path.discard(x)
        return False

    return Cycle(tuple(path)) if extend(u) else None


def detect_cycle_through(h: Graph, u: int, cfg: DetectorConfig) -> Cycle | None:
    """A 2k-cycle through ``u`` in ``h``, or None.

    A returned cycle is always genuine. In randomized mode a cycle through
    ``u`` is missed with probability at most ``cfg.delta``.
    """
    if not 0 <= u < h.n:
        raise ValueError(f"vertex {u} not in graph with n={h.n}")
    if cfg.mode == "exhaustive":
        return exhaustive_cycle_through(h, u, 2 * cfg.k)
    return _randomized(h, u, cfg)
