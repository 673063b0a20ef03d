"""Exact counting of order-capped k-walks and the two bounds built on them.

A capped k-walk from ``u`` is a walk ``(x_0 = u, x_1, ..., x_k)`` whose
vertices all satisfy ``rank(x_i) <= rank(u)``. Counts are exact Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import DegreeOrder, Graph


@dataclass(frozen=True)
class CappedWalkCensus:
    per_start: tuple[int, ...]
    total: int
    k: int
    ordering: DegreeOrder
    capped: bool = True


def count_from(g: Graph, ord: DegreeOrder | None, u: int, k: int) -> int:
    """Number of k-walks from ``u`` staying at rank ``<= rank(u)``; uncapped if ``ord`` is None."""
    adj = g.adj
    cur = {u: 1}
    if ord is None:
        for _ in range(k):
            nxt: dict[int, int] = {}
            for w, c in cur.items():
                for v in adj[w]:
                    nxt[v] = nxt.get(v, 0) + c
            cur = nxt
    else:
        rank = ord.rank
        cap = rank[u]
        for _ in range(k):
            nxt = {}
            for w, c in cur.items():
                for v in adj[w]:
                    if rank[v] <= cap:
                        nxt[v] = nxt.get(v, 0) + c
            cur = nxt
            if not cur:
                return 0
    return sum(cur.values())


def count_capped_walks(g: Graph, ord: DegreeOrder, k: int, capped: bool = True) -> CappedWalkCensus:
    """Per-start and total capped k-walk counts (plain k-walk counts with ``capped=False``)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    cap_ord = ord if capped else None
    per = tuple(count_from(g, cap_ord, u, k) for u in range(g.n))
    return CappedWalkCensus(per, sum(per), k, ord, capped)


@dataclass(frozen=True)
class BoundCheck:
    """``value`` compared against ``bound``; ``holds`` is the verdict of the inequality."""

    holds: bool
    value: float | int
    bound: float | Fraction
    notes: tuple[str, ...] = field(default=())

    @property
    def ratio(self) -> float:
        if self.bound == 0:
            return 1.0 if self.value == 0 else float("inf")
        return float(self.value) / float(self.bound)


def lower_bound(n: int, m: int, k: int) -> Fraction:
    """``n (m / 2n)^k`` as an exact rational."""
    if n == 0:
        return Fraction(0)
    return n * Fraction(m, 2 * n) ** k


def check_lower_bound(g: Graph, census: CappedWalkCensus) -> BoundCheck:
    """Capped k-walks are at least ``n (m/2n)^k`` for every ordering; compared exactly."""
    bound = lower_bound(g.n, g.m, census.k)
    return BoundCheck(census.total >= bound, census.total, bound)


@dataclass(frozen=True)
class UpperBoundDiagnostic:
    total: int
    m: int
    k: int
    normalized: float
    max_degree: int
    degree_cap: float
    violations: tuple[str, ...]

    @property
    def preconditions_met(self) -> bool:
        return not self.violations


def check_upper_bound_diagnostic(
    g: Graph, census: CappedWalkCensus, k: int | None = None, verify_free: bool = False
) -> UpperBoundDiagnostic:
    """Report ``total / m^{2k/(k+1)}``, the effective constant in the capped-walk upper bound.

    No threshold is asserted. Broken preconditions (degree cap, ordering not
    degree-compatible, a 2k-cycle present when ``verify_free``) are listed in
    ``violations``.
    """
    k = census.k if k is None else k
    if k != census.k:
        raise ValueError(f"census was taken for k={census.k}, not {k}")
    m = g.m
    cap = m ** (2 / (k + 1)) if m else 0.0
    violations = []
    if g.max_degree > cap:
        violations.append(f"max degree {g.max_degree} exceeds m^(2/(k+1)) = {cap:.3f}")
    if not census.ordering.respects_degrees(g):
        violations.append("ordering is not non-decreasing in degree")
    if not census.capped:
        violations.append("census is uncapped")
    if verify_free:
        from .oracle import oracle_has_cycle

        if oracle_has_cycle(g, 2 * k) is not None:
            violations.append(f"graph contains a {2 * k}-cycle")
    normalized = census.total / m ** (2 * k / (k + 1)) if m else 0.0
    return UpperBoundDiagnostic(census.total, m, k, normalized, g.max_degree, cap, tuple(violations))


def family_growth(normalized: list[float]) -> float:
    """Ratio of the last to the second-to-last value of a growing family."""
    if len(normalized) < 2:
        raise ValueError("need at least two family members")
    a, b = normalized[-2], normalized[-1]
    if a == 0:
        return 1.0 if b == 0 else float("inf")
    return b / a
