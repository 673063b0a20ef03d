"""The square-root level-set norm and checks of the inequalities built on it.

``snorm(v) = integral_0^inf sqrt(#{i : |v_i| >= x}) dx``. The integrand is a
step function, so with ``a_1 >= ... >= a_n`` the sorted magnitudes the
integral is exactly ``sum_j (sqrt(j) - sqrt(j-1)) a_j``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph
from .oracle import BudgetExceeded, oracle_count_k_walks, oracle_has_cycle, walk_vector
from .walks import BoundCheck

RTOL = 1e-9
ATOL = 1e-12
_EXACT_FLOAT_LIMIT = 2**53


class CheckSkipped(RuntimeError):
    """A precondition could not be verified within budget; the check did not run."""


def _as_array(v) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("snorm is defined for finite vectors only")
    return arr


def _step_weights(n: int) -> np.ndarray:
    j = np.arange(1, n + 1, dtype=float)
    # sqrt(j) - sqrt(j-1) without cancellation
    return 1.0 / (np.sqrt(j) + np.sqrt(j - 1))


def snorm(v: Sequence[float] | np.ndarray) -> float:
    a = np.sort(np.abs(_as_array(v)).ravel())[::-1]
    return float(np.dot(_step_weights(a.size), a))


def snorm_layered(v: Sequence[float] | np.ndarray) -> float:
    """Same value summed as ``sum_j sqrt(j) (a_j - a_{j+1})``, layer by layer."""
    a = np.sort(np.abs(_as_array(v)).ravel())[::-1]
    if a.size == 0:
        return 0.0
    gaps = a - np.append(a[1:], 0.0)
    return float(np.dot(np.sqrt(np.arange(1, a.size + 1, dtype=float)), gaps))


def snorm_rows(M: np.ndarray) -> np.ndarray:
    """Row-wise snorm of a 2-D array."""
    M = _as_array(M)
    a = -np.sort(-np.abs(M), axis=1)
    return a @ _step_weights(M.shape[1])


def snorm_quadrature(v: Sequence[float], points: int = 10_000) -> float:
    """Midpoint-rule integration of ``t -> sqrt(#{i : |v_i| >= t})`` over ``[0, max|v|]``.

    The grid is ``points`` uniform nodes merged with the values ``|v_i|``
    themselves, so no cell straddles a jump of the step integrand. Only
    meant as an independent cross-check of :func:`snorm`.
    """
    a = np.abs(_as_array(v)).ravel()
    top = float(a.max(initial=0.0))
    if top == 0.0:
        return 0.0
    grid = np.union1d(np.linspace(0.0, top, points + 1), a)
    mids = (grid[:-1] + grid[1:]) / 2
    counts = (a[None, :] >= mids[:, None]).sum(axis=1)
    return float(np.dot(np.sqrt(counts), np.diff(grid)))


def _close_le(lhs: float, rhs: float, rtol: float = RTOL) -> bool:
    return lhs <= rhs + rtol * max(abs(lhs), abs(rhs)) + ATOL


def _close_eq(a: float, b: float, rtol: float = RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b)) + ATOL


def check_snorm_axioms(u, v, c: float, rtol: float = RTOL) -> bool:
    """Triangle inequality, absolute homogeneity and definiteness on one input triple."""
    u = _as_array(u)
    v = _as_array(v)
    if u.shape != v.shape:
        raise ValueError("vectors must have matching lengths")
    su, sv = snorm(u), snorm(v)
    triangle = _close_le(snorm(u + v), su + sv, rtol)
    homogeneous = _close_eq(snorm(c * u), abs(c) * su, rtol)
    definite = (su == 0.0) == (not np.any(u)) and (sv == 0.0) == (not np.any(v))
    return triangle and homogeneous and definite


def _to_float(x: int, notes: list[str]) -> float:
    if abs(x) > _EXACT_FLOAT_LIMIT and "precision loss" not in notes:
        notes.append("precision loss")
    return float(x)


def check_kwalks_set(g: Graph, S: Iterable[int], k: int, rtol: float = RTOL) -> BoundCheck:
    """Walks starting in ``S`` are at most ``sqrt(|S|) snorm(X^k 1)``."""
    S = set(S)
    notes: list[str] = []
    count = oracle_count_k_walks(g, S, k)
    vec = [_to_float(x, notes) for x in walk_vector(g, k)]
    bound = math.sqrt(len(S)) * snorm(vec)
    return BoundCheck(_close_le(_to_float(count, notes), bound, rtol), count, bound, tuple(notes))


# ---------------------------------------------------------------------------
# matrix norm restricted to 0/1 vectors


def zero_one_sup(A: np.ndarray) -> float:
    """``max snorm(Av) / snorm(v)`` over all nonzero ``v`` in ``{0,1}^n`` (exhaustive)."""
    A = np.asarray(A, dtype=float)
    n = A.shape[1]
    if n > 20:
        raise ValueError(f"exhaustive 0/1 supremum is limited to n <= 20, got {n}")
    codes = np.arange(1, 1 << n)
    V = ((codes[:, None] >> np.arange(n)[None, :]) & 1).astype(float)
    num = snorm_rows(V @ A.T)
    den = np.sqrt(V.sum(axis=1))
    return float((num / den).max()) if len(codes) else 0.0


def sample_vectors(n: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    """Mixed families: Gaussian, heavy-tailed signed, sparse, nonnegative, wide dynamic range."""
    fams = rng.integers(0, 5, size=samples)
    out = np.empty((samples, n))
    g = rng.standard_normal((samples, n))
    cauchy = rng.standard_cauchy((samples, n))
    keep = rng.random((samples, n)) < 0.3
    expo = rng.uniform(-6, 6, (samples, n))
    sign = rng.choice([-1.0, 1.0], size=(samples, n))
    out[fams == 0] = g[fams == 0]
    out[fams == 1] = cauchy[fams == 1]
    out[fams == 2] = (g * keep)[fams == 2]
    out[fams == 3] = np.abs(g)[fams == 3]
    out[fams == 4] = (sign * 2.0**expo)[fams == 4]
    # redraw the rare all-zero rows as basis vectors
    zero = ~out.any(axis=1)
    if zero.any():
        out[zero] = 0.0
        out[zero, rng.integers(0, n, size=int(zero.sum()))] = 1.0
    return out


@dataclass(frozen=True)
class ZeroOneBoundReport:
    C: float
    max_ratio: float
    samples: int
    violations: int

    @property
    def holds(self) -> bool:
        return self.violations == 0


def check_zero_one_norm_bound(A, samples: int = 10_000, seed: int = 0) -> ZeroOneBoundReport:
    """Sampled ratios ``snorm(Av)/snorm(v)`` against ``16 C``, ``C`` the exact 0/1 supremum.

    ``A`` is a square array or a :class:`Graph` (its adjacency matrix).
    """
    if isinstance(A, Graph):
        A = adjacency_matrix(A)
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    C = zero_one_sup(A)
    rng = np.random.default_rng(seed)
    V = sample_vectors(A.shape[0], samples, rng)
    ratios = snorm_rows(V @ A.T) / snorm_rows(V)
    limit = 16 * C
    bad = int(np.sum(ratios > limit * (1 + RTOL) + ATOL))
    return ZeroOneBoundReport(C, float(ratios.max(initial=0.0)), samples, bad)


def adjacency_matrix(g: Graph) -> np.ndarray:
    X = np.zeros((g.n, g.n))
    for u, v in g.edges:
        X[u, v] = X[v, u] = 1.0
    return X


# ---------------------------------------------------------------------------
# edges between vertex sets


def edges_between(g: Graph, A: Iterable[int], B: Iterable[int]) -> int:
    """``|E(A, B)|``: edges with one endpoint in ``A`` and the other in ``B``, each counted once."""
    A, B = set(A), set(B)
    return sum(1 for u, v in g.edges if (u in A and v in B) or (u in B and v in A))


def modified_bs_bound(a: int, b: int, k: int) -> float:
    return 100 * k * (math.sqrt(a * b) ** (1 + 1 / k) + a + b)


def check_modified_bs(
    g: Graph,
    A: Iterable[int],
    B: Iterable[int],
    k: int,
    assume_free: bool = False,
    budget: int = 10**7,
) -> BoundCheck:
    """``|E(A,B)| <= 100k (sqrt(|A||B|)^{1+1/k} + |A| + |B|)`` on a 2k-cycle-free graph.

    Unless ``assume_free`` the precondition is verified with the oracle;
    a found 2k-cycle raises ``ValueError``, an exhausted budget raises
    :class:`CheckSkipped`.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not assume_free:
        try:
            if oracle_has_cycle(g, 2 * k, budget=budget) is not None:
                raise ValueError(f"graph contains a {2 * k}-cycle; the bound does not apply")
        except BudgetExceeded as exc:
            raise CheckSkipped(f"could not verify {2 * k}-cycle-freeness: {exc}") from exc
    A, B = set(A), set(B)
    e = edges_between(g, A, B)
    bound = modified_bs_bound(len(A), len(B), k)
    return BoundCheck(_close_le(float(e), bound), e, bound)


# ---------------------------------------------------------------------------
# empirical adjacency-norm constant


@dataclass(frozen=True)
class MatrixSnormDiagnostic:
    max_ratio: float
    samples: int
    scale: float  # m^{1/(k+1)}
    worst_set_size: int
    violations: tuple[str, ...]


def _sample_sets(g: Graph, samples: int, rng: random.Random) -> Iterable[list[int]]:
    n = g.n
    for s in range(samples):
        kind = s % 4
        if kind == 0:
            yield [rng.randrange(n)]
        elif kind == 1:
            size = rng.randint(1, n)
            yield rng.sample(range(n), size)
        elif kind == 2:
            v = rng.randrange(n)
            yield list(g.adj[v]) or [v]
        else:
            p = rng.random()
            A = [v for v in range(n) if rng.random() < p]
            yield A or [rng.randrange(n)]


def estimate_matrix_snorm_diagnostic(g: Graph, k: int, samples: int = 200, seed: int = 0) -> MatrixSnormDiagnostic:
    """Largest sampled ``snorm(X 1_A) / (sqrt|A| m^{1/(k+1)})``: a lower estimate of the hidden constant."""
    violations = []
    m = g.m
    if m and g.max_degree > m ** (2 / (k + 1)):
        violations.append("max degree exceeds m^(2/(k+1))")
    if g.n == 0 or m == 0:
        return MatrixSnormDiagnostic(0.0, 0, 0.0, 0, tuple(violations))
    scale = m ** (1 / (k + 1))
    rng = random.Random(seed)
    best, best_size = 0.0, 0
    adj = g.adj
    for A in _sample_sets(g, samples, rng):
        inA = set(A)
        image = [sum(1 for w in adj[v] if w in inA) for v in range(g.n)]
        r = snorm(image) / (math.sqrt(len(inA)) * scale)
        if r > best:
            best, best_size = r, len(inA)
    return MatrixSnormDiagnostic(best, samples, scale, best_size, tuple(violations))
