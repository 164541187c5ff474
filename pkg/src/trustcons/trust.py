"""Trust matrices: validation, support-graph analysis and random generation.

Row ``i`` of a trust matrix holds the weights agent ``i`` places on every
agent's opinion (itself included), so rows sum to one. The directed trust
graph has an edge ``i -> j`` whenever ``v[i, j] > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from .errors import GenerationError, ValidationError

__all__ = [
    "TrustMatrix",
    "TrustGraphAnalysis",
    "GenerationConfig",
    "ROW_SUM_TOL",
    "DEFAULT_POWER_CHECK",
    "as_array",
    "diagnose",
    "validate",
    "can_reach_consensus",
    "analyze_graph",
    "same_support",
    "generate_convergent",
    "revise_with_support",
]

ROW_SUM_TOL = 1e-9
DEFAULT_POWER_CHECK = 20


@dataclass(frozen=True, eq=False)
class TrustMatrix:
    agents: tuple[str, ...]
    rows: np.ndarray

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[0] != rows.shape[1]:
            raise ValidationError(f"trust matrix must be square, got shape {rows.shape}")
        agents = tuple(str(a) for a in self.agents)
        if len(agents) != rows.shape[0]:
            raise ValidationError(
                f"{len(agents)} agent ids for a {rows.shape[0]}x{rows.shape[0]} matrix"
            )
        if len(set(agents)) != len(agents):
            raise ValidationError("duplicate agent ids")
        rows.setflags(write=False)
        object.__setattr__(self, "agents", agents)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows, agents: Sequence[str] | None = None) -> "TrustMatrix":
        rows = np.asarray(rows, dtype=float)
        if agents is None:
            agents = [f"A{i + 1}" for i in range(rows.shape[0])]
        return cls(tuple(agents), rows)

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.rows if dtype is None else self.rows.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, TrustMatrix):
            return NotImplemented
        return self.agents == other.agents and np.array_equal(self.rows, other.rows)

    def __repr__(self):
        return f"TrustMatrix(agents={list(self.agents)}, rows={self.rows.tolist()})"


def as_array(matrix) -> np.ndarray:
    if isinstance(matrix, TrustMatrix):
        return matrix.rows
    return np.asarray(matrix, dtype=float)


def diagnose(matrix) -> str | None:
    """Return a message describing the first violated invariant, or None if valid."""
    v = as_array(matrix)
    if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] < 1:
        return f"expected a non-empty square matrix, got shape {v.shape}"
    if not np.all(np.isfinite(v)):
        return "matrix has non-finite entries"
    for i, row in enumerate(v):
        if np.any(row < 0) or np.any(row > 1):
            return f"row {i} has entries outside [0, 1]"
        s = row.sum()
        if abs(s - 1.0) > ROW_SUM_TOL:
            return f"row {i} sums to {s!r}, not 1"
    return None


def validate(matrix) -> bool:
    return diagnose(matrix) is None


def _support(v: np.ndarray) -> np.ndarray:
    # exact zero test: only literal 0.0 counts as absent trust
    return v != 0.0


def can_reach_consensus(matrix, c: int = DEFAULT_POWER_CHECK) -> bool:
    """Positive-column test on the powers ``V, V^2, ..., V^c``.

    Works on the 0/1 support pattern only. Products are re-thresholded after
    every multiplication, so entries stay small integers and the float32
    matmul is exact.
    """
    if c < 1:
        raise ValidationError("c must be >= 1")
    s = _support(as_array(matrix)).astype(np.float32)
    p = s
    for m in range(1, c + 1):
        if np.any(np.all(p > 0, axis=0)):
            return True
        if m < c:
            p = ((p @ s) > 0).astype(np.float32)
    return False


@dataclass(frozen=True)
class TrustGraphAnalysis:
    """Strongly connected components of the trust graph.

    ``periods[i]`` is the gcd of cycle lengths inside component ``i``; a
    single agent with no self-trust has no cycles and gets period 0.
    """

    sccs: tuple[tuple[int, ...], ...]
    closed: tuple[bool, ...]
    periods: tuple[int, ...]
    aperiodic: bool

    @property
    def closed_sccs(self) -> list[tuple[int, ...]]:
        return [c for c, is_closed in zip(self.sccs, self.closed) if is_closed]

    @property
    def single_closed_aperiodic(self) -> bool:
        return len(self.closed_sccs) == 1 and self.aperiodic


def _period(adj: np.ndarray, members: Sequence[int]) -> int:
    inside = set(members)
    root = members[0]
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for v in np.flatnonzero(adj[u]):
                v = int(v)
                if v in inside and v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in members:
        for v in np.flatnonzero(adj[u]):
            v = int(v)
            if v in inside:
                g = math.gcd(g, level[u] + 1 - level[v])
    return g


def analyze_graph(matrix) -> TrustGraphAnalysis:
    """Components, closedness and periods of the graph with edges ``i -> j`` iff ``v[i, j] > 0``."""
    adj = _support(as_array(matrix))
    k = adj.shape[0]
    _, labels = scipy.sparse.csgraph.connected_components(
        scipy.sparse.csr_matrix(adj), directed=True, connection="strong"
    )
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(i)
    sccs = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    closed = []
    periods = []
    for comp in sccs:
        outside = np.ones(k, dtype=bool)
        outside[list(comp)] = False
        closed.append(not adj[np.ix_(list(comp), outside)].any())
        periods.append(_period(adj, comp))
    aperiodic = all(p == 1 for p, c in zip(periods, closed) if c)
    return TrustGraphAnalysis(tuple(sccs), tuple(closed), tuple(periods), aperiodic)


def same_support(a, b) -> bool:
    """True iff ``a`` and ``b`` have zeros in exactly the same positions."""
    x, y = as_array(a), as_array(b)
    if x.shape != y.shape:
        raise ValidationError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return bool(np.array_equal(_support(x), _support(y)))


@dataclass(frozen=True)
class GenerationConfig:
    """Parameters of the random convergent-matrix generator.

    ``sparsity`` is the probability of zeroing each draw before row
    normalization; 0 gives dense matrices.
    """

    size: int
    seed: int = 0
    max_power_check: int = DEFAULT_POWER_CHECK
    sparsity: float = 0.0
    max_attempts: int = 1000

    def __post_init__(self):
        if self.size < 1:
            raise ValidationError("size must be >= 1")
        if self.max_power_check < 1:
            raise ValidationError("max_power_check must be >= 1")
        if not 0.0 <= self.sparsity < 1.0:
            raise ValidationError("sparsity must be in [0, 1)")
        if self.max_attempts < 1:
            raise ValidationError("max_attempts must be >= 1")


def _random_row(rng: np.random.Generator, k: int, sparsity: float) -> np.ndarray:
    while True:
        row = rng.uniform(0.0, k, size=k)
        if sparsity > 0:
            row[rng.random(k) < sparsity] = 0.0
        total = row.sum()
        if total > 0:
            return row / total


def generate_convergent(config: GenerationConfig, rng: np.random.Generator | None = None) -> TrustMatrix:
    """Draw random row-stochastic matrices until one passes the positive-column test."""
    if rng is None:
        rng = np.random.default_rng(config.seed)
    k = config.size
    for _ in range(config.max_attempts):
        v = np.vstack([_random_row(rng, k, config.sparsity) for _ in range(k)])
        if can_reach_consensus(v, config.max_power_check):
            m = TrustMatrix.from_rows(v)
            assert validate(m), diagnose(m)
            return m
    raise GenerationError(
        f"no convergent {k}x{k} matrix after {config.max_attempts} attempts "
        f"(sparsity={config.sparsity}, c={config.max_power_check})"
    )


def revise_with_support(matrix, rng: np.random.Generator) -> TrustMatrix:
    """A random row-stochastic matrix with the same zero pattern as ``matrix``."""
    v = as_array(matrix)
    support = _support(v)
    fresh = np.where(support, rng.uniform(0.05, 1.0, size=v.shape), 0.0)
    fresh /= fresh.sum(axis=1, keepdims=True)
    agents = matrix.agents if isinstance(matrix, TrustMatrix) else None
    return TrustMatrix.from_rows(fresh, agents)
