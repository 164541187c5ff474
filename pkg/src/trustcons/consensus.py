"""DeGroot propagation of weighting scores through a trust matrix.

Each agent starts with a score vector over the considered weightings. One
propagation step replaces every agent's score by the trust-weighted average
of the scores it listens to. When the powers of the trust matrix converge to
a rank-one matrix with identical rows ``pi``, every agent ends up with the
consensus score ``S*(w) = sum_i pi_i * S_i(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .argumentation import ArgumentationFramework, WeightingFunction
from .errors import NoUniqueConsensusError, ValidationError
from .trust import TrustMatrix, as_array

__all__ = [
    "ScoringProfile",
    "PowerIteration",
    "ConsensusResult",
    "DEFAULT_EPSILON",
    "DEFAULT_TIE_TOLERANCE",
    "DEFAULT_MAX_STEPS",
    "propagate_step",
    "power_consensus",
    "stationary_exact",
    "consensus_scores",
    "output_set",
    "aggregate_weighting",
    "dictatorship_possible",
    "run_consensus",
]

DEFAULT_EPSILON = 1e-9
DEFAULT_TIE_TOLERANCE = 1e-9
DEFAULT_MAX_STEPS = 64
SCORE_SUM_TOL = 1e-9
PI_SUM_TOL = 1e-8


@dataclass(frozen=True)
class ScoringProfile:
    """Which weightings each agent considers and the scores it gives them.

    ``weightings`` is the union ``M`` of the considered sets; when omitted it
    is built in order of first appearance.
    """

    agents: tuple[str, ...]
    considered: Mapping[str, tuple[str, ...]]
    scores: Mapping[str, Mapping[str, float]]
    weightings: tuple[str, ...] = None

    def __post_init__(self):
        agents = tuple(str(a) for a in self.agents)
        if len(set(agents)) != len(agents):
            raise ValidationError("duplicate agent ids in profile")
        considered = {a: tuple(self.considered.get(a, ())) for a in agents}
        extra = set(self.considered) - set(agents)
        if extra:
            raise ValidationError(f"considered sets for unknown agents {sorted(extra)}")
        union: list[str] = []
        for a in agents:
            if len(set(considered[a])) != len(considered[a]):
                raise ValidationError(f"agent {a!r} lists a weighting twice")
            for w in considered[a]:
                if w not in union:
                    union.append(w)
        weightings = tuple(union) if self.weightings is None else tuple(self.weightings)
        if set(weightings) != set(union) or len(set(weightings)) != len(weightings):
            raise ValidationError(
                f"weightings {list(weightings)} differ from the union of considered sets {union}"
            )
        scores: dict[str, dict[str, float]] = {}
        for a in agents:
            given = {str(w): float(s) for w, s in dict(self.scores.get(a, {})).items()}
            for w, s in given.items():
                if s != 0 and w not in considered[a]:
                    raise ValidationError(f"agent {a!r} scores {w!r} without considering it")
            row = {}
            for w in considered[a]:
                s = given.get(w, 0.0)
                if not 0 < s <= 1:
                    raise ValidationError(f"agent {a!r}: score for {w!r} must be in (0, 1], got {s}")
                row[w] = s
            if abs(sum(row.values()) - 1.0) > SCORE_SUM_TOL:
                raise ValidationError(f"agent {a!r}: scores sum to {sum(row.values())!r}, not 1")
            scores[a] = row
        object.__setattr__(self, "agents", agents)
        object.__setattr__(self, "considered", considered)
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "weightings", weightings)

    @classmethod
    def from_table(cls, agents: Sequence[str], weightings: Sequence[str], table) -> "ScoringProfile":
        """Build a profile from a dense ``agents x weightings`` score table; zeros mean not considered."""
        table = np.asarray(table, dtype=float)
        considered = {}
        scores = {}
        for a, row in zip(agents, table):
            considered[a] = tuple(w for w, s in zip(weightings, row) if s != 0)
            scores[a] = {w: float(s) for w, s in zip(weightings, row) if s != 0}
        return cls(tuple(agents), considered, scores, tuple(weightings))

    def score(self, agent: str, weighting: str) -> float:
        return self.scores[agent].get(weighting, 0.0)

    def score_table(self) -> np.ndarray:
        """Dense ``k x |M|`` array of ``S_i(w)``."""
        return np.array([[self.score(a, w) for w in self.weightings] for a in self.agents])

    def column(self, weighting: str) -> np.ndarray:
        """The initial opinion vector ``(S_1(w), ..., S_k(w))``."""
        return np.array([self.score(a, weighting) for a in self.agents])


def propagate_step(matrix, scores) -> np.ndarray:
    """One DeGroot update: ``V @ scores``."""
    v = as_array(matrix)
    s = np.asarray(scores, dtype=float)
    if s.shape[0] != v.shape[0]:
        raise ValidationError(f"score vector has length {s.shape[0]}, expected {v.shape[0]}")
    return v @ s


@dataclass(frozen=True, eq=False)
class PowerIteration:
    pi: np.ndarray
    steps: int
    converged: bool
    spread: float


def _spread(w: np.ndarray) -> float:
    return float(np.max(np.ptp(w, axis=0)))


def power_consensus(matrix, epsilon: float = DEFAULT_EPSILON, max_steps: int = DEFAULT_MAX_STEPS) -> PowerIteration:
    """Square ``V`` until all rows agree to within ``epsilon`` per column.

    ``steps`` counts squarings, so the returned row comes from ``V ** (2 ** steps)``.
    The first row of that power approximates the influence vector.
    """
    if epsilon <= 0:
        raise ValidationError("epsilon must be > 0")
    w = np.array(as_array(matrix), dtype=float)
    spread = _spread(w)
    steps = 0
    while spread > epsilon and steps < max_steps:
        w = w @ w
        steps += 1
        spread = _spread(w)
    return PowerIteration(w[0].copy(), steps, spread <= epsilon, spread)


def stationary_exact(matrix) -> np.ndarray:
    """Solve ``pi V = pi``, ``sum(pi) = 1`` directly.

    The equations ``(V^T - I) pi = 0`` are linearly dependent, so one of them
    is swapped for the normalization row. That system is nonsingular exactly
    when the fixed point is unique.
    """
    v = as_array(matrix)
    k = v.shape[0]
    a = v.T - np.eye(k)
    a[-1, :] = 1.0
    b = np.zeros(k)
    b[-1] = 1.0
    if np.linalg.cond(a) > 1e12:
        raise NoUniqueConsensusError("stationary system is singular: several closed classes")
    pi = np.linalg.solve(a, b)
    if np.any(pi < -1e-12):
        raise NoUniqueConsensusError(f"stationary solution has negative entries: {pi}")
    pi = np.clip(pi, 0.0, None)
    pi /= pi.sum()
    return pi


def _check_pi(pi, k: int) -> np.ndarray:
    pi = np.asarray(pi, dtype=float)
    if pi.shape != (k,):
        raise ValidationError(f"influence vector has length {pi.shape[0] if pi.ndim else 0}, expected {k}")
    if abs(pi.sum() - 1.0) > PI_SUM_TOL:
        raise ValidationError(f"influence vector sums to {pi.sum()!r}, not 1")
    return pi


def consensus_scores(profile: ScoringProfile, pi) -> dict[str, float]:
    """``S*(w) = sum_i S_i(w) * pi_i`` for every weighting in the profile."""
    pi = _check_pi(pi, len(profile.agents))
    totals = pi @ profile.score_table()
    return {w: float(s) for w, s in zip(profile.weightings, totals)}


def output_set(scores: Mapping[str, float], tie_tolerance: float = DEFAULT_TIE_TOLERANCE) -> tuple[str, ...]:
    """Weightings whose consensus score is within ``tie_tolerance`` of the best."""
    if not scores:
        raise ValidationError("no consensus scores")
    if tie_tolerance < 0:
        raise ValidationError("tie_tolerance must be >= 0")
    best = max(scores.values())
    return tuple(w for w, s in scores.items() if s >= best - tie_tolerance)


def aggregate_weighting(
    af: ArgumentationFramework,
    weightings: Iterable[WeightingFunction] | Mapping[str, WeightingFunction],
    scores: Mapping[str, float],
    name: str = "w*",
) -> WeightingFunction:
    """Convex combination ``w*(a) = sum_w S*(w) * w(a)``."""
    if not isinstance(weightings, Mapping):
        weightings = {w.name: w for w in weightings}
    total = np.zeros(len(af.arguments))
    for wname, s in scores.items():
        if wname not in weightings:
            raise ValidationError(f"no values supplied for weighting {wname!r}")
        w = weightings[wname]
        try:
            w.check_domain(af)
        except ValidationError as exc:
            raise ValidationError(f"weighting {wname!r} is incomplete: {exc}") from None
        total += s * w.as_array(af)
    return WeightingFunction(name, dict(zip(af.arguments, total.tolist())))


def dictatorship_possible(pi, agent_index: int) -> bool:
    """Whether agent ``agent_index`` holds a strict majority of the influence."""
    pi = np.asarray(pi, dtype=float)
    if not 0 <= agent_index < pi.shape[0]:
        raise ValidationError(f"agent index {agent_index} out of range for {pi.shape[0]} agents")
    return bool(pi[agent_index] > 0.5)


@dataclass(frozen=True, eq=False)
class ConsensusResult:
    pi: np.ndarray
    consensus_scores: dict[str, float]
    output_set: tuple[str, ...]
    steps: int
    epsilon: float
    converged: bool
    spread: float = 0.0
    agents: tuple[str, ...] = ()
    aggregated: WeightingFunction | None = field(default=None)


def run_consensus(
    matrix: TrustMatrix,
    profile: ScoringProfile,
    epsilon: float = DEFAULT_EPSILON,
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
    af: ArgumentationFramework | None = None,
    weightings: Iterable[WeightingFunction] | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> ConsensusResult:
    """Full pipeline: influence vector, consensus scores, output set and, given values, ``w*``.

    When the powers fail to converge the result carries the last ``pi`` row
    and ``converged=False``, with empty scores and output set.
    """
    if isinstance(matrix, TrustMatrix) and tuple(matrix.agents) != tuple(profile.agents):
        raise ValidationError(
            f"profile agents {list(profile.agents)} differ from matrix agents {list(matrix.agents)}"
        )
    it = power_consensus(matrix, epsilon, max_steps)
    agents = tuple(matrix.agents) if isinstance(matrix, TrustMatrix) else tuple(profile.agents)
    if not it.converged:
        return ConsensusResult(it.pi, {}, (), it.steps, epsilon, False, it.spread, agents)
    scores = consensus_scores(profile, it.pi)
    best = output_set(scores, tie_tolerance) if scores else ()
    agg = None
    if af is not None and weightings is not None:
        agg = aggregate_weighting(af, weightings, scores)
    return ConsensusResult(it.pi, scores, best, it.steps, epsilon, True, it.spread, agents, agg)
