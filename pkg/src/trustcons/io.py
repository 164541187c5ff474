"""JSON (de)serialization for every public data type.

Floats are written with 12 significant digits and keys keep their input
order, so output is byte-stable for a given input.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .argumentation import ArgumentationFramework, WeightingFunction
from .consensus import ConsensusResult, ScoringProfile
from .errors import ValidationError
from .trust import TrustMatrix

__all__ = [
    "round_real",
    "dumps",
    "af_to_json",
    "af_from_json",
    "weighting_to_json",
    "weighting_from_json",
    "weightings_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "profile_to_json",
    "profile_from_json",
    "result_to_json",
    "result_from_json",
    "read_json",
    "write_json",
    "load_roundabout",
]

SIG_DIGITS = 12


def round_real(x: float) -> float:
    return float(f"{float(x):.{SIG_DIGITS}g}")


def _rounded(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, np.floating)):
        return round_real(obj)
    if isinstance(obj, dict):
        return {k: _rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _rounded(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(_rounded(obj), indent=2) + "\n"


def _require(data: dict, key: str, kind: str):
    if not isinstance(data, dict) or key not in data:
        raise ValidationError(f"{kind} JSON is missing field {key!r}")
    return data[key]


def af_to_json(af: ArgumentationFramework) -> dict:
    return {"arguments": list(af.arguments), "attacks": [list(p) for p in af.attacks]}


def af_from_json(data: dict) -> ArgumentationFramework:
    args = _require(data, "arguments", "AF")
    attacks = _require(data, "attacks", "AF")
    if any(not isinstance(p, (list, tuple)) or len(p) != 2 for p in attacks):
        raise ValidationError("AF attacks must be [attacker, target] pairs")
    return ArgumentationFramework(tuple(args), tuple(tuple(p) for p in attacks))


def weighting_to_json(w: WeightingFunction) -> dict:
    return {"name": w.name, "values": dict(w.values)}


def weighting_from_json(data: dict) -> WeightingFunction:
    return WeightingFunction(_require(data, "name", "weighting"), _require(data, "values", "weighting"))


def weightings_from_json(data) -> list[WeightingFunction]:
    """Accept one weighting object or a list of them."""
    if isinstance(data, dict):
        return [weighting_from_json(data)]
    if isinstance(data, list):
        return [weighting_from_json(d) for d in data]
    raise ValidationError("weightings JSON must be an object or a list of objects")


def matrix_to_json(m: TrustMatrix) -> dict:
    return {"agents": list(m.agents), "rows": m.rows.tolist()}


def matrix_from_json(data: dict) -> TrustMatrix:
    return TrustMatrix.from_rows(_require(data, "rows", "trust matrix"), _require(data, "agents", "trust matrix"))


def profile_to_json(p: ScoringProfile) -> dict:
    return {
        "agents": list(p.agents),
        "considered": {a: list(p.considered[a]) for a in p.agents},
        "scores": {a: dict(p.scores[a]) for a in p.agents},
    }


def profile_from_json(data: dict) -> ScoringProfile:
    return ScoringProfile(
        tuple(_require(data, "agents", "profile")),
        {a: tuple(ws) for a, ws in _require(data, "considered", "profile").items()},
        _require(data, "scores", "profile"),
        tuple(data["weightings"]) if "weightings" in data else None,
    )


def result_to_json(r: ConsensusResult) -> dict:
    return {
        "agents": list(r.agents),
        "pi": r.pi.tolist(),
        "consensus_scores": dict(r.consensus_scores),
        "output_set": list(r.output_set),
        "aggregated": None if r.aggregated is None else weighting_to_json(r.aggregated),
        "steps": r.steps,
        "epsilon": r.epsilon,
        "converged": r.converged,
        "spread": r.spread,
    }


def result_from_json(data: dict) -> ConsensusResult:
    agg = data.get("aggregated")
    return ConsensusResult(
        pi=np.asarray(_require(data, "pi", "result"), dtype=float),
        consensus_scores={k: float(v) for k, v in data.get("consensus_scores", {}).items()},
        output_set=tuple(data.get("output_set", ())),
        steps=int(data.get("steps", 0)),
        epsilon=float(data.get("epsilon", 0.0)),
        converged=bool(data.get("converged", False)),
        spread=float(data.get("spread", 0.0)),
        agents=tuple(data.get("agents", ())),
        aggregated=None if agg is None else weighting_from_json(agg),
    )


def read_json(path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def write_json(obj: Any, path) -> None:
    Path(path).write_text(dumps(obj))


def load_roundabout() -> dict:
    """The bundled four-drone roundabout scenario.

    Returns a dict with ``af``, ``weightings`` (w1..w5), ``profile`` and
    ``matrix``.
    """
    root = resources.files("trustcons") / "data"
    load = lambda name: json.loads((root / name).read_text())
    return {
        "af": af_from_json(load("roundabout_af.json")),
        "weightings": weightings_from_json(load("roundabout_weightings.json")),
        "profile": profile_from_json(load("roundabout_profile.json")),
        "matrix": matrix_from_json(load("roundabout_matrix.json")),
    }


def data_path(name: str) -> Path:
    return Path(str(resources.files("trustcons") / "data" / name))
