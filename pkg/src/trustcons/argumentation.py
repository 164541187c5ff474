"""Argumentation frameworks, weighting functions and ranking-semantics properties.

An argumentation framework is a directed graph where an edge ``(b, a)`` means
argument ``b`` attacks argument ``a``. A weighting function assigns every
argument a nonnegative strength. Properties are boolean predicates over a
weighting, evaluated relative to the attack structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import ConvergenceError, ValidationError

__all__ = [
    "ArgumentationFramework",
    "WeightingFunction",
    "WeightingProperty",
    "WeightingLibrary",
    "PROPERTIES",
    "attackers",
    "check_property",
    "filter_library",
    "hcat_weighting",
    "get_property",
]


@dataclass(frozen=True)
class ArgumentationFramework:
    arguments: tuple[str, ...]
    attacks: tuple[tuple[str, str], ...] = ()
    _attackers: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        arguments = tuple(str(a) for a in self.arguments)
        attacks = tuple((str(b), str(a)) for b, a in self.attacks)
        if len(set(arguments)) != len(arguments):
            dupes = sorted({a for a in arguments if arguments.count(a) > 1})
            raise ValidationError(f"duplicate arguments: {dupes}")
        if len(set(attacks)) != len(attacks):
            raise ValidationError("duplicate attack pairs")
        known = set(arguments)
        for b, a in attacks:
            for end in (b, a):
                if end not in known:
                    raise ValidationError(f"attack ({b!r}, {a!r}) uses unknown argument {end!r}")
        att: dict[str, set[str]] = {a: set() for a in arguments}
        for b, a in attacks:
            att[a].add(b)
        object.__setattr__(self, "arguments", arguments)
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "_attackers", {a: frozenset(s) for a, s in att.items()})

    def __len__(self):
        return len(self.arguments)

    def attackers(self, a: str) -> frozenset[str]:
        try:
            return self._attackers[a]
        except KeyError:
            raise ValidationError(f"unknown argument {a!r}") from None

    def attack_matrix(self) -> np.ndarray:
        """0/1 matrix ``M`` with ``M[i, j] = 1`` iff argument i attacks argument j."""
        index = {a: i for i, a in enumerate(self.arguments)}
        m = np.zeros((len(self.arguments), len(self.arguments)))
        for b, a in self.attacks:
            m[index[b], index[a]] = 1.0
        return m


@dataclass(frozen=True)
class WeightingFunction:
    name: str
    values: Mapping[str, float]

    def __post_init__(self):
        values = {str(k): float(v) for k, v in dict(self.values).items()}
        for arg, v in values.items():
            if not math.isfinite(v) or v < 0:
                raise ValidationError(
                    f"weighting {self.name!r}: value for {arg!r} must be finite and >= 0, got {v}"
                )
        object.__setattr__(self, "name", str(self.name))
        object.__setattr__(self, "values", values)

    def __getitem__(self, a: str) -> float:
        return self.values[a]

    def check_domain(self, af: ArgumentationFramework) -> None:
        if set(self.values) != set(af.arguments):
            missing = sorted(set(af.arguments) - set(self.values))
            extra = sorted(set(self.values) - set(af.arguments))
            raise ValidationError(
                f"weighting {self.name!r} domain mismatch (missing={missing}, extra={extra})"
            )

    def as_array(self, af: ArgumentationFramework) -> np.ndarray:
        self.check_domain(af)
        return np.array([self.values[a] for a in af.arguments])


def attackers(af: ArgumentationFramework, a: str) -> frozenset[str]:
    """Return the set of arguments attacking ``a``."""
    return af.attackers(a)


# -- properties -------------------------------------------------------------

def _void(af: ArgumentationFramework, w: WeightingFunction) -> bool:
    unattacked = [a for a in af.arguments if not af.attackers(a)]
    attacked = [b for b in af.arguments if af.attackers(b)]
    return all(w[a] > w[b] for a in unattacked for b in attacked)


def _card(af: ArgumentationFramework, w: WeightingFunction) -> bool:
    n = {a: len(af.attackers(a)) for a in af.arguments}
    return all(
        w[a] > w[b] for a in af.arguments for b in af.arguments if n[a] < n[b]
    )


def _self(af: ArgumentationFramework, w: WeightingFunction) -> bool:
    # vacuously true when nobody attacks itself
    selfish = [a for a in af.arguments if a in af.attackers(a)]
    others = [b for b in af.arguments if b not in af.attackers(b)]
    return all(w[b] > w[a] for a in selfish for b in others)


def _all_different(af: ArgumentationFramework, w: WeightingFunction) -> bool:
    vals = [w[a] for a in af.arguments]
    return len(set(vals)) == len(vals)


@dataclass(frozen=True)
class WeightingProperty:
    """A named boolean predicate ``(af, weighting) -> bool``."""

    name: str
    predicate: Callable[[ArgumentationFramework, WeightingFunction], bool] = field(compare=False)

    def __call__(self, af: ArgumentationFramework, w: WeightingFunction) -> bool:
        return check_property(af, w, self)


PROPERTIES: dict[str, WeightingProperty] = {
    "void": WeightingProperty("void", _void),
    "card": WeightingProperty("card", _card),
    "self": WeightingProperty("self", _self),
    "all_different": WeightingProperty("all_different", _all_different),
}


def get_property(p: str | WeightingProperty) -> WeightingProperty:
    if isinstance(p, WeightingProperty):
        return p
    try:
        return PROPERTIES[p]
    except KeyError:
        raise ValidationError(
            f"unknown property {p!r}; expected one of {sorted(PROPERTIES)}"
        ) from None


def check_property(
    af: ArgumentationFramework, w: WeightingFunction, p: str | WeightingProperty
) -> bool:
    """Evaluate property ``p`` on weighting ``w`` over ``af``.

    All precedence comparisons are strict and ``all_different`` uses exact
    float equality.
    """
    w.check_domain(af)
    return bool(get_property(p).predicate(af, w))


@dataclass(frozen=True)
class WeightingLibrary:
    af: ArgumentationFramework
    weightings: tuple[WeightingFunction, ...]
    properties: tuple[WeightingProperty, ...]

    @property
    def names(self) -> list[str]:
        return [w.name for w in self.weightings]

    def __getitem__(self, name: str) -> WeightingFunction:
        for w in self.weightings:
            if w.name == name:
                return w
        raise KeyError(name)

    def __iter__(self):
        return iter(self.weightings)

    def __len__(self):
        return len(self.weightings)


def filter_library(
    af: ArgumentationFramework,
    candidates: Sequence[WeightingFunction],
    omega: Iterable[str | WeightingProperty] = (),
) -> WeightingLibrary:
    """Keep the candidates that satisfy every property in ``omega``, in input order."""
    names = [w.name for w in candidates]
    if len(set(names)) != len(names):
        raise ValidationError(f"duplicate weighting names in {names}")
    props = tuple(get_property(p) for p in omega)
    kept = tuple(w for w in candidates if all(check_property(af, w, p) for p in props))
    return WeightingLibrary(af, kept, props)


def hcat_weighting(
    af: ArgumentationFramework,
    tolerance: float = 1e-9,
    max_iter: int = 10_000,
    name: str = "hcat",
) -> WeightingFunction:
    """h-categorizer strengths: the fixed point of ``w(a) = 1 / (1 + sum of attacker strengths)``.

    Iterates from all-ones until the largest componentwise change is at most
    ``tolerance``. Raises :class:`ConvergenceError` after ``max_iter`` sweeps.
    """
    if tolerance <= 0:
        raise ValidationError("tolerance must be > 0")
    incoming = af.attack_matrix().T  # row a lists a's attackers
    w = np.ones(len(af.arguments))
    for _ in range(max_iter):
        nxt = 1.0 / (1.0 + incoming @ w)
        delta = np.max(np.abs(nxt - w)) if w.size else 0.0
        w = nxt
        if delta <= tolerance:
            return WeightingFunction(name, dict(zip(af.arguments, w.tolist())))
    raise ConvergenceError(f"h-categorizer did not converge in {max_iter} iterations")
