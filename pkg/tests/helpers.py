"""Random instance builders shared by the test modules."""

import numpy as np

from trustcons import ArgumentationFramework, ScoringProfile, TrustMatrix, WeightingFunction

TRUST_ROWS = np.array([
    [0.75, 0.15, 0.1, 0.0],
    [0.2, 0.7, 0.1, 0.0],
    [0.35, 0.15, 0.5, 0.0],
    [0.3, 0.3, 0.3, 0.1],
])
SCORE_ROWS = np.array([
    [0.4, 0.3, 0.3, 0.0],
    [0.0, 0.5, 0.5, 0.0],
    [0.0, 0.0, 0.7, 0.3],
    [0.0, 0.2, 0.1, 0.7],
])
PI_ROUNDABOUT = np.array([1 / 2, 1 / 3, 1 / 6, 0.0])


def random_af(rng, n_max=8, p=None, n_min=1):
    n = int(rng.integers(n_min, n_max + 1))
    args = [f"x{i}" for i in range(n)]
    p = rng.uniform(0.1, 0.5) if p is None else p
    attacks = [(args[i], args[j]) for i in range(n) for j in range(n) if rng.random() < p]
    return ArgumentationFramework(tuple(args), tuple(attacks))


def random_weighting(rng, af, name="w"):
    return WeightingFunction(name, {a: float(rng.random()) for a in af.arguments})


def random_stochastic(rng, k, sparsity=0.0):
    v = rng.uniform(0, 1, size=(k, k))
    if sparsity:
        v[rng.random((k, k)) < sparsity] = 0.0
    for i in range(k):
        if v[i].sum() == 0:
            v[i, rng.integers(k)] = 1.0
    return v / v.sum(axis=1, keepdims=True)


def random_profile(rng, agents, weightings, p_consider=0.6):
    considered, scores = {}, {}
    for a in agents:
        chosen = [w for w in weightings if rng.random() < p_consider] or [weightings[int(rng.integers(len(weightings)))]]
        raw = rng.uniform(0.05, 1.0, size=len(chosen))
        raw /= raw.sum()
        considered[a] = tuple(chosen)
        scores[a] = dict(zip(chosen, raw.tolist()))
    return ScoringProfile(tuple(agents), considered, scores)


def support_powers_oracle(v, c):
    """Positive-column test by plain float matrix powers (small, well-scaled inputs only)."""
    p = np.eye(len(v))
    for _ in range(c):
        p = p @ v
        if np.any(np.all(p > 0, axis=0)):
            return True
    return False


def reachability(adj):
    """Boolean transitive-reflexive closure by Floyd-Warshall."""
    k = len(adj)
    r = adj.astype(bool) | np.eye(k, dtype=bool)
    for m in range(k):
        r = r | (r[:, [m]] & r[[m], :])
    return r


def single_closed_class_matrix(rng, k):
    """A stochastic matrix with exactly one closed, aperiodic class S; returns (V, S).

    S is strongly connected through a cycle and has positive diagonal. Every
    transient agent puts some trust into S, so no other closed class exists.
    """
    m = int(rng.integers(1, k + 1))
    members = sorted(rng.choice(k, size=m, replace=False).tolist())
    others = [i for i in range(k) if i not in members]
    v = np.zeros((k, k))
    for idx, i in enumerate(members):
        v[i, i] = rng.uniform(0.05, 1)
        v[i, members[(idx + 1) % m]] += rng.uniform(0.05, 1)
        for j in members:
            if rng.random() < 0.3:
                v[i, j] += rng.uniform(0, 1)
    for i in others:
        v[i, members[int(rng.integers(m))]] = rng.uniform(0.05, 1)
        for j in range(k):
            if rng.random() < 0.3:
                v[i, j] += rng.uniform(0, 1)
    v /= v.sum(axis=1, keepdims=True)
    return TrustMatrix.from_rows(v), members
