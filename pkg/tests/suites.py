"""Randomized property suites. Each returns a list of counterexample descriptions."""

import numpy as np

from trustcons import (
    ArgumentationFramework,
    GenerationConfig,
    WeightingFunction,
    aggregate_weighting,
    analyze_graph,
    can_reach_consensus,
    check_property,
    consensus_scores,
    dictatorship_possible,
    generate_convergent,
    output_set,
    power_consensus,
    same_support,
    stationary_exact,
    validate,
)
from trustcons.trust import DEFAULT_POWER_CHECK, revise_with_support

from helpers import random_af, random_profile, single_closed_class_matrix


def support_revision(n=200, seed=0):
    """A consensus-capable matrix keeps that ability under any same-support revision."""
    rng = np.random.default_rng(seed)
    bad = []
    c = DEFAULT_POWER_CHECK
    for t in range(n):
        k = int(rng.integers(2, 21))
        sparsity = float(rng.choice([0.0, 0.3, 0.5, 0.7]))
        v = generate_convergent(GenerationConfig(k, seed=int(rng.integers(2**63)), sparsity=sparsity,
                                                 max_power_check=c))
        revised = revise_with_support(v, rng)
        ok = (validate(revised) and same_support(v, revised) and can_reach_consensus(revised, c)
              and power_consensus(revised, 1e-9).converged)
        if not ok:
            bad.append(f"trial {t}: k={k} sparsity={sparsity}")
    return bad


def closed_class_influence(n=50, seed=1):
    """With one closed aperiodic class, influence is positive exactly on that class."""
    rng = np.random.default_rng(seed)
    bad = []
    for t in range(n):
        k = int(rng.integers(2, 21))
        v, members = single_closed_class_matrix(rng, k)
        g = analyze_graph(v)
        if not (g.single_closed_aperiodic and list(g.closed_sccs[0]) == members):
            bad.append(f"trial {t}: construction produced {g}")
            continue
        it = power_consensus(v, 1e-12)
        outside = [j for j in range(k) if j not in members]
        ok = (it.converged and np.all(it.pi[members] > 0)
              and np.all(it.pi[outside] <= 1e-9)
              and np.allclose(it.pi, stationary_exact(v), atol=1e-8))
        if not ok:
            bad.append(f"trial {t}: pi={it.pi} members={members}")
    return bad


def majority_dictator(n=100, seed=2):
    """An agent with influence above one half that backs a single weighting decides the output set."""
    rng = np.random.default_rng(seed)
    bad = []
    for t in range(n):
        k = int(rng.integers(2, 16))
        d = int(rng.integers(k))
        v = np.zeros((k, k))
        for i in range(k):
            share = rng.uniform(0.55, 0.95)
            rest = rng.random(k)
            v[i] = (1 - share) * rest / rest.sum()
            v[i, d] += share
        pi = power_consensus(v, 1e-12).pi
        names = [f"w{j}" for j in range(int(rng.integers(2, 7)))]
        w0 = names[int(rng.integers(len(names)))]
        agents = [f"A{i}" for i in range(k)]
        profile = random_profile(rng, agents, names)
        considered = dict(profile.considered)
        scores = dict(profile.scores)
        considered[agents[d]] = (w0,)
        scores[agents[d]] = {w0: 1.0}
        profile = type(profile)(tuple(agents), considered, scores)
        s = consensus_scores(profile, pi)
        if not (dictatorship_possible(pi, d) and output_set(s, 0.0) == (w0,)):
            bad.append(f"trial {t}: pi_d={pi[d]:.3f} scores={s}")
    return bad


def _random_consensus_scores(rng, names):
    k = int(rng.integers(1, 11))
    v = generate_convergent(GenerationConfig(k, seed=int(rng.integers(2**63)), sparsity=float(rng.choice([0.0, 0.5]))))
    profile = random_profile(rng, [f"A{i}" for i in range(k)], names)
    return consensus_scores(profile, power_consensus(v, 1e-12).pi)


def unanimity(n=500, seed=3):
    """If every considered weighting ranks a above b, so does the aggregate."""
    rng = np.random.default_rng(seed)
    bad = []
    for t in range(n):
        af = random_af(rng, n_max=8, n_min=2)
        a, b = rng.choice(af.arguments, size=2, replace=False)
        names = [f"w{j}" for j in range(int(rng.integers(1, 7)))]
        ws = []
        for name in names:
            vals = {x: float(rng.random()) for x in af.arguments}
            vals[a] = vals[b] + float(rng.uniform(1e-6, 1.0))
            ws.append(WeightingFunction(name, vals))
        scores = _random_consensus_scores(rng, names)
        agg = aggregate_weighting(af, ws, scores)
        if not agg[a] > agg[b]:
            bad.append(f"trial {t}: w*({a})={agg[a]} w*({b})={agg[b]}")
    return bad


def _void_weighting(rng, af, name):
    t = rng.uniform(0.2, 0.8)
    return WeightingFunction(name, {
        x: (rng.uniform(t, 1.0) + 1e-9 if not af.attackers(x) else rng.uniform(0.0, t))
        for x in af.arguments
    })


def _card_weighting(rng, af, name):
    counts = sorted({len(af.attackers(x)) for x in af.arguments})
    cuts = np.sort(rng.uniform(0, 1, size=len(counts) + 1))[::-1]
    band = {c: (cuts[i + 1], cuts[i]) for i, c in enumerate(counts)}
    vals = {}
    for x in af.arguments:
        lo, hi = band[len(af.attackers(x))]
        vals[x] = float(lo + (hi - lo) * rng.uniform(0.05, 0.95))
    return WeightingFunction(name, vals)


def _self_weighting(rng, af, name):
    t = rng.uniform(0.2, 0.8)
    return WeightingFunction(name, {
        x: (rng.uniform(0.0, t) if x in af.attackers(x) else rng.uniform(t, 1.0) + 1e-9)
        for x in af.arguments
    })


BUILDERS = {"void": _void_weighting, "card": _card_weighting, "self": _self_weighting}


def property_preservation(prop, n=500, seed=4):
    """If every weighting in M satisfies the property, the aggregate does too."""
    rng = np.random.default_rng(seed)
    build = BUILDERS[prop]
    bad = []
    for t in range(n):
        af = random_af(rng, n_max=8, n_min=2)
        names = [f"w{j}" for j in range(int(rng.integers(1, 7)))]
        ws = [build(rng, af, name) for name in names]
        if not all(check_property(af, w, prop) for w in ws):
            bad.append(f"trial {t}: builder produced a non-conforming weighting")
            continue
        agg = aggregate_weighting(af, ws, _random_consensus_scores(rng, names))
        if not check_property(af, agg, prop):
            bad.append(f"trial {t}: aggregate violates {prop}")
    return bad


def all_different_counterexample():
    """The analogue for all_different must fail; returns (inputs_ok, aggregate, aggregate_ok)."""
    af = ArgumentationFramework(("a", "b", "c"))
    w1 = WeightingFunction("w'1", {"a": 1, "b": 0.5, "c": 0})
    w2 = WeightingFunction("w'2", {"a": 0, "b": 0.5, "c": 1})
    inputs_ok = check_property(af, w1, "all_different") and check_property(af, w2, "all_different")
    agg = aggregate_weighting(af, [w1, w2], {"w'1": 0.5, "w'2": 0.5})
    return inputs_ok, agg, check_property(af, agg, "all_different")


def oracle_equivalence(n=100, seed=5):
    """Largest componentwise gap between squaring and the direct solve."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        k = int(rng.integers(1, 51))
        v = generate_convergent(GenerationConfig(k, seed=int(rng.integers(2**63)),
                                                 sparsity=float(rng.choice([0.0, 0.3, 0.6]))))
        it = power_consensus(v, 1e-12)
        gap = np.inf if not it.converged else float(np.max(np.abs(it.pi - stationary_exact(v))))
        worst = max(worst, gap)
    return worst
