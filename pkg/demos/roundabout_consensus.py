"""
Four drones agree on how strong five arguments are
==================================================

Four traffic drones watch a narrow roundabout and exchange five conflicting
arguments about which car enters first. Each drone scores a few candidate
weightings of those arguments, and they listen to each other through a trust
matrix. This walks the whole pipeline on the bundled scenario.
"""

import numpy as np

from trustcons import (
    check_property,
    consensus_scores,
    filter_library,
    load_roundabout,
    output_set,
    power_consensus,
    propagate_step,
)
from trustcons.consensus import aggregate_weighting

data = load_roundabout()
af, candidates, profile, trust = data["af"], data["weightings"], data["profile"], data["matrix"]

# %%
# The attack graph. ``b`` is the only unattacked argument.
for a in af.arguments:
    print(a, "is attacked by", sorted(af.attackers(a)) or "nobody")

# %%
# Which candidate weightings respect which properties?
for w in candidates:
    verdicts = {p: check_property(af, w, p) for p in ("void", "card", "self")}
    print(w.name, verdicts)

# %%
# The drones agree to keep only weightings satisfying self-contradiction and
# void precedence. w5 ranks the unattacked argument too low and is dropped.
library = filter_library(af, candidates, ["self", "void"])
print("library:", library.names)

# %%
# One round of opinion exchange for w1: every drone replaces its score by the
# trust-weighted average of the scores it listens to.
print("S(w1) after one step:", propagate_step(trust, profile.column("w1")))

# %%
# Squaring the trust matrix until all rows agree gives the influence of each
# drone. Drone A4 is trusted by nobody, so its influence is zero.
it = power_consensus(trust, epsilon=1e-9)
np.set_printoptions(precision=4, suppress=True)
print(f"influence after {it.steps} squarings:", it.pi)

# %%
# Consensus scores, the best-supported weighting, and the blended weighting.
scores = consensus_scores(profile, it.pi)
print("consensus scores:", {w: round(s, 4) for w, s in scores.items()})
print("best-supported:", output_set(scores))
blend = aggregate_weighting(af, library.weightings, scores)
print("aggregated weighting:", {a: round(v, 3) for a, v in blend.values.items()})
print("blend keeps void precedence:", check_property(af, blend, "void"))
