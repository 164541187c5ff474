"""
What survives aggregation
=========================

Blending weightings with consensus scores keeps any strict ordering that all
of them agree on, so precedence properties carry over. Properties that need
values to differ do not.
"""

import numpy as np

from trustcons import ArgumentationFramework, WeightingFunction, check_property, hcat_weighting
from trustcons.consensus import aggregate_weighting

# %%
# Two weightings that each give every argument a distinct value.
af = ArgumentationFramework(("a", "b", "c"))
w1 = WeightingFunction("w1", {"a": 1.0, "b": 0.5, "c": 0.0})
w2 = WeightingFunction("w2", {"a": 0.0, "b": 0.5, "c": 1.0})
blend = aggregate_weighting(af, [w1, w2], {"w1": 0.5, "w2": 0.5})
print("inputs all different:", check_property(af, w1, "all_different"), check_property(af, w2, "all_different"))
print("blend:", blend.values, "all different:", check_property(af, blend, "all_different"))

# %%
# The h-categorizer strengths of a small chain with a self-attacker, mixed with
# a hand-made weighting that also respects the attack structure.
af = ArgumentationFramework(("x", "y", "z"), (("x", "y"), ("y", "z"), ("z", "z")))
hcat = hcat_weighting(af)
manual = WeightingFunction("manual", {"x": 0.9, "y": 0.3, "z": 0.1})
for w in (hcat, manual):
    print(w.name, {a: round(v, 3) for a, v in w.values.items()}, "void:", check_property(af, w, "void"),
          "self:", check_property(af, w, "self"))
for share in np.linspace(0, 1, 5):
    mix = aggregate_weighting(af, [hcat, manual], {"hcat": share, "manual": 1 - share})
    print(f"share {share:.2f}: void={check_property(af, mix, 'void')} self={check_property(af, mix, 'self')}")
