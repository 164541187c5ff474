"""
Who matters in a trust network
==============================

Only agents inside the single closed group of the trust graph keep any
influence in the long run. Revising trust values while keeping the zero
pattern never breaks the ability to reach consensus.
"""

import numpy as np

from trustcons import GenerationConfig, analyze_graph, can_reach_consensus, generate_convergent, stationary_exact
from trustcons.trust import revise_with_support

# %%
# A five-agent network: agents 0-2 only listen to each other, agents 3 and 4
# also listen to the group but nobody listens to them.
v = np.array([
    [0.6, 0.4, 0.0, 0.0, 0.0],
    [0.0, 0.5, 0.5, 0.0, 0.0],
    [0.3, 0.0, 0.7, 0.0, 0.0],
    [0.2, 0.0, 0.0, 0.5, 0.3],
    [0.0, 0.1, 0.0, 0.4, 0.5],
])
g = analyze_graph(v)
for comp, closed, period in zip(g.sccs, g.closed, g.periods):
    print(f"component {comp}: closed={closed} period={period}")
print("influence:", np.round(stationary_exact(v), 4))

# %%
# A pure two-cycle never settles: opinions swap forever.
swap = np.array([[0.0, 1.0], [1.0, 0.0]])
print("swap aperiodic:", analyze_graph(swap).aperiodic, "| reaches consensus:", can_reach_consensus(swap, 20))

# %%
# Random sparse networks, then random re-weightings with the same zero pattern.
rng = np.random.default_rng(0)
for seed in range(5):
    m = generate_convergent(GenerationConfig(12, seed=seed, sparsity=0.6))
    revised = revise_with_support(m, rng)
    print(f"seed {seed}: original ok={can_reach_consensus(m)}, revised ok={can_reach_consensus(revised)}")
