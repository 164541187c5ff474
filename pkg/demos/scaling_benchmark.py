"""
How long consensus takes as the network grows
=============================================

Random dense trust networks of 50 to 500 agents, two precisions, five
repetitions each. Larger networks need fewer squarings, yet total time still
grows polynomially because each squaring is a dense matrix product.
"""

import sys

from trustcons.bench import desk_plan, run_bench, summarize

records = run_bench(desk_plan(seed=1))
rows = summarize(records)

print(f"{'size':>5} {'eps':>7} {'steps':>6} {'ms':>8}")
for r in rows:
    print(f"{r.size:>5} {r.epsilon:>7.0e} {r.mean_steps:>6.1f} {r.mean_elapsed:>8.3f}")

# %%
# Optional figure, if matplotlib is around.
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
for eps, marker in ((1e-3, "^"), (1e-5, "o")):
    sel = [r for r in rows if r.epsilon == eps]
    ax1.plot([r.size for r in sel], [r.mean_steps for r in sel], marker=marker, label=f"eps={eps:g}")
    ax2.plot([r.size for r in sel], [r.mean_elapsed for r in sel], marker=marker, label=f"eps={eps:g}")
ax1.set(xlabel="agents", ylabel="mean squarings")
ax2.set(xlabel="agents", ylabel="mean time (ms)")
ax1.legend()
fig.tight_layout()
fig.savefig("scaling.png", dpi=120)
print("wrote scaling.png")
