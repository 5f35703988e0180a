"""(A, Delta) scatter data for both models.

Samples parameters uniformly (classical: (p, q_r, q_n) on [0,1]^3;
quantum: (phi, alpha) on [0,pi]^2), evaluates the Accardi invariant and
the precision boost at every point, and writes the scatter data as CSV.
The classical cloud is confined to 0 <= A <= 1; the quantum cloud spills
far outside it.

Writes classical_scatter.csv / quantum_scatter.csv to the working
directory, plus scatter.png if matplotlib is importable.

Run: python3 demos/03_scatter_sweep.py
"""

from irboost import SweepConfig, export_csv, sweep

N_POINTS = 10_000
SEED = 1

clouds = {}
for model in ("classical", "quantum"):
    points, summary = sweep(SweepConfig(model, N_POINTS, seed=SEED))
    path = f"{model}_scatter.csv"
    export_csv(points, path)
    clouds[model] = points
    print(f"{model}: wrote {summary.n_points} points to {path}")
    print(f"  defined: {summary.n_defined}")
    print(f"  fraction A < 0: {summary.fraction_a_below_0:.3f}")
    print(f"  fraction A > 1: {summary.fraction_a_above_1:.3f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping scatter.png")
else:
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    for ax, model in zip(axes, clouds):
        pts = [
            p for p in clouds[model]
            if p.accardi_defined and p.boost_defined and abs(p.delta) < 10
        ]
        ax.scatter([p.a for p in pts], [p.delta for p in pts], s=2, alpha=0.3)
        ax.axvline(0, color="k", lw=0.5)
        ax.axvline(1, color="k", lw=0.5)
        ax.set_xlim(-3, 4)
        ax.set_title(model)
        ax.set_xlabel("A")
    axes[0].set_ylabel("Delta")
    fig.tight_layout()
    fig.savefig("scatter.png", dpi=150)
    print("wrote scatter.png")
