"""A reduced replication run written to ./demo_run.

The full comparison uses 100 replicates of n=1000 for m=1 and m=2 and takes a
few minutes; this version keeps the same pipeline but shrinks it to seconds.
Every output row carries its own seed, so any cell can be replayed alone.
"""

from pathlib import Path

from sfnets.harness import ExperimentConfig, replay_cell, run_experiment

out = Path("demo_run")
cfg = ExperimentConfig(n=300, m_values=(1, 2), replicates=5, master_seed=11, output_dir=str(out))
table = run_experiment(cfg)

print((out / "table1.txt").read_text())
for alg in cfg.algorithms:
    s = table.cells[(alg, 1)]["cpd"]
    print(f"{alg:8} m=1 CPD median {s.median:.3f} (IQR {s.q1:.3f}-{s.q3:.3f})")

row = replay_cell(cfg, "MB", 1, 3)
print("\nreplayed MB m=1 replicate 3:", {k: row[k] for k in ("components", "giant_pct", "seed")})
print("artifacts:", sorted(p.name for p in out.iterdir()))
