"""Five networks, one degree sequence.

Grow a preferential-attachment network, then hand its degree sequence to the
four sequence-driven generators. Every network gets (nearly) the same degrees,
yet they fall apart into very different numbers of pieces.

    python demos/01_same_degrees_different_networks.py
"""

from collections import Counter

from sfnets import (
    GeneratorParams,
    connected_components,
    degrees_of,
    generate,
    generate_ba,
    make_rng,
)

N, M, SEED = 1000, 1, 42

ba, _ = generate_ba(GeneratorParams(N, M), make_rng(SEED))
targets = degrees_of(ba)
print(f"source network: {N} vertices, {ba.edge_count} edges, max degree {max(targets)}")
print()
print(f"{'model':8} {'edges':>6} {'lost stubs':>10} {'components':>10} {'giant %':>8}")

for alg in ("BA", "MR", "KALISKY", "MA", "MB"):
    if alg == "BA":
        g, lost = ba, 0
    else:
        g, rep = generate(alg, make_rng(SEED + 1), targets=targets)
        lost = rep.shortfall
    cc = connected_components(g)
    print(f"{alg:8} {g.edge_count:6d} {lost:10d} {cc.count:10d} {cc.giant_size_pct:8.1f}")

# the degree histograms barely move
print()
mb, _ = generate("MB", make_rng(SEED + 1), targets=targets)
before, after = Counter(targets), Counter(degrees_of(mb))
print("degree  source  MB")
for k in range(1, 6):
    print(f"{k:6d}  {before[k]:6d}  {after[k]:3d}")
