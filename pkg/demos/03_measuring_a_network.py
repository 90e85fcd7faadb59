"""Structural measures on a few textbook graphs, then on a generated one."""

import itertools

from sfnets import (
    GeneratorParams,
    from_edge_list,
    full_record,
    generate_ba,
    knn_by_degree,
    make_rng,
)


def show(name, g):
    rec = full_record(g)
    fmt = lambda x: "NA" if x is None else f"{x:.4f}"  # noqa: E731
    print(f"{name:14} CC={fmt(rec.cc)}  CPD={fmt(rec.cpd)}  GE={fmt(rec.ge)}  r={fmt(rec.r)}")


show("star S_6", from_edge_list(6, [(0, i) for i in range(1, 6)]))
show("cycle C_8", from_edge_list(8, [(i, (i + 1) % 8) for i in range(8)]))
show("complete K_5", from_edge_list(5, list(itertools.combinations(range(5), 2))))
show("path P_4", from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))  # GE = 13/18

g, _ = generate_ba(GeneratorParams(1000, 2), make_rng(7))
show("BA n=1000 m=2", g)

# disassortative: hubs' neighbours have low degree on average
knn = knn_by_degree(g)
for k in sorted(knn)[:4] + sorted(knn)[-3:]:
    print(f"  k={k:3d}  <knn>={knn[k]:.2f}")
