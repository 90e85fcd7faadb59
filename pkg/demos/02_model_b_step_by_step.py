"""How the hub-first deterministic generator (Model B) wires a tiny network.

The vertex with the most open connections is processed first and linked to the
next vertices in the layout. Hubs therefore join each other, and low-degree
vertices are left to pair among themselves in small islands.
"""

from sfnets import connected_components, generate_model_b, make_rng, to_edge_list

targets = [3, 2, 2, 1, 1, 1]
trace = []
g, report = generate_model_b(targets, make_rng(0), order=list(range(6)), trace=trace)

print("targets:", targets)
for step, (v, h, partners) in enumerate(trace, 1):
    print(f"step {step}: vertex {v} needs {h} link(s) -> {partners}")
print("edges:", to_edge_list(g))
print("components:", connected_components(g).count, "| discarded stubs:", report.discarded_stubs)
