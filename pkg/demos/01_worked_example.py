#!/usr/bin/env python3
"""Tour of the 4-vertex worked example.

Builds the graph from its reduced Laplacian, walks a stabilization, runs
the greedy minimum-script search, and shows the equivalence class of
(1,0,0,1) with its critical and superstable endpoints.
"""

from chipfiring import (
    apply_script,
    c_max,
    cfg_compare,
    critical_representative,
    energy_vector,
    from_reduced_laplacian,
    greedy_script_steps,
    linseq_chain,
    partition_classes,
    rational_to_str,
    reduced_laplacian,
    stabilize,
)

LAPLACIAN = [
    [5, -3, 0, -1],
    [-1, 2, -1, 0],
    [0, -1, 2, -1],
    [0, 0, 0, 2],
]

g = from_reduced_laplacian(LAPLACIAN)

print("Graph recovered from the reduced Laplacian")
print("  arcs (from, to, multiplicity):", list(g.arcs))
print("  out-degrees:", g.out_degrees, " maximum stable configuration:", c_max(g))
print()

print("Reduced Laplacian rows:")
for row in reduced_laplacian(g):
    print("  ", row)
print()

print("Stabilizing (6,1,1,0):")
stable, script = stabilize(g, (6, 1, 1, 0))
print("  stable result:", stable, " firing script:", script)
print("  check: (6,1,1,0) - script @ laplacian =", apply_script(g, (6, 1, 1, 0), script))
print()

print("Greedy search for the minimum strongly positive script:")
for step_script, image in greedy_script_steps(g):
    print("  script", step_script, "-> image", image)
print()

print("The equivalence class of (1,0,0,1):")
report = next(r for r in partition_classes(g) if (1, 0, 0, 1) in r.stable_members)
for member, energy in zip(report.stable_members, report.energies):
    tags = []
    if member == report.critical:
        tags.append("critical")
    if member == report.superstable:
        tags.append("superstable")
    print(
        "  %-12s energy (%s) %s"
        % (str(member), ", ".join(rational_to_str(x) for x in energy), " ".join(tags))
    )
print("  totally ordered by energy:", report.is_total_order)
print()

print("Reverse-fire-then-stabilize iteration from (1,0,0,1):")
chain = linseq_chain(g, (1, 0, 0, 1))
print("  ", " -> ".join(str(c) for c in chain))
print("  note: the iteration jumps straight to (4,0,0,1); the sorted class")
print("  above also contains (0,1,1,0) between the endpoints.")
print("  fixpoint equals the critical representative:", chain[-1] == critical_representative(g, (1, 0, 0, 1)))
print()

print("Energy comparisons:")
for a, b in [((1, 0, 0, 1), (0, 1, 1, 0)), ((1, 0, 0, 0), (0, 1, 0, 0))]:
    print("  %s vs %s: %s" % (a, b, cfg_compare(g, a, b)))
print("  energy of (1,0,0,1):", [rational_to_str(x) for x in energy_vector(g, (1, 0, 0, 1))])
