#!/usr/bin/env python3
"""Duality on a 2-vertex graph where subset tests are not enough.

The graph has arcs 1->2 (x2), 2->1 (x5), 2->sink. Firing any plain subset
of vertices from (0,3) goes negative somewhere, yet (0,3) is not
superstable: the witness needs vertex 1 fired twice. The demo then lists
both equivalence classes and shows the complement bijection between
criticals and superstables.
"""

from chipfiring import (
    apply_script,
    are_equivalent,
    build_digraph,
    c_max,
    duality_check,
    is_superstable,
    minimum_strong_script,
    partition_classes,
)

g = build_digraph(2, 3, [(1, 2, 2), (2, 1, 5), (2, 3, 1)])
print("out-degrees:", g.out_degrees, " minimum strong script:", minimum_strong_script(g))
print()

config = (0, 3)
print("Subset firings from", config, "(every one goes negative):")
for script in [(0, 1), (1, 0), (1, 1)]:
    print("  script", script, "->", apply_script(g, config, script))
verdict, witness = is_superstable(g, config)
print("is_superstable:", verdict, " witness:", witness, "->", apply_script(g, config, witness))
print()

print("Equivalence classes (keyed by parity of the second coordinate):")
for report in partition_classes(g):
    print("  members:", list(report.stable_members))
    print("    critical:", report.critical, " superstable:", report.superstable)
print()

report = duality_check(g)
print("Duality bijection against c_max =", c_max(g))
for crit, dual in report.pairs:
    print("  critical %s  <->  superstable %s" % (crit, dual))
print("holds:", report.holds)
print()
print("note: the bijection is between the sets, not within classes; here each")
print("critical pairs with the superstable of the *other* class:")
for crit, dual in report.pairs:
    print("  %s and %s in the same class:" % (crit, dual), are_equivalent(g, crit, dual))
