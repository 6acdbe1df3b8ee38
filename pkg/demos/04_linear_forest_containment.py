"""
Does a graph contain a given linear forest?
===========================================

A linear forest is a disjoint union of paths, written by path orders, so
"4,2" is P_4 plus P_2. Containment is a backtracking packing of disjoint
paths, longest first.
"""

from alphaforest.families import family_graph
from alphaforest.forests import classify_case, contains, make_spec, predicted_extremal
from alphaforest.graph import make_path, make_star

print(contains(make_path(6), make_spec("3,3")))   # split P_6 in half
print(contains(make_star(5), make_spec("4")))      # stars have no P_4

# the extremal candidate for each case never contains its forest
for text in ["4", "5", "3,3", "4,2", "5,3", "3,3,3"]:
    spec = make_spec(text)
    pred = predicted_extremal(spec, 12)
    print(f"{text:>6}: p={spec.p} case {classify_case(spec):>3} -> {pred.params.label}"
          f"  contains F: {contains(pred.graph, spec)}")

# one edge too many in S+_{8,2} creates P_5 + P_3
g = family_graph("SPlus", 8, 2)
print(contains(g, make_spec("5,3")), contains(g.add_edge(2, 3), make_spec("5,3")))
