"""Weak separation, cyclic intervals and frozen subsets on small hypersimplices."""
from blades.combinatorics import GroundSet, KSubset, WSCollection, cyclic_intervals, is_frozen, is_ws_collection

g = GroundSet.standard(6)
a, b = KSubset(g, (1, 2, 5)), KSubset(g, (1, 3, 4))
print("125 vs 134 weakly separated:", is_ws_collection(WSCollection(g, (a, b))))

g4 = GroundSet.standard(4)
print("13 vs 24 weakly separated:", is_ws_collection(WSCollection.from_lists(g4, [(1, 3), (2, 4)])))

for members in [(1, 2, 3), (1, 2, 6), (1, 2, 4), (1, 3, 5)]:
    v = KSubset(g, members)
    d = cyclic_intervals(v)
    print(v, "intervals", d.intervals, "gaps", d.complements, "frozen" if is_frozen(v) else "")
