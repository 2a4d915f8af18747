"""Turn hypersimplex vertices into decorated ordered set partitions and test membership."""
from fractions import Fraction

from blades.combinatorics import GroundSet, KSubset
from blades.osp import blade_from_vertex, blade_membership, format_osp, parse_osp, tropical_forms

g = GroundSet.standard(8)
for members in [(1, 2, 4, 7), (2, 4, 6, 8), (1, 3, 4, 5, 7)]:
    v = KSubset(g, members)
    print(v, "->", format_osp(blade_from_vertex(v)))

o = parse_osp("((123_1 45_1))")
off = [Fraction(1, 2)] * 3 + [Fraction(1, 4)] * 2
on = [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(1, 2), Fraction(1, 2)]
for x in (off, on):
    for method in ("chain", "minkowski"):
        print(method, "membership of", [str(c) for c in x], blade_membership(o, x, method))

plain = parse_osp("((1,2,3))")
y = [1, -1, 0]
print("tropical forms at", y, [str(f) for f in tropical_forms(plain, y)], blade_membership(plain, y, "tropical"))
