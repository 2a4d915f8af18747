"""Restricting blades and collections to the facets x_j = 1 of a hypersimplex."""
from blades.boundary import restrict_collection, restrict_osp
from blades.combinatorics import GroundSet, WSCollection
from blades.osp import format_osp, parse_osp

o = parse_osp("((18_1 2345_3 67_1))")
for j in (4, 2):
    print(f"{format_osp(o)} at j={j} -> {format_osp(restrict_osp(o, j))}")

c = WSCollection.from_lists(GroundSet.standard(6), [(1, 2, 4), (2, 4, 6), (2, 5, 6), (3, 4, 6)])
r = restrict_collection(c, 3)
print("collection at j=3 ->", [str(v) for v in r], "on ground", r.ground.sigma)
