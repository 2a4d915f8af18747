"""Subdivisions induced by blade arrangements, matroid tests and dual graphs."""
from blades.combinatorics import GroundSet
from blades.osp import parse_osp
from blades.subdivision import (
    BladeArrangement,
    dual_graph,
    dual_graph_dot,
    eulerian_number,
    induce_subdivision,
    is_matroidal,
)

g5 = GroundSet.standard(5)
arr = BladeArrangement.from_vertices(g5, [(3, 5), (1, 4), (2, 5), (1, 3), (2, 4)])
s = induce_subdivision(arr)
print("Delta(2,5) cells:", len(s.cells), "Eulerian A(1,4):", eulerian_number(1, 4))
print("dual graph degrees:", sorted(len(a) for a in dual_graph(s).values()))

for sets, n in [([(1, 2, 5), (1, 3, 4)], 6), ([(1, 2, 4), (1, 3, 5)], 7)]:
    ok, witness = is_matroidal(BladeArrangement.from_vertices(GroundSet.standard(n), sets))
    print(sets, "matroidal:", ok, "" if ok else f"witness has {len(witness.vertices)} vertices")

pair = [parse_osp("((12_1 34_1 56_1 78_1))"), parse_osp("((12_1 78_1 56_1 34_1))")]
print("four-block pair on Delta(4,8) matroidal:", is_matroidal(BladeArrangement.from_osps(pair))[0])

g4 = GroundSet.standard(4)
print(dual_graph_dot(induce_subdivision(BladeArrangement.from_vertices(g4, [(1, 3), (2, 4)]))))
