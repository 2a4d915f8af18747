"""Tree arrangements: one phylogenetic tree per facet of Delta(3,7)."""
from blades.combinatorics import GroundSet, WSCollection
from blades.osp import format_osp
from blades.trees import arrangement_dot, tree_arrangement

c = WSCollection.from_lists(GroundSet.standard(7), [(1, 2, 4), (2, 4, 7), (2, 6, 7), (3, 4, 7), (4, 5, 7), (4, 6, 7)])
facets = tree_arrangement(c)
for f in facets:
    print(f"j={f.j}:", " ".join(format_osp(b) for b in f.blades), "splits", sorted(str(s) for s in f.splits))
print(arrangement_dot(facets[:1]))
