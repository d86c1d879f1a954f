"""
Coherent colocalizations of triangulated polygons
=================================================

A sign map on the subtrees of a triangulation tree is coherent when some
vertex weights induce it. For the trees T_{a,b} every colocalization is
coherent; their count matches the regions of an arrangement. Affine E6
and D trees carry colocalizations that are not coherent.
"""
from omsep import graphsep as gs

for a, b in [(0, 0), (1, 0), (1, 1), (2, 0)]:
    s = gs.all_coherent_check(gs.t_ab(a, b))
    normals = [v for _, v in gs.arrangement_Aab(a, b)]
    print(f"T_{a},{b}: {s.colocalizations} colocalizations, {s.coherent} coherent, "
          f"formula {gs.coherent_count(a, b)}, {len(normals)} hyperplanes")

# %% the region count agrees on the small cases
print("regions of A_{1,0}:", gs.count_regions([v for _, v in gs.arrangement_Aab(1, 0)]))

# %% perturbing a weight function with zeros
for label, (tree, lam) in [("E6", gs.ehat6()), ("D5", gs.dhat(5))]:
    zeros = gs.zero_subtrees(tree, lam)
    gamma = gs.non_coherent_perturbation(tree, lam)
    print(f"{label}: {len(zeros)} zero subtrees; colocalization={gs.is_g_colocalization(tree, gamma)}, "
          f"coherent={gs.is_coherent_tree(tree, gamma)}")
