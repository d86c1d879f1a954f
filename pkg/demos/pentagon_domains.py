"""
Mutation classes of the pentagon cone
=====================================

Five points on a regular pentagon plus its centre. Two sets are mutation
neighbours when their difference is a circuit. The 64 subsets split into 32
singletons and two large classes, shaped like an icosahedron and a
dodecahedron.
"""
from omsep import pentagon_cone
from omsep.tilings import domain_purity_check, mutation_graph

m = pentagon_cone()
mg = mutation_graph(m)
sizes = mg.sizes()
print("component sizes > 1:", [k for k in sizes if k > 1], " isolated:", sizes.count(1))

for comp in mg.components():
    if len(comp) < 2:
        continue
    res = domain_purity_check(m, comp)
    print(f"class of {len(comp)}: pure={res.pure}, maximal collections {res.cliques}, "
          f"sizes {res.min_size}..{res.max_size}")
