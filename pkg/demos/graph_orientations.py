"""
Orientations of K_{2,3} and outerplanarity
==========================================

For a graph G the separated collections of its oriented matroid are sets of
orientations. K_{2,3} has 2^6 orientations falling into 54 cycle-reversal
classes, 46 of them acyclic. Purity holds exactly for outerplanar graphs.
"""
from omsep import graphsep
from omsep.tilings import purity_check

g = graphsep.complete_bipartite(2, 3)
m = g.matroid()
classes = graphsep.cycle_reversal_components(g)
print("forests", m.tutte_eval(2, 1), " acyclic", graphsep.count_acyclic(g), " classes", len(classes))
print("every class a polytope with the expected edges:",
      all(graphsep.polytopality_check(g, c).ok for c in classes))

# %% two orientations of the same graph, one acyclic
o1 = graphsep.orientation_from_arcs(g, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
o2 = o1 ^ 0b001001
print("separated:", graphsep.g_separated(g, o1, o2), graphsep.g_separated_matroid(g, o1, o2))

# %% outerplanar iff pure
U = graphsep.UndirectedGraph.make
corpus = {
    "K4": graphsep.complete_graph(4),
    "K2,3": g,
    "C5": graphsep.cycle_graph(5),
    "fan5": graphsep.Triangulation.make(5, [(0, 2), (0, 3)]).graph(),
    "W4": U(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
}
for name, h in corpus.items():
    ok, minor, _ = graphsep.outerplanar(h, witness=True)
    print(f"{name:5s} outerplanar={ok!s:5s} minor={minor!s:5s} pure={purity_check(h.matroid()).pure}")
