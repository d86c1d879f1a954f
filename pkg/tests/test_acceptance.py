"""Acceptance criteria 1-9, one pass/fail line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import brute_colocalizations  # noqa: E402

from omsep import construct, graphsep, separation, tilings  # noqa: E402
from omsep.construct import alternating, corank2_family, figure_matroid, pentagon_cone  # noqa: E402
from omsep.core import SignedSet, validate_axioms, weak_map_exists, is_isomorphic  # noqa: E402

CRITERIA: dict[int, tuple[str, object]] = {}


def criterion(number: int, title: str):
    def wrap(fn):
        CRITERIA[number] = (title, fn)
        return fn
    return wrap


class Checks:
    def __init__(self):
        self.items: list[tuple[str, bool]] = []

    def __call__(self, name: str, ok) -> bool:
        self.items.append((name, bool(ok)))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.items)

    def failed(self) -> list[str]:
        return [n for n, ok in self.items if not ok]


def _masks(m, words):
    return [m.mask(w) for w in words]


# ---------------------------------------------------------------- 1

@criterion(1, "max-by-size collections of C^{5,2} have 16 sets, of C^{5,3} 26 sets")
def crit_1(c: Checks) -> str:
    notes = []
    for n, d, want in ((5, 2, 16), (5, 3, 26)):
        m = alternating(n, d)
        ind = m.tutte_eval(2, 1)
        sizes = [len(s) for s in tilings.max_by_size_collections(m)]
        c(f"C^{n},{d} ind", ind == want)
        c(f"C^{n},{d} all sizes", sizes and all(k == ind for k in sizes))
        notes.append(f"C^{{{n},{d}}}: {len(sizes)} collections, sizes {sorted(set(sizes))}, T(2,1)={ind}")
    return "; ".join(notes)


# ---------------------------------------------------------------- 2

@criterion(2, "C^{n,2}, C^{n,3} pure for n<=6; C^{6,4} not pure with a complete non-Type-III witness")
def crit_2(c: Checks) -> str:
    for d in (2, 3):
        for n in range(d, 7):
            c(f"C^{n},{d} pure", tilings.purity_check(alternating(n, d)).pure)
    c64 = alternating(6, 4)
    res = tilings.purity_check(c64)
    c("C^{6,4} not pure", not res.pure)
    # the witness lives in the dual of C^{6,2}, which is C^{6,4} reoriented at 1, 3, 5
    model = alternating(6, 2).dual()
    c("dual C^{6,2} is C^{6,4} reoriented", model.same_circuits(c64.reorient(c64.mask("135"))))
    w = _masks(model, ["", "1234", "3456"])
    sigma = separation.sigma_of(model, w)
    c("witness separated", separation.is_collection_separated(model, w))
    c("witness complete", all(sigma))
    c("witness not Type III", separation.classify_type(model, model.ground, sigma) != "III")
    covers = [s for s in tilings.max_by_size_collections(model) if set(w) <= set(s)]
    c("no max-by-size collection contains it", not covers)
    moved = [s ^ c64.mask("135") for s in w]
    c("transported witness complete on C^{6,4}", all(separation.sigma_of(c64, moved)))
    literal = separation.sigma_of(c64, w)
    return (f"C^{{6,4}} min clique {res.min_size} < {res.ind}; witness sigma on dual C^{{6,2}} = {sigma}; "
            f"literal labels on C^{{6,4}} orient {sum(1 for v in literal if v)} circuits")


# ---------------------------------------------------------------- 3

def graph_corpus() -> dict[str, graphsep.UndirectedGraph]:
    U = graphsep.UndirectedGraph.make
    return {
        "K4": graphsep.complete_graph(4),
        "K2,3": graphsep.complete_bipartite(2, 3),
        "C5": graphsep.cycle_graph(5),
        "K4-e": U(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
        "bowtie": U(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
        "paw": U(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        "fan5": graphsep.Triangulation.make(5, [(0, 2), (0, 3)]).graph(),
        "zigzag6": graphsep.Triangulation.make(6, [(0, 2), (2, 5), (2, 4)]).graph(),
        "W4": U(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
        "prism": U(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
        "K4-subdivided": U(5, [(0, 1), (0, 2), (0, 4), (4, 3), (1, 2), (1, 3), (2, 3)]),
        "K2,4": graphsep.complete_bipartite(2, 4),
    }


@criterion(3, "K_{2,3} numbers; K4, K_{2,3} not pure; triangulated 5-,6-,7-gons pure; outerplanar iff pure on 12 graphs")
def crit_3(c: Checks) -> str:
    k23 = graphsep.complete_bipartite(2, 3)
    m = k23.matroid()
    c("54 forests", m.tutte_eval(2, 1) == 54)
    c("46 acyclic (Tutte)", m.tutte_eval(2, 0) == 46)
    c("46 acyclic (direct count)", graphsep.count_acyclic(k23) == 46)
    comps = graphsep.cycle_reversal_components(k23)
    c("54 cycle-reversal classes", len(comps) == 54)
    c("K4 not pure", not tilings.purity_check(graphsep.complete_graph(4).matroid()).pure)
    c("K2,3 not pure", not tilings.purity_check(m).pure)
    for k in (5, 6, 7):
        tri = graphsep.Triangulation.make(k, [(0, j) for j in range(2, k - 1)])
        c(f"{k}-gon pure", tilings.purity_check(tri.graph().matroid()).pure)
    agree = []
    for name, g in graph_corpus().items():
        op = graphsep.outerplanar(g)
        pure = tilings.purity_check(g.matroid()).pure
        c(f"{name}: outerplanar == pure", op == pure)
        agree.append(f"{name}={'Y' if op else 'N'}")
    return "corpus " + " ".join(agree)


# ---------------------------------------------------------------- 4

EXPECTED_BLOCKERS = {"6": "2345", "36": "2345", "56": "12346", "356": "12346",
                  "124": "1356", "1234": "456", "1245": "1356", "12345": "456"}


@criterion(4, "17 rank-3 classes on 6 elements, 8 positively orientable, 8 pure / 9 not; IC(6,3,13) certificate")
def crit_4(c: Checks) -> str:
    classes = construct.census_rank3_simple(6)
    c("17 classes", len(classes) == 17)
    pos = [bool(construct.is_positively_orientable(m)) for m in classes]
    pure = [tilings.purity_check(m).pure for m in classes]
    c("8 positively orientable", sum(pos) == 8)
    c("8 pure", sum(pure) == 8)
    c("pure iff positively orientable", pos == pure)
    m = figure_matroid("IC(6,3,13)")
    c("IC(6,3,13) in census", any(is_isomorphic(m, x) for x in classes))
    circ = SignedSet(m.mask("6"), m.mask("124"))
    c("bad circuit is a circuit", circ in set(m.all_circuits))
    cert = tilings.bad_collection_certificate(m, circ, _masks(m, ["456", "1356", "2345", "12346"]))
    c("certificate valid", cert.valid)
    rows = cert.to_json(m)["rows"]
    c("8 rows", len(rows) == 8)
    c("blocker table matches", all(EXPECTED_BLOCKERS[r["S"]] in r["blockers"] for r in rows))
    return f"positively orientable {sum(pos)}, pure {sum(pure)}, rows " + \
        ", ".join(f"{r['S']}:{'/'.join(r['blockers'])}" for r in rows)


# ---------------------------------------------------------------- 5

@criterion(5, "rank-4 corank-2 compositions: four pure, four not")
def crit_5(c: Checks) -> str:
    want = {(3, 1, 1, 1): True, (2, 1, 2, 1): True, (3, 2, 1): True, (3, 3): True,
            (1, 1, 1, 1, 1, 1): False, (2, 1, 1, 1, 1): False, (2, 2, 1, 1): False, (2, 2, 2): False}
    got = {}
    for alpha, pure in want.items():
        m = corank2_family(alpha)
        c(f"{alpha} rank 4", m.rank == 4 and m.corank == 2)
        got[alpha] = tilings.purity_check(m).pure
        c(f"{alpha} verdict", got[alpha] == pure)
    c("(1,1,1,1,1,1) is C^{6,4}", is_isomorphic(corank2_family((1,) * 6), alternating(6, 4)))
    c("(2,2,2) is K2,3", is_isomorphic(corank2_family((2, 2, 2)), graphsep.complete_bipartite(2, 3).matroid()))
    return " ".join(f"{''.join(map(str, a))}={'pure' if v else 'not'}" for a, v in got.items())


# ---------------------------------------------------------------- 6

@criterion(6, "pentagon cone: 64 vertices, 32 isolated, components 12 and 20; icosahedron pure, dodecahedron not")
def crit_6(c: Checks) -> str:
    m = pentagon_cone()
    mg = tilings.mutation_graph(m)
    sizes = mg.sizes()
    c("64 vertices", sum(sizes) == 64)
    c("32 isolated", sizes.count(1) == 32)
    c("components 12 and 20", [k for k in sizes if k > 1] == [12, 20])
    comps = {len(x): x for x in mg.components() if len(x) > 1}
    ico = tilings.domain_purity_check(m, comps[12])
    dod = tilings.domain_purity_check(m, comps[20])
    c("icosahedron pure", ico.pure)
    c("icosahedron size 3", ico.max_size == 3)
    c("icosahedron 20 maximal collections", ico.cliques == 20)
    c("dodecahedron not pure", not dod.pure)
    return f"icosahedron {ico.cliques} cliques of size {ico.max_size}; dodecahedron sizes {dod.min_size}..{dod.max_size}"


# ---------------------------------------------------------------- 7

@criterion(7, "coherent counting for T_{0,0}, T_{1,0}; E6-affine colocalization is not coherent")
def crit_7(c: Checks) -> str:
    t00 = graphsep.t_ab(0, 0)
    s00 = graphsep.all_coherent_check(t00)
    all_maps = 2 ** len(t00.subtrees())
    c("T00 formula 6", graphsep.coherent_count(0, 0) == 6)
    c("T00 enumeration 6", s00.colocalizations == 6)
    c("T00 all coherent", s00.all_coherent)
    c("T00 eight maps", all_maps == 8)
    s10 = graphsep.all_coherent_check(graphsep.t_ab(1, 0))
    c("T10 formula 24", graphsep.coherent_count(1, 0) == 24)
    c("T10 enumeration 24", s10.colocalizations == 24)
    tree, lam = graphsep.ehat6()
    gam = graphsep.non_coherent_perturbation(tree, lam)
    c("E6 seven zero subtrees", len(graphsep.zero_subtrees(tree, lam)) == 7)
    c("E6 colocalization", graphsep.is_g_colocalization(tree, gam))
    c("E6 not coherent (tree)", not graphsep.is_coherent_tree(tree, gam))
    g = tree.triangulation.graph()
    m = g.matroid()
    sigma = graphsep.gamma_to_sigma(tree, gam, m, g)
    c("E6 colocalization (matroid)", separation.is_colocalization_gp(m, sigma))
    c("E6 not coherent (matroid)", not graphsep.is_coherent(m, sigma))
    return f"T00 {s00.colocalizations}/{all_maps} maps, T10 {s10.colocalizations}; E6 on a {g.vertices}-gon"


# ---------------------------------------------------------------- 8

def tiling_matroids():
    return {"C^{3,2}": alternating(3, 2), "C^{4,2}": alternating(4, 2), "C^{5,2}": alternating(5, 2),
            "C^{5,3}": alternating(5, 3), "C^{6,2}": alternating(6, 2), "C^{6,3}": alternating(6, 3),
            "C^{6,4}": alternating(6, 4), "C^{7,4}": alternating(7, 4), "C^{7,5}": alternating(7, 5),
            "K2,3": graphsep.complete_bipartite(2, 3).matroid()}


@criterion(8, "property suites: axioms, round trip, tile properties, splitting, flips, epsilon, duality, weak maps")
def crit_8(c: Checks) -> str:
    built = list(tiling_matroids().values()) + [corank2_family(a) for a in ((2, 2, 1, 1), (3, 3))] + \
        [figure_matroid(k) for k in construct.NON_POSITROID_FIGURES] + [pentagon_cone(), alternating(6, 2).dual()]
    c("axioms", all(validate_axioms(m.all_circuits, m.n).ok for m in built))
    tiles_checked = 0
    for name, m in tiling_matroids().items():
        for sigma in tilings.enumerate_colocalizations(m):
            sets = separation.collection_of(m, sigma)
            if separation.sigma_of(m, sets) != sigma:
                c(f"{name} round trip", False)
            rep = tilings.verify_tiling(m, sets)
            if not rep.ok:
                c(f"{name} tiles", False)
            for e in range(m.n):
                k, d, k2 = separation.split_sizes(sets, e)
                if k != d + k2:
                    c(f"{name} split", False)
            tiles_checked += 1
    c("round trip / tiles / split", True)
    flips = 0
    for m in (alternating(5, 2), alternating(5, 3), alternating(6, 4)):
        for sigma in tilings.enumerate_colocalizations(m):
            for i, _ in tilings.flip_neighbors(m, sigma):
                flips += 1
                if not tilings.flip_relation_holds(m, sigma, i):
                    c("flip relation", False)
    c("flip relation", True)
    eps = 0
    for m in (alternating(6, 4), alternating(7, 5), alternating(7, 4)):
        for sigma in tilings.enumerate_colocalizations(m):
            sets = separation.collection_of(m, sigma)
            for a in separation.corank2_subsets(m):
                prof = separation.epsilon_on_restriction(m, a, sets)
                if prof is not None:
                    eps += 1
                    if not separation.epsilon_rule_holds(prof):
                        c("epsilon rule", False)
    c("epsilon rule", eps > 0)
    c("duality involution", all(m.dual().dual().same_circuits(m) for m in built if m.n <= 8))
    c("IC(6,3,12) weak-maps to IC(6,3,13)",
      weak_map_exists(figure_matroid("IC(6,3,12)"), figure_matroid("IC(6,3,13)")) is not None)
    return f"{len(built)} matroids, {tiles_checked} tilings, {flips} flips, {eps} epsilon profiles"


# ---------------------------------------------------------------- 9

@criterion(9, "enumeration equals brute force on C^{3,2}, C^{4,2}, C^{5,2}; both G-separation routes agree")
def crit_9(c: Checks) -> str:
    counts = []
    for n in (3, 4, 5):
        m = alternating(n, 2)
        fast = sorted(tilings.enumerate_colocalizations(m))
        slow = sorted(brute_colocalizations(m))
        c(f"C^{n},2 sets equal", fast == slow)
        counts.append(len(slow))
    c("counts 2, 8", counts[:2] == [2, 8])
    pairs = 0
    for name, g in graph_corpus().items():
        if g.m > 8:
            continue
        m = g.matroid()
        cyc = g.cycles()
        for o1 in range(1 << g.m):
            for o2 in range(1 << g.m):
                pairs += 1
                if graphsep.g_separated(g, o1, o2, cycles=cyc) != graphsep.g_separated_matroid(g, o1, o2, m):
                    c(f"{name} routes", False)
    c("routes agree", pairs > 0)
    return f"colocalization counts {counts}; {pairs} orientation pairs"


# ---------------------------------------------------------------- runners

def run_criterion(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    checks = Checks()
    detail = fn(checks)
    status = "PASS" if checks.ok else "FAIL"
    line = f"criterion {number}: {status}  {title}  [{detail}]"
    if not checks.ok:
        line += "  failed: " + ", ".join(checks.failed())
    return checks.ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    from conftest import ACCEPTANCE_LINES
    ok, line = run_criterion(number)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    bad = 0
    for k in sorted(CRITERIA):
        ok, line = run_criterion(k)
        print(line, flush=True)
        bad += not ok
    sys.exit(1 if bad else 0)
