"""Graphs: total orientations, G-separation, outerplanarity, triangulation trees
and coherence of cycle signatures."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

from .construct import DirectedGraph, from_digraph, simple_cycles
from .core import OrientedMatroid, SignedSet, bits, mask_of, popcount
from .errors import ResourceLimit
from .separation import is_pair_separated

MAX_MINOR_EDGES = 14


# ---------------------------------------------------------------- graphs and orientations

@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph on 0..vertices-1; edge k is stored as (label, a, b) with a < b.

    The reference orientation sends every edge from a to b.
    """
    vertices: int
    edges: tuple[tuple[str, int, int], ...]

    @classmethod
    def make(cls, vertices: int, edges: Iterable[tuple]) -> "UndirectedGraph":
        out = []
        seen = set()
        for k, e in enumerate(edges):
            lab, u, v = (str(k + 1), e[0], e[1]) if len(e) == 2 else (str(e[0]), e[1], e[2])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            a, b = min(u, v), max(u, v)
            if not (0 <= a and b < vertices):
                raise ValueError(f"edge {lab} leaves the vertex range")
            if (a, b) in seen:
                raise ValueError(f"parallel edge {a}-{b}")
            seen.add((a, b))
            out.append((lab, a, b))
        return cls(vertices, tuple(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.edges)

    def reference(self) -> DirectedGraph:
        return DirectedGraph(self.vertices, self.edges)

    def matroid(self) -> OrientedMatroid:
        return from_digraph(self.reference())

    def cycles(self) -> list[list[tuple[int, int]]]:
        return simple_cycles(self.reference())

    def head(self, k: int, flipped: int) -> int:
        _, a, b = self.edges[k]
        return a if flipped >> k & 1 else b

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [{"label": l, "tail": a, "head": b} for l, a, b in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "UndirectedGraph":
        es = []
        for e in data["edges"]:
            if isinstance(e, dict):
                es.append((e.get("label", str(len(es) + 1)), e["tail"], e["head"]))
            else:
                es.append(tuple(e))
        return cls.make(data["vertices"], es)


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.make(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(p: int, q: int) -> UndirectedGraph:
    return UndirectedGraph.make(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.make(n, [(i, (i + 1) % n) for i in range(n)])


def orientation_from_arcs(g: UndirectedGraph, arcs: Iterable[tuple[int, int]]) -> int:
    """alpha(O'): the edges where the arcs disagree with the reference."""
    idx = {(a, b): k for k, (_, a, b) in enumerate(g.edges)}
    flipped = 0
    seen = 0
    for t, h in arcs:
        if (t, h) in idx:
            seen |= 1 << idx[(t, h)]
        elif (h, t) in idx:
            k = idx[(h, t)]
            flipped |= 1 << k
            seen |= 1 << k
        else:
            raise ValueError(f"{t}->{h} is not an edge")
    if seen != (1 << g.m) - 1:
        raise ValueError("a total orientation must direct every edge exactly once")
    return flipped


def _directed_sign(cyc: list[tuple[int, int]], flipped: int) -> int:
    """+1 if the cycle is directed along its traversal, -1 against, 0 if not directed."""
    vals = {d * (-1 if flipped >> k & 1 else 1) for k, d in cyc}
    return vals.pop() if len(vals) == 1 else 0


def g_separated(g: UndirectedGraph, o1: int, o2: int, *, cycles=None) -> bool:
    """No cycle is directed in both orientations in opposite ways."""
    for cyc in (cycles if cycles is not None else g.cycles()):
        s1 = _directed_sign(cyc, o1)
        if s1 and _directed_sign(cyc, o2) == -s1:
            return False
    return True


def g_separated_matroid(g: UndirectedGraph, o1: int, o2: int, m: OrientedMatroid | None = None) -> bool:
    """The same question asked of alpha(O1), alpha(O2) in the graphic matroid."""
    return is_pair_separated(m if m is not None else g.matroid(), o1, o2)


def indegree_sequence(g: UndirectedGraph, flipped: int) -> tuple[int, ...]:
    deg = [0] * g.vertices
    for k in range(g.m):
        deg[g.head(k, flipped)] += 1
    return tuple(deg)


def count_acyclic(g: UndirectedGraph) -> int:
    cyc = g.cycles()
    return sum(1 for o in range(1 << g.m) if not any(_directed_sign(c, o) for c in cyc))


def cycle_reversal_components(g: UndirectedGraph) -> list[list[int]]:
    """Components of single-cycle reversals; checked against indegree classes."""
    if g.m > 20:
        raise ResourceLimit("too many orientations")
    cyc = g.cycles()
    masks = [mask_of(k for k, _ in c) for c in cyc]
    comp = [-1] * (1 << g.m)
    groups = []
    for o in range(1 << g.m):
        if comp[o] >= 0:
            continue
        comp[o] = len(groups)
        members = [o]
        stack = [o]
        while stack:
            u = stack.pop()
            for c, mk in zip(cyc, masks):
                if _directed_sign(c, u):
                    v = u ^ mk
                    if comp[v] < 0:
                        comp[v] = comp[o]
                        members.append(v)
                        stack.append(v)
        groups.append(sorted(members))
    by_indeg: dict[tuple, list[int]] = {}
    for o in range(1 << g.m):
        by_indeg.setdefault(indegree_sequence(g, o), []).append(o)
    a = sorted(map(tuple, groups))
    b = sorted(tuple(v) for v in by_indeg.values())
    if a != b:
        raise AssertionError("cycle-reversal classes differ from indegree classes")
    return [list(x) for x in a]


# ---------------------------------------------------------------- polytopality

@dataclass
class PolytopeReport:
    ok: bool
    vertices: int
    edges_certified: int
    non_edges_certified: int
    failures: list = field(default_factory=list)


def _vec(g: UndirectedGraph, o: int) -> list[int]:
    return [-1 if o >> k & 1 else 1 for k in range(g.m)]


def polytopality_check(g: UndirectedGraph, component: Sequence[int]) -> PolytopeReport:
    """Cycle-reversal edges are hull edges; other pairs are not.

    For a reversal O1 -> O2 the functional that copies the shared coordinates
    and is zero on the reversed cycle is maximized on the component exactly
    at O1 and O2. For other pairs the difference splits into two cycles and
    x1 + x2 = x3 + x4 with O3, O4 also in the component, so the segment is
    not an edge.
    """
    cyc = g.cycles()
    cmask = {mask_of(k for k, _ in c): c for c in cyc}
    comp = list(component)
    pool = set(comp)
    vecs = {o: _vec(g, o) for o in comp}
    rep = PolytopeReport(True, len(comp), 0, 0)
    for o1, o2 in itertools.combinations(comp, 2):
        diff = o1 ^ o2
        if diff in cmask and _directed_sign(cmask[diff], o1):
            lam = [vecs[o1][k] if not diff >> k & 1 else 0 for k in range(g.m)]
            vals = {o: sum(l * x for l, x in zip(lam, vecs[o])) for o in comp}
            top = max(vals.values())
            arg = sorted(o for o, v in vals.items() if v == top)
            if arg == sorted((o1, o2)):
                rep.edges_certified += 1
            else:
                rep.ok = False
                rep.failures.append(("edge", o1, o2))
            continue
        # split into a directed cycle of o1 inside diff and the rest
        split = None
        for mk, c in cmask.items():
            if mk & ~diff == 0 and mk != diff and _directed_sign(c, o1):
                o3, o4 = o1 ^ mk, o1 ^ (diff & ~mk)
                if o3 in pool and o4 in pool:
                    split = (o3, o4)
                    break
        if split is None:
            rep.ok = False
            rep.failures.append(("non-edge", o1, o2))
            continue
        o3, o4 = split
        if all(a + b == c + d for a, b, c, d in zip(vecs[o1], vecs[o2], vecs[o3], vecs[o4])):
            rep.non_edges_certified += 1
        else:
            rep.ok = False
            rep.failures.append(("midpoint", o1, o2))
    return rep


# ---------------------------------------------------------------- outerplanarity

def _adjacency(g: UndirectedGraph) -> list[int]:
    adj = [0] * g.vertices
    for _, a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _strip_pendants(adj: list[int]) -> int:
    """Vertices left after repeatedly removing those of degree at most one."""
    alive = (1 << len(adj)) - 1
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if popcount(adj[v] & alive) <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def _connected_sets(adj: list[int], alive: int) -> list[int]:
    out = []
    for s in range(1, 1 << len(adj)):
        if s & ~alive:
            continue
        start = s & -s
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v] & s
            frontier = nxt & ~seen
            seen |= frontier
        if seen == s:
            out.append(s)
    return out


def find_minor(g: UndirectedGraph, h_vertices: int, h_edges: Sequence[tuple[int, int]]) -> list[int] | None:
    """Disjoint connected branch sets realizing H as a minor, or None."""
    adj = _adjacency(g)
    alive = _strip_pendants(adj)
    sets = _connected_sets(adj, alive)
    nbr = {s: (mask_of(v for x in bits(s) for v in bits(adj[x])) & ~s) for s in sets}
    need = [[i for i, j in h_edges if j == k] + [j for i, j in h_edges if i == k and j < k] for k in range(h_vertices)]
    need = [[p for p in req if p < k] for k, req in enumerate(need)]
    chosen: list[int] = []

    def place(k: int, used: int) -> bool:
        if k == h_vertices:
            return True
        for s in sets:
            if s & used:
                continue
            if any(not nbr[s] & chosen[p] for p in need[k]):
                continue
            chosen.append(s)
            if place(k + 1, used | s):
                return True
            chosen.pop()
        return False

    return list(chosen) if place(0, 0) else None


# H vertex orders chosen so each vertex after the first touches an earlier one.
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
K23_EDGES = [(0, 1), (1, 2), (0, 3), (2, 3), (0, 4), (2, 4)]  # tops 0, 2; bottoms 1, 3, 4


def outerplanar(g: UndirectedGraph, *, witness: bool = False):
    """No K4 and no K_{2,3} minor."""
    if g.m > MAX_MINOR_EDGES:
        raise ResourceLimit(f"minor search limited to {MAX_MINOR_EDGES} edges")
    for name, hv, he in (("K4", 4, K4_EDGES), ("K2,3", 5, K23_EDGES)):
        found = find_minor(g, hv, he)
        if found is not None:
            return (False, name, [bits(s) for s in found]) if witness else False
    return (True, None, None) if witness else True


# ---------------------------------------------------------------- triangulations and trees

@dataclass(frozen=True)
class Triangulation:
    """Convex polygon on 0..size-1 (counterclockwise) plus non-crossing diagonals."""
    size: int
    diagonals: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, size: int, diagonals: Iterable[Sequence[int]]) -> "Triangulation":
        ds = tuple(sorted((min(a, b), max(a, b)) for a, b in diagonals))
        if len(ds) != size - 3:
            raise ValueError(f"a triangulated {size}-gon has {size - 3} diagonals, got {len(ds)}")
        for (a, b), (c, d) in itertools.combinations(ds, 2):
            if a < c < b < d or c < a < d < b:
                raise ValueError(f"diagonals {a}-{b} and {c}-{d} cross")
        return cls(size, ds)

    def graph(self) -> UndirectedGraph:
        es = [(i, i + 1) for i in range(self.size - 1)] + [(0, self.size - 1)] + list(self.diagonals)
        es = sorted(es)
        return UndirectedGraph.make(self.size, [(f"{a}-{b}", a, b) for a, b in es])

    def triangles(self) -> list[tuple[int, int, int]]:
        adj = [set() for _ in range(self.size)]
        for _, a, b in self.graph().edges:
            adj[a].add(b)
            adj[b].add(a)
        return sorted(t for t in itertools.combinations(range(self.size), 3)
                      if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]])

    def to_json(self) -> dict:
        return {"polygon": self.size, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        return cls.make(data["polygon"], data["diagonals"])


@dataclass
class TriangulationTree:
    """Tree on the triangles; subtrees are vertex bitmasks."""
    triangulation: Triangulation
    triangles: list[tuple[int, int, int]]
    adj: list[int]
    names: list[str]

    @property
    def size(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.size) for v in bits(self.adj[u]) if u < v]

    def subtrees(self) -> list[int]:
        """Conn(T), smallest first."""
        out = _connected_sets(self.adj, (1 << self.size) - 1)
        return sorted(out, key=lambda s: (popcount(s), s))

    def triples(self) -> list[tuple[int, int, int]]:
        """(T1, T2, T3) with T2 = T1 + T3 split along one tree edge."""
        out = []
        for t2 in self.subtrees():
            for u, v in self.edges():
                if t2 >> u & 1 and t2 >> v & 1:
                    t1 = _component(self.adj, t2, u, skip=(u, v))
                    out.append((t1, t2, t2 & ~t1))
        return out

    def cycle(self, sub: int, g: UndirectedGraph | None = None) -> SignedSet:
        """tau(T'): the counterclockwise boundary of the union of its triangles as a circuit."""
        g = g if g is not None else self.triangulation.graph()
        idx = {(a, b): k for k, (_, a, b) in enumerate(g.edges)}
        count: dict[tuple[int, int], int] = {}
        for t in bits(sub):
            a, b, c = self.triangles[t]
            for e in ((a, b), (b, c), (a, c)):
                count[e] = count.get(e, 0) + 1
        boundary = [e for e, k in count.items() if k == 1]
        verts = sorted({v for e in boundary for v in e})
        closing = (verts[0], verts[-1])
        plus = mask_of(idx[e] for e in boundary if e != closing)
        return SignedSet(plus, 1 << idx[closing])

    def name(self, sub: int) -> str:
        return ",".join(self.names[v] for v in bits(sub))


def _component(adj: list[int], within: int, start: int, skip: tuple[int, int]) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for v in bits(adj[u] & within):
            if (u, v) == skip or (v, u) == skip:
                continue
            if not seen >> v & 1:
                seen |= 1 << v
                stack.append(v)
    return seen


def tree_of_triangulation(tri: Triangulation, names: Sequence[str] | None = None) -> TriangulationTree:
    tris = tri.triangles()
    k = len(tris)
    if k != tri.size - 2:
        raise ValueError("not a triangulation")
    adj = [0] * k
    for i, j in itertools.combinations(range(k), 2):
        if len(set(tris[i]) & set(tris[j])) == 2:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return TriangulationTree(tri, tris, adj, list(names) if names else [str(i) for i in range(k)])


def triangulation_from_tree(n_vertices: int, tree_edges: Sequence[tuple[int, int]],
                            names: Sequence[str] | None = None) -> TriangulationTree:
    """Glue one triangle per tree vertex along the tree edges.

    Every tree vertex needs degree at most three. The returned tree keeps
    the caller's vertex numbering and names.
    """
    nb: list[list[int]] = [[] for _ in range(n_vertices)]
    for u, v in tree_edges:
        nb[u].append(v)
        nb[v].append(u)
    if any(len(x) > 3 for x in nb):
        raise ValueError("tree vertices of a triangulation have degree at most 3")
    # polygon as a cyclic list of symbolic points; triangles as point triples
    ring = [0, 1, 2]
    fresh = 3
    tri_pts: dict[int, tuple[int, int, int]] = {0: (0, 1, 2)}
    free_sides: dict[int, list[tuple[int, int]]] = {0: [(0, 1), (1, 2), (2, 0)]}
    stack = [0]
    done = {0}
    while stack:
        u = stack.pop()
        for v in nb[u]:
            if v in done:
                continue
            p, q = free_sides[u].pop(0)
            w = fresh
            fresh += 1
            i = ring.index(p)
            ring.insert(i + 1, w)  # q follows p in the ring
            tri_pts[v] = (p, w, q)
            free_sides[v] = [(p, w), (w, q)]
            done.add(v)
            stack.append(v)
    pos = {pt: i for i, pt in enumerate(ring)}
    size = len(ring)
    edges = set()
    for pts in tri_pts.values():
        for a, b in itertools.combinations(pts, 2):
            edges.add((min(pos[a], pos[b]), max(pos[a], pos[b])))
    sides = {(i, i + 1) for i in range(size - 1)} | {(0, size - 1)}
    tri = Triangulation.make(size, sorted(edges - sides))
    tris = [tuple(sorted(pos[p] for p in tri_pts[v])) for v in range(n_vertices)]
    adj = [0] * n_vertices
    for u, v in tree_edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return TriangulationTree(tri, tris, adj, list(names) if names else [str(i) for i in range(n_vertices)])


def t_ab(a: int, b: int) -> TriangulationTree:
    """Path -a..b with an extra leaf l attached to 0."""
    path = list(range(-a, b + 1))
    names = [str(i) for i in path] + ["l"]
    idx = {v: i for i, v in enumerate(path)}
    edges = [(idx[v], idx[v + 1]) for v in path[:-1]] + [(idx[0], len(path))]
    return triangulation_from_tree(len(names), edges, names)


def ehat6() -> tuple[TriangulationTree, dict[str, Fraction]]:
    """The E6-affine tree with Vinberg-style weights (signs alternated)."""
    names = ["c", "a1", "a2", "b1", "b2", "f1", "f2"]
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    lam = {"c": 3, "a1": -2, "a2": 1, "b1": -2, "b2": 1, "f1": -2, "f2": 1}
    return triangulation_from_tree(7, edges, names), {k: Fraction(v) for k, v in lam.items()}


def abstract_tree(n_vertices: int, tree_edges: Sequence[tuple[int, int]],
                  names: Sequence[str] | None = None) -> TriangulationTree:
    """A tree with no polygon behind it; cycle() is unavailable."""
    adj = [0] * n_vertices
    for u, v in tree_edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return TriangulationTree(None, [], adj, list(names) if names else [str(i) for i in range(n_vertices)])


def dhat(n: int) -> tuple[TriangulationTree, dict[str, Fraction]]:
    """D-affine tree on n+1 vertices: leaves a, b on u1 and c, d on the last interior vertex.

    Interior weights are distinct numerators over a power of two summing to -2;
    all are odd except possibly the last (parity forces that when n-3 is odd).
    n = 4 has a degree-four vertex and comes back as an abstract tree.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    k = n - 3
    names = ["a", "b", "c", "d"] + [f"u{i + 1}" for i in range(k)]
    edges = [(4 + i, 5 + i) for i in range(k - 1)] + [(0, 4), (1, 4), (2, 3 + k), (3, 3 + k)]
    den = 1 << (k + 3)
    nums = [2 * i + 1 for i in range(k - 1)]
    nums.append(-2 * den - sum(nums))
    lam = {"a": Fraction(1), "b": Fraction(1), "c": Fraction(1), "d": Fraction(1)}
    for i, v in enumerate(nums):
        lam[f"u{i + 1}"] = Fraction(v, den)
    build = abstract_tree if n == 4 else triangulation_from_tree
    return build(n + 1, edges, names), lam


def zero_subtrees(tree: TriangulationTree, lam: dict[str, Fraction]) -> list[int]:
    return [s for s in tree.subtrees() if sum(lam[tree.names[v]] for v in bits(s)) == 0]


# ---------------------------------------------------------------- G-colocalizations on trees

def is_g_colocalization(tree: TriangulationTree, gamma: dict[int, int], *, witness: bool = False):
    """No bad triple: gamma(T2) nonzero and different from both gamma(T1) and gamma(T3)."""
    for t1, t2, t3 in tree.triples():
        v = gamma.get(t2, 0)
        if v != 0 and v != gamma.get(t1, 0) and v != gamma.get(t3, 0):
            return (False, (t1, t2, t3)) if witness else False
    return (True, None) if witness else True


def enumerate_g_colocalizations(tree: TriangulationTree, limit: int | None = None) -> Iterator[dict[int, int]]:
    """Total maps Conn(T) -> {+,-} without bad triples, by size-ordered backtracking."""
    subs = tree.subtrees()
    by_top: dict[int, list[tuple[int, int]]] = {}
    for t1, t2, t3 in tree.triples():
        by_top.setdefault(t2, []).append((t1, t3))
    gamma: dict[int, int] = {}
    count = 0

    def rec(i: int):
        nonlocal count
        if i == len(subs):
            count += 1
            yield dict(gamma)
            return
        s = subs[i]
        for v in (1, -1):
            if all(gamma[a] == v or gamma[b] == v for a, b in by_top.get(s, ())):
                gamma[s] = v
                yield from rec(i + 1)
                if limit is not None and count >= limit:
                    return
                del gamma[s]

    yield from rec(0)


def gamma_to_sigma(tree: TriangulationTree, gamma: dict[int, int], m: OrientedMatroid | None = None,
                   g: UndirectedGraph | None = None) -> tuple[int, ...]:
    """Sign map on the graphic matroid with sigma(tau(T')) = gamma(T')."""
    g = g if g is not None else tree.triangulation.graph()
    m = m if m is not None else g.matroid()
    out = [0] * len(m.circuits)
    for s, v in gamma.items():
        i, sign = m.circuit_index(tree.cycle(s, g))
        out[i] = sign * v
    return tuple(out)


def gamma_to_json(tree: TriangulationTree, gamma: dict[int, int]) -> dict[str, str]:
    return {tree.name(s): "+" if v > 0 else "-" if v < 0 else "0" for s, v in sorted(gamma.items())}


def gamma_from_json(tree: TriangulationTree, data: dict[str, str]) -> dict[int, int]:
    pos = {nm: i for i, nm in enumerate(tree.names)}
    out = {}
    for k, v in data.items():
        s = mask_of(pos[x] for x in k.split(","))
        out[s] = {"+": 1, "-": -1, "0": 0}[v]
    return out


def gamma_from_weights(tree: TriangulationTree, lam: dict[str, Fraction]) -> dict[int, int]:
    """sign of the weight sum over each subtree (zero where it vanishes)."""
    out = {}
    for s in tree.subtrees():
        tot = sum(lam[tree.names[v]] for v in bits(s))
        out[s] = (tot > 0) - (tot < 0)
    return out


# ---------------------------------------------------------------- exact strict feasibility

def strict_sign_feasibility(rows: Sequence[tuple[Sequence, int]]) -> tuple[bool, list[Fraction] | None]:
    """Is there lam with sign(<c, lam>) = s for every (c, s), s in {+1, -1}?

    The system is homogeneous, so it is equivalent to s<c, lam> >= 1. With
    lam = p - q, p, q >= 0 this becomes a phase-one problem solved by the
    tableau simplex with Bland's rule over Fractions.
    """
    if not rows:
        return True, []
    d = len(rows[0][0])
    a_rows = []
    for c, s in rows:
        if s not in (1, -1):
            raise ValueError("required signs must be +1 or -1")
        if len(c) != d:
            raise ValueError("coefficient vectors differ in length")
        cc = [Fraction(x) * s for x in c]
        a_rows.append(cc + [-x for x in cc])
    sol = _phase_one(a_rows, [Fraction(1)] * len(a_rows))
    if sol is None:
        return False, None
    lam = [sol[j] - sol[d + j] for j in range(d)]
    for c, s in rows:
        v = sum(Fraction(x) * y for x, y in zip(c, lam))
        if not (v * s > 0):
            raise AssertionError("simplex returned a point that violates a strict row")
    return True, lam


def _phase_one(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Find x >= 0 with A x >= b (b > 0), or None."""
    m = len(a)
    nx = len(a[0])
    # columns: x (nx), surplus (m), artificial (m); rows: A x - s + art = b
    ncol = nx + 2 * m
    tab = []
    for i in range(m):
        row = list(a[i]) + [Fraction(0)] * (2 * m) + [b[i]]
        row[nx + i] = Fraction(-1)
        row[nx + m + i] = Fraction(1)
        tab.append(row)
    basis = [nx + m + i for i in range(m)]
    # objective: minimize sum of artificials -> reduced costs
    cost = [Fraction(0)] * (ncol + 1)
    for i in range(m):
        for j in range(ncol + 1):
            cost[j] -= tab[i][j]
    for i in range(m):
        cost[nx + m + i] += 1
    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return None  # unbounded cannot happen for phase one; treat as failure
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter
    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * nx
    for i, j in enumerate(basis):
        if j < nx:
            x[j] = tab[i][-1]
    return x


# ---------------------------------------------------------------- coherence

def coherence_rows_tree(tree: TriangulationTree, gamma: dict[int, int]) -> list[tuple[list[int], int]]:
    return [([1 if s >> v & 1 else 0 for v in range(tree.size)], gamma[s]) for s in tree.subtrees()]


def is_coherent_tree(tree: TriangulationTree, gamma: dict[int, int], *, witness: bool = False):
    ok, lam = strict_sign_feasibility(coherence_rows_tree(tree, gamma))
    return (ok, lam) if witness else ok


def circuit_coefficients(m: OrientedMatroid, x: SignedSet, columns=None) -> list[Fraction]:
    """Signed dependence coefficients on the support of x (all 1 when columns is None)."""
    from .construct import kernel_vector
    out = [Fraction(0)] * m.n
    sup = bits(x.support)
    if columns is None:
        for e in sup:
            out[e] = Fraction(x.sign(e))
        return out
    coef = kernel_vector([columns[e] for e in sup])
    # orient the kernel vector so its signs match x
    flip = 1 if (coef[0] > 0) == (x.sign(sup[0]) > 0) else -1
    for e, c in zip(sup, coef):
        c = c * flip
        if (c > 0) != (x.sign(e) > 0):
            raise ValueError("circuit signs do not match the vector configuration")
        out[e] = c
    return out


def is_coherent(m: OrientedMatroid, sigma: Sequence[int], *, columns=None, witness: bool = False):
    """Is there lam on E with sign(sum_e alpha_e^X X_e lam_e) = sigma(X) for every circuit X?"""
    rows = [(circuit_coefficients(m, x, columns), v) for x, v in zip(m.circuits, sigma)]
    ok, lam = strict_sign_feasibility(rows)
    return (ok, lam) if witness else ok


def coherent_count(a: int, b: int) -> int:
    """2(n+1) n!/(n-a)! n!/(n-b)! with n = a+b+2."""
    n = a + b + 2
    return 2 * (n + 1) * (factorial(n) // factorial(n - a)) * (factorial(n) // factorial(n - b))


@dataclass
class CoherenceSummary:
    colocalizations: int
    coherent: int
    first_incoherent: dict[int, int] | None

    @property
    def all_coherent(self) -> bool:
        return self.colocalizations == self.coherent


def all_coherent_check(tree: TriangulationTree, limit: int | None = None) -> CoherenceSummary:
    total = coh = 0
    bad = None
    for gam in enumerate_g_colocalizations(tree, limit=limit):
        total += 1
        if is_coherent_tree(tree, gam):
            coh += 1
        elif bad is None:
            bad = gam
    return CoherenceSummary(total, coh, bad)


def non_coherent_perturbation(tree: TriangulationTree, lam: dict[str, Fraction]) -> dict[int, int]:
    """Sign the zero subtrees of the weight function so that no weight can induce the result.

    E6-affine: the six four-vertex paths alternate in sign around their cycle of
    three-vertex overlaps and the whole tree gets +. D-affine: aUc, bUd get +,
    aUd, bUc get -, any other zero subtree gets +.
    """
    gam = gamma_from_weights(tree, lam)
    zeros = [s for s, v in gam.items() if v == 0]
    names = tree.names
    pos = {nm: i for i, nm in enumerate(names)}
    full = (1 << tree.size) - 1
    if "c" in pos and "a1" in pos:  # E6-affine
        paths = [s for s in zeros if s != full]
        order = [paths[0]]
        while len(order) < len(paths):
            nxt = [p for p in paths if p not in order and popcount(p & order[-1]) == 3]
            nxt.sort()
            order.append(nxt[0] if len(order) == 1 or nxt[0] != order[-2] else nxt[-1])
        for i, s in enumerate(order):
            gam[s] = 1 if i % 2 == 0 else -1
        for s in zeros:
            if s == full:
                gam[s] = 1
        return gam
    interior = mask_of(i for i, nm in enumerate(names) if nm.startswith("u"))
    want = {("a", "c"): 1, ("b", "d"): 1, ("a", "d"): -1, ("b", "c"): -1}
    for s in zeros:
        gam[s] = 1
        for (x, y), v in want.items():
            if s == interior | (1 << pos[x]) | (1 << pos[y]):
                gam[s] = v
    return gam


def arrangement_Aab(a: int, b: int, *, literal: bool = False) -> list[tuple[str, tuple[int, ...]]]:
    """Normals of A_{a,b} in coordinates (x_{-a}, ..., x_b, z), duplicates removed.

    With lam(i) = x_i - x_{i-1}, lam(l) = z and x_{-a-1} = 0, the subtree [i,l,j]
    has weight x_j - x_{i-1} + z, so the last family runs over -a-1 <= i' < 0 <= j
    with x_{-a-1} read as 0. literal=True instead takes -a <= i <= 0 <= j as
    printed; that version has too few hyperplanes (its i = j = 0 member is z = 0).
    """
    idx = list(range(-a, b + 1))
    dim = len(idx) + 1
    col = {i: k for k, i in enumerate(idx)}
    z = dim - 1
    out: list[tuple[str, tuple[int, ...]]] = []
    seen = set()

    def add(name, terms):
        v = [0] * dim
        for i, c in terms:
            if i == "z":
                v[z] += c
            elif i in col:
                v[col[i]] += c
        v = tuple(v)
        if any(v) and v not in seen:
            seen.add(v)
            out.append((name, v))

    add("z", [("z", 1)])
    for i in idx:
        add(f"x{i}", [(i, 1)])
    for i, j in itertools.combinations(idx, 2):
        add(f"x{j}-x{i}", [(j, 1), (i, -1)])
    lows = range(-a, 1) if literal else range(-a - 1, 0)
    for i in lows:
        for j in range(0, b + 1):
            if i in col:
                add(f"x{j}-x{i}+z", [(j, 1), (i, -1), ("z", 1)])
            else:
                add(f"x{j}+z", [(j, 1), ("z", 1)])
    return out


def weights_to_coordinates(tree: TriangulationTree, lam: Sequence[Fraction]) -> list[Fraction]:
    """(x_{-a}, ..., x_b, z) from vertex weights of T_{a,b} (x_i are prefix sums along the path)."""
    path = [v for v, nm in enumerate(tree.names) if nm != "l"]
    ell = tree.names.index("l")
    xs = []
    acc = Fraction(0)
    for v in path:
        acc += lam[v]
        xs.append(acc)
    return xs + [lam[ell]]


def regions_from_colocalizations(a: int, b: int) -> int:
    """Distinct sign vectors on A_{a,b} of the coherence witnesses of all colocalizations of T_{a,b}."""
    tree = t_ab(a, b)
    normals = [v for _, v in arrangement_Aab(a, b)]
    found = set()
    for gam in enumerate_g_colocalizations(tree):
        ok, lam = is_coherent_tree(tree, gam, witness=True)
        if not ok:
            continue
        pt = weights_to_coordinates(tree, lam)
        sv = tuple((d > 0) - (d < 0) for d in (sum(c * x for c, x in zip(n, pt)) for n in normals))
        if 0 in sv:
            raise AssertionError("witness lies on a hyperplane")
        found.add(sv)
    return len(found)


def count_regions(normals: Sequence[Sequence[int]]) -> int:
    """Regions of a central arrangement: sign vectors with a strictly feasible point.

    Depth-first over the hyperplanes; a prefix is extended only if it is feasible.
    """
    hs = [list(v) for v in normals]
    count = 0
    stack: list[list[int]] = [[]]
    while stack:
        signs = stack.pop()
        k = len(signs)
        if k == len(hs):
            count += 1
            continue
        for s in (1, -1):
            trial = signs + [s]
            ok, _ = strict_sign_feasibility(list(zip(hs[:k + 1], trial)))
            if ok:
                stack.append(trial)
    return count
