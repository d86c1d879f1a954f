"""Colocalization enumeration, zonotopal tiles, mutation and flip graphs, purity."""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .core import OrientedMatroid, SignedSet, bits, drop_bit, popcount
from .errors import ResourceLimit
from .separation import (
    collection_contract, collection_delete, collection_of, cycle_index_table, dedup,
    is_collection_separated, is_pair_separated, is_type3_half, orients, sigma_of,
)

MAX_PURITY_ELEMENTS = 12
MAX_CLIQUES = 10 ** 6
MAX_COLOCALIZATIONS = 10 ** 5


@dataclass
class Report:
    ok: bool = True
    checks: dict = field(default_factory=dict)

    def record(self, name: str, passed: bool, detail=None) -> None:
        prev = self.checks.get(name)
        if prev is None or prev["pass"]:
            self.checks[name] = {"pass": bool(passed), "detail": detail}
        self.ok = self.ok and bool(passed)


# ---------------------------------------------------------------- colocalizations

def _assignment_order(k: int, cycles: list[tuple[tuple[int, int], ...]]) -> list[int]:
    """Greedy: next is the circuit sharing most cycles with those already placed."""
    touching: list[list[int]] = [[] for _ in range(k)]
    for ci, half in enumerate(cycles):
        for i, _ in half:
            touching[i].append(ci)
    started = [0] * len(cycles)
    placed = [False] * k
    order = []
    for _ in range(k):
        best = max((i for i in range(k) if not placed[i]),
                   key=lambda i: (sum(1 for c in touching[i] if started[c]), len(touching[i]), -i))
        placed[best] = True
        order.append(best)
        for c in touching[best]:
            started[c] += 1
    return order


def _partial_ok(half: tuple[tuple[int, int], ...], sigma: list[int]) -> bool:
    """Some completion of the unassigned slots is nonzero with one sign change at most."""
    prev = 0
    changes = 0
    for i, s in half:
        v = sigma[i]
        if v == 0:
            continue
        v *= s
        if prev and v != prev:
            changes += 1
            if changes > 1:
                return False
        prev = v
    return True


def enumerate_colocalizations(m: OrientedMatroid, limit: int | None = None,
                              time_budget: float | None = None) -> Iterator[tuple[int, ...]]:
    """All total sign maps that are Type III on every corank-2 subset.

    Depth-first over circuits in a greedy order, + before -, so the output
    order is fixed. A partial map is pruned as soon as one of its cycles has
    no Type III completion; that test is exact for a single cycle.
    """
    k = len(m.circuits)
    table = cycle_index_table(m)
    cycles = [half for _, half in table]
    by_circuit: list[list[int]] = [[] for _ in range(k)]
    for ci, half in enumerate(cycles):
        for i, _ in half:
            by_circuit[i].append(ci)
    order = _assignment_order(k, cycles)
    sigma = [0] * k
    deadline = time.monotonic() + time_budget if time_budget else None
    emitted = 0
    stack = [(0, 1)]
    # iterative DFS: (depth, value to try at order[depth])
    while stack:
        depth, val = stack.pop()
        if depth == k:
            yield tuple(sigma)
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            continue
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimit(f"colocalization enumeration exceeded {time_budget}s after {emitted} results")
        i = order[depth]
        for d in range(depth, k):
            sigma[order[d]] = 0
        if val == 1:
            stack.append((depth, -1))
        sigma[i] = val
        if all(_partial_ok(cycles[c], sigma) for c in by_circuit[i]):
            stack.append((depth + 1, 1))


def count_colocalizations(m: OrientedMatroid, cap: int = MAX_COLOCALIZATIONS) -> int:
    n = 0
    for _ in enumerate_colocalizations(m, limit=cap + 1):
        n += 1
    if n > cap:
        raise ResourceLimit(f"more than {cap} colocalizations")
    return n


def max_by_size_collections(m: OrientedMatroid, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    for sigma in enumerate_colocalizations(m, limit=limit):
        yield collection_of(m, sigma)


# ---------------------------------------------------------------- tiles

@dataclass(frozen=True, order=True)
class Tile:
    """tau_X = {S : X+ in S, X- disjoint from S}; span is X0."""
    plus: int
    span: int
    minus: int

    @property
    def vector(self) -> SignedSet:
        return SignedSet(self.plus, self.minus)

    @property
    def dim(self) -> int:
        return popcount(self.span)

    def vertices(self) -> list[int]:
        out = []
        sp = self.span
        sub = sp
        while True:
            out.append(self.plus | sub)
            if sub == 0:
                break
            sub = (sub - 1) & sp
        return sorted(out)

    def contains(self, s: int) -> bool:
        return self.plus & ~s == 0 and self.minus & s == 0

    def inside(self, other: "Tile") -> bool:
        return other.vector.le(self.vector)

    def drop(self, e: int) -> "Tile":
        return Tile(drop_bit(self.plus, e), drop_bit(self.span, e), drop_bit(self.minus, e))

    def to_json(self, labels: Sequence[str]) -> dict:
        return {"plus": [labels[i] for i in bits(self.plus)],
                "minus": [labels[i] for i in bits(self.minus)],
                "span": [labels[i] for i in bits(self.span)]}


def tiling_of(n: int, sets: Iterable[int]) -> list[Tile]:
    """Every boolean interval whose vertices all lie in the collection."""
    pool = set(sets)
    ground = (1 << n) - 1
    out = []
    for a in sorted(pool):
        # grow spans disjoint from a, adding elements in increasing order
        stack = [(0, 0)]
        while stack:
            span, start = stack.pop()
            out.append(Tile(a, span, ground & ~a & ~span))
            for e in range(start, n):
                eb = 1 << e
                if a & eb:
                    continue
                sub = span
                good = True
                while True:
                    if (a | sub | eb) not in pool:
                        good = False
                        break
                    if sub == 0:
                        break
                    sub = (sub - 1) & span
                if good:
                    stack.append((span | eb, e + 1))
    return sorted(out)


def tile_graph(n: int, sets: Iterable[int]) -> dict[int, list[int]]:
    pool = set(sets)
    return {s: sorted(s ^ (1 << e) for e in range(n) if s ^ (1 << e) in pool) for s in sorted(pool)}


def graph_distance_check(n: int, sets: Iterable[int]) -> bool:
    """BFS distance in the tile graph equals the symmetric difference size."""
    adj = tile_graph(n, sets)
    for s in adj:
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        if len(dist) != len(adj):
            return False
        if any(dist[t] != popcount(s ^ t) for t in adj):
            return False
    return True


def local_tile(m: OrientedMatroid, tiles: Sequence[Tile], s: int, e: int) -> list[Tile]:
    """Tiles tau containing s whose span I makes (s^e) vs (s^I) a circuit."""
    eb = 1 << e
    t = s ^ eb
    circs = set(m.all_circuits)
    out = []
    for tau in tiles:
        if not tau.contains(s):
            continue
        u = s ^ tau.span
        if SignedSet(t & ~u, u & ~t) in circs:
            out.append(tau)
    return out


def verify_tiling(m: OrientedMatroid, sets: Iterable[int]) -> Report:
    """Check the standard tile properties on a maximal-by-size collection."""
    sets = dedup(sets)
    n = m.n
    rep = Report()
    tiles = tiling_of(n, sets)
    ind = set(m.independent_sets)
    bases = set(m.bases)
    rank = m.rank

    bad = [t for t in tiles if t.span not in ind]
    rep.record("span_independent", not bad, None if not bad else bad[0].to_json(m.labels))

    spans = {t.span for t in tiles}
    missing = sorted(ind - spans)
    rep.record("every_independent_spanned", not missing, None if not missing else m.names(missing[0]))

    top = [t for t in tiles if t.dim == rank]
    top_spans = [t.span for t in top]
    rep.record("top_tiles_biject_bases", sorted(top_spans) == sorted(bases) and len(set(top_spans)) == len(top_spans),
               {"top_tiles": len(top), "bases": len(bases)})

    orphan = [t for t in tiles if not any(t.inside(b) for b in top)]
    rep.record("inside_top_tile", not orphan, None if not orphan else orphan[0].to_json(m.labels))

    rep.record("graph_distance", graph_distance_check(n, sets))

    for e in range(n):
        if not m.loops >> e & 1:
            lhs = set(tiling_of(n - 1, collection_contract(sets, e)))
            rhs = {t.drop(e) for t in tiles if t.span >> e & 1}
            rep.record("contract_tiles", lhs == rhs, m.labels[e])
        if not m.coloops >> e & 1:
            lhs = set(tiling_of(n - 1, collection_delete(sets, e)))
            rhs = {t.drop(e) for t in tiles}
            rep.record("delete_tiles", lhs == rhs, m.labels[e])

    pool = set(sets)
    for s in sets:
        for e in range(n):
            if s ^ (1 << e) in pool:
                continue
            found = local_tile(m, tiles, s, e)
            if len(found) != 1:
                rep.record("local_unique_tile", False, {"S": m.names(s), "e": m.labels[e], "tiles": len(found)})
    rep.checks.setdefault("local_unique_tile", {"pass": True, "detail": None})
    rep.checks["tile_count"] = {"pass": True, "detail": len(tiles)}
    return rep


# ---------------------------------------------------------------- mutation graph

@dataclass
class MutationGraph:
    n: int
    adj: dict[int, list[int]]
    component: list[int]

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for s, c in enumerate(self.component):
            groups.setdefault(c, []).append(s)
        return sorted(groups.values(), key=lambda g: (len(g), g))

    def sizes(self) -> list[int]:
        return sorted(len(g) for g in self.components())


def mutation_graph(m: OrientedMatroid) -> MutationGraph:
    """S ~ T iff (S - T, T - S) is a circuit."""
    n = m.n
    if n > 20:
        raise ResourceLimit("mutation graph is built over 2^n vertices; n too large")
    adj: dict[int, list[int]] = {s: [] for s in range(1 << n)}
    for s in range(1 << n):
        for x in m.all_circuits:
            if x.plus & ~s == 0 and x.minus & s == 0:
                t = s ^ x.support
                adj[s].append(t)
                adj[t].append(s)
    comp = [-1] * (1 << n)
    label = 0
    for s in range(1 << n):
        if comp[s] >= 0:
            continue
        comp[s] = label
        q = [s]
        while q:
            u = q.pop()
            for v in adj[u]:
                if comp[v] < 0:
                    comp[v] = label
                    q.append(v)
        label += 1
    return MutationGraph(n, {s: sorted(set(v)) for s, v in adj.items()}, comp)


def mutation_components(m: OrientedMatroid) -> list[list[int]]:
    return mutation_graph(m).components()


def mutate(x: SignedSet, s: int) -> int:
    return s ^ x.support


# ---------------------------------------------------------------- flips

def _cycles_by_circuit(m: OrientedMatroid):
    table = cycle_index_table(m)
    by: list[list[tuple]] = [[] for _ in m.circuits]
    for _, half in table:
        for i, _ in half:
            by[i].append(half)
    return by


def flip_neighbors(m: OrientedMatroid, sigma: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
    """(index of the flipped circuit pair, new sign map) for every legal flip."""
    by = _cycles_by_circuit(m)
    out = []
    for i in range(len(sigma)):
        t = list(sigma)
        t[i] = -t[i]
        if all(is_type3_half([s * t[j] for j, s in half]) for half in by[i]):
            out.append((i, tuple(t)))
    return out


def flip_relation_holds(m: OrientedMatroid, sigma: Sequence[int], i: int) -> bool:
    """S(sigma') from S(sigma) by mutating along W, where sigma(W) = + and sigma'(W) = -."""
    w = m.circuits[i] if sigma[i] > 0 else -m.circuits[i]
    new = list(sigma)
    new[i] = -new[i]
    before = collection_of(m, sigma)
    after = set(collection_of(m, new))
    kept = {s for s in before if orients(w, s) == 0}
    moved = {mutate(w, s) for s in before if orients(w, s) == 1}
    return after & set(before) == kept and after - set(before) == moved


def flip_graph(m: OrientedMatroid, cap: int = MAX_COLOCALIZATIONS) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    nodes = list(enumerate_colocalizations(m, limit=cap + 1))
    if len(nodes) > cap:
        raise ResourceLimit(f"more than {cap} colocalizations")
    return {s: sorted(t for _, t in flip_neighbors(m, s)) for s in nodes}


def is_flip_connected(m: OrientedMatroid) -> bool:
    g = flip_graph(m)
    if not g:
        return True
    start = next(iter(g))
    seen = {start}
    q = [start]
    while q:
        u = q.pop()
        for v in g[u]:
            if v not in seen:
                seen.add(v)
                q.append(v)
    return len(seen) == len(g)


# ---------------------------------------------------------------- purity

def separation_adjacency(m: OrientedMatroid) -> list[int]:
    """Bitset rows of the graph on 2^E joining separated pairs."""
    n = m.n
    size = 1 << n
    nonsep = np.zeros((size, size), dtype=bool)
    for x in m.all_circuits:
        rest = ((1 << n) - 1) & ~x.support
        subs = np.array(_submasks(rest), dtype=np.int64)
        nonsep[np.ix_(x.plus | subs, x.minus | subs)] = True
    sep = ~nonsep
    np.fill_diagonal(sep, False)
    packed = np.packbits(sep, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _submasks(mask: int) -> list[int]:
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return out


def maximal_cliques(adj: Sequence[int], verts: int, *, cap: int = MAX_CLIQUES,
                    stop_if_size_not: int | None = None) -> Iterator[int]:
    """Bron-Kerbosch with Tomita pivoting over int bitsets.

    Vertices of P adjacent to everything else in P and X are moved into R
    in one step. With stop_if_size_not set, the search returns right after
    yielding the first clique of a different size.
    """
    count = 0
    stack = [(0, verts, 0)]
    while stack:
        r, p, x = stack.pop()
        # absorb vertices universal for this subproblem
        px = p | x
        forced = 0
        for v in bits(p):
            vb = 1 << v
            if (px & ~vb) & ~adj[v] == 0:
                forced |= vb
        if forced:
            r |= forced
            p &= ~forced
            for v in bits(forced):
                p &= adj[v]
                x &= adj[v]
        if not p:
            if not x:
                count += 1
                if count > cap:
                    raise ResourceLimit(f"more than {cap} maximal cliques")
                yield r
                if stop_if_size_not is not None and popcount(r) != stop_if_size_not:
                    return
            continue
        pivot = max(bits(p | x), key=lambda u: popcount(p & adj[u]))
        branch = p & ~adj[pivot]
        for v in bits(branch):
            vb = 1 << v
            stack.append((r | vb, p & adj[v], x & adj[v]))
            p &= ~vb
            x |= vb


@dataclass
class PurityResult:
    pure: bool
    ind: int
    witness: tuple[int, ...] | None
    cliques: int
    max_size: int
    min_size: int

    def to_json(self, m: OrientedMatroid) -> dict:
        return {
            "verdict": "pure" if self.pure else "not-pure",
            "ind": self.ind,
            "max_clique": self.max_size,
            "min_clique": self.min_size,
            "cliques_seen": self.cliques,
            "witness": None if self.witness is None else [m.names(s) for s in self.witness],
        }


def _clique_sets(c: int) -> tuple[int, ...]:
    return tuple(bits(c))


def purity_check(m: OrientedMatroid, *, max_elements: int = MAX_PURITY_ELEMENTS, cap: int = MAX_CLIQUES,
                 exhaustive: bool = False) -> PurityResult:
    """Pure iff every maximal clique of the separation graph has |Ind(M)| vertices."""
    if m.n > max_elements:
        raise ResourceLimit(f"purity check limited to {max_elements} elements, got {m.n}")
    ind = m.tutte_eval(2, 1)
    adj = separation_adjacency(m)
    verts = (1 << (1 << m.n)) - 1
    return _purity_on(adj, verts, ind, cap, exhaustive)


def _purity_on(adj, verts, target, cap, exhaustive) -> PurityResult:
    witness = None
    count = 0
    hi, lo = 0, None
    stop = None if exhaustive else target
    for c in maximal_cliques(adj, verts, cap=cap, stop_if_size_not=stop):
        count += 1
        k = popcount(c)
        hi = max(hi, k)
        lo = k if lo is None else min(lo, k)
        if k != target and witness is None:
            witness = _clique_sets(c)
    return PurityResult(witness is None, target, witness, count, hi, lo or 0)


def domain_purity_check(m: OrientedMatroid, domain: Iterable[int], *, cap: int = MAX_CLIQUES) -> PurityResult:
    """Maximal separated collections inside a domain; pure iff all have one size.

    The reported ind field is the largest size found.
    """
    if m.n > MAX_PURITY_ELEMENTS:
        raise ResourceLimit(f"purity check limited to {MAX_PURITY_ELEMENTS} elements")
    adj = separation_adjacency(m)
    verts = 0
    for s in domain:
        verts |= 1 << s
    sizes = []
    first_small = None
    for c in maximal_cliques(adj, verts, cap=cap):
        sizes.append((popcount(c), c))
    top = max(k for k, _ in sizes)
    for k, c in sizes:
        if k != top:
            first_small = _clique_sets(c)
            break
    return PurityResult(first_small is None, top, first_small, len(sizes), top, min(k for k, _ in sizes))


# ---------------------------------------------------------------- certificates

@dataclass
class Certificate:
    valid: bool
    separated: bool
    rows: list[tuple[int, list[int]]]
    unblocked: list[int]

    def to_json(self, m: OrientedMatroid) -> dict:
        return {
            "valid": self.valid,
            "bad_collection_separated": self.separated,
            "rows": [{"S": "".join(m.names(s)), "blockers": ["".join(m.names(t)) for t in ts]} for s, ts in self.rows],
            "unblocked": ["".join(m.names(s)) for s in self.unblocked],
        }


def orienting_sets(m: OrientedMatroid, c: SignedSet) -> list[int]:
    """All S orienting c positively, then all orienting it negatively."""
    free = m.ground & ~c.support
    subs = sorted(_submasks(free), key=lambda s: (popcount(s), s))
    return [c.plus | s for s in subs] + [c.minus | s for s in subs]


def bad_collection_certificate(m: OrientedMatroid, c: SignedSet, s0: Iterable[int]) -> Certificate:
    """S0 separated, and every set orienting c clashes with some member of S0."""
    s0 = dedup(s0)
    sep = is_collection_separated(m, s0)
    rows = []
    unblocked = []
    for s in orienting_sets(m, c):
        blockers = [t for t in s0 if not is_pair_separated(m, s, t)]
        rows.append((s, blockers))
        if not blockers:
            unblocked.append(s)
    return Certificate(sep and not unblocked, sep, rows, unblocked)


def domain_restriction_conjecture_check(m: OrientedMatroid, *, limit: int | None = None) -> Report:
    """Compare |S n D| with the largest separated collection inside each component D."""
    rep = Report()
    comps = [c for c in mutation_components(m) if len(c) > 1]
    adj = separation_adjacency(m)
    best = []
    for comp in comps:
        verts = 0
        for s in comp:
            verts |= 1 << s
        best.append(max(popcount(c) for c in maximal_cliques(adj, verts)))
    counter = []
    checked = 0
    for coll in max_by_size_collections(m, limit=limit):
        pool = set(coll)
        checked += 1
        for comp, b in zip(comps, best):
            k = sum(1 for s in comp if s in pool)
            if k != b:
                counter.append({"collection": [m.names(s) for s in coll], "component": [m.names(s) for s in comp],
                                "meets": k, "max_inside": b})
    rep.record("confirmed", not counter, {"collections": checked, "components": len(comps),
                                          "counterexamples": counter[:5]})
    return rep
