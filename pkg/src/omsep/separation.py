"""Separated collections, circuit sign maps and one-element liftings.

A sign map is a tuple of ints in {1, -1, 0}, aligned with ``m.circuits``
(the canonical representative of each +-pair). The value on -X is the
negation of the stored value.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .core import OrientedMatroid, SignedSet, bits, circuit_sort_key, is_isomorphic, mask_of, popcount, signed_key
from .errors import NotCorank2, OMError, ResourceLimit

MAX_SCAN_ELEMENTS = 20
SYMBOL = {1: "+", -1: "-", 0: "0"}
VALUE = {"+": 1, "-": -1, "0": 0, "−": -1}


class SeparationClash(OMError):
    """Two members of a collection orient one circuit in opposite ways."""

    def __init__(self, circuit: SignedSet, pos: int, neg: int):
        super().__init__(f"circuit {circuit} oriented both ways by {pos:#b} and {neg:#b}")
        self.circuit = circuit
        self.pair = (pos, neg)


# ---------------------------------------------------------------- pairs

def orients(x: SignedSet, s: int) -> int:
    """+1 if s orients x positively, -1 if negatively, else 0."""
    if x.plus & ~s == 0 and x.minus & s == 0:
        return 1
    if x.minus & ~s == 0 and x.plus & s == 0:
        return -1
    return 0


def is_pair_separated(m: OrientedMatroid, i: int, j: int, *, witness: bool = False):
    a, b = i & ~j, j & ~i
    for x in m.all_circuits:
        if x.plus & ~a == 0 and x.minus & ~b == 0:
            return (False, x) if witness else False
    return (True, None) if witness else True


def dedup(sets: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(sets)))


# ---------------------------------------------------------------- sign maps

def _orient_table(m: OrientedMatroid, sets: Sequence[int]) -> list[tuple[int | None, int | None]]:
    out = []
    for x in m.circuits:
        pos = neg = None
        for s in sets:
            o = orients(x, s)
            if o > 0 and pos is None:
                pos = s
            elif o < 0 and neg is None:
                neg = s
            if pos is not None and neg is not None:
                break
        out.append((pos, neg))
    return out


def is_collection_separated(m: OrientedMatroid, sets: Iterable[int], *, witness: bool = False):
    sets = dedup(sets)
    for x, (pos, neg) in zip(m.circuits, _orient_table(m, sets)):
        if pos is not None and neg is not None:
            return (False, (pos, neg, x)) if witness else False
    return (True, None) if witness else True


def sigma_of(m: OrientedMatroid, sets: Iterable[int]) -> tuple[int, ...]:
    """sigma_S; raises SeparationClash when S is not separated."""
    sets = dedup(sets)
    out = []
    for x, (pos, neg) in zip(m.circuits, _orient_table(m, sets)):
        if pos is not None and neg is not None:
            raise SeparationClash(x, pos, neg)
        out.append(1 if pos is not None else -1 if neg is not None else 0)
    return tuple(out)


def sign_value(m: OrientedMatroid, sigma: Sequence[int], x: SignedSet) -> int:
    idx, s = m.circuit_index(x)
    return s * sigma[idx]


def is_complete(m: OrientedMatroid, sets: Iterable[int]) -> bool:
    return all(sigma_of(m, sets))


def sigma_to_json(m: OrientedMatroid, sigma: Sequence[int]) -> dict[str, str]:
    return {signed_key(x, m.labels): SYMBOL[v] for x, v in zip(m.circuits, sigma)}


def sigma_from_json(m: OrientedMatroid, data: dict[str, str]) -> tuple[int, ...]:
    lookup = {signed_key(x, m.labels): i for i, x in enumerate(m.circuits)}
    out = [0] * len(m.circuits)
    for k, v in data.items():
        if k not in lookup:
            raise ValueError(f"unknown circuit key {k!r}")
        out[lookup[k]] = VALUE[v]
    return tuple(out)


def collection_to_json(m: OrientedMatroid, sets: Iterable[int]) -> list[list[str]]:
    return [m.names(s) for s in dedup(sets)]


def collection_from_json(m: OrientedMatroid, data: list) -> tuple[int, ...]:
    return dedup(m.mask([str(v) for v in s]) for s in data)


# ---------------------------------------------------------------- minors of collections

def _squeeze(s: int, e: int) -> int:
    low = s & ((1 << e) - 1)
    return low | ((s >> (e + 1)) << e)


def collection_delete(sets: Iterable[int], e: int) -> tuple[int, ...]:
    """S - e: every member with e removed, positions above e shifted down."""
    return dedup(_squeeze(s & ~(1 << e), e) for s in sets)


def collection_contract(sets: Iterable[int], e: int) -> tuple[int, ...]:
    """S / e: the T avoiding e with both T and T+e in S."""
    pool = set(sets)
    eb = 1 << e
    return dedup(_squeeze(s, e) for s in pool if not s & eb and s | eb in pool)


def split_sizes(sets: Iterable[int], e: int) -> tuple[int, int, int]:
    sets = dedup(sets)
    d, c = len(collection_delete(sets, e)), len(collection_contract(sets, e))
    if d + c != len(sets):
        raise AssertionError(f"|S| = {len(sets)} but |S-e| + |S/e| = {d} + {c}")
    return len(sets), d, c


# ---------------------------------------------------------------- corank 2

@lru_cache(maxsize=64)
def corank2_subsets(m: OrientedMatroid) -> tuple[int, ...]:
    """Supports A of corank 2 that carry at least three circuits.

    Every corank-2 restriction with circuits is the union of the supports
    of two of its circuits, so pairs of circuits find all of them.
    Coloops of M|A are dropped: they do not change the circuit set.
    """
    sups = m.supports
    seen = set()
    for i, a in enumerate(sups):
        for b in sups[i + 1:]:
            u = a | b
            if u not in seen and m.corank_of(u) == 2:
                seen.add(u)
    return tuple(sorted(seen))


def _cycle_members(m: OrientedMatroid, a: int) -> list[SignedSet]:
    return [x for x in m.all_circuits if x.support & ~a == 0]


@lru_cache(maxsize=4096)
def _cycle_cached(m: OrientedMatroid, a: int) -> tuple[SignedSet, ...]:
    cs = _cycle_members(m, a)
    if len(cs) < 4:
        raise NotCorank2(f"{m.names(a)} carries {len(cs) // 2} circuit pairs; need at least 2")

    def neighbours(x: SignedSet) -> list[SignedSet]:
        out = []
        for y in cs:
            if y == x or y == -x or x.separates(y):
                continue
            top = x.compose(y)
            if sum(1 for z in cs if z.le(top)) == 2:
                out.append(y)
        return sorted(out, key=circuit_sort_key)

    start = min((x for x in cs), key=circuit_sort_key)
    first = neighbours(start)
    if len(first) != 2:
        raise NotCorank2(f"{m.names(a)}: circuit graph is not a cycle")
    order = [start, first[0]]
    while True:
        nxt = [y for y in neighbours(order[-1]) if y != order[-2]]
        if len(nxt) != 1:
            raise NotCorank2(f"{m.names(a)}: circuit graph is not a cycle")
        if nxt[0] == start:
            break
        order.append(nxt[0])
        if len(order) > len(cs):
            raise NotCorank2(f"{m.names(a)}: circuit walk does not close")
    half = len(order) // 2
    if len(order) != len(cs) or any(order[i + half] != -order[i] for i in range(half)):
        raise NotCorank2(f"{m.names(a)}: circuit walk is not antipodal")
    return tuple(order)


def corank2_circuit_cycle(m: OrientedMatroid, a: int) -> list[SignedSet]:
    """The 2m circuits of M|A in cyclic order; the second half negates the first.

    Neighbours on the cycle are the conformal pairs X, Y whose composition
    lies above no third circuit. The walk starts at the smallest circuit and
    heads to its smaller neighbour, which fixes the reflection.
    """
    if m.corank_of(a) != 2:
        raise NotCorank2(f"{m.names(a)} has corank {m.corank_of(a)}")
    return list(_cycle_cached(m, a & ~_coloops_in(m, a)))


def _coloops_in(m: OrientedMatroid, a: int) -> int:
    used = 0
    for s in m.supports:
        if s & ~a == 0:
            used |= s
    return a & ~used


def classify_pattern(values: Sequence[int]) -> str | None:
    """Type of a cyclic sign pattern of even length 2m."""
    k = len(values)
    m = k // 2
    if all(v == 0 for v in values):
        return "I"
    for r in range(k):
        rot = values[r:] + values[:r] if isinstance(values, list) else tuple(values[r:]) + tuple(values[:r])
        if all(v == 1 for v in rot[:m]) and all(v == -1 for v in rot[m:]):
            return "III"
        if (all(v == 1 for v in rot[:m - 1]) and rot[m - 1] == 0
                and all(v == -1 for v in rot[m:k - 1]) and rot[k - 1] == 0):
            return "II"
    return None


def classify_type(m: OrientedMatroid, a: int, sigma: Sequence[int]) -> str | None:
    cyc = corank2_circuit_cycle(m, a)
    return classify_pattern([sign_value(m, sigma, x) for x in cyc])


def is_type3_half(values: Sequence[int]) -> bool:
    """First half of an antipodal cycle: nonzero with at most one sign change."""
    if any(v == 0 for v in values):
        return False
    return sum(1 for p, q in zip(values, values[1:]) if p != q) <= 1


def cycle_index_table(m: OrientedMatroid) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """For every corank-2 support: (A, ((circuit index, sign), ...) over the first half)."""
    out = []
    for a in corank2_subsets(m):
        cyc = corank2_circuit_cycle(m, a)
        half = cyc[:len(cyc) // 2]
        out.append((a, tuple(m.circuit_index(x) for x in half)))
    return out


def is_colocalization_gp(m: OrientedMatroid, sigma: Sequence[int], *, witness: bool = False):
    """Type III on every corank-2 subset; sigma must be zero free."""
    if any(v == 0 for v in sigma):
        raise ValueError("sigma must be total (no zeros)")
    for a, half in cycle_index_table(m):
        if not is_type3_half([s * sigma[i] for i, s in half]):
            return (False, a) if witness else False
    return (True, None) if witness else True


def is_colocalization(m: OrientedMatroid, sigma: Sequence[int]) -> bool:
    """Type I, II or III everywhere; zeros allowed."""
    for a in corank2_subsets(m):
        if classify_type(m, a, sigma) is None:
            return False
    return True


# ---------------------------------------------------------------- epsilon profile

def epsilon_profile(sets: Iterable[int], n: int) -> tuple[int, ...]:
    """(eps_1..eps_n) of a collection for the dual of C^{n,2}.

    eps_k is + when [1,k-1] is a member and - when [k,n] is.
    """
    pool = set(sets)
    out = []
    for k in range(n):
        lo = (1 << k) - 1
        hi = ((1 << n) - 1) & ~lo
        if lo in pool and hi in pool:
            raise SeparationClash(SignedSet(lo, hi & ~(1 << k)), lo, hi)
        out.append(1 if lo in pool else -1 if hi in pool else 0)
    return tuple(out)


def epsilon_rule_holds(eps: Sequence[int]) -> bool:
    """No neighbours with opposite nonzero signs; eps_1 against -eps_n."""
    n = len(eps)
    for k in range(n - 1):
        if eps[k] != 0 and eps[k] == -eps[k + 1]:
            return False
    return not (eps[0] != 0 and eps[0] == eps[n - 1])


def epsilon_on_restriction(m: OrientedMatroid, a: int, sets: Iterable[int]) -> tuple[int, ...] | None:
    """Transport S|A to the dual of C^{k,2} and read off its profile.

    Returns None when the coloop-free part of M|A is not isomorphic to that
    model (series elements in M|A).
    """
    from .construct import alternating
    a = a & ~_coloops_in(m, a)
    sub = m.restrict(a)
    k = sub.n
    model = alternating(k, 2).dual()
    found = is_isomorphic(sub, model, witness=True)
    if not found[0]:
        return None
    _, mapping, flips = found
    pos = model.position
    idx = bits(a)
    re = model.mask(flips)
    moved = set()
    for s in sets:
        t = mask_of(pos[mapping[m.labels[e]]] for e in idx if s >> e & 1)
        moved.add(t ^ re)
    return epsilon_profile(moved, k)


# ---------------------------------------------------------------- liftings

def lifting_circuits(m: OrientedMatroid, sigma: Sequence[int], *, g: str = "g", validate: bool = True) -> OrientedMatroid:
    """Circuits of the one-element lifting on E + g for a colocalization sigma."""
    n = m.n
    gb = 1 << n
    out = set()
    for x, v in zip(m.circuits, sigma):
        for y, s in ((x, v), (-x, -v)):
            out.add(SignedSet(y.plus | (gb if s > 0 else 0), y.minus | (gb if s < 0 else 0)))
    cs = m.all_circuits
    vals = {y: sign_value(m, sigma, y) for y in cs}
    for i, y1 in enumerate(cs):
        if vals[y1] == 0:
            continue
        for y2 in cs[i + 1:]:
            if vals[y2] != -vals[y1]:
                continue
            top = y1.compose(y2)
            if top == y1 or top == y2 or not y2.le(top):
                continue
            if m.corank_of(top.support) == 2:
                out.add(top)
    return OrientedMatroid(list(m.labels) + [g], out, validate=validate)


# ---------------------------------------------------------------- S(sigma)

def collection_of(m: OrientedMatroid, sigma: Sequence[int]) -> tuple[int, ...]:
    """All S such that every circuit S orients agrees with sigma."""
    n = m.n
    if n > MAX_SCAN_ELEMENTS:
        raise ResourceLimit(f"collection_of scans 2^n subsets; n={n} exceeds {MAX_SCAN_ELEMENTS}")
    arr = np.arange(1 << n, dtype=np.int64)
    keep = np.ones(1 << n, dtype=bool)
    for x, v in zip(m.circuits, sigma):
        bad = [x, -x] if v == 0 else [x if v < 0 else -x]
        for b in bad:
            keep &= ~(((arr & b.plus) == b.plus) & ((arr & b.minus) == 0))
    return tuple(int(s) for s in np.nonzero(keep)[0])


def collection_from_topes(m: OrientedMatroid, sigma: Sequence[int], lifting: OrientedMatroid | None = None) -> tuple[int, ...]:
    """S(sigma) read off the lifting: the S for which (S - L, (E + g - S) - L) is a tope.

    L is the loop set of the lifting. A sign vector whose support is
    everything but the loops is a tope iff it is orthogonal to every circuit.
    """
    lift = lifting if lifting is not None else lifting_circuits(m, sigma, validate=False)
    n = m.n
    gb = 1 << n
    keep = ~lift.loops
    out = []
    for s in range(1 << n):
        t = SignedSet(s & keep, (((1 << n) - 1) & ~s | gb) & keep)
        if all(t.orthogonal(x) for x in lift.circuits):
            out.append(s)
    return tuple(out)


# ---------------------------------------------------------------- padding

def pad(i: int, n: int) -> int:
    """I u {2n, 2n-1, ..., n+|I|+1} as a subset of [2n] (0-based bits)."""
    k = popcount(i)
    top = ((1 << (2 * n)) - 1) & ~((1 << (n + k)) - 1)
    return i | top


def pad_collection(sets: Iterable[int], n: int) -> tuple[int, ...]:
    return dedup(pad(s, n) for s in sets)


def surrounds(i: int, j: int) -> bool:
    """I - J splits as I1 < (J - I) < I2."""
    a, b = i & ~j, j & ~i
    if not b:
        return True
    lo, hi = bits(b)[0], bits(b)[-1]
    between = ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1)
    return a & between == 0


def weakly_separated(i: int, j: int) -> bool:
    pi, pj = popcount(i), popcount(j)
    return (pi <= pj and surrounds(i, j)) or (pj <= pi and surrounds(j, i))
