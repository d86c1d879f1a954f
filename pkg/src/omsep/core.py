"""Signed sets and the oriented matroid data model.

Elements are dense indices 0..n-1; subsets are int bitmasks. Labels only
matter at the I/O boundary.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import CoLoopDeletion, LoopContraction, ValidationError

MAX_ELEMENTS = 63


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def drop_bit(mask: int, e: int) -> int:
    """Remove position e and shift the higher positions down by one."""
    low = mask & ((1 << e) - 1)
    return low | ((mask >> (e + 1)) << e)


class SignedSet(NamedTuple):
    plus: int
    minus: int

    @property
    def support(self) -> int:
        return self.plus | self.minus

    @property
    def zero_free(self) -> bool:
        return bool(self.plus | self.minus)

    def __neg__(self) -> "SignedSet":
        return SignedSet(self.minus, self.plus)

    def sign(self, e: int) -> int:
        if self.plus >> e & 1:
            return 1
        if self.minus >> e & 1:
            return -1
        return 0

    def compose(self, other: "SignedSet") -> "SignedSet":
        """X o Y: X's signs where X is nonzero, Y's elsewhere."""
        free = ~self.support
        return SignedSet(self.plus | (other.plus & free), self.minus | (other.minus & free))

    def le(self, other: "SignedSet") -> bool:
        """Componentwise order with 0 < +, 0 < -."""
        return self.plus & ~other.plus == 0 and self.minus & ~other.minus == 0

    def restrict(self, mask: int) -> "SignedSet":
        return SignedSet(self.plus & mask, self.minus & mask)

    def reorient(self, a: int) -> "SignedSet":
        return SignedSet((self.plus & ~a) | (self.minus & a), (self.minus & ~a) | (self.plus & a))

    def separates(self, other: "SignedSet") -> int:
        """Elements where the two signs are opposite and nonzero."""
        return (self.plus & other.minus) | (self.minus & other.plus)

    def orthogonal(self, other: "SignedSet") -> bool:
        same = (self.plus & other.plus) | (self.minus & other.minus)
        opp = self.separates(other)
        return (same == 0) == (opp == 0)

    def canonical(self) -> "SignedSet":
        """The representative of +-X whose plus part holds the smallest support index."""
        low = self.support & -self.support
        return self if self.plus & low else -self


def signed_from_vector(vec: Sequence[int]) -> SignedSet:
    p = m = 0
    for i, s in enumerate(vec):
        if s > 0:
            p |= 1 << i
        elif s < 0:
            m |= 1 << i
    return SignedSet(p, m)


def circuit_sort_key(x: SignedSet) -> tuple:
    return (tuple(bits(x.support)), tuple(bits(x.plus)))


# ---------------------------------------------------------------- validation

@dataclass
class ValidationReport:
    ok: bool = True
    failures: dict = field(default_factory=dict)

    def fail(self, axiom: str, witness) -> None:
        self.ok = False
        self.failures.setdefault(axiom, witness)

    def summary(self) -> str:
        if self.ok:
            return "all axioms hold"
        return "; ".join(f"{k} fails: {v}" for k, v in sorted(self.failures.items()))

    def as_dict(self, labels: Sequence[str] | None = None) -> dict:
        def show(w):
            if isinstance(w, SignedSet):
                return signed_to_json(w, labels)
            if isinstance(w, dict):
                return {k: show(v) for k, v in w.items()}
            if isinstance(w, int) and labels is not None:
                return labels[w]
            return w
        return {
            "ok": self.ok,
            "axioms": {ax: ("fail" if ax in self.failures else "pass") for ax in ("C0", "C1", "C2", "C3")},
            "witnesses": {k: show(v) for k, v in sorted(self.failures.items())},
        }


def validate_axioms(circuits: Iterable[SignedSet], n: int | None = None) -> ValidationReport:
    """Literal check of C0-C3 on a list of signed sets."""
    report = ValidationReport()
    cs = list(dict.fromkeys(circuits))
    cset = set(cs)
    if n is not None:
        ground = (1 << n) - 1
        for x in cs:
            if x.support & ~ground:
                report.fail("ground", x)
    for x in cs:
        if x.plus & x.minus:
            report.fail("C0", x)
        if not x.support:
            report.fail("C0", x)
    for x in cs:
        if -x not in cset:
            report.fail("C1", x)
            break
    for x in cs:
        for y in cs:
            if x != y and x != -y and x.support & ~y.support == 0:
                report.fail("C2", {"X": x, "Y": y})
                break
        if "C2" in report.failures:
            break
    for x in cs:
        for y in cs:
            if x == -y:
                continue
            common = x.plus & y.minus
            for e in bits(common):
                ebit = ~(1 << e)
                p = (x.plus | y.plus) & ebit
                q = (x.minus | y.minus) & ebit
                if not any(z.plus & ~p == 0 and z.minus & ~q == 0 for z in cs):
                    report.fail("C3", {"X": x, "Y": y, "e": e})
                    return report
    return report


# ---------------------------------------------------------------- the matroid

class OrientedMatroid:
    """Ground set labels plus the circuits, stored once per +- pair."""

    def __init__(self, labels: Sequence[str] | int, circuits: Iterable[SignedSet], *, validate: bool = True):
        if isinstance(labels, int):
            labels = [str(i + 1) for i in range(labels)]
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("ground set labels must be distinct")
        self.n = len(self.labels)
        if self.n > MAX_ELEMENTS:
            raise ValueError(f"at most {MAX_ELEMENTS} elements are supported, got {self.n}")
        raw = [SignedSet(*c) for c in circuits]
        if validate:
            closed = set(raw) | {-x for x in raw}
            report = validate_axioms(closed, self.n)
            if not report.ok:
                raise ValidationError(report)
        reps = {x.canonical() for x in raw if x.support}
        self.circuits: tuple[SignedSet, ...] = tuple(sorted(reps, key=circuit_sort_key))
        self.index = {x: i for i, x in enumerate(self.circuits)}

    # basic views
    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def all_circuits(self) -> tuple[SignedSet, ...]:
        out = []
        for x in self.circuits:
            out.append(x)
            out.append(-x)
        return tuple(out)

    @cached_property
    def supports(self) -> tuple[int, ...]:
        return tuple(x.support for x in self.circuits)

    def circuit_index(self, x: SignedSet) -> tuple[int, int]:
        """(index of the canonical pair, +1 or -1)."""
        c = x.canonical()
        return self.index[c], (1 if c == x else -1)

    def __eq__(self, other) -> bool:
        return isinstance(other, OrientedMatroid) and self.labels == other.labels and self.circuits == other.circuits

    def __hash__(self) -> int:
        return hash((self.labels, self.circuits))

    def same_circuits(self, other: "OrientedMatroid") -> bool:
        return self.n == other.n and self.circuits == other.circuits

    def __repr__(self) -> str:
        return f"OrientedMatroid(n={self.n}, rank={self.rank}, circuit_pairs={len(self.circuits)})"

    @cached_property
    def position(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def mask(self, items: Iterable) -> int:
        """Bitmask from labels; '1356' style strings are read one character per label."""
        if isinstance(items, str) and items not in self.position:
            items = list(items)
        return mask_of(self.position[str(it)] for it in items)

    def signed(self, plus: Iterable, minus: Iterable) -> SignedSet:
        return SignedSet(self.mask(plus), self.mask(minus))

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    # independence
    def is_independent(self, s: int) -> bool:
        return all(c & ~s for c in self.supports)

    def rank_of(self, s: int) -> int:
        indep = 0
        for i in bits(s):
            t = indep | (1 << i)
            if self.is_independent(t):
                indep = t
        return popcount(indep)

    @cached_property
    def rank(self) -> int:
        return self.rank_of(self.ground)

    @property
    def corank(self) -> int:
        return self.n - self.rank

    def corank_of(self, s: int) -> int:
        return popcount(s) - self.rank_of(s)

    def closure(self, s: int) -> int:
        r = self.rank_of(s)
        out = s
        for e in range(self.n):
            if not s >> e & 1 and self.rank_of(s | (1 << e)) == r:
                out |= 1 << e
        return out

    @cached_property
    def independent_sets(self) -> tuple[int, ...]:
        out = []

        def grow(s: int, start: int) -> None:
            out.append(s)
            for e in range(start, self.n):
                t = s | (1 << e)
                if self.is_independent(t):
                    grow(t, e + 1)

        grow(0, 0)
        return tuple(out)

    @cached_property
    def bases(self) -> tuple[int, ...]:
        r = self.rank
        return tuple(s for s in self.independent_sets if popcount(s) == r)

    # special elements
    @cached_property
    def loops(self) -> int:
        return mask_of(bits(s)[0] for s in self.supports if popcount(s) == 1)

    @cached_property
    def coloops(self) -> int:
        used = 0
        for s in self.supports:
            used |= s
        return self.ground & ~used

    @cached_property
    def parallel_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes of non-loops, merged along circuits of size two."""
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s in self.supports:
            if popcount(s) == 2:
                a, b = bits(s)
                parent[find(a)] = find(b)
        classes: dict[int, list[int]] = {}
        for e in range(self.n):
            if not self.loops >> e & 1:
                classes.setdefault(find(e), []).append(e)
        return tuple(sorted(tuple(c) for c in classes.values()))

    @property
    def is_simple(self) -> bool:
        return all(popcount(s) > 2 for s in self.supports)

    @property
    def is_uniform(self) -> bool:
        r = self.rank
        return all(popcount(s) == r + 1 for s in self.supports)

    # minors
    def _rebuild(self, labels, circuits) -> "OrientedMatroid":
        return OrientedMatroid(labels, circuits, validate=False)

    def delete(self, e: int) -> "OrientedMatroid":
        if self.coloops >> e & 1:
            raise CoLoopDeletion(f"{self.labels[e]} is a coloop")
        return self._delete(e)

    def _delete(self, e: int) -> "OrientedMatroid":
        labels = self.labels[:e] + self.labels[e + 1:]
        cs = [SignedSet(drop_bit(x.plus, e), drop_bit(x.minus, e)) for x in self.circuits if not x.support >> e & 1]
        return self._rebuild(labels, cs)

    def contract(self, e: int) -> "OrientedMatroid":
        if self.loops >> e & 1:
            raise LoopContraction(f"{self.labels[e]} is a loop")
        return self._contract(e)

    def _contract(self, e: int) -> "OrientedMatroid":
        keep = ~(1 << e)
        cand = {x.restrict(keep) for x in self.all_circuits}
        cand.discard(SignedSet(0, 0))
        sup = {x.support for x in cand}
        minimal = {s for s in sup if not any(t != s and t & ~s == 0 for t in sup)}
        labels = self.labels[:e] + self.labels[e + 1:]
        cs = [SignedSet(drop_bit(x.plus, e), drop_bit(x.minus, e)) for x in cand if x.support in minimal]
        return self._rebuild(labels, cs)

    def restrict(self, a: int) -> "OrientedMatroid":
        """M restricted to A; coloops outside A are simply dropped."""
        idx = bits(a)
        remap = {old: new for new, old in enumerate(idx)}

        def move(m):
            return mask_of(remap[i] for i in bits(m))

        cs = [SignedSet(move(x.plus), move(x.minus)) for x in self.circuits if x.support & ~a == 0]
        return self._rebuild([self.labels[i] for i in idx], cs)

    def reorient(self, a: int) -> "OrientedMatroid":
        return self._rebuild(self.labels, [x.reorient(a) for x in self.circuits])

    def relabel(self, perm: Sequence[int]) -> "OrientedMatroid":
        """Move element i to position perm[i]; labels travel with their elements."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")

        def move(m):
            return mask_of(perm[i] for i in bits(m))

        labels = [""] * self.n
        for i, p in enumerate(perm):
            labels[p] = self.labels[i]
        return self._rebuild(labels, [SignedSet(move(x.plus), move(x.minus)) for x in self.circuits])

    def with_labels(self, labels: Sequence[str]) -> "OrientedMatroid":
        return self._rebuild(labels, self.circuits)

    # duality
    @cached_property
    def hyperplanes(self) -> tuple[int, ...]:
        r = self.rank
        if r == 0:
            return ()
        seen = set()
        for s in self.independent_sets:
            if popcount(s) == r - 1:
                seen.add(self.closure(s))
        return tuple(sorted(seen))

    @cached_property
    def cocircuits(self) -> tuple[SignedSet, ...]:
        """Canonical representatives of the cocircuit pairs."""
        out = []
        for h in self.hyperplanes:
            d = self.ground & ~h
            sols = self._orthogonal_signings(d)
            if len(sols) != 1:
                raise ValueError(f"expected one sign pattern on {self.names(d)}, found {len(sols)}")
            out.append(sols[0])
        return tuple(sorted(out, key=circuit_sort_key))

    def _orthogonal_signings(self, d: int) -> list[SignedSet]:
        """All sign vectors with support d orthogonal to every circuit (up to sign)."""
        elems = bits(d)
        pairs: dict[int, list[tuple[int, int]]] = {e: [] for e in elems}
        for x in self.circuits:
            meet = x.support & d
            if popcount(meet) == 1:
                return []
            if popcount(meet) == 2:
                a, b = bits(meet)
                rel = -x.sign(a) * x.sign(b)  # D_a * D_b must equal this
                pairs[a].append((b, rel))
                pairs[b].append((a, rel))
        sols = []

        def extend(assign: dict[int, int]) -> None:
            free = [e for e in elems if e not in assign]
            if not free:
                y = signed_from_vector([assign.get(i, 0) for i in range(self.n)])
                if all(y.orthogonal(x) for x in self.circuits):
                    sols.append(y)
                return
            for s in ((1,) if not assign else (1, -1)):
                trial = dict(assign)
                trial[free[0]] = s
                stack = [free[0]]
                ok = True
                while stack and ok:
                    a = stack.pop()
                    for b, rel in pairs[a]:
                        want = trial[a] * rel
                        if b in trial:
                            if trial[b] != want:
                                ok = False
                                break
                        else:
                            trial[b] = want
                            stack.append(b)
                if ok:
                    extend(trial)

        extend({})
        return sols

    def dual(self) -> "OrientedMatroid":
        return self._rebuild(self.labels, self.cocircuits)

    # counting
    def tutte_eval(self, x: int, y: int) -> int:
        return tutte_eval(self, x, y)

    def fingerprint(self, e: int) -> tuple:
        sizes = sorted(popcount(s) for s in self.supports if s >> e & 1)
        par = next((len(c) for c in self.parallel_classes if e in c), 0)
        return (bool(self.loops >> e & 1), bool(self.coloops >> e & 1), par, tuple(sizes))


# ---------------------------------------------------------------- Tutte

def _strip(n: int, sups: frozenset[int]) -> tuple[int, int, int, frozenset[int]]:
    """Remove loops and coloops; return (#loops, #coloops, n', supports')."""
    used = 0
    loopmask = 0
    for s in sups:
        used |= s
        if popcount(s) == 1:
            loopmask |= s
    drop = ((1 << n) - 1) & ~(used & ~loopmask)
    nloops = popcount(loopmask)
    ncoloops = n - popcount(used)
    if not drop:
        return 0, 0, n, sups
    rest = []
    for s in sups:
        if s & loopmask:
            continue
        rest.append(s)
    keep = [i for i in range(n) if not drop >> i & 1]
    remap = {old: new for new, old in enumerate(keep)}
    new = frozenset(mask_of(remap[i] for i in bits(s)) for s in rest)
    return nloops, ncoloops, len(keep), new


def _tutte(n: int, sups: frozenset[int], x: int, y: int, memo: dict) -> int:
    nl, nc, n2, s2 = _strip(n, sups)
    factor = x ** nc * y ** nl
    if n2 == 0:
        return factor
    key = (n2, s2)
    if key in memo:
        return factor * memo[key]
    e = n2 - 1
    # deletion
    dele = frozenset(drop_bit(s, e) for s in s2 if not s >> e & 1)
    # contraction: minimal supports among C - e
    cand = {s & ~(1 << e) for s in s2}
    cand.discard(0)
    cont = frozenset(drop_bit(s, e) for s in cand if not any(t != s and t & ~s == 0 for t in cand))
    val = _tutte(n2 - 1, dele, x, y, memo) + _tutte(n2 - 1, cont, x, y, memo)
    memo[key] = val
    return factor * val


def tutte_eval(m: OrientedMatroid, x: int, y: int) -> int:
    """T(x, y) of the underlying matroid by deletion-contraction."""
    return _tutte(m.n, frozenset(m.supports), x, y, {})


# ---------------------------------------------------------------- isomorphism

def _parity_reorientation(pairs: list[tuple[SignedSet, SignedSet]], n: int) -> int | None:
    """Find A with reorient(X, A) = +-Y for every (X, Y); None if impossible."""
    parent = list(range(n))
    par = [0] * n

    def find(a):
        p = 0
        while parent[a] != a:
            p ^= par[a]
            a = parent[a]
        return a, p

    for x, yv in pairs:
        es = bits(x.support)
        e0 = es[0]
        d0 = 0 if x.sign(e0) == yv.sign(e0) else 1
        for f in es[1:]:
            d = 0 if x.sign(f) == yv.sign(f) else 1
            want = d0 ^ d
            ra, pa = find(e0)
            rb, pb = find(f)
            if ra == rb:
                if pa ^ pb != want:
                    return None
            else:
                parent[ra] = rb
                par[ra] = pa ^ pb ^ want
    a = 0
    for e in range(n):
        if find(e)[1]:
            a |= 1 << e
    return a


def is_isomorphic(m1: OrientedMatroid, m2: OrientedMatroid, *, witness: bool = False):
    """Bijection phi and reorientation A with reorient(relabel(m1, phi), A) == m2."""
    n = m1.n
    none = (False, None, None) if witness else False
    if n != m2.n or len(m1.circuits) != len(m2.circuits):
        return none
    if sorted(popcount(s) for s in m1.supports) != sorted(popcount(s) for s in m2.supports):
        return none
    f1 = [m1.fingerprint(e) for e in range(n)]
    f2 = [m2.fingerprint(e) for e in range(n)]
    if sorted(f1) != sorted(f2):
        return none
    sup2 = set(m2.supports)
    by_support2 = {x.support: x for x in m2.circuits}
    order = sorted(range(n), key=lambda e: (sum(1 for g in f1 if g == f1[e]), e))
    phi = [-1] * n
    used = [False] * n
    # supports of m1 become checkable once their largest element (in search order) is placed
    pos = {e: k for k, e in enumerate(order)}
    due: list[list[int]] = [[] for _ in range(n)]
    for s in m1.supports:
        due[max(pos[e] for e in bits(s))].append(s)

    def image(m: int) -> int:
        return mask_of(phi[e] for e in bits(m))

    def search(k: int):
        if k == n:
            pairs = []
            for x in m1.circuits:
                xi = SignedSet(image(x.plus), image(x.minus))
                pairs.append((xi, by_support2[xi.support]))
            a = _parity_reorientation(pairs, n)
            if a is None:
                return None
            return a
        e = order[k]
        for j in range(n):
            if used[j] or f2[j] != f1[e]:
                continue
            phi[e] = j
            used[j] = True
            if all(image(s) in sup2 for s in due[k]):
                res = search(k + 1)
                if res is not None:
                    return res
            used[j] = False
            phi[e] = -1
        return None

    a = search(0)
    if a is None:
        return none
    if not witness:
        return True
    mapping = {m1.labels[e]: m2.labels[phi[e]] for e in range(n)}
    return True, mapping, [m2.labels[i] for i in bits(a)]


def weak_map_leq(m1: OrientedMatroid, m2: OrientedMatroid) -> bool:
    """True when every circuit of m1 lies above some circuit of m2."""
    if m1.n != m2.n:
        raise ValueError("weak maps need a common ground set")
    if m1.rank != m2.rank:
        raise ValueError("weak maps are only tested between equal ranks")
    c2 = m2.all_circuits
    return all(any(y.le(x) for y in c2) for x in m1.all_circuits)


def weak_map_exists(m1: OrientedMatroid, m2: OrientedMatroid):
    """Search relabelings and reorientations of m1 for a weak map onto m2."""
    n = m1.n
    if n != m2.n or m1.rank != m2.rank:
        return None
    sup2 = m2.supports
    for perm in itertools.permutations(range(n)):
        moved = [mask_of(perm[i] for i in bits(s)) for s in m1.supports]
        if not all(any(t & ~s == 0 for t in sup2) for s in moved):
            continue
        base = m1.relabel(perm)
        for a in range(1 << (n - 1)):
            cand = base.reorient(a)
            if weak_map_leq(cand, m2):
                return list(perm), a
    return None


# ---------------------------------------------------------------- JSON helpers

def signed_to_json(x: SignedSet, labels: Sequence[str] | None = None) -> dict:
    lab = labels if labels is not None else [str(i) for i in range(64)]
    return {"plus": [lab[i] for i in bits(x.plus)], "minus": [lab[i] for i in bits(x.minus)]}


def signed_key(x: SignedSet, labels: Sequence[str]) -> str:
    """Serialized canonical signed set, e.g. '+1,3 -2'."""
    return "+" + ",".join(labels[i] for i in bits(x.plus)) + " -" + ",".join(labels[i] for i in bits(x.minus))


def matroid_to_json(m: OrientedMatroid) -> dict:
    return {"elements": list(m.labels), "circuits": [signed_to_json(x, m.labels) for x in m.circuits]}


def matroid_from_json(data: dict, *, validate: bool = True) -> OrientedMatroid:
    labels = [str(x) for x in data["elements"]]
    pos = {lab: i for i, lab in enumerate(labels)}
    cs = []
    for c in data.get("circuits", []):
        p = mask_of(pos[str(v)] for v in c.get("plus", []))
        q = mask_of(pos[str(v)] for v in c.get("minus", []))
        cs.append(SignedSet(p, q))
    return OrientedMatroid(labels, cs, validate=validate)
