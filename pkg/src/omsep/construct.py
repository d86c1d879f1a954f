"""Builders: alternating matroids, vector and digraph matroids, chirotopes,
positive orientability and the small rank-3 census."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core import OrientedMatroid, SignedSet, bits, mask_of, popcount, signed_from_vector, validate_axioms
from .errors import ResourceLimit, ValidationError

MAX_CYCLES = 10 ** 6


# ---------------------------------------------------------------- exact linear algebra

def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [list(r) for r in rows]
    pivots = []
    if not a:
        return a, pivots
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def matrix_rank(cols: Sequence[Sequence[Fraction]]) -> int:
    if not cols:
        return 0
    rows = [list(r) for r in zip(*cols)]
    return len(_row_reduce(rows)[1])


def kernel_vector(cols: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """A nonzero vector in the kernel of the matrix whose columns are given; assumes nullity one."""
    rows = [list(r) for r in zip(*cols)]
    red, piv = _row_reduce(rows)
    k = len(cols)
    free = [c for c in range(k) if c not in piv]
    f = free[0]
    x = [Fraction(0)] * k
    x[f] = Fraction(1)
    for row, pc in zip(red, piv):
        x[pc] = -row[f]
    return x


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [vi - f * vc for vi, vc in zip(a[i], a[c])]
    return d


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------- data types

@dataclass(frozen=True)
class VectorConfiguration:
    dimension: int
    columns: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    @classmethod
    def make(cls, columns: Iterable[Iterable], labels: Sequence[str] | None = None) -> "VectorConfiguration":
        cols = tuple(tuple(Fraction(v) for v in c) for c in columns)
        if not cols:
            raise ValueError("empty configuration")
        d = len(cols[0])
        if any(len(c) != d for c in cols):
            raise ValueError("all vectors must have the same dimension")
        labs = tuple(labels) if labels is not None else tuple(str(i + 1) for i in range(len(cols)))
        return cls(d, cols, labs)

    @classmethod
    def affine(cls, points: Iterable[Iterable], labels: Sequence[str] | None = None) -> "VectorConfiguration":
        """Points in the plane (or any affine space), homogenized with a last coordinate 1."""
        return cls.make([tuple(Fraction(v) for v in p) + (Fraction(1),) for p in points], labels)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "columns": [[str(v) for v in c] for c in self.columns],
                "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict) -> "VectorConfiguration":
        cols = [[Fraction(str(v)) for v in c] for c in data["columns"]]
        vc = cls.make(cols, data.get("labels"))
        if "dimension" in data and data["dimension"] != vc.dimension:
            raise ValueError("dimension field does not match the columns")
        return vc


@dataclass(frozen=True)
class DirectedGraph:
    vertices: int
    edges: tuple[tuple[str, int, int], ...]  # (label, tail, head)

    @classmethod
    def make(cls, vertices: int, edges: Iterable[tuple]) -> "DirectedGraph":
        es = []
        for k, e in enumerate(edges):
            if len(e) == 2:
                lab, t, h = str(k + 1), e[0], e[1]
            else:
                lab, t, h = str(e[0]), e[1], e[2]
            if not (0 <= t < vertices and 0 <= h < vertices):
                raise ValueError(f"edge {lab} has an endpoint outside 0..{vertices - 1}")
            es.append((lab, int(t), int(h)))
        return cls(vertices, tuple(es))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.edges)

    def to_json(self) -> dict:
        return {"vertices": self.vertices,
                "edges": [{"label": lab, "tail": t, "head": h} for lab, t, h in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "DirectedGraph":
        return cls.make(data["vertices"], [(e["label"], e["tail"], e["head"]) for e in data["edges"]])


# ---------------------------------------------------------------- families

def alternating(n: int, d: int) -> OrientedMatroid:
    """C^{n,d}: circuits (I_odd, I_even) for every (d+1)-subset I."""
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n")
    cs = [SignedSet(mask_of(i[0::2]), mask_of(i[1::2])) for i in itertools.combinations(range(n), d + 1)]
    return OrientedMatroid(n, cs, validate=False)


def free(n: int) -> OrientedMatroid:
    return OrientedMatroid(n, [], validate=False)


def from_vectors(v: VectorConfiguration) -> OrientedMatroid:
    """Circuits from minimal dependent subsets and the sign of their unique dependence."""
    cols = v.columns
    n = len(cols)
    found: list[SignedSet] = []
    sups: list[int] = []
    r = matrix_rank(cols)
    for k in range(1, r + 2):
        for sub in itertools.combinations(range(n), k):
            m = mask_of(sub)
            if any(s & ~m == 0 for s in sups):
                continue
            sel = [cols[i] for i in sub]
            if matrix_rank(sel) == k:
                continue
            coef = kernel_vector(sel)
            vec = [0] * n
            for i, c in zip(sub, coef):
                vec[i] = _sgn(c)
            found.append(signed_from_vector(vec))
            sups.append(m)
    return OrientedMatroid(v.labels, found, validate=False)


def simple_cycles(g: DirectedGraph, limit: int = MAX_CYCLES) -> list[list[tuple[int, int]]]:
    """Simple cycles of the underlying multigraph as lists of (edge index, +1 forward / -1 backward)."""
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(g.vertices)]
    out = []
    for k, (_, t, h) in enumerate(g.edges):
        if t == h:
            out.append([(k, 1)])
            continue
        adj[t].append((h, k, 1))
        adj[h].append((t, k, -1))
    for s in range(g.vertices):
        path: list[tuple[int, int]] = []
        on_path = {s}

        def dfs(u: int) -> None:
            for w, k, d in adj[u]:
                if path and k == path[-1][0]:
                    continue
                if w == s and path:
                    if path[0][0] < k:  # keep one of the two traversal directions
                        out.append(path + [(k, d)])
                        if len(out) > limit:
                            raise ResourceLimit(f"more than {limit} cycles")
                    continue
                if w > s and w not in on_path:
                    on_path.add(w)
                    path.append((k, d))
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    return out


def from_digraph(g: DirectedGraph) -> OrientedMatroid:
    """Graphical oriented matroid: one circuit per simple cycle, signed by agreement with the edges."""
    cs = []
    for cyc in simple_cycles(g):
        vec = [0] * len(g.edges)
        for k, d in cyc:
            vec[k] = d
        cs.append(signed_from_vector(vec))
    return OrientedMatroid(g.labels, cs, validate=False)


def corank2_family(alpha: Sequence[int]) -> OrientedMatroid:
    """Dual of the acyclic rank-2 configuration with parallel classes of sizes alpha in affine order."""
    if any(a < 1 or a > 3 for a in alpha):
        raise ValueError("composition parts must lie in 1..3")
    if len(alpha) < 2:
        raise ValueError("need at least two parallel classes")
    cols = []
    for pos, a in enumerate(alpha):
        cols.extend([(Fraction(1), Fraction(pos))] * a)
    rank2 = from_vectors(VectorConfiguration.make(cols))
    return rank2.dual()


# ---------------------------------------------------------------- chirotopes

class Chirotope:
    """Signs on sorted r-subsets in lexicographic order, extended by alternation."""

    def __init__(self, n: int, r: int, signs: Sequence[int]):
        self.n = n
        self.r = r
        self.subsets = list(itertools.combinations(range(n), r))
        if len(signs) != len(self.subsets):
            raise ValueError("one sign per r-subset expected")
        self.signs = tuple(int(s) for s in signs)
        if r > 0 and not any(self.signs):
            raise ValueError("a chirotope of positive rank is not identically zero")
        self.pos = {s: i for i, s in enumerate(self.subsets)}

    def __call__(self, tup: Sequence[int]) -> int:
        if len(set(tup)) < len(tup):
            return 0
        order = sorted(range(len(tup)), key=lambda i: tup[i])
        inv = 0
        for i in range(len(order)):
            for j in range(i + 1, len(order)):
                if order[i] > order[j]:
                    inv += 1
        s = self.signs[self.pos[tuple(sorted(tup))]]
        return -s if inv % 2 else s

    def __eq__(self, other) -> bool:
        return isinstance(other, Chirotope) and (self.n, self.r, self.signs) == (other.n, other.r, other.signs)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.signs))

    def negated(self) -> "Chirotope":
        return Chirotope(self.n, self.r, [-s for s in self.signs])

    def string(self) -> str:
        return "".join({1: "+", -1: "-", 0: "0"}[s] for s in self.signs)


def chirotope_from_vectors(v: VectorConfiguration) -> Chirotope:
    cols = v.columns
    n, d = len(cols), v.dimension
    if matrix_rank(cols) != d:
        raise ValueError("chirotopes need a full-rank configuration")
    signs = [_sgn(det([cols[i] for i in sub])) for sub in itertools.combinations(range(n), d)]
    return Chirotope(n, d, signs)


def circuits_from_chirotope(chi: Chirotope, labels: Sequence[str] | None = None) -> OrientedMatroid:
    """Circuit on each (r+1)-subset: X_{i_k} = (-1)^k chi(subset minus i_k)."""
    n, r = chi.n, chi.r
    found = set()
    for sub in itertools.combinations(range(n), r + 1):
        vec = [0] * n
        for k, i in enumerate(sub):
            rest = sub[:k] + sub[k + 1:]
            vec[i] = (-1) ** k * chi.signs[chi.pos[rest]]
        x = signed_from_vector(vec)
        if x.support:
            found.add(x.canonical())
    sups = {x.support for x in found}
    minimal = [x for x in found if not any(t != x.support and t & ~x.support == 0 for t in sups)]
    return OrientedMatroid(labels if labels is not None else n, minimal, validate=False)


def chirotope_of(m: OrientedMatroid) -> Chirotope:
    """Recover the chirotope (up to global sign) by walking the basis graph."""
    r, n = m.rank, m.n
    subsets = list(itertools.combinations(range(n), r))
    pos = {s: i for i, s in enumerate(subsets)}
    signs = [0] * len(subsets)
    if r == 0:
        return Chirotope(n, 0, [1])
    bases = [tuple(bits(b)) for b in m.bases]
    start = bases[0]
    signs[pos[start]] = 1
    queue = [start]
    by_support = {x.support: x for x in m.circuits}
    while queue:
        b = queue.pop()
        bm = mask_of(b)
        sb = signs[pos[b]]
        for f in range(n):
            if bm >> f & 1:
                continue
            # fundamental circuit of f in b
            c = next(x for s, x in by_support.items() if s >> f & 1 and s & ~(bm | 1 << f) == 0)
            for e in bits(c.support & bm):
                new = tuple(f if i == e else i for i in b)
                val = -c.sign(e) * c.sign(f) * sb
                # sort the tuple with f in e's slot, tracking the sign
                srt = tuple(sorted(new))
                inv = sum(1 for i in range(r) for j in range(i + 1, r) if new[i] > new[j])
                val = -val if inv % 2 else val
                k = pos[srt]
                if signs[k] == 0:
                    signs[k] = val
                    queue.append(srt)
                elif signs[k] != val:
                    raise ValueError("circuit signs are not consistent with any chirotope")
    return Chirotope(n, r, signs)


def is_positively_orientable(m: OrientedMatroid, *, witness: bool = False):
    """Is some relabeling plus reorientation of m a positroid (all chirotope values in {0,+})?"""
    chi = chirotope_of(m)
    n, r = m.n, m.rank
    basis_tuples = [tuple(bits(b)) for b in m.bases]
    for perm in itertools.permutations(range(n)):
        # element i sits at position perm[i] of the new order
        rows = []
        for b in basis_tuples:
            new = tuple(perm[i] for i in b)
            inv = sum(1 for i in range(r) for j in range(i + 1, r) if new[i] > new[j])
            s = chi.signs[chi.pos[b]] * (-1 if inv % 2 else 1)
            # reorientation bits a_i for i in b, plus a global sign bit t: sum = [s < 0]
            rows.append((mask_of(b) | (1 << n), 1 if s < 0 else 0))
        sol = _gf2_solve(rows, n + 1)
        if sol is not None:
            if not witness:
                return True
            order = [m.labels[i] for i in sorted(range(n), key=lambda i: perm[i])]
            return True, order, m.names(sol & m.ground)
    return (False, None, None) if witness else False


def _gf2_solve(rows: list[tuple[int, int]], nvars: int) -> int | None:
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        while mask:
            top = mask.bit_length() - 1
            if top not in pivots:
                pivots[top] = (mask, rhs)
                break
            pm, pr = pivots[top]
            mask ^= pm
            rhs ^= pr
        else:
            if rhs:
                return None
    sol = 0
    for top in sorted(pivots):
        pm, pr = pivots[top]
        val = pr ^ (popcount(pm & sol & ~(1 << top)) & 1)
        if val:
            sol |= 1 << top
    return sol


def on_convex_boundary(points: Sequence[Sequence[Fraction]]) -> bool:
    """Do all planar points lie on the boundary of their convex hull?"""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    for i, p in enumerate(pts):
        # p is on the boundary iff some line through p has every other point weakly on one side
        others = [q for j, q in enumerate(pts) if j != i and q != p]
        if not others:
            continue
        ok = False
        for q in others:
            dx, dy = q[0] - p[0], q[1] - p[1]
            sides = {_sgn(dx * (s[1] - p[1]) - dy * (s[0] - p[0])) for s in others}
            if not (1 in sides and -1 in sides):
                ok = True
                break
        if not ok:
            return False
    return True


# ---------------------------------------------------------------- census

def _gp_relations(n: int) -> list[tuple[tuple[int, int], tuple[int, int], tuple[int, int], tuple[int, int, int]]]:
    """Three-term Grassmann-Pluecker relations for rank 3 as index pairs with sign offsets.

    For a and b<c<d<e (a outside), the terms chi(abc)chi(ade), -chi(abd)chi(ace), chi(abe)chi(acd)
    either contain both signs or all vanish."""
    subs = list(itertools.combinations(range(n), 3))
    pos = {s: i for i, s in enumerate(subs)}

    def ref(t):
        srt = tuple(sorted(t))
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if t[i] > t[j])
        return pos[srt], (-1 if inv % 2 else 1)

    rels = []
    for a in range(n):
        rest = [x for x in range(n) if x != a]
        for b, c, d, e in itertools.combinations(rest, 4):
            terms = []
            for (p, q), (u, v), sgn in (((b, c), (d, e), 1), ((b, d), (c, e), -1), ((b, e), (c, d), 1)):
                i1, s1 = ref((a, p, q))
                i2, s2 = ref((a, u, v))
                terms.append((i1, i2, s1 * s2 * sgn))
            rels.append(tuple(terms))
    return rels


def _is_matroid_bases(n: int, bases: list[int]) -> bool:
    bs = set(bases)
    for b1 in bases:
        for b2 in bases:
            for e in bits(b1 & ~b2):
                if not any((b1 & ~(1 << e)) | (1 << f) in bs for f in bits(b2 & ~b1)):
                    return False
    return True


class _CanonicalForms:
    """Vectorized canonical form of rank-3 chirotopes under relabeling, reorientation and sign."""

    def __init__(self, n: int):
        subs = list(itertools.combinations(range(n), 3))
        pos = {s: i for i, s in enumerate(subs)}
        perms = list(itertools.permutations(range(n)))
        idx = np.zeros((len(perms), len(subs)), dtype=np.int64)
        sgn = np.ones((len(perms), len(subs)), dtype=np.int64)
        for p, perm in enumerate(perms):
            inv_perm = [0] * n
            for i, v in enumerate(perm):
                inv_perm[v] = i
            # new chirotope at sorted subset s equals old chirotope at the preimage tuple
            for k, s in enumerate(subs):
                t = tuple(inv_perm[v] for v in s)
                srt = tuple(sorted(t))
                inv = sum(1 for i in range(3) for j in range(i + 1, 3) if t[i] > t[j])
                idx[p, k] = pos[srt]
                sgn[p, k] = -1 if inv % 2 else 1
        reo = np.ones((1 << n, len(subs)), dtype=np.int64)
        for a in range(1 << n):
            for k, s in enumerate(subs):
                if sum((a >> v) & 1 for v in s) % 2:
                    reo[a, k] = -1
        self.idx, self.sgn, self.reo = idx, sgn, reo
        self.weights = 3 ** np.arange(len(subs) - 1, -1, -1, dtype=np.int64)

    def code(self, signs: Sequence[int]) -> int:
        return int(((np.asarray(signs, dtype=np.int64) + 1) * self.weights).sum())

    def orbit(self, signs: Sequence[int]) -> np.ndarray:
        """Codes of every relabeled and reoriented copy."""
        chi = np.asarray(signs, dtype=np.int64)
        permuted = chi[self.idx] * self.sgn  # (perms, subsets)
        allv = permuted[:, None, :] * self.reo[None, :, :]
        return ((allv + 1) * self.weights).sum(axis=2).ravel()

    def key(self, signs: Sequence[int]) -> int:
        return int(self.orbit(signs).min())


def census_rank3_simple(n: int, *, validate: bool = True) -> list[OrientedMatroid]:
    """One simple rank-3 oriented matroid on n elements per isomorphism class."""
    if n > 7:
        raise ResourceLimit("the census is limited to n <= 7")
    if n < 3:
        return []
    subs = list(itertools.combinations(range(n), 3))
    nsub = len(subs)
    rels = _gp_relations(n)
    by_pos: list[list] = [[] for _ in range(nsub)]
    for rel in rels:
        last = max(max(i1, i2) for i1, i2, _ in rel)
        by_pos[last].append(rel)
    # normalization: {0,1,2} is a basis with chi = +; for k >= 3 the first nonzero of
    # chi(01k), chi(02k), chi(12k) is + (reorient k)
    firsts = {}
    for k in range(3, n):
        firsts[k] = [subs.index(t) for t in ((0, 1, k), (0, 2, k), (1, 2, k))]
    forms = _CanonicalForms(n)
    chi = [0] * nsub
    classes: dict[int, list[int]] = {}
    seen: set[int] = set()
    masks = [mask_of(s) for s in subs]

    def consistent(p: int) -> bool:
        for rel in by_pos[p]:
            vals = [chi[i1] * chi[i2] * s for i1, i2, s in rel]
            if (1 in vals) != (-1 in vals):
                return False
        for k, trio in firsts.items():
            if p in trio:
                upto = [chi[i] for i in trio if i <= p]
                nz = [v for v in upto if v]
                if nz and nz[0] != 1:
                    return False
                if len(upto) == 3 and not nz:
                    return False
        return True

    def leaf() -> None:
        code = forms.code(chi)
        if code in seen:
            return
        bases = [masks[i] for i in range(nsub) if chi[i]]
        covered = 0
        for b in bases:
            covered |= b
        if covered != (1 << n) - 1:
            return
        for e, f in itertools.combinations(range(n), 2):
            if not any(b >> e & 1 and b >> f & 1 for b in bases):
                return  # e, f parallel
        if not _is_matroid_bases(n, bases):
            return
        orbit = forms.orbit(chi)
        classes[int(orbit.min())] = list(chi)
        seen.update(orbit.tolist())

    def search(p: int) -> None:
        if p == nsub:
            leaf()
            return
        options = (1,) if p == 0 else (1, -1, 0)
        for v in options:
            chi[p] = v
            if consistent(p):
                search(p + 1)
        chi[p] = 0

    search(0)
    out = []
    for key in sorted(classes):
        m = circuits_from_chirotope(Chirotope(n, 3, classes[key]))
        if validate:
            rep = validate_axioms(m.all_circuits, n)
            if not rep.ok:
                raise ValidationError(rep)
        out.append(m)
    return out


# ---------------------------------------------------------------- named configurations

def _f(s: str) -> Fraction:
    return Fraction(s)


# Planar point data for the nine non-positively-oriented six-element rank-3 classes:
# coordinates (exact), the bad circuit as (plus, minus) labels and the bad collection.
NON_POSITROID_FIGURES: dict[str, dict] = {
    "IC(6,3,13)": {"points": [(0, 0), (4, 0), (3, 2), (2, 4), (1, 2), (2, _f("4/3"))],
                   "circuit": ("6", "124"), "collection": ["456", "1356", "2345", "12346"]},
    "IC(6,3,12)": {"points": [(0, 0), (4, 0), (4, 2), (0, 4), (0, 2), (2, 2)],
                   "circuit": ("6", "134"), "collection": ["13", "126", "1245", "2356"]},
    "IC(6,3,10)": {"points": [(0, 0), (4, 0), (4, _f("8/3")), (2, 4), (0, _f("8/3")), (2, _f("4/3"))],
                   "circuit": ("6", "124"), "collection": ["24", "346", "2356", "1345"]},
    "IC(6,3,9)": {"points": [(0, 0), (_f("8/3"), 0), (4, 0), (_f("8/3"), 4), (_f("4/3"), 4), (_f("4/3"), 2)],
                  "circuit": ("6", "135"), "collection": ["35", "346", "1234", "2456"]},
    "IC(6,3,6)": {"points": [(0, 0), (2, 0), (4, 1), (2, 4), (0, 1), (2, 2)],
                  "circuit": ("6", "134"), "collection": ["13", "126", "2356", "1245"]},
    "IC(6,3,5)": {"points": [(0, 0), (4, 0), (4, 2), (2, 4), (0, 2), (2, 2)],
                  "circuit": ("6", "245"), "collection": ["25", "126", "1356", "1234"]},
    "IC(6,3,3)": {"points": [(0, 0), (4, 0), (4, 3), (2, 4), (0, 3), (2, _f("0.7"))],
                  "circuit": ("6", "124"), "collection": ["14", "456", "125", "1356"]},
    "IC(6,3,2)": {"points": [(0, 0), (4, 0), (4, _f("4/3")), (2, 4), (0, _f("4/3")), (2, _f("8/3"))],
                  "circuit": ("6", "245"), "collection": ["56", "24", "345", "1346"]},
    "IC(6,3,1)": {"points": [(_f("-1.90"), _f("-0.62")), (0, -2), (_f("1.90"), _f("-0.62")),
                             (_f("1.18"), _f("1.62")), (_f("-1.18"), _f("1.62")), (0, 0)],
                  "circuit": ("6", "124"), "collection": ["14", "26", "2345", "1356"]},
}


def figure_matroid(name: str) -> OrientedMatroid:
    pts = NON_POSITROID_FIGURES[name]["points"]
    return from_vectors(VectorConfiguration.affine(pts, [str(i + 1) for i in range(len(pts))]))


def pentagon_cone() -> OrientedMatroid:
    """Regular pentagon plus its center, homogenized; exact rational stand-in for the irrational figure."""
    return figure_matroid("IC(6,3,1)")


def regular_pentagon_float_chirotope() -> list[int]:
    """Chirotope signs of the float regular pentagon (k*72 degrees) plus center, for cross-checking."""
    import math
    pts = [(math.cos(math.radians(72 * k)), math.sin(math.radians(72 * k)), 1.0) for k in range(1, 6)]
    pts.append((0.0, 0.0, 1.0))
    out = []
    for sub in itertools.combinations(range(6), 3):
        d = float(np.linalg.det(np.array([pts[i] for i in sub])))
        if abs(d) < 1e-9:
            out.append(0)
        else:
            out.append(1 if d > 0 else -1)
    return out
