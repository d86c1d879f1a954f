"""Slow but obviously correct reference computations used by the tests."""
from __future__ import annotations

import itertools

from omsep.core import OrientedMatroid, SignedSet, bits
from omsep.separation import classify_pattern, corank2_circuit_cycle, corank2_subsets, sign_value


def brute_colocalizations(m: OrientedMatroid) -> list[tuple[int, ...]]:
    """Every total sign map, keeping those whose cycle on each corank-2 set is Type III."""
    cycles = [corank2_circuit_cycle(m, a) for a in corank2_subsets(m)]
    out = []
    for sigma in itertools.product((1, -1), repeat=len(m.circuits)):
        if all(classify_pattern([sign_value(m, sigma, x) for x in cyc]) == "III" for cyc in cycles):
            out.append(sigma)
    return out


def brute_separated(m: OrientedMatroid, i: int, j: int) -> bool:
    """Scan every signed subset of the ground set, not just the stored circuits."""
    circs = set(m.all_circuits)
    a, b = i & ~j, j & ~i
    for p in _subsets(a):
        for q in _subsets(b):
            if SignedSet(p, q) in circs:
                return False
    return True


def _subsets(mask: int):
    idx = bits(mask)
    for k in range(len(idx) + 1):
        for c in itertools.combinations(idx, k):
            yield sum(1 << e for e in c)


def brute_max_cliques_sizes(m: OrientedMatroid) -> set[int]:
    """Sizes of inclusion-maximal separated collections by extending greedily from every pair order.

    Only used on tiny ground sets: enumerates all separated collections directly.
    """
    n = 1 << m.n
    sep = [[brute_separated(m, i, j) for j in range(n)] for i in range(n)]
    sizes = set()

    def grow(cur: list[int], start: int):
        maximal = True
        for v in range(n):
            if v in cur:
                continue
            if all(sep[v][u] for u in cur):
                maximal = False
                if v >= start:
                    grow(cur + [v], v + 1)
        if maximal:
            sizes.add(len(cur))

    grow([], 0)
    return sizes


def chord_separated(i: int, j: int) -> bool:
    """No a < b < c < d alternating between I-J and J-I."""
    return not _alternates(i & ~j, j & ~i, 4) and not _alternates(j & ~i, i & ~j, 4)


def strongly_separated(i: int, j: int) -> bool:
    """No a < b < c with a, c on one side of the difference and b on the other."""
    return not _alternates(i & ~j, j & ~i, 3) and not _alternates(j & ~i, i & ~j, 3)


def _alternates(a: int, b: int, length: int) -> bool:
    """Is there an increasing sequence of the given length taken from a, b, a, b, ...?"""
    want = 0
    for e in range(max(a | b, 1).bit_length()):
        side = a if want % 2 == 0 else b
        if side >> e & 1:
            want += 1
            if want == length:
                return True
    return False
