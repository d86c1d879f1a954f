import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_colocalizations, brute_separated, chord_separated, strongly_separated
from omsep.construct import alternating
from omsep.core import OrientedMatroid, SignedSet
from omsep.separation import (SeparationClash, classify_pattern, collection_contract, collection_delete,
                              collection_from_topes, collection_of, corank2_circuit_cycle, corank2_subsets,
                              epsilon_profile, epsilon_rule_holds, is_collection_separated, is_colocalization,
                              is_colocalization_gp, is_pair_separated, lifting_circuits, pad, sigma_of,
                              sign_value, split_sizes, weakly_separated)
from omsep.tilings import enumerate_colocalizations, max_by_size_collections

MODELS = [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4)]


def _masks(m, names):
    return [m.mask(s) for s in names]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(MODELS), st.data())
def test_pair_separation_matches_brute_force(nd, data):
    m = alternating(*nd)
    full = (1 << m.n) - 1
    i, j = data.draw(st.integers(0, full)), data.draw(st.integers(0, full))
    assert is_pair_separated(m, i, j) == brute_separated(m, i, j)
    assert is_pair_separated(m, i, j) == is_pair_separated(m, j, i)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_strong_and_chord_separation(n):
    c2, c3 = alternating(n, 2), alternating(n, 3)
    for i in range(1 << n):
        for j in range(i):
            assert is_pair_separated(c2, i, j) == strongly_separated(i, j)
            assert is_pair_separated(c3, i, j) == chord_separated(i, j)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_weak_separation_via_padding(n):
    m = alternating(2 * n, 3)
    for i in range(1 << n):
        for j in range(i):
            assert weakly_separated(i, j) == is_pair_separated(m, pad(i, n), pad(j, n))
            if bin(i).count("1") == bin(j).count("1"):
                assert weakly_separated(i, j) == chord_separated(i, j)


def test_pad_shape():
    assert pad(0b011, 3) == 0b100011
    assert pad(0, 3) == 0b111000


def test_clash_reports_the_circuit():
    m = alternating(4, 2)
    sets = _masks(m, ["2", "13"])
    ok, (pos, neg, x) = is_collection_separated(m, sets, witness=True)
    assert not ok
    with pytest.raises(SeparationClash) as err:
        sigma_of(m, sets)
    assert set(err.value.pair) == {pos, neg}
    assert err.value.circuit == x


# ---------------------------------------------------------------- minors of collections

S = ["", "1", "3", "5", "12", "13", "35", "123", "134", "135", "345", "1234", "1345", "2345", "12345"]


def test_deletion_contraction_example():
    m = alternating(5, 2)
    s = _masks(m, S)
    e = m.position["4"]
    rest = OrientedMatroid(["1", "2", "3", "5"], [])
    assert collection_delete(s, e) == tuple(sorted(_masks(rest, ["", "1", "3", "5", "12", "13", "35", "123",
                                                                  "135", "235", "1235"])))
    assert collection_contract(s, e) == tuple(sorted(_masks(rest, ["13", "35", "123", "135"])))
    assert split_sizes(s, e) == (15, 11, 4)


@settings(max_examples=100)
@given(st.sets(st.integers(0, 63)), st.integers(0, 5))
def test_splitting_counts_any_collection(sets, e):
    n, d, c = split_sizes(sets, e)
    assert n == d + c


# ---------------------------------------------------------------- corank 2

@pytest.mark.parametrize("nd", MODELS)
def test_corank2_cycles_are_antipodal(nd):
    m = alternating(*nd)
    for a in corank2_subsets(m):
        cyc = corank2_circuit_cycle(m, a)
        k = len(cyc) // 2
        assert len(cyc) % 2 == 0 and k >= 2
        assert all(cyc[i + k] == -cyc[i] for i in range(k))
        # neighbours are conformal
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            assert not x.separates(y)


def test_uniform_corank2_cycle_length():
    # a corank-2 restriction of a uniform matroid has rank+2 elements and rank+2 circuit pairs
    m = alternating(5, 2)
    for a in corank2_subsets(m):
        assert bin(a).count("1") == 4
        assert len(corank2_circuit_cycle(m, a)) == 8


@pytest.mark.parametrize("values, kind", [
    ((1, 1, -1, -1), "III"),
    ((-1, 1, 1, -1), "III"),
    ((1, 0, -1, 0), "II"),
    ((0, 1, 0, -1), "II"),
    ((0, 0, 0, 0), "I"),
    ((1, -1, 1, -1), None),
    ((1, 1, 0, -1, -1, 0), "II"),
    ((1, 1, 1, -1, -1, -1), "III"),
    ((1, 0, 1, -1, 0, -1), None),
])
def test_classify_pattern(values, kind):
    assert classify_pattern(list(values)) == kind


@pytest.mark.parametrize("nd", [(4, 2), (5, 2), (5, 3), (6, 4)])
def test_colocalizations_match_brute_force(nd):
    m = alternating(*nd)
    got = sorted(enumerate_colocalizations(m))
    assert got == sorted(brute_colocalizations(m))
    assert all(is_colocalization_gp(m, s) and is_colocalization(m, s) for s in got)


# ---------------------------------------------------------------- liftings and S(sigma)

@pytest.mark.parametrize("nd", [(4, 2), (5, 2), (5, 3)])
def test_lifting_axioms_and_topes(nd):
    m = alternating(*nd)
    for sigma in enumerate_colocalizations(m):
        lift = lifting_circuits(m, sigma)  # validates the circuit axioms
        assert lift.n == m.n + 1 and lift.rank == m.rank + 1
        assert lift.contract(m.n).same_circuits(m)
        assert collection_from_topes(m, sigma, lift) == collection_of(m, sigma)
        assert sigma_of(m, collection_of(m, sigma)) == tuple(sigma)


@st.composite
def separated_collection(draw, m):
    out = []
    for s in draw(st.lists(st.integers(0, (1 << m.n) - 1), max_size=20)):
        if all(is_pair_separated(m, s, t) for t in out):
            out.append(s)
    return out


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(5, 2), (5, 3), (6, 3)]).flatmap(
    lambda nd: st.tuples(st.just(nd), separated_collection(alternating(*nd)))))
def test_collection_sits_inside_its_sign_map(case):
    nd, sets = case
    m = alternating(*nd)
    assert is_collection_separated(m, sets)
    sigma = sigma_of(m, sets)
    assert set(sets) <= set(collection_of(m, sigma))
    for x, v in zip(m.circuits, sigma):
        assert sign_value(m, sigma, -x) == -v


# ---------------------------------------------------------------- epsilon

def test_epsilon_examples():
    n = 4
    m = alternating(n, 2).dual()
    assert epsilon_profile(_masks(m, [""]), n) == (1, 0, 0, 0)
    assert epsilon_profile(_masks(m, ["1234"]), n) == (-1, 0, 0, 0)
    assert epsilon_profile(_masks(m, ["1", "4"]), n) == (0, 1, 0, -1)
    assert epsilon_profile([], n) == (0, 0, 0, 0)
    with pytest.raises(SeparationClash):
        epsilon_profile(_masks(m, ["12", "34"]), n)


@pytest.mark.parametrize("eps, ok", [
    ((1, 1, 0, -1), True),
    ((1, 1, 1, -1), False),
    ((1, -1, 0, 0), False),
    ((1, 0, 0, 1), False),
    ((0, 0, 0, 0), True),
    ((1, 0, -1, 0), True),
])
def test_epsilon_rule_examples(eps, ok):
    assert epsilon_rule_holds(eps) == ok


@pytest.mark.parametrize("n", [4, 5, 6])
def test_epsilon_rule_on_maximal_collections(n):
    m = alternating(n, 2).dual()
    count = 0
    for sets in max_by_size_collections(m):
        assert epsilon_rule_holds(epsilon_profile(sets, n))
        count += 1
    assert count > 0


def test_separated_circuit_pair_is_rejected():
    x = SignedSet(0b01, 0b10)
    assert x.separates(-x)
