from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from omsep import construct
from omsep.construct import (VectorConfiguration, alternating, chirotope_from_vectors, chirotope_of,
                             circuits_from_chirotope, corank2_family, figure_matroid, from_vectors, matrix_rank,
                             pentagon_cone)
from omsep.core import is_isomorphic, validate_axioms
from omsep.graphsep import complete_bipartite

cols = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=4, max_size=6)


def test_moment_curve_is_alternating():
    vc = VectorConfiguration.make([(1, t, t * t) for t in range(1, 6)])
    assert from_vectors(vc).same_circuits(alternating(5, 3))
    vc2 = VectorConfiguration.make([(1, t) for t in range(1, 6)])
    assert from_vectors(vc2).same_circuits(alternating(5, 2))


@settings(max_examples=30, deadline=None)
@given(cols, st.data())
def test_column_scaling_and_negation(cs, data):
    vc = VectorConfiguration.make(cs)
    assume(all(any(v) for v in cs))
    m = from_vectors(vc)
    k = data.draw(st.integers(0, len(cs) - 1))
    scale = Fraction(data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5)))
    scaled = [list(c) for c in vc.columns]
    scaled[k] = [v * scale for v in scaled[k]]
    assert from_vectors(VectorConfiguration.make(scaled)).same_circuits(m)
    scaled[k] = [-v for v in scaled[k]]
    assert from_vectors(VectorConfiguration.make(scaled)).same_circuits(m.reorient(1 << k))


@settings(max_examples=30, deadline=None)
@given(cols)
def test_vector_matroids_satisfy_axioms_and_chirotope_round_trip(cs):
    vc = VectorConfiguration.make(cs)
    m = from_vectors(vc)
    assert validate_axioms(m.all_circuits, m.n).ok
    assert m.rank == matrix_rank(vc.columns)
    assume(m.rank == 3)
    chi = chirotope_from_vectors(vc)
    assert circuits_from_chirotope(chi).same_circuits(m)
    got = chirotope_of(m)
    assert got == chi or got == chi.negated()


def test_chirotope_alternation():
    chi = chirotope_from_vectors(VectorConfiguration.make([(1, t, t * t) for t in range(1, 5)]))
    assert chi((0, 1, 2)) == 1
    assert chi((1, 0, 2)) == -1
    assert chi((0, 0, 2)) == 0


def test_figure_matroids():
    for name, fig in construct.NON_POSITROID_FIGURES.items():
        m = figure_matroid(name)
        assert m.rank == 3 and m.n == 6 and m.is_simple, name
        assert not construct.is_positively_orientable(m), name


def test_pentagon_cone_matches_float_pentagon():
    signs = list(chirotope_of(pentagon_cone()).signs)
    ref = construct.regular_pentagon_float_chirotope()
    assert signs == ref or [-s for s in signs] == ref
    assert is_isomorphic(pentagon_cone(), figure_matroid("IC(6,3,1)"))


def test_positroid_recognition():
    assert construct.is_positively_orientable(alternating(6, 3))
    ok, order, flips = construct.is_positively_orientable(alternating(6, 3).reorient(0b101), witness=True)
    assert ok and sorted(order) == ["1", "2", "3", "4", "5", "6"]


def test_convex_boundary_criterion():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert construct.on_convex_boundary([tuple(map(Fraction, p)) for p in square])
    inner = square + [(Fraction(1, 2), Fraction(1, 2))]
    assert not construct.on_convex_boundary([tuple(map(Fraction, p)) for p in inner])


@pytest.mark.parametrize("alpha, other", [((1, 1, 1, 1, 1, 1), "C64"), ((2, 2, 2), "K23")])
def test_corank2_family_models(alpha, other):
    m = corank2_family(alpha)
    ref = alternating(6, 4) if other == "C64" else complete_bipartite(2, 3).matroid()
    assert m.rank == 4 and m.corank == 2
    assert is_isomorphic(m, ref)


def test_corank2_family_rejects_bad_parts():
    with pytest.raises(ValueError):
        corank2_family((4, 1))
    with pytest.raises(ValueError):
        corank2_family((2,))


def test_census_small():
    # four points of rank 3: general position or three on a line
    assert len(construct.census_rank3_simple(4)) == 2


def test_census_six_classes_are_distinct():
    classes = construct.census_rank3_simple(6)
    assert len(classes) == 17
    assert all(m.is_simple and m.rank == 3 for m in classes)
    for i in range(len(classes)):
        for j in range(i):
            assert not is_isomorphic(classes[i], classes[j])


def test_vector_json_round_trip():
    vc = VectorConfiguration.make([(1, Fraction(1, 3)), (2, -1)], ["a", "b"])
    assert VectorConfiguration.from_json(vc.to_json()) == vc
