import pytest
from hypothesis import given, strategies as st

from snerve.extras.combinatorics import (codegeneracy, coface, compose_monotone, count_monotone_maps,
                                         decompose_monotone, fubini, generator_map, identity_monotone,
                                         monotone_maps, ordered_set_partitions, split_monotone)
from snerve.harness.corpus import indiscrete_nerve
from snerve.nerves.coherent import coherent_nerve
from snerve.nerves.ordinary import ordinary_nerve
from snerve.simplicial.horn import horn_check, horn_fillers, horn_maps, relative_horn_check
from snerve.simplicial.iso import is_isomorphism, sset_iso
from snerve.simplicial.limits import binary_product, coproduct, point, projection, pullback, sset_power
from snerve.simplicial.maps import SSetMap, compose_maps, fiber, identity_map, inverse_map, is_bijective, \
    validate_map
from snerve.simplicial.marking import mark_natural, mark_sharp, opposite_marked, validate_marked
from snerve.simplicial.sset import TruncatedSSet, horn, opposite_sset, pull_back_cell, simplex_on, \
    standard_simplex, sub_sset, validate_sset
from snerve.types.enum import HornMode
from snerve.types.error import CapError, NotQuasicategoryError

from conftest import fixture_names


@st.composite
def monotone(draw, max_dim=3):
    n = draw(st.integers(0, max_dim))
    m = draw(st.integers(0, max_dim))
    values = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return tuple(values), n


# ---------------------------------------------------------------- combinatorics

def test_monotone_map_counts_match_closed_form():
    for m in range(4):
        for n in range(4):
            assert len(monotone_maps(m, n)) == count_monotone_maps(m, n)
    assert count_monotone_maps(1, 2) == 6


def test_fubini_numbers():
    assert [fubini(n) for n in range(5)] == [1, 1, 3, 13, 75]
    assert len(list(ordered_set_partitions((1, 2, 3)))) == 13


@given(monotone())
def test_decomposition_recomposes(data):
    f, n = data
    composite = identity_monotone(len(f) - 1)
    for kind, dim, i in reversed(decompose_monotone(f, n)):
        composite = compose_monotone(generator_map(kind, dim, i), composite)
    assert composite == f


@given(monotone())
def test_split_factors_through_image(data):
    f, n = data
    surjection, image = split_monotone(f, n)
    assert tuple(image[v] for v in surjection) == f
    assert set(surjection) == set(range(len(image)))


def test_cosimplicial_generators():
    assert coface(2, 1) == (0, 2)
    assert codegeneracy(1, 0) == (0, 0, 1)
    assert compose_monotone(codegeneracy(1, 0), coface(2, 0)) == identity_monotone(1)


# ---------------------------------------------------------------- simplicial sets

def test_standard_simplex_counts():
    assert standard_simplex(2, 2).counts() == (3, 6, 10)
    assert standard_simplex(0, 3).counts() == (1, 1, 1, 1)
    assert standard_simplex(1, 2).nondegenerate_counts() == (2, 1, 0)


@given(st.integers(0, 3), st.integers(0, 3))
def test_standard_simplex_is_valid(n, cap):
    X = standard_simplex(n, cap)
    assert validate_sset(X).ok
    assert X.counts() == tuple(count_monotone_maps(k, n) for k in range(cap + 1))


def test_square_product_counts():
    P = binary_product(standard_simplex(1, 2), standard_simplex(1, 2))
    assert P.counts() == (4, 9, 16)
    assert P.nondegenerate_counts() == (4, 5, 2)
    assert validate_sset(P).ok


def test_empty_product_is_a_point():
    assert point(2).counts() == (1, 1, 1)
    assert sset_power([], 1).cells[0] == ((),)
    with pytest.raises(CapError):
        sset_power([])


def test_product_rejects_mismatched_caps():
    with pytest.raises(CapError):
        binary_product(standard_simplex(1, 1), standard_simplex(1, 2))


def test_coproduct_adds_counts():
    X = coproduct([('a', standard_simplex(1, 2)), ('b', point(2))])
    assert X.counts() == (3, 4, 5)
    assert validate_sset(X).ok


def test_corrupted_face_is_reported():
    X = standard_simplex(1, 2)
    face = dict(X.face)
    face[(2, 0)] = dict(face[(2, 0)])
    face[(2, 0)][(0, 0, 1)] = (0, 0)
    broken = TruncatedSSet(X.cap, X.cells, face, X.degen, name='broken')
    report = validate_sset(broken)
    assert not report.ok
    assert report.violations[0].witness[0] >= 1


def test_missing_table_is_reported():
    X = standard_simplex(1, 1)
    broken = TruncatedSSet(1, X.cells, {}, X.degen)
    assert 'missing face d0 in dim 1' in validate_sset(broken).checks()


def test_ez_form():
    X = standard_simplex(1, 2)
    assert X.ez_form(2, (0, 0, 1)) == (1, (0, 1), (0, 0, 1))
    assert X.ez_form(2, (1, 1, 1)) == (0, (1,), (0, 0, 0))
    assert X.ez_form(1, (0, 1)) == (1, (0, 1), (0, 1))


@given(monotone(max_dim=2))
def test_pull_back_in_a_simplex_is_precomposition(data):
    theta, n = data
    X = standard_simplex(3, 3)
    x = (0, 2, 2, 3)[:n + 1]
    if len(theta) - 1 > X.cap:
        return
    assert pull_back_cell(X, x, theta, n) == tuple(x[v] for v in theta)


def test_pull_back_above_cap():
    with pytest.raises(CapError):
        pull_back_cell(standard_simplex(1, 1), (0, 1), (0, 0, 1), 1)


def test_opposite_is_an_involution():
    X = binary_product(standard_simplex(1, 2), standard_simplex(2, 2))
    assert opposite_sset(opposite_sset(X)) == X
    assert validate_sset(opposite_sset(X)).ok


def test_simplex_on_reversed_order_is_the_opposite():
    X = simplex_on((0, 1), 2)
    Y = simplex_on((1, 0), 2)
    f = SSetMap.from_function(opposite_sset(X), Y, lambda k, x: tuple(reversed(x)))
    assert is_isomorphism(f)


def test_sub_sset_and_horn():
    L = horn(2, 1, 2)
    assert L.nondegenerate_counts() == (3, 2, 0)
    assert validate_sset(L).ok
    vertices = sub_sset(standard_simplex(1, 1), lambda k, x: len(set(x)) == 1)
    assert vertices.counts() == (2, 2)


# ---------------------------------------------------------------- maps

def test_projection_and_fiber():
    P = binary_product(standard_simplex(1, 2), standard_simplex(1, 2))
    p = projection(P, standard_simplex(1, 2), 0)
    assert validate_map(p).ok
    F = fiber(p, (0,))
    assert F.counts() == (2, 3, 4)
    assert sset_iso(F, standard_simplex(1, 2)) is not None


def test_composition_and_inverse():
    X = standard_simplex(2, 2)
    f = identity_map(X)
    assert compose_maps(f, f) == f
    assert is_bijective(f)
    assert inverse_map(f) == f


def test_map_that_breaks_faces_is_reported():
    X = standard_simplex(1, 1)
    swap = SSetMap.from_function(X, X, lambda k, x: tuple(1 - v for v in reversed(x)))
    assert not validate_map(swap).ok
    flip = SSetMap.from_function(X, opposite_sset(X), lambda k, x: tuple(1 - v for v in reversed(x)))
    assert is_isomorphism(flip)


def test_pullback_of_projections():
    X = standard_simplex(1, 2)
    P, p0, p1 = pullback(identity_map(X), identity_map(X))
    assert P.counts() == X.counts()
    assert validate_map(p0).ok and validate_map(p1).ok


# ---------------------------------------------------------------- horns

def test_simplex_is_a_quasicategory_but_not_kan():
    X = standard_simplex(1, 3)
    assert horn_check(X, HornMode.inner).ok
    outer = horn_check(X, HornMode.all, 2)
    assert not outer.ok
    assert {'Lambda^2_0', 'Lambda^2_2'} <= set(outer.checks())


def test_horn_itself_has_an_unfillable_inner_horn():
    report = horn_check(horn(2, 1, 2), HornMode.inner)
    assert report.checks() == ['Lambda^2_1']


def test_indiscrete_nerve_is_kan():
    X = indiscrete_nerve((0, 1), 3)
    assert validate_sset(X).ok
    assert X.counts() == (2, 4, 8, 16)
    assert horn_check(X, HornMode.all).ok


def test_horn_fillers_in_a_simplex():
    X = standard_simplex(2, 2)
    faces = ((1, 2), None, (0, 1))
    assert faces in list(horn_maps(X, 2, 1))
    assert horn_fillers(X, 2, 1, faces) == [(0, 1, 2)]


def test_relative_horns_of_an_inclusion():
    L, X = horn(2, 1, 2), standard_simplex(2, 2)
    inclusion = SSetMap.from_function(L, X, lambda k, x: x)
    report = relative_horn_check(inclusion, 2, lambda n: list(range(1, n)))
    assert report.checks() == ['lift Lambda^2_1']
    assert relative_horn_check(identity_map(X), 2, lambda n: list(range(n + 1))).ok
    with pytest.raises(CapError):
        relative_horn_check(inclusion, 3, lambda n: [0])


def test_horn_check_above_cap():
    with pytest.raises(CapError):
        horn_check(standard_simplex(1, 1), HornMode.inner, 2)


# ---------------------------------------------------------------- iso and marking

def test_iso_search():
    X = binary_product(standard_simplex(1, 2), standard_simplex(0, 2))
    assert sset_iso(X, standard_simplex(1, 2)) is not None
    assert sset_iso(standard_simplex(1, 2), opposite_sset(standard_simplex(1, 2))) is not None
    assert sset_iso(standard_simplex(2, 2), binary_product(standard_simplex(1, 2), standard_simplex(1, 2))) is None


def test_natural_marking():
    groupoid = indiscrete_nerve((0, 1), 2)
    assert mark_natural(groupoid) == mark_sharp(groupoid)
    X = standard_simplex(1, 2)
    M = mark_natural(X)
    assert M.marked == frozenset({(0, 0), (1, 1)})
    assert validate_marked(M).ok
    assert opposite_marked(opposite_marked(M)) == M


@pytest.mark.parametrize('kind, name', [('fincat', name) for name in fixture_names('fincat')]
                         + [('monoidal', name) for name in fixture_names('monoidal')])
def test_natural_marking_commutes_with_opposites(build, kind, name):
    if kind == 'fincat':
        X = ordinary_nerve(build(name, kind), 2)
    else:
        X = coherent_nerve(build(name, 'scat', cap=1), 2)
    assert mark_natural(opposite_sset(X)) == opposite_marked(mark_natural(X))


def test_natural_marking_preconditions():
    with pytest.raises(CapError):
        mark_natural(standard_simplex(1, 1))
    with pytest.raises(NotQuasicategoryError):
        mark_natural(horn(2, 1, 2))
