import pytest

from snerve.enriched.fincat import FinFunctor, arrow_category, cyclic_group_category, enumerate_functors, \
    fincat_product, linear_order_category, monoid_category, opposite_fincat, square_category, transpose_functor, \
    validate_fincat, validate_finfunctor
from snerve.enriched.functor import SFunctor, compose_sfunctors, discrete_sfunctor, identity_sfunctor, \
    opposite_sfunctor, sfunctor_equal, validate_sfunctor
from snerve.enriched.scat import SCat, composition_table, discrete_scat, is_discrete, is_locally_kan, \
    opposite_scat, scat_equal, scat_power, scat_product, terminal_scat, underlying_fincat, validate_scat
from snerve.harness.corpus import delta1_hom, ez2, one_object_scat
from snerve.simplicial.sset import standard_simplex
from snerve.types.error import BaseCategoryError, CapError

from conftest import fixture_names


# ---------------------------------------------------------------- finite categories

@pytest.mark.parametrize('name', fixture_names('fincat'))
def test_corpus_categories_are_categories(build, name):
    assert validate_fincat(build(name, 'fincat')).ok


def test_broken_table_is_reported():
    D = monoid_category([0, 1], lambda g, f: 1, 0, name='broken')
    assert 'unit law' in validate_fincat(D).checks()


def test_opposite_category_is_an_involution():
    D = square_category()
    assert opposite_fincat(opposite_fincat(D)) == D
    assert opposite_fincat(D).arrows[((0, 0), (1, 1))] == ((1, 1), (0, 0))
    assert validate_fincat(fincat_product(arrow_category(), cyclic_group_category(2))).ok


def test_functor_enumeration():
    assert len(list(enumerate_functors(arrow_category(), arrow_category()))) == 3
    assert len(list(enumerate_functors(cyclic_group_category(2), cyclic_group_category(2)))) == 2
    assert len(list(enumerate_functors(arrow_category(), linear_order_category(2)))) == 6
    for F in enumerate_functors(square_category(), arrow_category()):
        assert validate_finfunctor(F).ok


def test_transpose_is_a_bijection():
    C, D = arrow_category(), linear_order_category(2)
    contravariant = list(enumerate_functors(opposite_fincat(C), D))
    transposed = {transpose_functor(F).key() for F in contravariant}
    assert len(transposed) == len(contravariant) == 6
    expected = {F.key() for F in enumerate_functors(C, opposite_fincat(D))}
    assert transposed == expected


def test_functor_that_breaks_composition():
    Z2 = cyclic_group_category(2)
    F = FinFunctor(Z2, Z2, {'*': '*'}, {0: 1, 1: 1})
    assert 'identity' in validate_finfunctor(F).checks()


# ---------------------------------------------------------------- enriched categories

@pytest.mark.parametrize('name', fixture_names('monoidal'))
def test_corpus_scats_are_enriched_categories(build, name):
    assert validate_scat(build(name, 'scat')).ok


def test_discrete_enrichment():
    C = discrete_scat(square_category(), 2)
    assert is_discrete(C)
    assert C.hom((0, 0), (1, 1)).counts() == (1, 1, 1)
    assert C.hom((1, 1), (0, 0)).counts() == (0, 0, 0)
    assert not is_discrete(ez2(2))
    assert underlying_fincat(C) == square_category()
    with pytest.raises(BaseCategoryError):
        underlying_fincat(ez2(2))


def test_left_projection_is_not_unital():
    C = one_object_scat(standard_simplex(1, 2), lambda g, f: g, (0,), 'left projection')
    report = validate_scat(C)
    assert not report.ok
    assert 'left unit' in report.checks()
    assert 'right unit' not in report.checks()


def test_hom_caps_must_agree():
    with pytest.raises(CapError):
        SCat(['*'], {('*', '*'): standard_simplex(0, 1)}, lambda *a: (0,), {'*': (0,)}, 2)


def test_opposite_scat_is_an_involution():
    C = discrete_scat(square_category(), 2)
    assert scat_equal(opposite_scat(opposite_scat(C)), C)
    Cop = opposite_scat(C)
    assert validate_scat(Cop).ok
    assert Cop.hom((1, 1), (0, 0)).counts() == (1, 1, 1)
    assert scat_equal(Cop, discrete_scat(opposite_fincat(square_category()), 2))


def test_locally_kan():
    assert is_locally_kan(ez2(3)).ok
    report = is_locally_kan(delta1_hom(2))
    assert not report.ok
    assert report.checks()[0].startswith("hom('*','*') Lambda^")
    with pytest.raises(CapError):
        is_locally_kan(ez2(2), 3)


def test_powers_and_products():
    C = ez2(2)
    C2 = scat_power(C, 2)
    assert C2.objects == (('*', '*'),)
    assert C2.hom(('*', '*'), ('*', '*')).counts() == (4, 16, 64)
    assert validate_scat(C2).ok
    assert scat_power(C, 0).objects == ((),)
    assert terminal_scat(2).hom((), ()).counts() == (1, 1, 1)
    P = scat_product(discrete_scat(arrow_category(), 1), discrete_scat(cyclic_group_category(2), 1))
    assert len(P.objects) == 2
    assert validate_scat(P).ok


def test_composition_table():
    C = ez2(1)
    table = composition_table(C, '*', '*', '*')
    assert table[0][((1,), (1,))] == (0,)
    assert table[1][((0, 1), (1, 1))] == (1, 0)


# ---------------------------------------------------------------- enriched functors

def test_discrete_functors_are_enriched_functors():
    for F in enumerate_functors(arrow_category(), square_category()):
        assert validate_sfunctor(discrete_sfunctor(F, 2)).ok


def test_functor_composition_and_opposite():
    C = discrete_scat(square_category(), 2)
    one = identity_sfunctor(C)
    assert sfunctor_equal(compose_sfunctors(one, one), one)
    F = next(iter(enumerate_functors(arrow_category(), square_category())))
    G = discrete_sfunctor(F, 2)
    Gop = opposite_sfunctor(G)
    assert validate_sfunctor(Gop).ok
    assert sfunctor_equal(opposite_sfunctor(Gop, G.source, G.target), G)


def test_functor_off_by_a_cell():
    C = ez2(1)
    flip = SFunctor(C, C, {'*': '*'}, lambda x, y, k, c: tuple(1 - v for v in c), name='flip')
    assert 'identity' in validate_sfunctor(flip).checks()
