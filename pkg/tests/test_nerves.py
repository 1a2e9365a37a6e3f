import pytest

from snerve.enriched.fincat import arrow_category, cyclic_group_category, enumerate_functors, \
    linear_order_category, square_category, terminal_category
from snerve.enriched.functor import discrete_sfunctor, identity_sfunctor
from snerve.enriched.scat import discrete_scat, discrete_sset, opposite_scat, scat_product
from snerve.extras.combinatorics import codegeneracy, coface, compose_monotone
from snerve.grothendieck.diagram import constant_diagram
from snerve.harness.corpus import delta1_hom, ez2
from snerve.nerves.bead import BeadShape, bead_order, enumerate_bead_shapes, is_bead_shape
from snerve.nerves.coherent import CoherentSimplex, check_boundary, coherent_nerve, coherent_to_ordinary, \
    nerve_of_functor, opposite_nerve_bijection, reindex_coherent, validate_coherent_cells
from snerve.nerves.ordinary import chain_arrow, ordinary_nerve, ordinary_nerve_map
from snerve.nerves.relative import DiagramSSet, RelNerveSimplex, check_compatibility, check_functorial, \
    enumerate_rel_simplices, reindex_rel, rel_simplex_as_maps, relative_nerve, subset_order, validate_diagram_sset
from snerve.simplicial.horn import horn_check
from snerve.simplicial.iso import is_isomorphism, sset_iso
from snerve.simplicial.limits import binary_product, point
from snerve.simplicial.maps import SSetMap, identity_map, validate_map
from snerve.simplicial.sset import opposite_sset, standard_simplex, validate_sset
from snerve.types.enum import HornMode
from snerve.types.error import CapError, FunctorialityError

from conftest import fixture_names


# ---------------------------------------------------------------- ordinary nerve

def test_nerve_of_z2():
    N = ordinary_nerve(cyclic_group_category(2), 3)
    assert N.counts() == (1, 2, 4, 8)
    assert validate_sset(N).ok
    assert N.d(2, 1, ('*', 1, 1)) == ('*', 0)


def test_nerve_of_a_linear_order_is_a_simplex():
    N = ordinary_nerve(linear_order_category(2), 3)
    assert N.counts() == standard_simplex(2, 3).counts()
    assert is_isomorphism(SSetMap.from_function(
        N, standard_simplex(2, 3), lambda k, c: (c[0],) + tuple(f[1] for f in c[1:])))


def test_nerve_is_a_quasicategory():
    assert horn_check(ordinary_nerve(square_category(), 3), HornMode.inner).ok
    assert horn_check(ordinary_nerve(cyclic_group_category(2), 3), HornMode.all).ok


def test_chain_composites():
    D = linear_order_category(3)
    chain = (0, (0, 1), (1, 2), (2, 3))
    assert chain_arrow(D, chain, 0, 3) == (0, 3)
    assert chain_arrow(D, chain, 2, 2) == (2, 2)


def test_nerve_of_a_functor():
    C, D = arrow_category(), square_category()
    for F in enumerate_functors(C, D):
        assert validate_map(ordinary_nerve_map(F, ordinary_nerve(C, 2), ordinary_nerve(D, 2))).ok


# ---------------------------------------------------------------- bead shapes

def test_bead_shapes_of_four_points():
    assert [str(b) for b in enumerate_bead_shapes([0, 1, 2, 3])] == ['<03|12>', '<03|1|2>', '<03|2|1>']
    assert [str(b) for b in enumerate_bead_shapes([1, 4])] == ['<14>']
    with pytest.raises(ValueError):
        enumerate_bead_shapes([2])


def test_bead_chain_round_trip():
    shape = BeadShape((0, 1, 2, 3), ((0, 3), (2,), (1,)))
    assert shape.chain() == ((0, 3), (0, 2, 3), (0, 1, 2, 3))
    assert BeadShape.from_chain(shape.chain()) == shape
    assert is_bead_shape(shape)
    assert not is_bead_shape(BeadShape((0, 1, 2), ((0, 1), (2,))))


def test_bead_order_sizes():
    assert len(bead_order(1)) == 1
    assert len(bead_order(2)) == 4
    assert len(bead_order(3)) == 13
    assert bead_order(2)[-1] == ((0, 2), (0, 1, 2))


# ---------------------------------------------------------------- coherent nerve

@pytest.mark.parametrize('D', [terminal_category(), arrow_category(), square_category(), cyclic_group_category(2)],
                         ids=lambda D: D.name)
def test_coherent_nerve_of_a_discrete_category_is_the_ordinary_nerve(D):
    N = coherent_nerve(discrete_scat(D, 2), 3)
    comparison = SSetMap.from_function(N, ordinary_nerve(D, 3), lambda k, c: coherent_to_ordinary(c))
    assert is_isomorphism(comparison)


def test_coherent_nerve_of_ez2():
    N = coherent_nerve(ez2(2), 3)
    assert N.counts() == (1, 2, 8, 64)
    assert validate_sset(N).ok
    validate_coherent_cells(N, ez2(2))
    assert horn_check(N, HornMode.inner).ok


def test_coherent_nerve_needs_enough_hom_dimensions():
    with pytest.raises(CapError):
        coherent_nerve(ez2(1), 3)


def test_bead_with_a_wrong_boundary():
    K = delta1_hom(1)
    # <02|1> must join the long edge to the composite of the two short ones
    S = CoherentSimplex(K, ('*',) * 3, {((0, 1),): (0,), ((1, 2),): (0,), ((0, 2),): (0,),
                                        ((0, 2), (0, 1, 2)): (1, 1)})
    assert check_boundary(S) == [((0, 2), (0, 1, 2))]


def test_nerve_of_an_enriched_functor():
    C = ez2(2)
    N = coherent_nerve(C, 3)
    assert nerve_of_functor(identity_sfunctor(C), N, N).assign == [
        {c: c for c in cells} for cells in N.cells]
    F = next(iter(enumerate_functors(arrow_category(), square_category())))
    G = discrete_sfunctor(F, 2)
    m = nerve_of_functor(G, coherent_nerve(G.source, 3), coherent_nerve(G.target, 3))
    assert validate_map(m).ok


@pytest.mark.parametrize('C', [discrete_scat(square_category(), 2), ez2(2), delta1_hom(2)],
                         ids=lambda C: C.name)
def test_nerve_of_the_opposite(C):
    source = coherent_nerve(opposite_scat(C), 3)
    target = opposite_sset(coherent_nerve(C, 3))
    assert is_isomorphism(opposite_nerve_bijection(C, source, target))


PRODUCT_PAIRS = [(name, 'bz2') for name in fixture_names('monoidal')] + [('ez2', 'delta1_hom')]


@pytest.mark.parametrize('left, right', PRODUCT_PAIRS)
def test_nerve_of_a_product_is_the_product_of_nerves(build, left, right):
    C, D = build(left, 'scat', cap=1), build(right, 'scat', cap=1)
    N = coherent_nerve(scat_product(C, D), 2)
    assert sset_iso(N, binary_product(coherent_nerve(C, 2), coherent_nerve(D, 2))) is not None


# ---------------------------------------------------------------- relative nerve

def test_relative_nerve_of_the_constant_point():
    D = arrow_category()
    N, p = relative_nerve(D, DiagramSSet.constant(D, point(3)), 3)
    assert N.counts() == (2, 3, 4, 5)
    assert is_isomorphism(p)


def test_relative_nerve_over_the_terminal_category():
    X = standard_simplex(1, 2)
    N, p = relative_nerve(terminal_category(), DiagramSSet.constant(terminal_category(), X), 2)
    assert N.counts() == X.counts()
    assert validate_sset(N).ok
    assert validate_map(p).ok


def test_relative_nerve_of_coherent_nerves():
    D = arrow_category()
    f = DiagramSSet.nerve_of(constant_diagram(D, discrete_scat(cyclic_group_category(2), 2)), 2)
    assert validate_diagram_sset(f).ok
    N, p = relative_nerve(D, f, 2)
    assert N.counts() == (2, 6, 16)
    assert validate_sset(N).ok
    assert horn_check(N, HornMode.inner).ok
    for cell in N.cells[2]:
        assert check_compatibility(RelNerveSimplex.from_cell(f, cell)).ok


def test_relative_nerve_cap_mismatch():
    D = arrow_category()
    with pytest.raises(CapError):
        relative_nerve(D, DiagramSSet.constant(D, point(2)), 3)


# ---------------------------------------------------------------- reindexing

def test_coherent_values_on_longer_chains():
    K = ez2(2)
    N = coherent_nerve(K, 2)
    for cell in N.cells[2]:
        S = CoherentSimplex.from_cell(K, cell)
        # the long vertex chain {0, 1, 2} splits at 1 into a composite
        assert S.chain_value(((0, 1, 2),)) == K.compose('*', '*', '*', 0, S.values[((1, 2),)], S.values[((0, 1),)])
        assert S.chain_value(((0, 2), (0, 2))) == K.hom('*', '*').s(0, 0, S.values[((0, 2),)])


def test_coherent_reindexing_along_a_composite():
    K = ez2(2)
    N = coherent_nerve(K, 2)
    alpha = compose_monotone(coface(2, 1), codegeneracy(1, 0))
    assert alpha == (0, 0, 2)
    for cell in N.cells[2]:
        assert reindex_coherent(CoherentSimplex.from_cell(K, cell), alpha).as_cell() == N.s(1, 0, N.d(2, 1, cell))


@pytest.fixture
def bz2_over_arrow():
    D = arrow_category()
    return DiagramSSet.nerve_of(constant_diagram(D, discrete_scat(cyclic_group_category(2), 2)), 2)


def test_relative_reindexing_along_a_composite(bz2_over_arrow):
    f = bz2_over_arrow
    N, p = relative_nerve(f.base, f, 2)
    ND = ordinary_nerve(f.base, 2)
    alpha = compose_monotone(coface(2, 1), codegeneracy(1, 0))
    for cell in N.cells[2]:
        T = RelNerveSimplex.from_cell(f, cell)
        assert reindex_rel(T, alpha, ND).as_cell() == N.s(1, 0, N.d(2, 1, cell))


def test_relative_cells_over_each_chain(bz2_over_arrow):
    f = bz2_over_arrow
    ND = ordinary_nerve(f.base, 2)
    assert sum(len(list(enumerate_rel_simplices(f, chain))) for chain in ND.cells[2]) == 16


def test_relative_simplex_as_maps(bz2_over_arrow):
    f = bz2_over_arrow
    N, p = relative_nerve(f.base, f, 2)
    T = RelNerveSimplex.from_cell(f, N.cells[2][-1])
    maps = rel_simplex_as_maps(T)
    assert sorted(maps) == sorted(subset_order(2))
    assert all(validate_map(m).ok for m in maps.values())
    assert all(maps[J](len(J) - 1, J) == T.family[J] for J in maps)


def test_non_functorial_diagram_of_simplicial_sets():
    Z2 = cyclic_group_category(2)
    X = discrete_sset(['a', 'b'], 1)
    swap = SSetMap.from_function(X, X, lambda k, c: 'b' if c == 'a' else 'a')
    check_functorial(DiagramSSet(Z2, {'*': X}, {0: identity_map(X), 1: swap}))
    collapse = SSetMap.from_function(X, X, lambda k, c: 'a')
    with pytest.raises(FunctorialityError):
        check_functorial(DiagramSSet(Z2, {'*': X}, {0: identity_map(X), 1: collapse}))
