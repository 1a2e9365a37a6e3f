import pytest

from snerve.enriched.fincat import arrow_category, cyclic_group_category
from snerve.enriched.functor import identity_sfunctor, validate_sfunctor
from snerve.enriched.scat import discrete_scat, scat_equal, validate_scat
from snerve.grothendieck.comparison import check_gr_relnerve_iso, gr_simplex_to_relnerve, relnerve_simplex_to_gr
from snerve.grothendieck.construction import GrArrow, cocartesian_lift, fiberwise_op_split, grothendieck
from snerve.grothendieck.diagram import check_diagram, constant_diagram, op_diagram, validate_diagram_scat
from snerve.grothendieck.opfibration import check_cocartesian_edges, check_inner_fibration, check_opfibration_nerve, \
    chosen_lift_edges, chosen_lift_report, is_opfibration, is_pcocartesian, lift_edge, projection_nerve_map
from snerve.nerves.coherent import coherent_nerve
from snerve.nerves.ordinary import ordinary_nerve
from snerve.simplicial.maps import validate_map
from snerve.types.error import BaseCategoryError, FunctorialityError, ProvenanceError

from brute_force import bz2_over_arrow_counts
from conftest import fixture_names


@pytest.fixture
def point_to_arrow(build):
    return grothendieck(build('point_to_arrow', 'diagram'))


# ---------------------------------------------------------------- diagrams

@pytest.mark.parametrize('name', fixture_names('diagram'))
def test_corpus_diagrams_are_functors(build, name):
    assert validate_diagram_scat(build(name, 'diagram')).ok


def test_broken_square_is_rejected(build):
    F = build('broken_square', 'diagram')
    report = validate_diagram_scat(F)
    assert report.checks() == ['composition']
    with pytest.raises(FunctorialityError) as info:
        check_diagram(F)
    assert info.value.witness == report.violations[0].witness
    with pytest.raises(FunctorialityError):
        grothendieck(F)


def test_op_diagram_is_an_involution(build):
    F = build('swap_over_z2', 'diagram')
    twice = op_diagram(op_diagram(F))
    assert twice.name == F.name
    assert all(scat_equal(twice(c), F(c)) for c in F.base.objects)
    assert validate_diagram_scat(op_diagram(F)).ok


# ---------------------------------------------------------------- the construction

@pytest.mark.parametrize('name', fixture_names('diagram'))
def test_grothendieck_of_the_corpus(build, name):
    E = grothendieck(build(name, 'diagram'))
    assert validate_scat(E.total).ok
    assert validate_sfunctor(E.projection).ok


def test_objects_and_homs(point_to_arrow):
    E = point_to_arrow
    assert E.objects == (('*', 0), ('a', 1), ('b', 1))
    H = E.hom(('*', 0), ('b', 1))
    assert list(H.cells[0]) == [(('a', 'b'), (0, 1))]
    assert E.hom(('b', 1), ('a', 1)).counts() == (0, 0, 0)


def test_composition_moves_along_the_base(build):
    E = grothendieck(build('swap_over_z2', 'diagram'))
    # (τ, ψ)∘(σ, φ) = (τ∘Fψ σ, ψφ); Fψ swaps the two objects
    f = ((1, 1), 1)
    g = ((0, 0), 1)
    assert E.total.compose((0, '*'), (1, '*'), (0, '*'), 0, g, f) == ((0, 0), 0)


def test_chosen_lifts(point_to_arrow):
    E = point_to_arrow
    lift = cocartesian_lift(E, ('*', 0), (0, 1))
    assert lift == GrArrow(('*', 0), ('a', 1), ('a', 'a'), (0, 1))
    assert lift.as_cell() == (('a', 'a'), (0, 1))
    assert chosen_lift_report(E).ok
    with pytest.raises(BaseCategoryError):
        cocartesian_lift(E, ('*', 0), (1, 1))


def test_arrow_that_is_not_cocartesian(point_to_arrow):
    E = point_to_arrow
    chi = GrArrow(('*', 0), ('b', 1), ('a', 'b'), (0, 1))
    report = is_pcocartesian(E.projection, chi)
    assert not report.ok
    # nothing runs from b back to a, but the pullback over a is a point
    assert report.violations[0].witness == (('a', 1), 0, 0, 1)


@pytest.mark.parametrize('name', ['bz2_over_arrow', 'point_to_arrow', 'point_into_square', 'swap_over_z2'])
def test_grothendieck_constructions_are_opfibrations(build, name):
    E = grothendieck(build(name, 'diagram'))
    assert is_opfibration(E.projection).ok
    assert chosen_lift_report(E).ok


def test_broken_opfibration(build):
    E = build('broken_opfibration', 'grcat')
    assert E.provenance is None
    assert E.base == arrow_category()
    report = is_opfibration(E.projection)
    assert report.checks() == ['no coCartesian lift']
    assert report.violations[0].witness == (('*', 0), (0, 1))
    with pytest.raises(ProvenanceError):
        cocartesian_lift(E, ('*', 0), (0, 1))
    with pytest.raises(ProvenanceError):
        fiberwise_op_split(E)
    with pytest.raises(ProvenanceError):
        chosen_lift_report(E)
    with pytest.raises(ProvenanceError):
        check_opfibration_nerve(E, 2)


def test_projection_onto_a_non_discrete_base(build):
    E = grothendieck(build('ez2_over_arrow', 'diagram'))
    with pytest.raises(BaseCategoryError):
        is_opfibration(identity_sfunctor(E.total))


def test_fiberwise_opposite(build):
    F = build('point_to_arrow', 'diagram')
    split = fiberwise_op_split(grothendieck(F))
    assert split.provenance.name == 'point->a<b^op'
    assert split.hom(('b', 1), ('a', 1)).counts() == (1, 1, 1)
    assert split.hom(('a', 1), ('b', 1)).counts() == (0, 0, 0)
    assert validate_scat(split.total).ok


def test_nerve_of_the_projection_is_a_cocartesian_fibration(point_to_arrow):
    assert check_opfibration_nerve(point_to_arrow, 2).ok


# ---------------------------------------------------------------- N(Gr F) and the relative nerve

def test_gr_relnerve_counts_match_a_direct_enumeration(build):
    F = build('bz2_over_arrow', 'diagram')
    cert = check_gr_relnerve_iso(F, 2)
    assert cert.passed, cert.checks
    expected = list(bz2_over_arrow_counts(2))
    assert expected == [2, 6, 16]
    assert cert.counts['N(Gr F)'] == cert.counts['N_f(D)'] == expected


def test_comparison_maps_are_inverse_on_cells(build):
    F = build('point_to_arrow', 'diagram')
    N = coherent_nerve(grothendieck(F).total, 2)
    for k in range(3):
        for cell in N.cells[k]:
            assert relnerve_simplex_to_gr(F, gr_simplex_to_relnerve(F, cell)) == cell


@pytest.mark.parametrize('name', ['point_to_arrow', 'point_into_square', 'swap_over_z2', 'constant-point'])
def test_gr_relnerve_certificate(build, name):
    cert = check_gr_relnerve_iso(build(name, 'diagram'), 2)
    assert cert.passed, cert.checks


@pytest.mark.slow
@pytest.mark.parametrize('name', ['ez2_over_arrow', 'bz2_over_square'])
def test_gr_relnerve_certificate_in_dimension_three(build, name):
    cert = check_gr_relnerve_iso(build(name, 'diagram', cap=3), 3)
    assert cert.passed, cert.checks


def test_constant_diagram_over_z2_grothendieck_is_a_product(build):
    C = discrete_scat(cyclic_group_category(2), 2)
    E = grothendieck(constant_diagram(cyclic_group_category(2), C))
    assert E.hom(('*', '*'), ('*', '*')).counts() == (4, 4, 4)
    assert grothendieck(constant_diagram(arrow_category(), C)).objects == (('*', 0), ('*', 1))


def test_nerve_projection_and_its_lifting_properties(point_to_arrow):
    E = point_to_arrow
    N = coherent_nerve(E.total, 2)
    p = projection_nerve_map(E.projection, N, ordinary_nerve(E.base, 2))
    assert validate_map(p).ok
    assert sorted(p(0, v) for v in N.cells[0]) == [(0,), (1,), (1,)]
    assert check_inner_fibration(p, 2).ok
    assert check_cocartesian_edges(p, chosen_lift_edges(E), 2).ok
    chi = GrArrow(('*', 0), ('b', 1), ('a', 'b'), (0, 1))
    report = check_cocartesian_edges(p, [lift_edge(chi)], 2)
    assert not report.ok
    assert report.checks()[0] == 'lift Lambda^2_0'


def test_cocartesian_edges_without_provenance(build):
    E = build('broken_opfibration', 'grcat')
    N = coherent_nerve(E.total, 2)
    p = projection_nerve_map(E.projection, N, ordinary_nerve(E.base, 2))
    over_phi = [cell for cell in N.cells[1] if cell[0][0] == ('*', 0) and cell[0][1][1] == 1]
    assert len(over_phi) == 2
    assert all(not check_cocartesian_edges(p, [edge], 2).ok for edge in over_phi)
