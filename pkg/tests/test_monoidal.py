import pytest

from snerve.enriched.fincat import validate_fincat
from snerve.enriched.functor import validate_sfunctor
from snerve.enriched.scat import validate_scat
from snerve.extras.combinatorics import codegeneracy, coface
from snerve.grothendieck.construction import grothendieck
from snerve.grothendieck.opfibration import is_pcocartesian
from snerve.monoidal import apply_cf, apply_cf_cells, c_degeneracy_functor, c_face_functor, c_otimes, \
    c_simplicial_object, check_composite_certificate, check_cotimes_gr_iso, check_generator_identities, \
    check_monoidal_fibers, check_op_theorems, check_operadic_fibration, check_split_cleavage, chosen_lift, delta_op, \
    gr_comparison_functor, monoidal_equal, opposite_monoidal, operadic_nerve, sequences, validate_monoidal
from snerve.simplicial.iso import is_isomorphism
from snerve.types.error import LevelError, NotLocallyKanError, SimplicialIdentityError

from brute_force import delta_op_nerve_counts
from conftest import fixture_names


@pytest.fixture
def meet(build):
    """Two discrete objects 0 and 1 under min, unit 1."""
    return build('two_point_meet', 'monoidal')


# ---------------------------------------------------------------- strict monoidal structure

@pytest.mark.parametrize('name', fixture_names('monoidal'))
def test_corpus_tensors_are_strict(build, name):
    assert validate_monoidal(build(name, 'monoidal')).ok


def test_nonassociative_tensor_is_reported(build):
    report = validate_monoidal(build('nonassociative', 'monoidal'))
    assert report.violations[0].check == 'associativity on objects'
    assert report.violations[0].witness == ('a', 'a', 'a')


def test_interchange_failure_is_reported(build):
    report = validate_monoidal(build('left_zero', 'monoidal'))
    assert 'tensor composition' in report.checks()


def test_unit_and_counit(bz2):
    assert bz2.unit_functor()(()) == '*'
    assert bz2.tensor_objects(()) == '*'
    assert bz2.tensor_cells((), (), 1, ()) == bz2.underlying.ident_cell('*', 1)
    assert bz2.tensor_cells(('*',) * 3, ('*',) * 3, 0, (1, 1, 1)) == 1


def test_opposite_monoidal_is_an_involution(meet, bz2):
    for C in (meet, bz2):
        twice = opposite_monoidal(opposite_monoidal(C))
        assert monoidal_equal(twice, C)
        assert validate_monoidal(opposite_monoidal(C)).ok


# ---------------------------------------------------------------- C^f and the simplicial object

def test_truncated_delta_op():
    D = delta_op(2)
    assert validate_fincat(D).ok
    assert len(delta_op(1).hom(1, 1)) == 3
    assert len(D.hom(2, 1)) == 6
    assert D.compose((1, (0, 0)), (2, (0, 1))) == (2, (0, 0))


def test_face_and_degeneracy_actions(meet):
    xs = (0, 1)
    assert apply_cf(meet, coface(2, 0), xs) == (1,)
    assert apply_cf(meet, coface(2, 2), xs) == (0,)
    assert apply_cf(meet, coface(2, 1), xs) == (0,)
    assert apply_cf(meet, codegeneracy(1, 0), (0,)) == (1, 0)
    assert apply_cf(meet, (2, 2), xs) == (1,)
    assert apply_cf(meet, (0, 2, 2), xs) == (0, 1)


def test_level_mismatch(meet):
    with pytest.raises(LevelError):
        apply_cf(meet, coface(2, 1), (0,))
    with pytest.raises(LevelError):
        apply_cf(meet, (0, 1), (0, 1), n=3)
    with pytest.raises(LevelError):
        apply_cf_cells(meet, (0, 1), (0,), (0, 1), 0, ((0, 0),))


def test_cells_follow_the_blocks(meet):
    cells = ((0, 0), (1, 1))
    assert apply_cf_cells(meet, (0, 2), (0, 1), (0, 1), 0, cells) == ((0, 0),)
    assert apply_cf_cells(meet, (0, 0, 2), (0, 1), (0, 1), 0, cells) == ((1, 1), (0, 0))


def test_generator_identities(meet, bz2):
    assert check_generator_identities(meet, 2).ok
    assert check_generator_identities(bz2, 2).ok
    F = c_simplicial_object(bz2, 2)
    assert F.base == delta_op(2)
    assert F(2).objects == (('*', '*'),)


def test_nonassociative_tensor_is_not_a_simplicial_object(build):
    # three factors are needed to see the bracketing
    C = build('nonassociative', 'monoidal', cap=0)
    c_simplicial_object(C, 2)
    with pytest.raises(SimplicialIdentityError):
        c_simplicial_object(C, 3)


# ---------------------------------------------------------------- the category of operators

def test_operator_hom_over_bz2(bz2):
    total, P = c_otimes(bz2, 2)
    assert len(total.objects) == len(sequences(bz2, 2)) == 3
    H = total.hom(('*', '*'), ('*',))
    assert H.counts()[0] == 12
    assert {cell[0] for cell in H.cells[0]} == {(a, b) for a in range(3) for b in range(a, 3)}
    assert validate_scat(total, 0).ok


def test_operator_composition_tensors_blocks(meet):
    total, P = c_otimes(meet, 2)
    f = ((0, 2), ((0, 0),))
    g = ((0, 1), ((0, 0),))
    assert total.compose((0, 1), (0,), (0,), 0, g, f) == ((0, 2), ((0, 0),))
    assert P.cell((0, 1), (0,), 0, f) == (2, (0, 2))


def test_chosen_lifts_split_and_are_cocartesian(meet):
    assert check_split_cleavage(meet, 2).ok
    total, P = c_otimes(meet, 2)
    lift = chosen_lift(meet, (0, 1), coface(2, 1))
    assert lift.target == (0,)
    assert lift.components == ((0, 0),)
    assert is_pcocartesian(P, lift).ok


def test_cotimes_is_the_grothendieck_construction(meet, bz2):
    for C in (meet, bz2):
        cert = check_cotimes_gr_iso(C, 2)
        assert cert.passed, cert.checks
        assert cert.counts['C⊗ hom cells'] == cert.counts['Gr hom cells']


# ---------------------------------------------------------------- operadic nerve

def test_operadic_nerve_of_the_point_is_the_nerve_of_delta_op(point_monoidal):
    X = operadic_nerve(point_monoidal, 2, 2)
    assert is_isomorphism(X.projection)
    assert X.nerve.counts() == delta_op_nerve_counts(2, 2)


def test_operadic_nerve_needs_kan_homs(build):
    with pytest.raises(NotLocallyKanError):
        operadic_nerve(build('delta1_hom', 'monoidal'), 1, 2)


def test_fibers_are_powers(bz2):
    X = operadic_nerve(bz2, 2, 2)
    cert = check_monoidal_fibers(X, 2)
    assert cert.passed
    assert cert.counts['fiber [2]'] == cert.counts['fiber [1]^2'] == [1, 4, 16]
    assert cert.counts['N(C)'] == [1, 2, 4]
    assert X.fiber(0).counts() == (1, 1, 1)
    with pytest.raises(LevelError):
        check_monoidal_fibers(X, 3)


def test_operadic_nerve_is_a_cocartesian_fibration(meet):
    X = operadic_nerve(meet, 1, 2)
    assert check_operadic_fibration(X).ok


@pytest.mark.slow
def test_opposites_commute_with_the_constructions(meet):
    cert = check_op_theorems(meet, 2, 2)
    assert cert.passed, cert.checks
    assert cert.strict_shadow


@pytest.mark.slow
def test_composite_certificate(bz2):
    cert = check_composite_certificate(bz2, 2, 2)
    assert cert.passed, cert.checks


def test_generator_functors_agree_with_the_closed_formula(meet):
    face = c_face_functor(meet, 2, 1)
    degeneracy = c_degeneracy_functor(meet, 1, 0)
    assert validate_sfunctor(face).ok
    assert validate_sfunctor(degeneracy).ok
    for xs in face.source.objects:
        assert face(xs) == apply_cf(meet, coface(2, 1), xs)
    assert degeneracy((0,)) == apply_cf(meet, codegeneracy(1, 0), (0,)) == (1, 0)
    assert c_face_functor(meet, 2, 0)((0, 1)) == (1,)


def test_comparison_functor_to_the_grothendieck_construction(meet):
    total, P = c_otimes(meet, 2)
    E = grothendieck(c_simplicial_object(meet, 2))
    Phi = gr_comparison_functor(meet, total, E)
    assert Phi((0, 1)) == ((0, 1), 2)
    assert Phi.cell((0, 1), (0,), 0, ((0, 2), ((0, 0),))) == (((0, 0),), (2, (0, 2)))
    assert validate_sfunctor(Phi, 0).ok
