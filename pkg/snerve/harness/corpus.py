"""
Named fixtures: small categories, enriched categories, strict monoidal
enriched categories and diagrams, each built at a requested cap.

Every fixture is a ``Fixture`` record whose ``build(cap, base)`` returns the
structure; ``valid`` says whether it is meant to pass its validator (the
corrupted fixtures are not).
"""
import itertools
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from snerve.enriched.fincat import FinCat, arrow_category, cyclic_group_category, indiscrete_category, \
    monoid_category, poset_category, square_category, terminal_category, validate_fincat
from snerve.enriched.functor import SFunctor, identity_sfunctor, validate_sfunctor
from snerve.enriched.scat import SCat, discrete_scat, sub_scat, validate_scat
from snerve.grothendieck.construction import GrCat, grothendieck
from snerve.grothendieck.diagram import DiagramSCat, constant_diagram, validate_diagram_scat
from snerve.monoidal.monoidal import MonSCat, validate_monoidal
from snerve.simplicial.sset import TruncatedSSet, standard_simplex
from snerve.types.enum import FixtureKind
from snerve.types.error import SchemaError
from snerve.types.report import Report


@dataclass(frozen=True)
class Fixture:
    """
    A corpus entry.

    Attributes:
    - name (str): Lookup key.
    - kind (FixtureKind): What ``build`` returns.
    - build (callable): ``build(cap, base)``; ``base`` is only read by
      diagrams that adapt to an arbitrary base category.
    - description (str): One line for listings.
    - valid (bool): Whether the fixture is meant to pass its validator.
    """
    name: str
    kind: FixtureKind
    build: Callable[[int, Optional[FinCat]], Any]
    description: str
    valid: bool = True


def indiscrete_nerve(points, cap: int, name: str = '') -> TruncatedSSet:
    """Nerve of the indiscrete groupoid on ``points``: every tuple is a cell."""
    points = tuple(points)
    cells = [list(itertools.product(points, repeat=k + 1)) for k in range(cap + 1)]
    return TruncatedSSet.from_operators(cap, cells, lambda k, i, x: x[:i] + x[i + 1:],
                                        lambda k, i, x: x[:i + 1] + x[i:], name=name or 'N(E{})'.format(len(points)))


def one_object_scat(H: TruncatedSSet, mult: Callable[[tuple, tuple], tuple], unit: tuple, name: str) -> SCat:
    """A simplicial monoid as an enriched category on the object ``'*'``."""
    return SCat(['*'], {('*', '*'): H}, lambda x, y, z, k, g, f: mult(g, f), {'*': unit}, H.cap, name=name)


def _monoid_monoidal(D: FinCat, cap: int, name: str = '') -> MonSCat:
    # a commutative monoid's multiplication is a tensor on its one-object category
    C = discrete_scat(D, cap)
    return MonSCat.from_functions(C, lambda x, y: '*', lambda x, y, x2, y2, k, f, g: D.compose(f, g), '*',
                                  name=name or D.name)


def _meet_monoidal(D: FinCat, cap: int, name: str) -> MonSCat:
    C = discrete_scat(D, cap)
    return MonSCat.from_functions(C, min, lambda x, y, x2, y2, k, f, g: (min(f[0], g[0]), min(f[1], g[1])),
                                  max(D.objects), name=name)


def _xor(g: tuple, f: tuple) -> tuple:
    return tuple(a ^ b for a, b in zip(g, f))


def _max(g: tuple, f: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(g, f))


def ez2(cap: int) -> SCat:
    """
    One object with hom the nerve of the indiscrete groupoid on ``{0, 1}``
    under pointwise XOR; locally Kan and not discrete.
    """
    return one_object_scat(indiscrete_nerve((0, 1), cap), _xor, (0,), 'EZ/2')


def delta1_hom(cap: int) -> SCat:
    """One object with hom ``Δ^1`` under pointwise max; fails outer horns."""
    return one_object_scat(standard_simplex(1, cap), _max, (0,), 'Delta1-hom')


def _one_object_monoidal(C: SCat, mult: Callable[[tuple, tuple], tuple]) -> MonSCat:
    return MonSCat.from_functions(C, lambda x, y: '*', lambda x, y, x2, y2, k, f, g: mult(f, g), '*')


def _point_monoidal(cap: int) -> MonSCat:
    return _monoid_monoidal(terminal_category(), cap, name='point')


def _idempotent() -> FinCat:
    return monoid_category(['e', 'a'], lambda g, f: 'e' if g == f == 'e' else 'a', 'e', name='{e,a}')


def _left_zero(cap: int) -> MonSCat:
    # {1, a, b} with xy = x for x != 1: a monoid that is not commutative
    D = monoid_category([1, 'a', 'b'], lambda g, f: f if g == 1 else g, 1, name='left-zero')
    return _monoid_monoidal(D, cap)


def _nonassociative(cap: int) -> MonSCat:
    D = poset_category(['u', 'a', 'b'], lambda x, y: x == y, name='nonassociative')
    table = {('a', 'a'): 'b', ('a', 'b'): 'a', ('b', 'a'): 'b', ('b', 'b'): 'a'}

    def on_objects(x, y):
        if x == 'u':
            return y
        if y == 'u':
            return x
        return table[(x, y)]

    def on_cells(x, y, x2, y2, k, f, g):
        z = on_objects(x, y)
        return z, z

    return MonSCat.from_functions(discrete_scat(D, cap), on_objects, on_cells, 'u', name='nonassociative')


def _two_point(cap: int) -> SCat:
    return discrete_scat(poset_category([0, 1], lambda x, y: x == y, name='two-point'), cap)


def _a_below_b(cap: int) -> SCat:
    return discrete_scat(poset_category(['a', 'b'], lambda x, y: x <= y, name='a<b'), cap)


def _point(cap: int) -> SCat:
    return discrete_scat(terminal_category(), cap)


def _const_functor(source: SCat, target: SCat, y) -> SFunctor:
    ident = target.ident[y]
    return SFunctor(source, target, {x: y for x in source.objects}, lambda a, b, k, c: ident,
                    name='const {!r}'.format(y))


def _point_to_arrow(cap: int, base: Optional[FinCat] = None) -> DiagramSCat:
    D = arrow_category()
    P, A = _point(cap), _a_below_b(cap)
    functors = {(0, 0): identity_sfunctor(P), (1, 1): identity_sfunctor(A), (0, 1): _const_functor(P, A, 'a')}
    return DiagramSCat(D, {0: P, 1: A}, functors, name='point->a<b')


def _point_into_square(cap: int, base: Optional[FinCat] = None) -> DiagramSCat:
    # the corner (0, 0) holds a point sent to 'a'; the other corners hold a<b
    D = square_category()
    P, A = _point(cap), _a_below_b(cap)
    values = {c: (P if c == (0, 0) else A) for c in D.objects}
    to_a = _const_functor(P, A, 'a')
    ident = {id(P): identity_sfunctor(P), id(A): identity_sfunctor(A)}
    functors = {}
    for phi, (c, e) in D.arrows.items():
        if c == e:
            functors[phi] = ident[id(values[c])]
        elif c == (0, 0):
            functors[phi] = to_a
        else:
            functors[phi] = ident[id(A)]
    return DiagramSCat(D, values, functors, name='point->a<b over square')


def _swap_functor(C: SCat) -> SFunctor:
    swap = {0: 1, 1: 0}
    return SFunctor(C, C, swap, lambda x, y, k, c: (swap[c[0]], swap[c[1]]), name='swap')


def _swap_over_z2(cap: int, base: Optional[FinCat] = None) -> DiagramSCat:
    D = cyclic_group_category(2)
    C = _two_point(cap)
    return DiagramSCat(D, {'*': C}, {0: identity_sfunctor(C), 1: _swap_functor(C)}, name='swap over Z/2')


def _broken_square(cap: int, base: Optional[FinCat] = None) -> DiagramSCat:
    # swaps along one edge of the square only, so the two paths disagree
    D = square_category()
    C = _two_point(cap)
    ident = identity_sfunctor(C)
    functors = {phi: ident for phi in D.arrows}
    functors[((0, 0), (0, 1))] = _swap_functor(C)
    return DiagramSCat(D, {c: C for c in D.objects}, functors, name='broken square')


def _constant(C_of: Callable[[int], SCat], default_base: Callable[[], FinCat], name: str):
    def build(cap: int, base: Optional[FinCat] = None) -> DiagramSCat:
        base = base or default_base()
        C = C_of(cap)
        return constant_diagram(base, C, name='{} over {}'.format(name, base.name))
    return build


def broken_opfibration(cap: int, base: Optional[FinCat] = None) -> GrCat:
    """
    ``Gr`` of ``point -> {v, w}`` (indiscrete, ``Fφ(*) = v``) with the fiber
    isomorphisms ``v <-> w`` removed. Neither vertex over φ out of ``(*, 0)``
    is coCartesian: one target sees an empty hom where the pullback is a point.
    """
    D = arrow_category()
    P = _point(cap)
    V = discrete_scat(indiscrete_category(['v', 'w'], name='{v,w}'), cap)
    F = DiagramSCat(D, {0: P, 1: V},
                    {(0, 0): identity_sfunctor(P), (1, 1): identity_sfunctor(V), (0, 1): _const_functor(P, V, 'v')},
                    name='point->{v,w}')
    E = grothendieck(F)
    total = sub_scat(E.total, E.total.objects,
                     lambda a, b, k, cell: not (a[1] == b[1] == 1 and a != b), name='broken opfibration')
    projection = SFunctor(total, E.projection.target, E.projection.on_objects, E.projection.on_cells, name='P')
    return GrCat(total, projection)


_FIXTURES = [
    Fixture('terminal', FixtureKind.fincat, lambda cap, base=None: terminal_category(), 'the terminal category'),
    Fixture('arrow', FixtureKind.fincat, lambda cap, base=None: arrow_category(), 'the category [1]'),
    Fixture('square', FixtureKind.fincat, lambda cap, base=None: square_category(), 'the commutative square'),
    Fixture('z2', FixtureKind.fincat, lambda cap, base=None: cyclic_group_category(2), 'one object, arrows Z/2'),
    Fixture('point', FixtureKind.monoidal, lambda cap, base=None: _point_monoidal(cap),
            'the terminal enriched category, trivially monoidal'),
    Fixture('bz2', FixtureKind.monoidal, lambda cap, base=None: _monoid_monoidal(cyclic_group_category(2), cap),
            'BZ/2 with group multiplication as tensor'),
    Fixture('bz3', FixtureKind.monoidal, lambda cap, base=None: _monoid_monoidal(cyclic_group_category(3), cap),
            'BZ/3 with group multiplication as tensor'),
    Fixture('idempotent', FixtureKind.monoidal, lambda cap, base=None: _monoid_monoidal(_idempotent(), cap),
            'the monoid {e, a} with aa = a'),
    Fixture('two_point_meet', FixtureKind.monoidal,
            lambda cap, base=None: _meet_monoidal(poset_category([0, 1], lambda x, y: x == y, name='two-point'),
                                                  cap, 'two_point_meet'),
            'two-object discrete category, tensor min with unit 1'),
    Fixture('arrow_meet', FixtureKind.monoidal,
            lambda cap, base=None: _meet_monoidal(arrow_category(), cap, 'arrow_meet'),
            '[1] with its products (min) as tensor'),
    Fixture('ez2', FixtureKind.monoidal, lambda cap, base=None: _one_object_monoidal(ez2(cap), _xor),
            'hom = nerve of the indiscrete groupoid on {0, 1}, tensor XOR'),
    Fixture('delta1_hom', FixtureKind.monoidal, lambda cap, base=None: _one_object_monoidal(delta1_hom(cap), _max),
            'hom = Delta^1 under max; not locally Kan'),
    Fixture('left_zero', FixtureKind.monoidal, lambda cap, base=None: _left_zero(cap),
            'noncommutative monoid whose multiplication breaks interchange', valid=False),
    Fixture('nonassociative', FixtureKind.monoidal, lambda cap, base=None: _nonassociative(cap),
            'discrete three objects with a non-associative tensor', valid=False),
    Fixture('bz2_over_arrow', FixtureKind.diagram,
            _constant(lambda cap: discrete_scat(cyclic_group_category(2), cap), arrow_category, 'BZ/2'),
            'constant BZ/2 over [1]'),
    Fixture('ez2_over_arrow', FixtureKind.diagram, _constant(ez2, arrow_category, 'EZ/2'),
            'constant EZ/2 over [1]'),
    Fixture('bz2_over_square', FixtureKind.diagram,
            _constant(lambda cap: discrete_scat(cyclic_group_category(2), cap), square_category, 'BZ/2'),
            'constant BZ/2 over the square'),
    Fixture('constant-point', FixtureKind.diagram, _constant(_point, arrow_category, 'point'),
            'constant terminal enriched category over any base (default [1])'),
    Fixture('point_to_arrow', FixtureKind.diagram, _point_to_arrow, 'point -> a<b over [1], F(*) = a'),
    Fixture('point_into_square', FixtureKind.diagram, _point_into_square,
            'point at (0, 0) sent to a, a<b at the other corners'),
    Fixture('swap_over_z2', FixtureKind.diagram, _swap_over_z2, 'Z/2 swapping two discrete objects'),
    Fixture('broken_square', FixtureKind.diagram, _broken_square,
            'a square whose two paths act differently', valid=False),
    Fixture('broken_opfibration', FixtureKind.grcat, broken_opfibration,
            'Gr(point -> {v, w}) without fiber isomorphisms; not an opfibration'),
]


def corpus() -> Dict[str, Fixture]:
    """The fixture set keyed by name, in listing order."""
    return {f.name: f for f in _FIXTURES}


def build_as(name: str, kind: FixtureKind, cap: int, base: Optional[FinCat] = None) -> Any:
    """
    Builds a fixture and coerces it to the requested kind.

    A monoidal fixture serves as its underlying SCat, a finite category as its
    discrete enrichment, and a diagram as its Grothendieck construction.

    Raises:
        SchemaError: For unknown names or impossible coercions.
    """
    kind = FixtureKind(kind)
    entry = corpus().get(name)
    if entry is None:
        raise SchemaError('no fixture named {!r}'.format(name))
    built = entry.build(cap, base)
    if entry.kind == kind:
        return built
    if kind == FixtureKind.scat and entry.kind == FixtureKind.monoidal:
        return built.underlying
    if kind == FixtureKind.scat and entry.kind == FixtureKind.fincat:
        return discrete_scat(built, cap)
    if kind == FixtureKind.grcat and entry.kind == FixtureKind.diagram:
        return grothendieck(built)
    raise SchemaError('fixture {!r} is a {}, not a {}'.format(name, entry.kind.value, kind.value))


def validate_structure(obj: Any, d: int = None) -> Report:
    """Runs the validator matching the type of ``obj``."""
    if isinstance(obj, FinCat):
        return validate_fincat(obj)
    if isinstance(obj, MonSCat):
        report = validate_scat(obj.underlying, d)
        if report.ok:
            report.extend(validate_monoidal(obj, d))
        return report
    if isinstance(obj, SCat):
        return validate_scat(obj, d)
    if isinstance(obj, DiagramSCat):
        return validate_diagram_scat(obj, d)
    if isinstance(obj, GrCat):
        report = validate_scat(obj.total, d)
        report.extend(validate_sfunctor(obj.projection, d), prefix='projection ')
        return report
    raise SchemaError('nothing validates a {}'.format(type(obj).__name__))


def validate_fixture(name: str, cap: int, d: int = None) -> Report:
    entry = corpus().get(name)
    if entry is None:
        raise SchemaError('no fixture named {!r}'.format(name))
    report = validate_structure(entry.build(cap, None), d)
    report.subject = name
    return report
