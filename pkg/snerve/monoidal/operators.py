"""
The simplicial object ``C^•`` and the category of operators ``C^⊗``.

A monotone ``f: [m] -> [n]`` acts on sequences of level n by

    y_i = x_{f(i-1)+1} ⊗ ... ⊗ x_{f(i)},    1 <= i <= m,

the empty tensor being the unit, and on hom cells by tensoring the same
blocks. ``Δ^op`` is truncated at a bound M: its arrows are ``(n, f)`` for
``f: [m] -> [n]``, read as arrows ``[n] -> [m]``.
"""
import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from snerve.enriched.fincat import FinCat
from snerve.enriched.functor import SFunctor, compose_sfunctors, identity_sfunctor, sfunctor_equal, \
    validate_sfunctor
from snerve.enriched.scat import SCat, discrete_scat, scat_power
from snerve.extras.combinatorics import Monotone, compose_monotone, decompose_monotone, generator_map, \
    identity_monotone, monotone_maps
from snerve.grothendieck.construction import GrCat, grothendieck
from snerve.grothendieck.diagram import DiagramSCat
from snerve.monoidal.monoidal import MonSCat, OperMorphism, SeqObject
from snerve.simplicial.limits import coproduct, sset_power
from snerve.simplicial.maps import is_bijective
from snerve.simplicial.sset import Cell, TruncatedSSet
from snerve.types.certificate import Certificate
from snerve.types.error import LevelError, SimplicialIdentityError
from snerve.types.report import Report

logger = logging.getLogger(__name__)


def delta_op(M: int) -> FinCat:
    """
    ``Δ^op`` on the objects ``0, ..., M``.

    Example:
        >>> len(delta_op(1).hom(1, 1))
        3
    """
    objects = list(range(M + 1))
    arrows = {}
    for n in objects:
        for m in objects:
            for f in monotone_maps(m, n):
                arrows[(n, f)] = (n, m)
    comp = {}
    for (n, f), (_, m) in arrows.items():
        for l in objects:
            for g in monotone_maps(l, m):
                comp[((m, g), (n, f))] = (n, compose_monotone(f, g))
    identities = {n: (n, identity_monotone(n)) for n in objects}
    return FinCat(objects, arrows, comp, identities, name='Delta^op_{}'.format(M))


def _blocks(f: Monotone) -> List[Tuple[int, int]]:
    return [(f[i - 1], f[i]) for i in range(1, len(f))]


def _check_level(f: Monotone, xs: Sequence, n: int = None) -> None:
    if n is not None and n != len(xs):
        raise LevelError('sequence has level {}, expected {}'.format(len(xs), n))
    if f and (f[-1] > len(xs) or f[0] < 0):
        raise LevelError('{} does not map into [{}]'.format(f, len(xs)))


def apply_cf(C: MonSCat, f: Monotone, xs: SeqObject, n: int = None) -> SeqObject:
    """
    ``C^f`` on a sequence of objects.

    Args:
        C (MonSCat): The monoidal category.
        f (tuple): Monotone ``[m] -> [n]``.
        xs (tuple): Sequence of level n.
        n (int, optional): Expected level of ``xs``.

    Returns:
        tuple: The sequence ``(y_1, ..., y_m)``.

    Raises:
        LevelError: If the level of ``xs`` does not match.
    """
    _check_level(f, xs, n)
    return tuple(C.tensor_objects(xs[a:b]) for a, b in _blocks(f))


def apply_cf_cells(C: MonSCat, f: Monotone, xs: SeqObject, ys: SeqObject, k: int, cells: Sequence[Cell]) -> tuple:
    """
    ``C^f`` on a k-cell ``(φ_1, ..., φ_n)`` of ``C^n(xs, ys)``:
    ``ψ_i = φ_{f(i-1)+1} ⊗ ... ⊗ φ_{f(i)}``.

    Raises:
        LevelError: If the levels do not match.
    """
    _check_level(f, xs)
    if len(xs) != len(ys) or len(cells) != len(xs):
        raise LevelError('cell of level {} between sequences of levels {} and {}'.format(
            len(cells), len(xs), len(ys)))
    return tuple(C.tensor_cells(xs[a:b], ys[a:b], k, cells[a:b]) for a, b in _blocks(f))


def c_face_functor(C: MonSCat, n: int, i: int, powers: Dict[int, SCat] = None) -> SFunctor:
    """
    ``C^{δ_i}: C^n -> C^{n-1}``: drop the first coordinate (i = 0), drop the
    last (i = n), or tensor coordinates i and i+1.
    """
    powers = powers or {}
    source = powers.get(n) or scat_power(C.underlying, n)
    target = powers.get(n - 1) or scat_power(C.underlying, n - 1)

    def on_object(xs):
        if i == 0:
            return xs[1:]
        if i == n:
            return xs[:-1]
        return xs[:i - 1] + (C.tensor_object(xs[i - 1], xs[i]),) + xs[i + 1:]

    def on_cells(xs, ys, k, c):
        if i == 0:
            return c[1:]
        if i == n:
            return c[:-1]
        merged = C.tensor_cell(xs[i - 1], xs[i], ys[i - 1], ys[i], k, c[i - 1], c[i])
        return c[:i - 1] + (merged,) + c[i + 1:]

    return SFunctor(source, target, {xs: on_object(xs) for xs in source.objects}, on_cells,
                    name='C^d{}_{}'.format(i, n))


def c_degeneracy_functor(C: MonSCat, n: int, i: int, powers: Dict[int, SCat] = None) -> SFunctor:
    """``C^{σ_i}: C^n -> C^{n+1}`` inserting the unit after position i."""
    powers = powers or {}
    source = powers.get(n) or scat_power(C.underlying, n)
    target = powers.get(n + 1) or scat_power(C.underlying, n + 1)
    unit = C.unit

    def on_cells(xs, ys, k, c):
        return c[:i] + (C.underlying.ident_cell(unit, k),) + c[i:]

    return SFunctor(source, target, {xs: xs[:i] + (unit,) + xs[i:] for xs in source.objects}, on_cells,
                    name='C^s{}_{}'.format(i, n))


def _closed_functor(C: MonSCat, f: Monotone, source: SCat, target: SCat) -> SFunctor:
    def on_cells(xs, ys, k, c):
        return apply_cf_cells(C, f, xs, ys, k, c)

    return SFunctor(source, target, {xs: apply_cf(C, f, xs) for xs in source.objects}, on_cells,
                    name='C^{}'.format(list(f)))


def _generators(M: int) -> List[Tuple[str, int, int]]:
    out = [('delta', d, i) for d in range(1, M + 1) for i in range(d + 1)]
    out += [('sigma', d, i) for d in range(M) for i in range(d + 1)]
    return out


def _generator_functor(C: MonSCat, gen: Tuple[str, int, int], powers: Dict[int, SCat]) -> SFunctor:
    kind, d, i = gen
    if kind == 'delta':
        return c_face_functor(C, d, i, powers)
    return c_degeneracy_functor(C, d, i, powers)


def _gen_dims(gen: Tuple[str, int, int]) -> Tuple[int, int]:
    """``(source, target)`` dimensions of the monotone generator."""
    kind, d, _ = gen
    return (d - 1, d) if kind == 'delta' else (d + 1, d)


def check_generator_identities(C: MonSCat, M: int, powers: Dict[int, SCat] = None) -> Report:
    """
    Checks the simplicial identities on the generator functors.

    Every simplicial identity equates two words of length at most two in the
    generators, so it is enough to group all such words by the monotone map
    they compose to and compare the functors within each group.
    """
    powers = powers or {n: scat_power(C.underlying, n) for n in range(M + 1)}
    gens = _generators(M)
    functors = {g: _generator_functor(C, g, powers) for g in gens}
    words: Dict[Tuple[int, Monotone], list] = {}
    for g in gens:
        _, b = _gen_dims(g)
        words.setdefault((b, generator_map(*g)), []).append((g,))
    for g1, g2 in itertools.product(gens, repeat=2):
        _, b1 = _gen_dims(g1)
        a2, b2 = _gen_dims(g2)
        if b1 != a2:
            continue
        h = compose_monotone(generator_map(*g2), generator_map(*g1))
        words.setdefault((b2, h), []).append((g2, g1))
    report = Report(subject='{}^• generators'.format(C.name))
    for (n, h), group in words.items():
        if h == identity_monotone(n):
            group = group + [()]
        if len(group) < 2:
            continue
        images = [_word_functor(word, functors, powers[n]) for word in group]
        for word, image in zip(group[1:], images[1:]):
            if not sfunctor_equal(images[0], image, check_categories=False):
                report.add('simplicial identity', (group[0], word))
    return report


def _word_functor(word, functors, start: SCat) -> SFunctor:
    # word lists generators left to right as monotone maps; functors compose the other way
    out = identity_sfunctor(start)
    for g in word:
        out = compose_sfunctors(functors[g], out)
    return out


def c_simplicial_object(C: MonSCat, M: int, verify: bool = True) -> DiagramSCat:
    """
    The simplicial object ``C^•: Δ^op_{≤M} -> sCat`` sending ``[n]`` to ``C^n``.

    Every arrow acts by the closed formula of ``apply_cf``. With ``verify``
    the generator functors are checked against the simplicial identities and
    every closed-formula functor against the composite of the generators in
    its decomposition.

    Raises:
        SimplicialIdentityError: If a check fails; this only happens for a
            tensor that is not strict.
    """
    D = delta_op(M)
    powers = {n: scat_power(C.underlying, n) for n in range(M + 1)}
    functors = {}
    for (n, f), (_, m) in D.arrows.items():
        functors[(n, f)] = _closed_functor(C, f, powers[n], powers[m])
    if verify:
        report = check_generator_identities(C, M, powers)
        gens = {g: _generator_functor(C, g, powers) for g in _generators(M)}
        for (n, f), G in functors.items():
            if not sfunctor_equal(_word_functor(decompose_monotone(f, n), gens, powers[n]), G, check_categories=False):
                report.add('closed formula', (n, f))
        if not report.ok:
            raise SimplicialIdentityError('{}^• is not a simplicial object: {}'.format(C.name, report.violations[0]))
    logger.debug('%s^• over %s: %d arrows', C.name, D.name, len(functors))
    return DiagramSCat(D, powers, functors, name='{}^•'.format(C.name))


def _operator_hom(C: MonSCat, xs: SeqObject, ys: SeqObject, cache: dict) -> TruncatedSSet:
    n, m = len(xs), len(ys)
    summands = []
    for f in monotone_maps(m, n):
        sources = apply_cf(C, f, xs)
        factors = [C.underlying.hom(a, b) for a, b in zip(sources, ys)]
        key = tuple(id(H) for H in factors)
        if key not in cache:
            cache[key] = sset_power(factors, C.cap)
        summands.append((f, cache[key]))
    return coproduct(summands, C.cap, name='C⊗({!r},{!r})'.format(xs, ys))


def sequences(C: MonSCat, M: int) -> List[SeqObject]:
    """All sequences of objects of level at most M, shortest first."""
    return [xs for n in range(M + 1) for xs in itertools.product(C.objects, repeat=n)]


def c_otimes(C: MonSCat, M: int) -> Tuple[SCat, SFunctor]:
    """
    The category of operators ``C^⊗`` truncated at level M, with its
    projection to the discrete ``Δ^op_{≤M}``.

    A k-cell of ``hom(xs, ys)`` is ``(f, (f_1, ..., f_m))`` with
    ``f: [m] -> [n]`` and ``f_i`` a k-cell of
    ``C(x_{f(i-1)+1} ⊗ ... ⊗ x_{f(i)}, y_i)``. Composition is
    ``h_i = g_i ∘ (f_{g(i-1)+1} ⊗ ... ⊗ f_{g(i)})`` over ``f∘g``.

    Returns:
        tuple: ``(C^⊗, P)``.
    """
    objects = sequences(C, M)
    cache: dict = {}
    homs = {(xs, ys): _operator_hom(C, xs, ys, cache) for xs in objects for ys in objects}
    U = C.underlying

    def compose(xs, ys, zs, k, g_cell, f_cell):
        g, gs = g_cell
        f, fs = f_cell
        mids = apply_cf(C, f, xs)
        out = []
        for i, (a, b) in enumerate(_blocks(g)):
            source = C.tensor_objects(mids[a:b])
            middle = C.tensor_objects(ys[a:b])
            tensored = C.tensor_cells(mids[a:b], ys[a:b], k, fs[a:b])
            out.append(U.compose(source, middle, zs[i], k, gs[i], tensored))
        return compose_monotone(f, g), tuple(out)

    ident = {xs: (identity_monotone(len(xs)), tuple(U.ident[x] for x in xs)) for xs in objects}
    total = SCat(objects, homs, compose, ident, C.cap, name='{}^⊗'.format(C.name))
    base = discrete_scat(delta_op(M), C.cap)
    projection = SFunctor(total, base, {xs: len(xs) for xs in objects},
                          lambda a, b, k, cell: (len(a), cell[0]), name='P')
    logger.debug('%s: %d objects', total.name, len(objects))
    return total, projection


def chosen_lift(C: MonSCat, xs: SeqObject, f: Monotone) -> OperMorphism:
    """
    ``[f; 1_{y_1}, ..., 1_{y_m}]`` out of ``xs`` with ``y = apply_cf(f, xs)``.

    Raises:
        LevelError: If f does not map into the level of ``xs``.
    """
    ys = apply_cf(C, f, xs)
    return OperMorphism(tuple(xs), ys, tuple(f), tuple(C.underlying.ident[y] for y in ys))


def check_split_cleavage(C: MonSCat, M: int, total: SCat = None) -> Report:
    """
    Checks that the chosen lifts form a split cleavage: the lift of an
    identity is the identity and the lift of ``f∘g`` is the lift of g at
    ``C^f xs`` after the lift of f at ``xs``.
    """
    total = total or c_otimes(C, M)[0]
    report = Report(subject='{} cleavage'.format(total.name))
    for xs in total.objects:
        n = len(xs)
        ident = chosen_lift(C, xs, identity_monotone(n))
        if ident.as_cell() != total.ident[xs]:
            report.add('identity lift', xs)
        for m in range(M + 1):
            for f in monotone_maps(m, n):
                lf = chosen_lift(C, xs, f)
                for l in range(M + 1):
                    for g in monotone_maps(l, m):
                        lg = chosen_lift(C, lf.target, g)
                        both = total.compose(xs, lf.target, lg.target, 0, lg.as_cell(), lf.as_cell())
                        if both != chosen_lift(C, xs, compose_monotone(f, g)).as_cell():
                            report.add('lift of composite', (xs, f, g))
    return report


def gr_comparison_functor(C: MonSCat, total: SCat, E: GrCat) -> SFunctor:
    """
    ``C^⊗ -> Gr C^•``: ``[x_1, ..., x_n] -> ((x_1, ..., x_n), [n])`` and
    ``(f, (f_1, ..., f_m)) -> ((f_1, ..., f_m), (n, f))``.
    """
    return SFunctor(total, E.total, {xs: (xs, len(xs)) for xs in total.objects},
                    lambda a, b, k, cell: (cell[1], (len(a), cell[0])), name='Phi')


def check_cotimes_gr_iso(C: MonSCat, M: int, d: int = None) -> Certificate:
    """
    Verifies ``C^⊗ ≅ Gr C^•`` over the truncated ``Δ^op``.

    The comparison functor must be bijective on objects, an isomorphism on
    every hom complex, strictly functorial up to dimension ``d`` and compatible
    with the two projections.
    """
    cert = Certificate(command='check cotimes-gr {} --delta-max {}'.format(C.name, M))
    total, P = c_otimes(C, M)
    E = grothendieck(c_simplicial_object(C, M))
    Phi = gr_comparison_functor(C, total, E)
    width = C.cap + 1
    cert.counts['C⊗ hom cells'] = [sum(H.counts()[k] for H in total.homs.values()) for k in range(width)]
    cert.counts['Gr hom cells'] = [sum(H.counts()[k] for H in E.total.homs.values()) for k in range(width)]
    images = [Phi(xs) for xs in total.objects]
    cert.record('bijective on objects', len(set(images)) == len(images) and set(images) == set(E.objects),
                sorted(set(E.objects) - set(images), key=repr)[:1] or None)
    bad = next(((a, b) for a in total.objects for b in total.objects if not is_bijective(Phi.hom_map(a, b))), None)
    cert.record('hom isomorphisms', bad is None, bad)
    cert.record_report('functor', validate_sfunctor(Phi, d))
    bad = next(((a, b, k, c) for a in total.objects for b in total.objects for k in range(width)
                for c in total.hom(a, b).cells[k]
                if E.projection.cell(Phi(a), Phi(b), k, Phi.cell(a, b, k, c)) != P.cell(a, b, k, c)), None)
    cert.record('commutes with projections',
                bad is None and all(E.projection(Phi(xs)) == P(xs) for xs in total.objects), bad)
    logger.info('%s: %s', cert.command, cert.verdict)
    return cert.finish()
