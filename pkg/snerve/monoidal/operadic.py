"""
The operadic nerve ``N^⊗(C) = N(C^⊗)`` and its fibers.
"""
import logging
from typing import Optional

from snerve.enriched.functor import SFunctor
from snerve.enriched.scat import SCat, is_locally_kan
from snerve.grothendieck.comparison import check_gr_relnerve_iso, gr_simplex_to_relnerve
from snerve.grothendieck.construction import grothendieck
from snerve.grothendieck.opfibration import check_cocartesian_edges, check_inner_fibration, lift_edge, \
    projection_nerve_map
from snerve.monoidal.monoidal import MonSCat
from snerve.monoidal.operators import apply_cf, c_otimes, c_simplicial_object, check_cotimes_gr_iso, \
    chosen_lift, delta_op, gr_comparison_functor
from snerve.extras.combinatorics import monotone_maps
from snerve.nerves.coherent import coherent_nerve, nerve_of_functor
from snerve.nerves.ordinary import ordinary_nerve
from snerve.nerves.relative import DiagramSSet, relative_nerve
from snerve.simplicial.horn import horn_check
from snerve.simplicial.limits import sset_power
from snerve.simplicial.maps import SSetMap, compose_maps, fiber, is_bijective, validate_map
from snerve.simplicial.sset import TruncatedSSet
from snerve.types.certificate import Certificate
from snerve.types.enum import HornMode
from snerve.types.error import LevelError, NotLocallyKanError
from snerve.types.report import Report

logger = logging.getLogger(__name__)


class OperadicNerve:
    """
    Result of ``operadic_nerve``.

    Attributes:
    - monoidal (MonSCat): The input.
    - delta_max (int): Bound M of the truncated ``Δ^op``.
    - operators (SCat): ``C^⊗``.
    - operator_projection (SFunctor): ``C^⊗ -> Δ^op_{≤M}``.
    - nerve (TruncatedSSet): ``N(C^⊗)``.
    - projection (SSetMap): ``N(C^⊗) -> N(Δ^op_{≤M})``.
    """

    def __init__(self, monoidal: MonSCat, delta_max: int, operators: SCat, operator_projection: SFunctor,
                 nerve: TruncatedSSet, projection: SSetMap):
        self.monoidal = monoidal
        self.delta_max = delta_max
        self.operators = operators
        self.operator_projection = operator_projection
        self.nerve = nerve
        self.projection = projection

    @property
    def cap(self) -> int:
        return self.nerve.cap

    def fiber(self, n: int) -> TruncatedSSet:
        """The fiber over the vertex ``[n]``."""
        return fiber(self.projection, (n,))

    def __repr__(self):
        return '<{}: {} M={} cap={}>'.format(self.__class__.__name__, self.monoidal.name, self.delta_max, self.cap)


def operadic_nerve(C: MonSCat, M: int, cap: int) -> OperadicNerve:
    """
    ``N^⊗(C)`` truncated at ``cap`` over ``N(Δ^op_{≤M})``.

    Raises:
        NotLocallyKanError: If some hom complex of C fails a horn check.
        CapError: If ``cap - 1`` exceeds the hom cap of C.
    """
    kan = is_locally_kan(C.underlying)
    if not kan.ok:
        raise NotLocallyKanError('{} is not locally Kan: {}'.format(C.name, kan.violations[0]))
    total, P = c_otimes(C, M)
    nerve = coherent_nerve(total, cap)
    base = ordinary_nerve(delta_op(M), cap)
    projection = projection_nerve_map(P, nerve, base)
    logger.info('N^⊗(%s): counts %s', C.name, nerve.counts())
    return OperadicNerve(C, M, total, P, nerve, projection)


def check_operadic_fibration(X: OperadicNerve, d: int = None) -> Report:
    """
    Inner horns of ``N^⊗(C)``, relative inner horns of its projection and
    the outer horns led by the chosen lifts, up to dimension ``d``.
    """
    d = X.cap if d is None else d
    C, M = X.monoidal, X.delta_max
    edges = [lift_edge(chosen_lift(C, xs, f)) for xs in X.operators.objects
             for m in range(M + 1) for f in monotone_maps(m, len(xs))]
    report = Report(subject='{} coCartesian fibration'.format(X.nerve.name))
    report.extend(horn_check(X.nerve, HornMode.inner, d), prefix='quasicategory ')
    report.extend(check_inner_fibration(X.projection, d), prefix='inner fibration ')
    report.extend(check_cocartesian_edges(X.projection, edges, d), prefix='coCartesian ')
    return report


def _component(cell: tuple, i: int) -> tuple:
    """Coordinate i of a fiber cell, as a cell of the fiber over ``[1]``."""
    objects, values = cell
    return (tuple((xs[i],) for xs in objects),
            tuple(((0, 1), (comps[i],)) for _, comps in values))


def check_monoidal_fibers(X: OperadicNerve, n: int) -> Certificate:
    """
    Verifies that the fiber over ``[n]`` is ``(fiber over [1])^n`` and that
    the fiber over ``[1]`` is ``N(C)``.

    The comparison is induced by the inert maps ``[n] -> [1]`` picking
    ``{i-1, i}``; in the strict setting pushing a fiber cell along the i-th
    of them reads off its i-th coordinate.

    Raises:
        LevelError: If n exceeds the bound of the truncated ``Δ^op``.
    """
    if not 0 <= n <= X.delta_max:
        raise LevelError('level {} outside Delta^op_{}'.format(n, X.delta_max))
    C = X.monoidal
    cert = Certificate(command='check fibers {} --level {}'.format(C.name, n))
    Fn, F1 = X.fiber(n), X.fiber(1)
    target = sset_power([F1] * n, X.cap)
    cert.counts['fiber [{}]'.format(n)] = list(Fn.counts())
    cert.counts['fiber [1]^{}'.format(n)] = list(target.counts())
    bad = next((xs for (xs,), _ in Fn.cells[0] for i in range(1, n + 1)
                if apply_cf(C, (i - 1, i), xs) != (xs[i - 1],)), None)
    cert.record('inert lifts read coordinates', bad is None, bad)
    comparison = SSetMap.from_function(Fn, target, lambda k, cell: tuple(_component(cell, i) for i in range(n)),
                                       name='fiber comparison')
    cert.record('comparison bijective', is_bijective(comparison))
    cert.record_report('comparison simplicial', validate_map(comparison))

    NC = coherent_nerve(C.underlying, X.cap)
    to_nerve = SSetMap.from_function(
        F1, NC, lambda k, cell: (tuple(xs[0] for xs in cell[0]), tuple(comps[0] for _, comps in cell[1])),
        name='fiber [1] -> N(C)')
    cert.counts['N(C)'] = list(NC.counts())
    cert.record('fiber [1] bijective onto N(C)', is_bijective(to_nerve))
    cert.record_report('fiber [1] -> N(C) simplicial', validate_map(to_nerve))
    logger.info('%s: %s', cert.command, cert.verdict)
    return cert.finish()


def check_composite_certificate(C: MonSCat, M: int, n_max: int, X: Optional[OperadicNerve] = None) -> Certificate:
    """
    ``N^⊗(C) ≅ N(Gr C^•) ≅ N_{N∘C^•}(Δ^op)`` as one certificate: both
    comparison certificates and the composite map checked over ``N(Δ^op)``.
    """
    cert = Certificate(command='check composite {} --delta-max {} --nmax {}'.format(C.name, M, n_max))
    cert.absorb(check_cotimes_gr_iso(C, M), prefix='C⊗ = Gr C•: ')
    F = c_simplicial_object(C, M, verify=False)
    E = grothendieck(F, check=False)
    cert.absorb(check_gr_relnerve_iso(F, n_max, E), prefix='N(Gr) = N_f: ')
    X = X or operadic_nerve(C, M, n_max)
    N_gr = coherent_nerve(E.total, n_max)
    to_gr = nerve_of_functor(gr_comparison_functor(C, X.operators, E), X.nerve, N_gr)
    f = DiagramSSet.nerve_of(F, n_max)
    N_rel, p_rel = relative_nerve(F.base, f, n_max)
    to_rel = SSetMap.from_function(N_gr, N_rel, lambda k, c: gr_simplex_to_relnerve(F, c), name='Gr->rel')
    composite = compose_maps(to_rel, to_gr)
    cert.record('composite bijective', is_bijective(composite))
    cert.record_report('composite simplicial', validate_map(composite))
    bad = next(((k, c) for k in range(n_max + 1) for c in X.nerve.cells[k]
                if p_rel(k, composite(k, c)) != X.projection(k, c)), None)
    cert.record('composite over N(Δ^op)', bad is None, bad)
    logger.info('%s: %s', cert.command, cert.verdict)
    return cert.finish()
