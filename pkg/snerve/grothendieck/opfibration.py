"""
Opfibration criteria for enriched functors onto a discrete base, and the
corresponding horn conditions on nerves.
"""
import logging
from typing import Hashable, Iterable, Optional, Tuple, Union

from snerve.enriched.functor import SFunctor
from snerve.enriched.scat import is_discrete
from snerve.grothendieck.construction import GrArrow, GrCat, cocartesian_lift
from snerve.nerves.coherent import coherent_nerve, coherent_to_ordinary, nerve_of_functor
from snerve.nerves.ordinary import ordinary_nerve
from snerve.simplicial.horn import HornFaces, horn_check, leading_edge, relative_horn_check
from snerve.simplicial.limits import pullback
from snerve.simplicial.maps import SSetMap
from snerve.simplicial.sset import TruncatedSSet
from snerve.types.enum import HornMode
from snerve.types.error import BaseCategoryError, CapError
from snerve.types.report import Report

logger = logging.getLogger(__name__)

ArrowLike = Union[GrArrow, Tuple[Hashable, Hashable, Hashable]]


def _unpack(chi: ArrowLike):
    # GrArrow and OperMorphism both carry source, target and as_cell
    if hasattr(chi, 'as_cell'):
        return chi.source, chi.target, chi.as_cell()
    return chi


def _require_discrete_base(P: SFunctor) -> None:
    if not is_discrete(P.target):
        raise BaseCategoryError('{} does not project onto a discrete base'.format(P.name or 'functor'))


def is_pcocartesian(P: SFunctor, chi: ArrowLike, d: int = None) -> Report:
    """
    Pullback criterion for a vertex ``χ: e -> e'`` of the source of P.

    For every object x the square

        E(e', x) --(-∘χ)--> E(e, x)
           |P                  |P
        B(Pe', Px) -(-∘Pχ)-> B(Pe, Px)

    must be a pullback: the comparison ``g -> (g∘χ, Pg)`` into the pullback is
    a bijection in every dimension up to ``d``.

    Parameters:
    - P (SFunctor): Functor onto a discrete base.
    - chi (GrArrow or tuple): ``(e, e', vertex)``.
    - d (int, optional): Top dimension; defaults to the cap.

    Returns:
    - Report: one ``'pullback over x'`` violation per failing x with witness
      ``(x, k, comparison size, pullback size)``.

    Raises:
    - BaseCategoryError: If the base is not discrete.
    - CapError: If ``d`` exceeds the cap.
    """
    _require_discrete_base(P)
    E, B = P.source, P.target
    d = E.cap if d is None else d
    if d > E.cap:
        raise CapError('dimension {} exceeds cap {}'.format(d, E.cap))
    e, e2, vertex = _unpack(chi)
    report = Report(subject='{!r} P-coCartesian'.format(vertex))
    Pe, Pe2 = P(e), P(e2)
    chi_cells = [vertex]
    Pchi_cells = [P.cell(e, e2, 0, vertex)]
    for k in range(E.cap):
        chi_cells.append(E.hom(e, e2).s(k, 0, chi_cells[-1]))
        Pchi_cells.append(B.hom(Pe, Pe2).s(k, 0, Pchi_cells[-1]))
    for x in E.objects:
        Px = P(x)
        P_ex = P.hom_map(e, x)
        precompose = SSetMap.from_function(B.hom(Pe2, Px), B.hom(Pe, Px),
                                           lambda k, b: B.compose(Pe, Pe2, Px, k, b, Pchi_cells[k]))
        square, _, _ = pullback(P_ex, precompose)
        for k in range(d + 1):
            image = {(E.compose(e, e2, x, k, g, chi_cells[k]), P.cell(e2, x, k, g)) for g in E.hom(e2, x).cells[k]}
            source_size = len(E.hom(e2, x).cells[k])
            target = set(square.cells[k])
            if len(image) != source_size or image != target:
                report.add('pullback over {!r}'.format(x), (x, k, source_size, len(target)))
                break
    return report


def is_opfibration(P: SFunctor, d: int = None) -> Report:
    """
    Checks that every base arrow out of every ``Pe`` has a P-coCartesian lift
    with domain e, searching all vertices over it.

    Returns:
        Report: one violation ``'no coCartesian lift'`` per offending
        ``(e, φ)``.
    """
    _require_discrete_base(P)
    E, B = P.source, P.target
    report = Report(subject='{} opfibration'.format(P.name or 'functor'))
    for e in E.objects:
        for c in B.objects:
            for phi in B.hom(P(e), c).cells[0]:
                found = False
                for e2 in E.objects:
                    if P(e2) != c:
                        continue
                    for vertex in E.hom(e, e2).cells[0]:
                        if P.cell(e, e2, 0, vertex) != phi:
                            continue
                        if is_pcocartesian(P, (e, e2, vertex), d).ok:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    report.add('no coCartesian lift', (e, phi))
    return report


def chosen_lift_report(E: GrCat, d: int = None) -> Report:
    """Runs the pullback criterion on every chosen lift ``(id, φ)``."""
    report = Report(subject='chosen lifts of {}'.format(E.total.name))
    D = E.base
    for e in E.objects:
        for phi in D.arrows_from(e[1]):
            lift = cocartesian_lift(E, e, phi)
            part = is_pcocartesian(E.projection, lift, d)
            report.extend(part, prefix='{!r} along {!r}: '.format(e, phi))
    return report


def projection_nerve_map(P: SFunctor, total_nerve: TruncatedSSet, base_nerve: TruncatedSSet) -> SSetMap:
    """``N(P)`` followed by the identification of ``N(discrete D)`` with ``N(D)``."""
    N_base = coherent_nerve(P.target, total_nerve.cap)
    to_discrete = nerve_of_functor(P, total_nerve, N_base)
    return SSetMap.from_function(total_nerve, base_nerve,
                                 lambda k, cell: coherent_to_ordinary(to_discrete(k, cell)), name='N(P)')


def check_inner_fibration(p: SSetMap, d: int) -> Report:
    """Relative inner horn fillers for ``p``."""
    return relative_horn_check(p, d, lambda n: list(range(1, n)))


def check_cocartesian_edges(p: SSetMap, edges: Iterable, d: int) -> Report:
    """
    For each edge, every outer horn ``Λ^n_0`` whose leading edge it is must
    admit a filler over every filler of its image, for ``2 <= n <= d``.
    """
    edges = set(edges)
    X = p.source

    def accept(n: int, k: int, faces: HornFaces) -> bool:
        return leading_edge(X, n, faces) in edges

    return relative_horn_check(p, d, lambda n: [0], accept=accept)


def lift_edge(lift: ArrowLike) -> tuple:
    """A vertex ``e -> e'`` of a hom complex as a 1-cell of the coherent nerve."""
    source, target, vertex = _unpack(lift)
    return (source, target), (vertex,)


def chosen_lift_edges(E: GrCat) -> list:
    """The chosen lifts as edges of ``N(Gr F)``."""
    return [lift_edge(cocartesian_lift(E, e, phi)) for e in E.objects for phi in E.base.arrows_from(e[1])]


def check_opfibration_nerve(E: GrCat, d: int, total_nerve: Optional[TruncatedSSet] = None) -> Report:
    """
    Truncated coCartesian fibration check of ``N(P): N(Gr F) -> N(D)``:
    inner horns of the total nerve, relative inner horns, and outer horns led
    by chosen lifts.
    """
    total_nerve = total_nerve or coherent_nerve(E.total, d)
    base_nerve = ordinary_nerve(E.base, total_nerve.cap)
    p = projection_nerve_map(E.projection, total_nerve, base_nerve)
    report = Report(subject='N({}) coCartesian fibration'.format(E.total.name))
    report.extend(horn_check(total_nerve, HornMode.inner, d), prefix='quasicategory ')
    report.extend(check_inner_fibration(p, d), prefix='inner fibration ')
    report.extend(check_cocartesian_edges(p, chosen_lift_edges(E), d), prefix='coCartesian ')
    logger.info('%s: %s', report.subject, 'ok' if report.ok else '{} violation(s)'.format(len(report)))
    return report
