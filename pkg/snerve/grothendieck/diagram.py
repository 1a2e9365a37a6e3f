from typing import Dict

from snerve.enriched.fincat import Arrow, FinCat, Obj
from snerve.enriched.functor import SFunctor, compose_sfunctors, identity_sfunctor, opposite_sfunctor, \
    sfunctor_equal, validate_sfunctor
from snerve.enriched.scat import SCat, opposite_scat
from snerve.types.error import CapError, FunctorialityError
from snerve.types.report import Report


class DiagramSCat:
    """
    A strict functor from a finite category into enriched categories.

    Parameters:
    - base (FinCat): The indexing category D.
    - values (dict): Object c -> SCat ``F(c)``; all share one cap.
    - functors (dict): Arrow φ -> SFunctor ``Fφ``.
    - name (str, optional): Label.
    """

    def __init__(self, base: FinCat, values: Dict[Obj, SCat], functors: Dict[Arrow, SFunctor], name: str = ''):
        self.base = base
        self.values = dict(values)
        self.functors = dict(functors)
        self.name = name
        caps = {C.cap for C in self.values.values()}
        if len(caps) > 1:
            raise CapError('diagram values have different caps: {}'.format(sorted(caps)))
        self.cap = caps.pop() if caps else 0

    def __call__(self, c: Obj) -> SCat:
        return self.values[c]

    def functor(self, phi: Arrow) -> SFunctor:
        return self.functors[phi]

    def on_object(self, phi: Arrow, x: Obj) -> Obj:
        return self.functors[phi](x)

    def on_cell(self, phi: Arrow, x: Obj, y: Obj, k: int, c):
        return self.functors[phi].on_cells(x, y, k, c)

    def __repr__(self):
        return '<{}: {} over {}>'.format(self.__class__.__name__, self.name or '-', self.base.name)


def constant_diagram(base: FinCat, C: SCat, name: str = '') -> DiagramSCat:
    ident = identity_sfunctor(C)
    return DiagramSCat(base, {c: C for c in base.objects}, {phi: ident for phi in base.arrows},
                       name=name or 'const({})'.format(C.name))


def validate_diagram_scat(F: DiagramSCat, d: int = None) -> Report:
    """
    Checks every ``Fφ`` is a strict functor between the right values and that
    ``F(id) = id`` and ``F(ψφ) = Fψ∘Fφ`` on data.
    """
    D = F.base
    report = Report(subject=F.name or 'diagram')
    for phi, (c, e) in D.arrows.items():
        G = F.functors.get(phi)
        if G is None or G.source is not F(c) or G.target is not F(e):
            report.add('functor has wrong endpoints', phi)
            continue
        report.extend(validate_sfunctor(G, d), prefix='F({!r}) '.format(phi))
    if not report.ok:
        return report
    for c in D.objects:
        if not sfunctor_equal(F.functor(D.identity(c)), identity_sfunctor(F(c)), check_categories=False):
            report.add('identity', c)
    for (psi, phi), composite in D.comp.items():
        both = compose_sfunctors(F.functor(psi), F.functor(phi))
        if not sfunctor_equal(both, F.functor(composite), check_categories=False):
            report.add('composition', (psi, phi))
    return report


def check_diagram(F: DiagramSCat) -> None:
    """
    Raises:
        FunctorialityError: With the first violation as witness.
    """
    report = validate_diagram_scat(F)
    if not report.ok:
        first = report.violations[0]
        raise FunctorialityError('{} is not a functor: {}'.format(F.name, first), witness=first.witness)


def op_diagram(F: DiagramSCat) -> DiagramSCat:
    """Post-composition with the opposite functor: ``c -> F(c)^op``."""
    values = {c: opposite_scat(F(c)) for c in F.base.objects}
    functors = {phi: opposite_sfunctor(F.functor(phi), values[F.base.src(phi)], values[F.base.tgt(phi)])
                for phi in F.base.arrows}
    name = F.name[:-3] if F.name.endswith('^op') else F.name + '^op'
    return DiagramSCat(F.base, values, functors, name=name)
