import itertools
from typing import Callable, Dict, Hashable

from snerve.enriched.fincat import FinFunctor
from snerve.enriched.scat import SCat, discrete_scat, opposite_scat, scat_equal
from snerve.simplicial.maps import SSetMap, validate_map
from snerve.simplicial.sset import Cell
from snerve.types.report import Report

Obj = Hashable
CellMap = Callable[[Obj, Obj, int, Cell], Cell]


class SFunctor:
    """
    A strict enriched functor.

    Parameters:
    - source, target (SCat): Domain and codomain.
    - on_objects (dict): Object map.
    - on_cells (callable): ``on_cells(x, y, k, c)`` is the image in
      ``target.hom(Fx, Fy)`` of the k-cell ``c`` of ``source.hom(x, y)``.
    - name (str, optional): Label.
    """

    def __init__(self, source: SCat, target: SCat, on_objects: Dict[Obj, Obj], on_cells: CellMap, name: str = ''):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_cells = on_cells
        self.name = name

    def __call__(self, x: Obj) -> Obj:
        return self.on_objects[x]

    def cell(self, x: Obj, y: Obj, k: int, c: Cell) -> Cell:
        return self.on_cells(x, y, k, c)

    def hom_map(self, x: Obj, y: Obj) -> SSetMap:
        """The hom assignment ``source.hom(x, y) -> target.hom(Fx, Fy)`` as a simplicial map."""
        return SSetMap.from_function(self.source.hom(x, y), self.target.hom(self(x), self(y)),
                                     lambda k, c: self.on_cells(x, y, k, c),
                                     name='{}({!r},{!r})'.format(self.name, x, y))

    def __repr__(self):
        return '<{}: {} {} -> {}>'.format(self.__class__.__name__, self.name or '-', self.source.name,
                                          self.target.name)


def validate_sfunctor(F: SFunctor, d: int = None) -> Report:
    """
    Checks that ``F`` preserves identities and composition on the nose and
    that every hom assignment is a simplicial map, up to dimension ``d``.
    """
    C, D = F.source, F.target
    d = min(C.cap, D.cap) if d is None else d
    report = Report(subject=F.name or 'sfunctor')
    for x in C.objects:
        if x not in F.on_objects or F(x) not in D.objects:
            report.add('object leaves target', x)
    if not report.ok:
        return report
    for x, y in itertools.product(C.objects, repeat=2):
        report.extend(validate_map(F.hom_map(x, y)), prefix='hom({!r},{!r}) '.format(x, y))
    for x in C.objects:
        if F.cell(x, x, 0, C.ident[x]) != D.ident[F(x)]:
            report.add('identity', x)
    if not report.ok:
        return report
    for x, y, z in itertools.product(C.objects, repeat=3):
        for k in range(d + 1):
            for g in C.hom(y, z).cells[k]:
                Fg = F.cell(y, z, k, g)
                for f in C.hom(x, y).cells[k]:
                    lhs = F.cell(x, z, k, C.compose(x, y, z, k, g, f))
                    rhs = D.compose(F(x), F(y), F(z), k, Fg, F.cell(x, y, k, f))
                    if lhs != rhs:
                        report.add('composition', (x, y, z, k, g, f))
    return report


def identity_sfunctor(C: SCat) -> SFunctor:
    return SFunctor(C, C, {x: x for x in C.objects}, lambda x, y, k, c: c, name='id')


def compose_sfunctors(G: SFunctor, F: SFunctor) -> SFunctor:
    """``G∘F``."""
    def on_cells(x, y, k, c):
        return G.on_cells(F(x), F(y), k, F.on_cells(x, y, k, c))

    return SFunctor(F.source, G.target, {x: G(F(x)) for x in F.source.objects}, on_cells,
                    name='{}∘{}'.format(G.name, F.name))


def opposite_sfunctor(F: SFunctor, source_op: SCat = None, target_op: SCat = None) -> SFunctor:
    """
    ``F^op: C^op -> D^op`` with the same object map and ``F^op_{x,y} = F_{y,x}``.
    """
    source_op = source_op or opposite_scat(F.source)
    target_op = target_op or opposite_scat(F.target)

    def on_cells(x, y, k, c):
        return F.on_cells(y, x, k, c)

    return SFunctor(source_op, target_op, F.on_objects, on_cells, name=F.name + '^op' if F.name else '')


def discrete_sfunctor(F: FinFunctor, cap: int, source: SCat = None, target: SCat = None) -> SFunctor:
    """A functor of finite categories between their discrete enrichments."""
    source = source or discrete_scat(F.source, cap)
    target = target or discrete_scat(F.target, cap)
    return SFunctor(source, target, F.on_objects, lambda x, y, k, c: F.on_arrows[c],
                    name='{}->{}'.format(F.source.name, F.target.name))


def sfunctor_equal(F: SFunctor, G: SFunctor, check_categories: bool = True) -> bool:
    """Equality on data: same object map and the same image of every hom cell."""
    if check_categories and not (scat_equal(F.source, G.source) and scat_equal(F.target, G.target)):
        return False
    if F.on_objects != G.on_objects:
        return False
    C = F.source
    for x, y in itertools.product(C.objects, repeat=2):
        H = C.hom(x, y)
        for k in range(min(F.target.cap, G.target.cap, C.cap) + 1):
            for c in H.cells[k]:
                if F.on_cells(x, y, k, c) != G.on_cells(x, y, k, c):
                    return False
    return True
