"""
Finite ordinary categories and functors between them.
"""
import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterator, List, Sequence, Tuple

from snerve.types.report import Report

Obj = Hashable
Arrow = Hashable


class FinCat:
    """
    A finite category given by explicit tables.

    Parameters:
    - objects (sequence): The objects, in a fixed order.
    - arrows (dict): Arrow name -> ``(source, target)``.
    - comp (dict): ``(g, f) -> g∘f`` for every composable pair.
    - identities (dict): Object -> name of its identity arrow.
    - name (str, optional): Label.
    """

    def __init__(self,
                 objects: Sequence[Obj],
                 arrows: Dict[Arrow, Tuple[Obj, Obj]],
                 comp: Dict[Tuple[Arrow, Arrow], Arrow],
                 identities: Dict[Obj, Arrow],
                 name: str = ''):
        self.objects = tuple(objects)
        self.arrows = dict(arrows)
        self.comp = dict(comp)
        self.identities = dict(identities)
        self.name = name
        self._hom: Dict[Tuple[Obj, Obj], List[Arrow]] = {(x, y): [] for x in self.objects for y in self.objects}
        for f, (x, y) in self.arrows.items():
            self._hom[(x, y)].append(f)

    def src(self, f: Arrow) -> Obj:
        return self.arrows[f][0]

    def tgt(self, f: Arrow) -> Obj:
        return self.arrows[f][1]

    def hom(self, x: Obj, y: Obj) -> List[Arrow]:
        return self._hom[(x, y)]

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        return self.comp[(g, f)]

    def identity(self, x: Obj) -> Arrow:
        return self.identities[x]

    def is_identity(self, f: Arrow) -> bool:
        return self.identities.get(self.src(f)) == f

    def arrows_from(self, x: Obj) -> List[Arrow]:
        return [f for y in self.objects for f in self._hom[(x, y)]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinCat):
            return NotImplemented
        return (set(self.objects) == set(other.objects) and self.arrows == other.arrows
                and self.comp == other.comp and self.identities == other.identities)

    __hash__ = None

    def __repr__(self):
        return '<{}: {} objects={} arrows={}>'.format(self.__class__.__name__, self.name or '-',
                                                     len(self.objects), len(self.arrows))


def validate_fincat(D: FinCat) -> Report:
    """Checks that the tables define a category."""
    report = Report(subject=D.name or 'fincat')
    for x in D.objects:
        i = D.identities.get(x)
        if i is None or D.arrows.get(i) != (x, x):
            report.add('identity', x)
    for (g, f), h in D.comp.items():
        if D.tgt(f) != D.src(g):
            report.add('composite of non-composable pair', (g, f))
        elif D.arrows.get(h) != (D.src(f), D.tgt(g)):
            report.add('composite has wrong endpoints', (g, f, h))
    for f, (x, y) in D.arrows.items():
        for g in D.arrows_from(y):
            if (g, f) not in D.comp:
                report.add('composite missing', (g, f))
    if not report.ok:
        return report
    for f, (x, y) in D.arrows.items():
        if D.compose(f, D.identity(x)) != f or D.compose(D.identity(y), f) != f:
            report.add('unit law', f)
        for g in D.arrows_from(y):
            for h in D.arrows_from(D.tgt(g)):
                if D.compose(h, D.compose(g, f)) != D.compose(D.compose(h, g), f):
                    report.add('associativity', (h, g, f))
    return report


def opposite_fincat(D: FinCat) -> FinCat:
    """``D^op``: same arrow names with source and target swapped."""
    arrows = {f: (y, x) for f, (x, y) in D.arrows.items()}
    comp = {(f, g): h for (g, f), h in D.comp.items()}
    name = D.name[:-3] if D.name.endswith('^op') else (D.name + '^op' if D.name else '')
    return FinCat(D.objects, arrows, comp, D.identities, name=name)


def terminal_category() -> FinCat:
    return FinCat(['*'], {'id': ('*', '*')}, {('id', 'id'): 'id'}, {'*': 'id'}, name='terminal')


def poset_category(elements: Sequence[Obj], leq: Callable[[Obj, Obj], bool], name: str = '') -> FinCat:
    """
    The category of a finite poset; the arrow ``x -> y`` is named ``(x, y)``.
    """
    elements = list(elements)
    arrows = {(x, y): (x, y) for x in elements for y in elements if leq(x, y)}
    comp = {((y, z), (x, y)): (x, z) for (x, y) in arrows for (y2, z) in arrows if y2 == y}
    return FinCat(elements, arrows, comp, {x: (x, x) for x in elements}, name=name)


def linear_order_category(n: int) -> FinCat:
    """The category ``[n]``."""
    return poset_category(range(n + 1), lambda x, y: x <= y, name='[{}]'.format(n))


def arrow_category() -> FinCat:
    """``[1]``: objects 0 and 1 and the single nonidentity arrow ``(0, 1)``."""
    return linear_order_category(1)


def square_category() -> FinCat:
    """The commutative square ``[1] x [1]``."""
    elements = [(a, b) for a in (0, 1) for b in (0, 1)]
    return poset_category(elements, lambda x, y: x[0] <= y[0] and x[1] <= y[1], name='square')


def monoid_category(elements: Sequence[Arrow], mult: Callable[[Arrow, Arrow], Arrow], unit: Arrow,
                    name: str = '') -> FinCat:
    """
    One-object category of a finite monoid; ``g∘f`` is ``mult(g, f)``.

    Example:
        >>> Z2 = monoid_category([0, 1], lambda g, f: (g + f) % 2, 0, name='Z/2')
        >>> Z2.compose(1, 1)
        0
    """
    arrows = {a: ('*', '*') for a in elements}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCat(['*'], arrows, comp, {'*': unit}, name=name)


def cyclic_group_category(n: int) -> FinCat:
    return monoid_category(list(range(n)), lambda g, f: (g + f) % n, 0, name='Z/{}'.format(n))


def indiscrete_category(objects: Sequence[Obj], name: str = '') -> FinCat:
    """Exactly one arrow ``(x, y)`` between any two objects."""
    return poset_category(objects, lambda x, y: True, name=name)


def fincat_product(C: FinCat, D: FinCat) -> FinCat:
    objects = list(itertools.product(C.objects, D.objects))
    arrows = {(f, g): ((C.src(f), D.src(g)), (C.tgt(f), D.tgt(g))) for f in C.arrows for g in D.arrows}
    comp = {((g1, g2), (f1, f2)): (C.comp[(g1, f1)], D.comp[(g2, f2)])
            for (g1, f1) in C.comp for (g2, f2) in D.comp}
    identities = {(x, y): (C.identity(x), D.identity(y)) for x, y in objects}
    return FinCat(objects, arrows, comp, identities, name='{} x {}'.format(C.name, D.name))


@dataclass(frozen=True, eq=False)
class FinFunctor:
    """
    A functor between finite categories.

    Attributes:
    - source, target (FinCat)
    - on_objects (dict): Object map.
    - on_arrows (dict): Arrow map.
    """
    source: FinCat
    target: FinCat
    on_objects: Dict[Obj, Obj]
    on_arrows: Dict[Arrow, Arrow]

    def __call__(self, f: Arrow) -> Arrow:
        return self.on_arrows[f]

    def key(self) -> tuple:
        return (tuple(sorted(self.on_objects.items(), key=repr)),
                tuple(sorted(self.on_arrows.items(), key=repr)))


def validate_finfunctor(F: FinFunctor) -> Report:
    report = Report(subject='functor {} -> {}'.format(F.source.name, F.target.name))
    C, D = F.source, F.target
    for f, (x, y) in C.arrows.items():
        if D.arrows.get(F(f)) != (F.on_objects[x], F.on_objects[y]):
            report.add('endpoints', f)
    for x in C.objects:
        if F(C.identity(x)) != D.identity(F.on_objects[x]):
            report.add('identity', x)
    for (g, f), h in C.comp.items():
        if D.comp.get((F(g), F(f))) != F(h):
            report.add('composition', (g, f))
    return report


def enumerate_functors(C: FinCat, D: FinCat) -> Iterator[FinFunctor]:
    """
    Yields every functor ``C -> D``.

    Objects are assigned first; arrows are then chosen one at a time among the
    arrows with matching endpoints, pruning on identities and on composites
    already determined.
    """
    arrows = list(C.arrows)
    for images in itertools.product(D.objects, repeat=len(C.objects)):
        on_objects = dict(zip(C.objects, images))
        chosen: Dict[Arrow, Arrow] = {}

        def consistent(f: Arrow) -> bool:
            for (g, h), gh in C.comp.items():
                if f not in (g, h, gh):
                    continue
                if g in chosen and h in chosen and gh in chosen:
                    if D.compose(chosen[g], chosen[h]) != chosen[gh]:
                        return False
            return True

        def extend(step: int) -> Iterator[FinFunctor]:
            if step == len(arrows):
                yield FinFunctor(C, D, dict(on_objects), dict(chosen))
                return
            f = arrows[step]
            x, y = C.arrows[f]
            if C.is_identity(f):
                pool = [D.identity(on_objects[x])]
            else:
                pool = D.hom(on_objects[x], on_objects[y])
            for g in pool:
                chosen[f] = g
                if consistent(f):
                    yield from extend(step + 1)
                del chosen[f]

        yield from extend(0)


def transpose_functor(F: FinFunctor) -> FinFunctor:
    """``F: C^op -> D`` read as ``F^op: C -> D^op``; the data is unchanged."""
    return FinFunctor(opposite_fincat(F.source), opposite_fincat(F.target), F.on_objects, F.on_arrows)
