"""
Strict monoidal enriched categories.

The tensor is an enriched functor ``C x C -> C`` whose source is
``scat_product(C, C)``: objects are pairs ``(x, y)`` and a k-cell from
``(x, y)`` to ``(x', y')`` is a pair ``(f, g)`` of k-cells. Sequences of
objects are folded with ``functools.reduce``; by strict associativity the
bracketing does not matter, and the empty tensor is the unit.
"""
import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, Tuple

from snerve.enriched.functor import SFunctor, validate_sfunctor
from snerve.enriched.scat import SCat, scat_product, terminal_scat
from snerve.extras.combinatorics import Monotone
from snerve.simplicial.sset import Cell
from snerve.types.report import Report

Obj = Hashable
# A sequence [x_1, ..., x_n] of objects; its level is its length.
SeqObject = Tuple[Obj, ...]


class MonSCat:
    """
    A strict monoidal simplicially enriched category.

    Parameters:
    - underlying (SCat): The enriched category C.
    - tensor (SFunctor): ``μ: C x C -> C`` with source ``scat_product(C, C)``.
    - unit: The unit object.
    - name (str, optional): Label; defaults to the underlying name.
    """

    def __init__(self, underlying: SCat, tensor: SFunctor, unit: Obj, name: str = ''):
        self.underlying = underlying
        self.tensor = tensor
        self.unit = unit
        self.name = name or underlying.name

    @classmethod
    def from_functions(cls,
                       C: SCat,
                       on_objects: Callable[[Obj, Obj], Obj],
                       on_cells: Callable[[Obj, Obj, Obj, Obj, int, Cell, Cell], Cell],
                       unit: Obj,
                       name: str = '') -> 'MonSCat':
        """
        Builds the tensor functor from plain functions.

        Args:
            C (SCat): The underlying category.
            on_objects (callable): ``(x, y) -> x ⊗ y``.
            on_cells (callable): ``(x, y, x2, y2, k, f, g) -> f ⊗ g`` for
                k-cells ``f: x -> x2`` and ``g: y -> y2``.
            unit: The unit object.
            name (str, optional): Label.
        """
        CC = scat_product(C, C)
        tensor = SFunctor(CC, C, {(x, y): on_objects(x, y) for x, y in CC.objects},
                          lambda a, b, k, c: on_cells(a[0], a[1], b[0], b[1], k, c[0], c[1]),
                          name='⊗')
        return cls(C, tensor, unit, name=name)

    @property
    def cap(self) -> int:
        return self.underlying.cap

    @property
    def objects(self):
        return self.underlying.objects

    def tensor_object(self, x: Obj, y: Obj) -> Obj:
        return self.tensor((x, y))

    def tensor_cell(self, x: Obj, y: Obj, x2: Obj, y2: Obj, k: int, f: Cell, g: Cell) -> Cell:
        """``f ⊗ g`` for k-cells ``f: x -> x2`` and ``g: y -> y2``."""
        return self.tensor.on_cells((x, y), (x2, y2), k, (f, g))

    def tensor_objects(self, xs: Sequence[Obj]) -> Obj:
        """``x_1 ⊗ ... ⊗ x_n``; the unit for the empty sequence."""
        return functools.reduce(self.tensor_object, xs, self.unit)

    def tensor_cells(self, sources: Sequence[Obj], targets: Sequence[Obj], k: int, cells: Sequence[Cell]) -> Cell:
        """
        ``φ_1 ⊗ ... ⊗ φ_n`` of k-cells ``φ_i: sources[i] -> targets[i]``; the
        degenerate identity of the unit for the empty sequence.
        """
        out = self.underlying.ident_cell(self.unit, k)
        x = x2 = self.unit
        for a, b, c in zip(sources, targets, cells):
            out = self.tensor_cell(x, a, x2, b, k, out, c)
            x, x2 = self.tensor_object(x, a), self.tensor_object(x2, b)
        return out

    def unit_functor(self) -> SFunctor:
        """``η: * -> C`` picking the unit."""
        point = terminal_scat(self.cap)
        return SFunctor(point, self.underlying, {(): self.unit},
                        lambda x, y, k, c: self.underlying.ident_cell(self.unit, k), name='η')

    def counit_functor(self) -> SFunctor:
        """``ε: C -> *``."""
        point = terminal_scat(self.cap)
        return SFunctor(self.underlying, point, {x: () for x in self.objects}, lambda x, y, k, c: (), name='ε')

    def __repr__(self):
        return '<{}: {} unit={!r}>'.format(self.__class__.__name__, self.name or '-', self.unit)


@dataclass(frozen=True)
class OperMorphism:
    """
    A vertex ``[f; f_1, ..., f_m]`` of a hom complex of the category of operators.

    Attributes:
    - source (tuple): ``[x_1, ..., x_n]``.
    - target (tuple): ``[y_1, ..., y_m]``.
    - base (tuple): The monotone map ``f: [m] -> [n]``.
    - components (tuple): ``f_i`` in ``C(x_{f(i-1)+1} ⊗ ... ⊗ x_{f(i)}, y_i)``.
    """
    source: SeqObject
    target: SeqObject
    base: Monotone
    components: Tuple[Cell, ...]

    def as_cell(self) -> tuple:
        return self.base, self.components


def validate_monoidal(M: MonSCat, d: int = None) -> Report:
    """
    Checks that the tensor is an enriched functor (the interchange law) and
    that it is strictly associative and unital on objects and on hom cells up
    to dimension ``d``.

    Returns:
        Report: associativity violations carry the offending triple.
    """
    C = M.underlying
    d = C.cap if d is None else d
    report = Report(subject='{} monoidal'.format(M.name or 'scat'))
    if M.unit not in C.objects:
        report.add('unit is not an object', M.unit)
        return report
    report.extend(validate_sfunctor(M.tensor, d), prefix='tensor ')
    if not report.ok:
        return report
    t = M.tensor_object
    for x, y, z in itertools.product(C.objects, repeat=3):
        if t(t(x, y), z) != t(x, t(y, z)):
            report.add('associativity on objects', (x, y, z))
    for x in C.objects:
        if t(M.unit, x) != x or t(x, M.unit) != x:
            report.add('unit on objects', x)
    if not report.ok:
        return report
    u = M.unit
    pairs = list(itertools.product(C.objects, repeat=2))
    for k in range(d + 1):
        e = C.ident_cell(u, k)
        for x, x2 in pairs:
            for f in C.hom(x, x2).cells[k]:
                if M.tensor_cell(u, x, u, x2, k, e, f) != f or M.tensor_cell(x, u, x2, u, k, f, e) != f:
                    report.add('unit on cells', (x, x2, k, f))
        for (x, x2), (y, y2), (z, z2) in itertools.product(pairs, repeat=3):
            for f in C.hom(x, x2).cells[k]:
                for g in C.hom(y, y2).cells[k]:
                    fg = M.tensor_cell(x, y, x2, y2, k, f, g)
                    for h in C.hom(z, z2).cells[k]:
                        left = M.tensor_cell(t(x, y), z, t(x2, y2), z2, k, fg, h)
                        right = M.tensor_cell(x, t(y, z), x2, t(y2, z2), k, f, M.tensor_cell(y, z, y2, z2, k, g, h))
                        if left != right:
                            report.add('associativity on cells', ((x, x2), (y, y2), (z, z2)))
    return report
