from typing import Callable, Dict, List, Sequence

from snerve.simplicial.sset import Cell, TruncatedSSet, sub_sset
from snerve.types.error import SnerveError
from snerve.types.report import Report


class SSetMap:
    """
    A simplicial map between truncated simplicial sets.

    Parameters:
    - source (TruncatedSSet): Domain.
    - target (TruncatedSSet): Codomain.
    - assign (list): ``assign[k]`` is a dict from source k-cells to target
      k-cells, for ``k <= min(source.cap, target.cap)``.
    - name (str, optional): Label used in reports.
    """

    def __init__(self, source: TruncatedSSet, target: TruncatedSSet, assign: Sequence[Dict[Cell, Cell]],
                 name: str = ''):
        self.source = source
        self.target = target
        self.assign = list(assign)
        self.name = name

    @classmethod
    def from_function(cls, source: TruncatedSSet, target: TruncatedSSet,
                      fn: Callable[[int, Cell], Cell], name: str = '') -> 'SSetMap':
        """Tabulates ``fn(k, x)`` on every source cell up to the common cap."""
        top = min(source.cap, target.cap)
        assign = [{x: fn(k, x) for x in source.cells[k]} for k in range(top + 1)]
        return cls(source, target, assign, name=name)

    @property
    def cap(self) -> int:
        return len(self.assign) - 1

    def __call__(self, k: int, x: Cell) -> Cell:
        return self.assign[k][x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SSetMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.assign == other.assign)

    __hash__ = None

    def __repr__(self):
        return '<{}: {} -> {}>'.format(self.__class__.__name__, self.source.name or '-',
                                       self.target.name or '-')


def validate_map(f: SSetMap) -> Report:
    """
    Checks that ``f`` is total, lands in the target and commutes with every
    face and degeneracy map up to its cap.
    """
    report = Report(subject=f.name or 'map')
    X, Y = f.source, f.target
    for k in range(f.cap + 1):
        table = f.assign[k]
        for x in X.cells[k]:
            if x not in table:
                report.add('undefined', (k, x))
            elif not Y.has_cell(k, table[x]):
                report.add('leaves target', (k, x))
    if not report.ok:
        return report
    for k in range(1, f.cap + 1):
        for x in X.cells[k]:
            for i in range(k + 1):
                if f(k - 1, X.d(k, i, x)) != Y.d(k, i, f(k, x)):
                    report.add('f d{} = d{} f'.format(i, i), (k, x))
    for k in range(f.cap):
        for x in X.cells[k]:
            for i in range(k + 1):
                if f(k + 1, X.s(k, i, x)) != Y.s(k, i, f(k, x)):
                    report.add('f s{} = s{} f'.format(i, i), (k, x))
    return report


def identity_map(X: TruncatedSSet) -> SSetMap:
    return SSetMap(X, X, [{x: x for x in X.cells[k]} for k in range(X.cap + 1)], name='id')


def compose_maps(g: SSetMap, f: SSetMap) -> SSetMap:
    """The composite ``g ∘ f``."""
    if f.target is not g.source and f.target != g.source:
        raise SnerveError('maps are not composable')
    top = min(f.cap, g.cap)
    assign = [{x: g.assign[k][y] for x, y in f.assign[k].items()} for k in range(top + 1)]
    return SSetMap(f.source, g.target, assign, name='{}∘{}'.format(g.name, f.name))


def is_bijective(f: SSetMap) -> bool:
    """True iff every ``assign[k]`` is a bijection onto ``target.cells[k]``."""
    for k in range(f.cap + 1):
        values = set(f.assign[k].values())
        if len(values) != len(f.source.cells[k]) or values != set(f.target.cells[k]):
            return False
    return True


def inverse_map(f: SSetMap) -> SSetMap:
    assign = [{y: x for x, y in table.items()} for table in f.assign]
    return SSetMap(f.target, f.source, assign, name='{}^-1'.format(f.name))


def fiber(p: SSetMap, vertex: Cell) -> TruncatedSSet:
    """
    The fiber of ``p`` over a vertex of its target: cells of the source whose
    image is the iterated degeneracy of ``vertex``.
    """
    Y = p.target
    degenerate = [vertex]
    for k in range(p.cap):
        degenerate.append(Y.s(k, 0, degenerate[-1]))
    F = sub_sset(p.source.truncate(p.cap), lambda k, x: p(k, x) == degenerate[k],
                 name='fiber({})'.format(vertex))
    return F


def image_cells(f: SSetMap) -> List[set]:
    return [set(table.values()) for table in f.assign]
