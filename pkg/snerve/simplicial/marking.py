from dataclasses import dataclass
from typing import FrozenSet

from snerve.simplicial.horn import horn_check
from snerve.simplicial.sset import Cell, TruncatedSSet, opposite_sset
from snerve.types.enum import HornMode
from snerve.types.error import CapError, NotQuasicategoryError
from snerve.types.report import Report


@dataclass(frozen=True, eq=False)
class MarkedSSet:
    """
    A simplicial set with a set of marked edges.

    Attributes:
    - base (TruncatedSSet): The underlying simplicial set.
    - marked (frozenset): Marked 1-cells; must contain every degenerate edge.
    """
    base: TruncatedSSet
    marked: FrozenSet[Cell]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedSSet):
            return NotImplemented
        return self.base == other.base and self.marked == other.marked

    __hash__ = None

    def is_marked(self, e: Cell) -> bool:
        return e in self.marked


def validate_marked(M: MarkedSSet) -> Report:
    report = Report(subject='marking of {}'.format(M.base.name or 'sset'))
    if M.base.cap < 1:
        if M.marked:
            report.add('marked edges without 1-cells', sorted(M.marked, key=repr))
        return report
    edges = set(M.base.cells[1])
    for e in M.marked:
        if e not in edges:
            report.add('marked cell is not an edge', e)
    for e in edges:
        if M.base.is_degenerate(1, e) and e not in M.marked:
            report.add('degenerate edge unmarked', e)
    return report


def mark_sharp(X: TruncatedSSet) -> MarkedSSet:
    """Marks every edge."""
    return MarkedSSet(X, frozenset(X.cells[1]) if X.cap >= 1 else frozenset())


def mark_natural(X: TruncatedSSet) -> MarkedSSet:
    """
    Marks exactly the edges invertible in the homotopy category of X.

    An edge ``e: x -> y`` is marked iff some 2-cell has ``d_2 = e`` and
    ``d_1 = s_0 x`` (a left inverse ``d_0``) and some 2-cell has ``d_0 = e``
    and ``d_1 = s_0 y`` (a right inverse ``d_2``).

    Raises:
        CapError: If the cap is below 2.
        NotQuasicategoryError: If some inner 2-horn has no filler, so the
            homotopy category is not defined from low-dimensional data.
    """
    if X.cap < 2:
        raise CapError('mark_natural needs cap >= 2, got {}'.format(X.cap))
    inner = horn_check(X, HornMode.inner, 2, first_only=True)
    if not inner.ok:
        raise NotQuasicategoryError('{} has unfillable inner 2-horns: {}'.format(X.name, inner.violations[0]))
    left = set()
    right = set()
    for z in X.cells[2]:
        d0, d1, d2 = X.boundary(2, z)
        left.add((d2, d1))
        right.add((d0, d1))
    marked = set()
    for e in X.cells[1]:
        x, y = X.d(1, 1, e), X.d(1, 0, e)
        if (e, X.s(0, 0, x)) in left and (e, X.s(0, 0, y)) in right:
            marked.add(e)
    return MarkedSSet(X, frozenset(marked))


def opposite_marked(M: MarkedSSet) -> MarkedSSet:
    """Opposite of the underlying simplicial set with the same marked edges."""
    return MarkedSSet(opposite_sset(M.base), M.marked)
