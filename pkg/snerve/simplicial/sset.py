"""
Finite simplicial sets truncated at a dimension cap.

A ``TruncatedSSet`` stores every cell in dimensions ``0..cap``, degenerate
cells included, together with all face and degeneracy maps. Cell identifiers
are arbitrary hashable values; they may repeat across dimensions.
"""
import itertools
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from snerve.extras.combinatorics import Monotone, split_monotone
from snerve.types.error import CapError
from snerve.types.report import Report

Cell = Hashable
OperatorTable = Dict[Tuple[int, int], Dict[Cell, Cell]]


class TruncatedSSet:
    """
    A simplicial set presented by its cells in dimensions ``0..cap``.

    Parameters:
    - cap (int): The dimension bound.
    - cells (sequence): ``cells[k]`` is the sequence of k-cells. Order is kept
      for deterministic iteration but does not matter for equality.
    - face (dict): ``face[(k, i)]`` maps each k-cell to its i-th face, for
      ``1 <= k <= cap`` and ``0 <= i <= k``.
    - degen (dict): ``degen[(k, i)]`` maps each k-cell to its i-th degeneracy,
      for ``0 <= i <= k < cap``.
    - name (str, optional): Label used in reports and documents.

    Instances are treated as immutable; the only internal state that changes
    after construction is the lazily built boundary index.
    """

    def __init__(self,
                 cap: int,
                 cells: Sequence[Sequence[Cell]],
                 face: OperatorTable,
                 degen: OperatorTable,
                 name: str = ''):
        if cap < 0:
            raise CapError('cap must be non-negative, got {}'.format(cap))
        if len(cells) != cap + 1:
            raise CapError('expected {} cell lists, got {}'.format(cap + 1, len(cells)))
        self.cap = cap
        self.cells: Tuple[Tuple[Cell, ...], ...] = tuple(tuple(c) for c in cells)
        self.face = face
        self.degen = degen
        self.name = name
        self._boundary_index: Dict[int, Dict[tuple, List[Cell]]] = {}
        self._cell_sets = tuple(frozenset(c) for c in self.cells)

    @classmethod
    def from_operators(cls,
                       cap: int,
                       cells: Sequence[Sequence[Cell]],
                       face_fn: Callable[[int, int, Cell], Cell],
                       degen_fn: Callable[[int, int, Cell], Cell],
                       name: str = '') -> 'TruncatedSSet':
        """
        Builds the operator tables by evaluating ``face_fn(k, i, x)`` and
        ``degen_fn(k, i, x)`` on every cell.
        """
        face = {}
        degen = {}
        for k in range(1, cap + 1):
            for i in range(k + 1):
                face[(k, i)] = {x: face_fn(k, i, x) for x in cells[k]}
        for k in range(cap):
            for i in range(k + 1):
                degen[(k, i)] = {x: degen_fn(k, i, x) for x in cells[k]}
        return cls(cap, cells, face, degen, name=name)

    def d(self, k: int, i: int, x: Cell) -> Cell:
        return self.face[(k, i)][x]

    def s(self, k: int, i: int, x: Cell) -> Cell:
        return self.degen[(k, i)][x]

    def has_cell(self, k: int, x: Cell) -> bool:
        return 0 <= k <= self.cap and x in self._cell_sets[k]

    def boundary(self, k: int, x: Cell) -> tuple:
        """The tuple ``(d_0 x, ..., d_k x)`` of a k-cell, k >= 1."""
        return tuple(self.face[(k, i)][x] for i in range(k + 1))

    def is_degenerate(self, k: int, x: Cell) -> bool:
        # x lies in the image of s_j iff s_j d_j x == x
        if k == 0:
            return False
        return any(self.degen[(k - 1, j)][self.face[(k, j)][x]] == x for j in range(k))

    def nondegenerate(self, k: int) -> List[Cell]:
        return [x for x in self.cells[k] if not self.is_degenerate(k, x)]

    def ez_form(self, k: int, x: Cell) -> Tuple[int, Cell, Monotone]:
        """
        Eilenberg-Zilber form of a cell.

        Returns:
            tuple: ``(p, y, sigma)`` with ``y`` a nondegenerate p-cell and
            ``sigma: [k] -> [p]`` the surjection such that ``x = sigma^* y``.
        """
        for j in range(k):
            y = self.face[(k, j)][x]
            if self.degen[(k - 1, j)][y] == x:
                p, root, inner = self.ez_form(k - 1, y)
                # x = s_j y, so sigma = inner ∘ sigma_j
                return p, root, tuple(inner[v if v <= j else v - 1] for v in range(k + 1))
        return k, x, tuple(range(k + 1))

    def cells_with_boundary(self, k: int, faces: tuple) -> List[Cell]:
        """All k-cells whose boundary is ``faces``; k >= 1."""
        index = self._boundary_index.get(k)
        if index is None:
            index = {}
            for x in self.cells[k]:
                index.setdefault(self.boundary(k, x), []).append(x)
            self._boundary_index[k] = index
        return index.get(tuple(faces), [])

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def nondegenerate_counts(self) -> Tuple[int, ...]:
        return tuple(len(self.nondegenerate(k)) for k in range(self.cap + 1))

    def truncate(self, cap: int) -> 'TruncatedSSet':
        """The same simplicial set forgetting cells above ``cap``."""
        if cap > self.cap:
            raise CapError('cannot raise cap {} to {}'.format(self.cap, cap))
        face = {key: table for key, table in self.face.items() if key[0] <= cap}
        degen = {key: table for key, table in self.degen.items() if key[0] < cap}
        return TruncatedSSet(cap, self.cells[:cap + 1], face, degen, name=self.name)

    def rename(self, name: str) -> 'TruncatedSSet':
        return TruncatedSSet(self.cap, self.cells, self.face, self.degen, name=name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSSet):
            return NotImplemented
        return (self.cap == other.cap
                and self._cell_sets == other._cell_sets
                and self.face == other.face
                and self.degen == other.degen)

    __hash__ = None

    def __repr__(self):
        return '<{clazz}: {name} cap={cap} counts={counts}>'.format(clazz=self.__class__.__name__,
                                                                    name=self.name or '-',
                                                                    cap=self.cap,
                                                                    counts=self.counts())


def pull_back_cell(X: TruncatedSSet, x: Cell, theta: Monotone, b: int) -> Cell:
    """
    Action of a monotone map on a cell.

    Args:
        X (TruncatedSSet): The simplicial set.
        x (Cell): A b-cell of X.
        theta (tuple): A monotone map ``[a] -> [b]`` as ``(theta(0), ..., theta(a))``.
        b (int): Dimension of ``x``.

    Returns:
        Cell: ``theta^* x``, an a-cell.

    Raises:
        CapError: If ``a`` exceeds the cap of X.
    """
    a = len(theta) - 1
    if a > X.cap:
        raise CapError('cannot pull a {}-cell back to dimension {} above cap {}'.format(b, a, X.cap))
    surjection, image = split_monotone(theta, b)
    y = x
    dim = b
    for t in reversed([v for v in range(b + 1) if v not in image]):
        y = X.face[(dim, t)][y]
        dim -= 1
    for j in range(a):
        if surjection[j] == surjection[j + 1]:
            y = X.degen[(dim, j)][y]
            dim += 1
    return y


def simplex_on(J: Sequence, cap: int, name: str = '') -> TruncatedSSet:
    """
    The simplex ``Δ^J`` on a finite linearly ordered set.

    Cells are the weakly increasing tuples of elements of ``J`` (in the order
    given); ``d_i`` deletes entry i and ``s_i`` repeats it.
    """
    J = tuple(J)
    cells = []
    for k in range(cap + 1):
        cells.append([tuple(J[r] for r in combo)
                      for combo in itertools.combinations_with_replacement(range(len(J)), k + 1)])

    def face_fn(k, i, x):
        return x[:i] + x[i + 1:]

    def degen_fn(k, i, x):
        return x[:i + 1] + x[i:]

    return TruncatedSSet.from_operators(cap, cells, face_fn, degen_fn,
                                        name=name or 'Delta^{}'.format(list(J)))


def standard_simplex(n: int, cap: int) -> TruncatedSSet:
    """
    The standard simplex ``Δ^n`` truncated at ``cap``.

    Example:
        >>> standard_simplex(2, 2).counts()
        (3, 6, 10)
    """
    return simplex_on(range(n + 1), cap, name='Delta^{}'.format(n))


def sub_sset(X: TruncatedSSet, keep: Callable[[int, Cell], bool], name: str = '') -> TruncatedSSet:
    """
    The sub-simplicial set of cells accepted by ``keep(k, x)``.

    The predicate must select a family closed under faces and degeneracies;
    ``validate_sset`` reports it otherwise.
    """
    cells = [[x for x in X.cells[k] if keep(k, x)] for k in range(X.cap + 1)]
    face = {(k, i): {x: X.face[(k, i)][x] for x in cells[k]} for (k, i) in X.face}
    degen = {(k, i): {x: X.degen[(k, i)][x] for x in cells[k]} for (k, i) in X.degen}
    return TruncatedSSet(X.cap, cells, face, degen, name=name or X.name)


def horn(n: int, k: int, cap: int) -> TruncatedSSet:
    """The horn ``Λ^n_k`` inside ``Δ^n``: simplices missing some face other than the k-th."""
    full = set(range(n + 1))
    simplex = standard_simplex(n, cap)
    return sub_sset(simplex, lambda dim, x: (set(x) | {k}) != full,
                    name='Lambda^{}_{}'.format(n, k))


def opposite_sset(X: TruncatedSSet) -> TruncatedSSet:
    """
    The opposite simplicial set: the same cells with faces and degeneracies
    renumbered by ``i -> k - i``.
    """
    face = {(k, i): X.face[(k, k - i)] for (k, i) in X.face}
    degen = {(k, i): X.degen[(k, k - i)] for (k, i) in X.degen}
    return TruncatedSSet(X.cap, X.cells, face, degen, name=_op_name(X.name))


def _op_name(name: str) -> str:
    if name.endswith('^op'):
        return name[:-3]
    return name + '^op' if name else ''


def validate_sset(X: TruncatedSSet) -> Report:
    """
    Checks the operator tables and every simplicial identity within the cap.

    Args:
        X (TruncatedSSet): The simplicial set to check.

    Returns:
        Report: Empty when all identities hold. Each violation is named after
        the failed identity (for example ``'d0d1=d0d0'``) with witness
        ``(k, cell)``.
    """
    report = Report(subject=X.name or 'sset')
    cap = X.cap
    for (k, i), table in _expected_tables(cap, X.face, 'face'):
        if table is None:
            report.add('missing face d{} in dim {}'.format(i, k))
            continue
        for x in X.cells[k]:
            if x not in table:
                report.add('d{} undefined'.format(i), (k, x))
            elif not X.has_cell(k - 1, table[x]):
                report.add('d{} leaves X'.format(i), (k, x))
    for (k, i), table in _expected_tables(cap, X.degen, 'degen'):
        if table is None:
            report.add('missing degeneracy s{} in dim {}'.format(i, k))
            continue
        for x in X.cells[k]:
            if x not in table:
                report.add('s{} undefined'.format(i), (k, x))
            elif not X.has_cell(k + 1, table[x]):
                report.add('s{} leaves X'.format(i), (k, x))
    if not report.ok:
        return report

    d, s = X.d, X.s
    for k in range(2, cap + 1):
        for x in X.cells[k]:
            for j in range(1, k + 1):
                for i in range(j):
                    if d(k - 1, i, d(k, j, x)) != d(k - 1, j - 1, d(k, i, x)):
                        report.add('d{i}d{j}=d{jm}d{i}'.format(i=i, j=j, jm=j - 1), (k, x))
    for k in range(cap - 1):
        for x in X.cells[k]:
            for j in range(k + 1):
                for i in range(j + 1):
                    if s(k + 1, i, s(k, j, x)) != s(k + 1, j + 1, s(k, i, x)):
                        report.add('s{i}s{j}=s{jp}s{i}'.format(i=i, j=j, jp=j + 1), (k, x))
    for k in range(cap):
        for x in X.cells[k]:
            for j in range(k + 1):
                y = s(k, j, x)
                for i in range(k + 2):
                    lhs = d(k + 1, i, y)
                    if i < j:
                        rhs = s(k - 1, j - 1, d(k, i, x))
                    elif i in (j, j + 1):
                        rhs = x
                    else:
                        rhs = s(k - 1, j, d(k, i - 1, x))
                    if lhs != rhs:
                        report.add('d{i}s{j}'.format(i=i, j=j), (k, x))
    _check_ez(X, report)
    return report


def _expected_tables(cap: int, tables: OperatorTable, kind: str) -> Iterable[Tuple[Tuple[int, int], Optional[dict]]]:
    dims = range(1, cap + 1) if kind == 'face' else range(cap)
    for k in dims:
        for i in range(k + 1):
            yield (k, i), tables.get((k, i))


def _check_ez(X: TruncatedSSet, report: Report) -> None:
    """Every decomposition path of a cell must reach the same nondegenerate root."""
    roots: Dict[Tuple[int, Cell], frozenset] = {}
    for k in range(X.cap + 1):
        for x in X.cells[k]:
            found = set()
            for j in range(k):
                y = X.d(k, j, x)
                if X.s(k - 1, j, y) == x:
                    found |= roots[(k - 1, y)]
            if not found:
                found = {(k, x)}
            roots[(k, x)] = frozenset(found)
            if len(found) > 1:
                report.add('EZ form not unique', (k, x))
