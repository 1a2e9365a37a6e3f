import itertools
from typing import Hashable, List, Sequence, Tuple

from snerve.simplicial.maps import SSetMap
from snerve.simplicial.sset import TruncatedSSet
from snerve.types.error import CapError, SnerveError


def _common_cap(factors: Sequence[TruncatedSSet]) -> int:
    caps = {X.cap for X in factors}
    if len(caps) > 1:
        raise CapError('cap mismatch: {}'.format(sorted(caps)))
    return caps.pop()


def point(cap: int) -> TruncatedSSet:
    """``Δ^0`` with the empty tuple as its only cell in every dimension."""
    return sset_power([], cap)


def sset_power(factors: Sequence[TruncatedSSet], cap: int = None) -> TruncatedSSet:
    """
    Finite product with flattened tuple cells.

    Args:
        factors (sequence): The factors, all with the same cap.
        cap (int, optional): Required only for the empty product.

    Returns:
        TruncatedSSet: Cells in dimension k are tuples ``(x_1, ..., x_n)`` of
        k-cells; operators act componentwise. The empty product is ``Δ^0``.

    Raises:
        CapError: On mismatched caps.
    """
    factors = list(factors)
    if factors:
        cap = _common_cap(factors)
    elif cap is None:
        raise CapError('the empty product needs an explicit cap')
    cells = [list(itertools.product(*[X.cells[k] for X in factors])) for k in range(cap + 1)]

    def face_fn(k, i, x):
        return tuple(X.face[(k, i)][c] for X, c in zip(factors, x))

    def degen_fn(k, i, x):
        return tuple(X.degen[(k, i)][c] for X, c in zip(factors, x))

    name = ' x '.join(X.name for X in factors) if factors else 'Delta^0'
    return TruncatedSSet.from_operators(cap, cells, face_fn, degen_fn, name=name)


def binary_product(X: TruncatedSSet, Y: TruncatedSSet) -> TruncatedSSet:
    """
    ``X × Y`` with pair cells.

    Example:
        >>> binary_product(standard_simplex(1, 2), standard_simplex(1, 2)).counts()
        (4, 9, 16)
    """
    return sset_power([X, Y])


def projection(P: TruncatedSSet, factor: TruncatedSSet, index: int) -> SSetMap:
    return SSetMap.from_function(P, factor, lambda k, x: x[index], name='pr{}'.format(index))


def coproduct(summands: Sequence[Tuple[Hashable, TruncatedSSet]], cap: int = None,
              name: str = '') -> TruncatedSSet:
    """
    Tagged coproduct: the cells of ``X`` under tag ``t`` become ``(t, x)``.

    Raises:
        CapError: On mismatched caps, or an empty coproduct without ``cap``.
    """
    summands = list(summands)
    if summands:
        cap = _common_cap([X for _, X in summands])
    elif cap is None:
        raise CapError('the empty coproduct needs an explicit cap')
    cells = [[(tag, x) for tag, X in summands for x in X.cells[k]] for k in range(cap + 1)]
    lookup = dict(summands)
    face = {}
    degen = {}
    for k in range(1, cap + 1):
        for i in range(k + 1):
            face[(k, i)] = {(t, x): (t, lookup[t].face[(k, i)][x]) for t, x in cells[k]}
    for k in range(cap):
        for i in range(k + 1):
            degen[(k, i)] = {(t, x): (t, lookup[t].degen[(k, i)][x]) for t, x in cells[k]}
    return TruncatedSSet(cap, cells, face, degen, name=name)


def pullback(f: SSetMap, g: SSetMap, name: str = '') -> Tuple[TruncatedSSet, SSetMap, SSetMap]:
    """
    The pullback of a cospan ``X -f-> Z <-g- Y``.

    Returns:
        tuple: ``(P, p_X, p_Y)`` where P has pair cells ``(x, y)`` with
        ``f(x) == g(y)`` and the two projections.

    Raises:
        SnerveError: If the maps have different targets.
        CapError: If the caps differ.
    """
    if f.target != g.target:
        raise SnerveError('pullback of maps with different targets')
    if f.cap != g.cap:
        raise CapError('cap mismatch: {} vs {}'.format(f.cap, g.cap))
    cap = f.cap
    X, Y = f.source, g.source
    cells: List[list] = []
    for k in range(cap + 1):
        over = {}
        for y in Y.cells[k]:
            over.setdefault(g(k, y), []).append(y)
        cells.append([(x, y) for x in X.cells[k] for y in over.get(f(k, x), ())])

    def face_fn(k, i, c):
        return X.face[(k, i)][c[0]], Y.face[(k, i)][c[1]]

    def degen_fn(k, i, c):
        return X.degen[(k, i)][c[0]], Y.degen[(k, i)][c[1]]

    P = TruncatedSSet.from_operators(cap, cells, face_fn, degen_fn, name=name or 'pullback')
    p_X = SSetMap.from_function(P, X.truncate(cap) if X.cap != cap else X, lambda k, c: c[0], name='pr0')
    p_Y = SSetMap.from_function(P, Y.truncate(cap) if Y.cap != cap else Y, lambda k, c: c[1], name='pr1')
    return P, p_X, p_Y
