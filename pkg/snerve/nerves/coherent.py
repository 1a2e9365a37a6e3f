"""
The homotopy-coherent nerve of a finite enriched category.

An n-cell is a simplicial functor ``C[Δ^n] -> K``, presented by its objects
``S_0, ..., S_n`` and one cell ``S_β`` of ``K(S_{i_0}, S_{i_m})`` of
dimension r for every r-dimensional bead shape β of every ``I ⊆ [n]``,
``|I| >= 2``. The value of the functor on an arbitrary chain of subsets is
recovered by ``chain_value``: repeated subsets are degeneracies, a chain
whose smallest subset has an interior point k splits at k into a composite,
and what remains is a bead.

Cells of the nerve are ``(objects, values)`` with ``values`` aligned with
``bead_order(n)``.
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from snerve.enriched.functor import SFunctor
from snerve.enriched.scat import SCat
from snerve.extras.combinatorics import Monotone, coface, codegeneracy
from snerve.extras.concurrency import parallel_map
from snerve.nerves.bead import BeadShape, SubsetChain, bead_order, bead_position
from snerve.simplicial.maps import SSetMap
from snerve.simplicial.sset import Cell, TruncatedSSet
from snerve.types.error import CapError, SimplicialIdentityError

logger = logging.getLogger(__name__)


class CoherentSimplex:
    """
    A coherent n-simplex of an enriched category.

    Parameters:
    - K (SCat): The target enriched category.
    - objects (sequence): ``S_0, ..., S_n``.
    - values (dict): Bead chain -> cell, for every bead of ``[n]``.
    """

    def __init__(self, K: SCat, objects: Sequence, values: Dict[SubsetChain, Cell]):
        self.K = K
        self.objects = tuple(objects)
        self.values = values

    @property
    def n(self) -> int:
        return len(self.objects) - 1

    @classmethod
    def from_cell(cls, K: SCat, cell: tuple) -> 'CoherentSimplex':
        objects, values = cell
        order = bead_order(len(objects) - 1)
        return cls(K, objects, dict(zip(order, values)))

    def as_cell(self) -> tuple:
        return self.objects, tuple(self.values[chain] for chain in bead_order(self.n))

    def bead(self, shape: BeadShape) -> Cell:
        return self.values[shape.chain()]

    def chain_value(self, chain: SubsetChain) -> Cell:
        return chain_value(self.K, self.objects, self.values, chain)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoherentSimplex):
            return NotImplemented
        return self.objects == other.objects and self.values == other.values

    def __hash__(self):
        return hash(self.as_cell())

    def __repr__(self):
        return '<{}: n={} objects={}>'.format(self.__class__.__name__, self.n, self.objects)


def chain_value(K: SCat, objects: Sequence, values: Dict[SubsetChain, Cell], chain: SubsetChain) -> Cell:
    """
    Value of a coherent simplex on a chain ``U_0 ⊆ ... ⊆ U_r`` of subsets of
    ``[i, j]`` containing both endpoints.
    """
    r = len(chain) - 1
    for t in range(r):
        if chain[t] == chain[t + 1]:
            inner = chain_value(K, objects, values, chain[:t + 1] + chain[t + 2:])
            i, j = chain[0][0], chain[0][-1]
            return K.hom(objects[i], objects[j]).s(r - 1, t, inner)
    base = chain[0]
    i, j = base[0], base[-1]
    if i == j:
        return K.ident_cell(objects[i], r)
    if len(base) > 2:
        k = base[1]
        left = tuple(tuple(v for v in U if v <= k) for U in chain)
        right = tuple(tuple(v for v in U if v >= k) for U in chain)
        return K.compose(objects[i], objects[k], objects[j], r,
                         chain_value(K, objects, values, right),
                         chain_value(K, objects, values, left))
    return values[chain]


def _drop(chain: SubsetChain, t: int) -> SubsetChain:
    return chain[:t] + chain[t + 1:]


def bead_boundary(K: SCat, objects: Sequence, values: Dict[SubsetChain, Cell], chain: SubsetChain) -> tuple:
    """The faces ``(d_0, ..., d_r)`` a bead's value must have."""
    return tuple(chain_value(K, objects, values, _drop(chain, t)) for t in range(len(chain)))


def check_boundary(S: CoherentSimplex) -> List[SubsetChain]:
    """Beads of S whose value is missing, misplaced or has the wrong boundary."""
    bad = []
    for chain in bead_order(S.n):
        r = len(chain) - 1
        i, j = chain[0][0], chain[0][-1]
        H = S.K.hom(S.objects[i], S.objects[j])
        value = S.values.get(chain)
        if not H.has_cell(r, value):
            bad.append(chain)
        elif r > 0 and H.boundary(r, value) != bead_boundary(S.K, S.objects, S.values, chain):
            bad.append(chain)
    return bad


def enumerate_coherent_simplices(K: SCat, n: int, objects: Optional[Sequence] = None) -> Iterator[tuple]:
    """
    Yields every coherent n-simplex of K as a nerve cell.

    Objects are chosen first (skipping tuples with an empty vertex hom
    ``K(S_i, S_j)``, i < j); bead values are then chosen in ``bead_order(n)``
    among the cells with the prescribed boundary.
    """
    order = bead_order(n)
    choices = [objects] if objects is not None else itertools.product(K.objects, repeat=n + 1)
    for objs in choices:
        if any(not K.hom(objs[i], objs[j]).cells[0] for i in range(n + 1) for j in range(i + 1, n + 1)):
            continue
        values: Dict[SubsetChain, Cell] = {}

        def extend(step: int) -> Iterator[tuple]:
            if step == len(order):
                yield tuple(objs), tuple(values[c] for c in order)
                return
            chain = order[step]
            r = len(chain) - 1
            H = K.hom(objs[chain[0][0]], objs[chain[0][-1]])
            if r == 0:
                pool = H.cells[0]
            else:
                pool = H.cells_with_boundary(r, bead_boundary(K, objs, values, chain))
            for value in pool:
                values[chain] = value
                yield from extend(step + 1)
            values.pop(chain, None)

        yield from extend(0)


def reindex_coherent(S: CoherentSimplex, alpha: Monotone) -> CoherentSimplex:
    """
    ``α^* S`` for a monotone ``α: [m] -> [n]``: objects ``S_{α(i)}`` and, on a
    bead chain ``U_0 ⊂ ... ⊂ U_r``, the value of S on ``α(U_0) ⊆ ... ⊆ α(U_r)``.
    """
    m = len(alpha) - 1
    objects = tuple(S.objects[a] for a in alpha)
    values = {}
    for chain in bead_order(m):
        image = tuple(tuple(sorted({alpha[v] for v in U})) for U in chain)
        values[chain] = S.chain_value(image)
    return CoherentSimplex(S.K, objects, values)


def coherent_nerve(K: SCat, cap: int) -> TruncatedSSet:
    """
    The coherent nerve of K truncated at ``cap``.

    Raises:
        CapError: If ``cap - 1`` exceeds the hom cap of K.
    """
    if cap - 1 > K.cap:
        raise CapError('coherent nerve to dimension {} needs hom cap >= {}, got {}'.format(cap, cap - 1, K.cap))
    cells = []
    for n in range(cap + 1):
        if n == 0:
            cells.append([((x,), ()) for x in K.objects])
            continue
        per_start = parallel_map(lambda x: list(_cells_from(K, n, x)), K.objects)
        cells.append([c for part in per_start for c in part])
        logger.debug('N(%s)_%d: %d cells', K.name, n, len(cells[-1]))

    def face_fn(k, i, cell):
        return reindex_coherent(CoherentSimplex.from_cell(K, cell), coface(k, i)).as_cell()

    def degen_fn(k, i, cell):
        return reindex_coherent(CoherentSimplex.from_cell(K, cell), codegeneracy(k, i)).as_cell()

    return TruncatedSSet.from_operators(cap, cells, face_fn, degen_fn, name='N({})'.format(K.name))


def _cells_from(K: SCat, n: int, start) -> Iterator[tuple]:
    for rest in itertools.product(K.objects, repeat=n):
        yield from enumerate_coherent_simplices(K, n, (start,) + rest)


@lru_cache(maxsize=None)
def bead_endpoints(n: int) -> Tuple[Tuple[int, int, int], ...]:
    """``(i, j, r)`` of every bead in ``bead_order(n)``."""
    return tuple((c[0][0], c[0][-1], len(c) - 1) for c in bead_order(n))


def nerve_of_functor(F: SFunctor, source: TruncatedSSet, target: TruncatedSSet) -> SSetMap:
    """
    ``N(F)`` between coherent nerves: objects through F, each bead value
    through the hom assignment of F.
    """
    def fn(k, cell):
        objects, values = cell
        image = []
        for (i, j, r), value in zip(bead_endpoints(k), values):
            image.append(F.on_cells(objects[i], objects[j], r, value))
        return tuple(F(x) for x in objects), tuple(image)

    return SSetMap.from_function(source, target, fn, name='N({})'.format(F.name))


def coherent_to_ordinary(cell: tuple) -> tuple:
    """
    A coherent simplex of a discrete enriched category (cells are arrow names)
    as the chain ``(S_0, S_<01>, S_<12>, ..., S_<n-1 n>)`` of the ordinary nerve.
    """
    objects, values = cell
    n = len(objects) - 1
    position = bead_position(n)
    return (objects[0],) + tuple(values[position[((i, i + 1),)]] for i in range(n))


def opposite_nerve_bijection(C: SCat, source: TruncatedSSet, target: TruncatedSSet) -> SSetMap:
    """
    The canonical map ``N(C^op) -> op(N(C))``.

    ``S'`` goes to S with ``S_i = S'_{n-i}`` and ``S_β = S'_{ρ(β)}``, where ρ
    reverses ``[n]`` and β runs over bead shapes; ``source`` is the coherent
    nerve of ``C^op`` and ``target`` the opposite of the coherent nerve of C.
    No search is involved.
    """
    def fn(k, cell):
        objects, values = cell
        lookup = dict(zip(bead_order(k), values))
        reversed_values = []
        for chain in bead_order(k):
            shape = BeadShape.from_chain(chain).map(lambda v: k - v)
            reversed_values.append(lookup[shape.chain()])
        return tuple(reversed(objects)), tuple(reversed_values)

    return SSetMap.from_function(source, target, fn, name='N(op)')


def validate_coherent_cells(N: TruncatedSSet, K: SCat) -> None:
    """
    Raises:
        SimplicialIdentityError: If some cell fails boundary compatibility.
    """
    for k in range(N.cap + 1):
        for cell in N.cells[k]:
            bad = check_boundary(CoherentSimplex.from_cell(K, cell))
            if bad:
                raise SimplicialIdentityError('cell {!r} has incompatible beads {}'.format(cell, bad))
