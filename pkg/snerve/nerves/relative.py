"""
The nerve of a base category relative to a diagram of simplicial sets.

An n-cell is a chain ``d: [n] -> D`` together with, for every nonempty
``J ⊆ [n]`` with maximum j, a map ``s^J: Δ^J -> f(d_j)`` such that
``s^J`` restricted to ``Δ^I`` is ``f(d_{ij})∘s^I`` for ``I ⊆ J``. Each
``s^J`` is stored as its Yoneda cell ``x_J``, a ``(|J|-1)``-cell of
``f(d_j)``; compatibility then says that the face of ``x_J`` omitting
``t ∈ J`` is ``f(d_{j'j})(x_{J - t})`` with ``j' = max(J - t)``.

Cells are ``(chain, values)`` with ``values`` aligned with
``nonempty_subsets(range(n + 1))``.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, Tuple

from snerve.enriched.fincat import Arrow, FinCat, Obj
from snerve.extras.combinatorics import Monotone, codegeneracy, coface, nonempty_subsets
from snerve.extras.concurrency import parallel_map
from snerve.nerves.coherent import coherent_nerve, nerve_of_functor
from snerve.nerves.ordinary import chain_arrow, chain_objects, ordinary_nerve
from snerve.simplicial.maps import SSetMap, compose_maps, identity_map, validate_map
from snerve.simplicial.sset import Cell, TruncatedSSet, pull_back_cell, simplex_on
from snerve.types.error import CapError, FunctorialityError
from snerve.types.report import Report

logger = logging.getLogger(__name__)


class DiagramSSet:
    """
    A strict functor from a finite category to simplicial sets.

    Parameters:
    - base (FinCat): The indexing category D.
    - values (dict): Object -> TruncatedSSet, all with the same cap.
    - maps (dict): Arrow -> SSetMap ``f(src) -> f(tgt)``.
    - name (str, optional): Label.
    """

    def __init__(self, base: FinCat, values: Dict[Obj, TruncatedSSet], maps: Dict[Arrow, SSetMap], name: str = ''):
        self.base = base
        self.values = dict(values)
        self.maps = dict(maps)
        self.name = name
        caps = {X.cap for X in self.values.values()}
        if len(caps) > 1:
            raise CapError('diagram values have different caps: {}'.format(sorted(caps)))
        self.cap = caps.pop() if caps else 0

    def __call__(self, c: Obj) -> TruncatedSSet:
        return self.values[c]

    def act(self, phi: Arrow, k: int, x: Cell) -> Cell:
        return self.maps[phi](k, x)

    @classmethod
    def constant(cls, base: FinCat, X: TruncatedSSet, name: str = '') -> 'DiagramSSet':
        ident = identity_map(X)
        return cls(base, {c: X for c in base.objects}, {phi: ident for phi in base.arrows},
                   name=name or 'const({})'.format(X.name))

    @classmethod
    def nerve_of(cls, F, cap: int) -> 'DiagramSSet':
        """``N∘F`` for a diagram of enriched categories."""
        nerves = {c: coherent_nerve(F(c), cap) for c in F.base.objects}
        maps = {phi: nerve_of_functor(F.functor(phi), nerves[F.base.src(phi)], nerves[F.base.tgt(phi)])
                for phi in F.base.arrows}
        return cls(F.base, nerves, maps, name='N∘{}'.format(F.name))


def validate_diagram_sset(f: DiagramSSet) -> Report:
    """Checks that every arrow acts by a simplicial map and that the action is strictly functorial."""
    D = f.base
    report = Report(subject=f.name or 'diagram')
    for phi, (c, d) in D.arrows.items():
        m = f.maps.get(phi)
        if m is None or m.source != f(c) or m.target != f(d):
            report.add('arrow action has wrong endpoints', phi)
            continue
        report.extend(validate_map(m), prefix='f({!r}) '.format(phi))
    if not report.ok:
        return report
    for c in D.objects:
        if f.maps[D.identity(c)].assign != identity_map(f(c)).assign:
            report.add('identity', c)
    for (g, h), gh in D.comp.items():
        if compose_maps(f.maps[g], f.maps[h]).assign != f.maps[gh].assign:
            report.add('composition', (g, h))
    return report


def check_functorial(f: DiagramSSet) -> None:
    """
    Raises:
        FunctorialityError: With the first failure as witness.
    """
    report = validate_diagram_sset(f)
    if not report.ok:
        raise FunctorialityError('{} is not a functor: {}'.format(f.name, report.violations[0]),
                                 witness=report.violations[0].witness)


@lru_cache(maxsize=None)
def subset_order(n: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(nonempty_subsets(range(n + 1)))


class RelNerveSimplex:
    """
    An n-cell of a relative nerve.

    Attributes:
    - base (FinCat), f (DiagramSSet)
    - chain (tuple): The ordinary nerve cell ``(d_0, φ_1, ..., φ_n)``.
    - family (dict): ``J -> x_J``.
    """

    def __init__(self, f: DiagramSSet, chain: tuple, family: Dict[Tuple[int, ...], Cell]):
        self.f = f
        self.chain = chain
        self.family = family

    @property
    def n(self) -> int:
        return len(self.chain) - 1

    @classmethod
    def from_cell(cls, f: DiagramSSet, cell: tuple) -> 'RelNerveSimplex':
        chain, values = cell
        return cls(f, chain, dict(zip(subset_order(len(chain) - 1), values)))

    def as_cell(self) -> tuple:
        return self.chain, tuple(self.family[J] for J in subset_order(self.n))

    def objects(self):
        return chain_objects(self.f.base, self.chain)

    def arrow(self, i: int, j: int) -> Arrow:
        return chain_arrow(self.f.base, self.chain, i, j)

    def __eq__(self, other):
        if not isinstance(other, RelNerveSimplex):
            return NotImplemented
        return self.chain == other.chain and self.family == other.family

    def __hash__(self):
        return hash(self.as_cell())

    def __repr__(self):
        return '<{}: chain={!r}>'.format(self.__class__.__name__, self.chain)


def expected_faces(T: RelNerveSimplex, J: Tuple[int, ...]) -> tuple:
    """The faces ``(d_0 x_J, ..., d_m x_J)`` forced by the smaller subsets."""
    j = J[-1]
    faces = []
    for t in J:
        rest = tuple(v for v in J if v != t)
        x = T.family[rest]
        if rest[-1] != j:
            x = T.f.act(T.arrow(rest[-1], j), len(rest) - 1, x)
        faces.append(x)
    return tuple(faces)


def check_compatibility(T: RelNerveSimplex) -> Report:
    """Checks every ``x_J`` lies in ``f(d_j)`` with the forced boundary."""
    report = Report(subject='relative simplex')
    objects = T.objects()
    for J in subset_order(T.n):
        X = T.f(objects[J[-1]])
        x = T.family.get(J)
        if not X.has_cell(len(J) - 1, x):
            report.add('x_J outside f(d_j)', J)
        elif len(J) > 1 and X.boundary(len(J) - 1, x) != expected_faces(T, J):
            report.add('compatibility square', J)
    return report


def enumerate_rel_simplices(f: DiagramSSet, chain: tuple) -> Iterator[tuple]:
    """Yields every relative-nerve cell over a given base chain."""
    n = len(chain) - 1
    order = subset_order(n)
    T = RelNerveSimplex(f, chain, {})
    objects = T.objects()

    def extend(step: int) -> Iterator[tuple]:
        if step == len(order):
            yield chain, tuple(T.family[J] for J in order)
            return
        J = order[step]
        X = f(objects[J[-1]])
        if len(J) == 1:
            pool = X.cells[0]
        else:
            pool = X.cells_with_boundary(len(J) - 1, expected_faces(T, J))
        for x in pool:
            T.family[J] = x
            yield from extend(step + 1)
        T.family.pop(J, None)

    yield from extend(0)


def reindex_rel(T: RelNerveSimplex, alpha: Monotone, base_nerve: TruncatedSSet) -> RelNerveSimplex:
    """
    ``α^* T``: the chain ``d∘α`` and ``x'_{J'} = (α|J')^* x_{α(J')}``.
    """
    m = len(alpha) - 1
    chain = pull_back_cell(base_nerve, T.chain, alpha, T.n)
    objects = T.objects()
    family = {}
    for J in subset_order(m):
        image = tuple(sorted({alpha[v] for v in J}))
        local = tuple(image.index(alpha[v]) for v in J)
        X = T.f(objects[image[-1]])
        family[J] = pull_back_cell(X, T.family[image], local, len(image) - 1)
    return RelNerveSimplex(T.f, chain, family)


def relative_nerve(D: FinCat, f: DiagramSSet, cap: int) -> Tuple[TruncatedSSet, SSetMap]:
    """
    The nerve of D relative to f, with its projection to ``N(D)``.

    Returns:
        tuple: ``(N_f(D), projection)``.

    Raises:
        CapError: If the diagram's cap differs from ``cap``.
    """
    if f.values and f.cap != cap:
        raise CapError('diagram cap {} differs from nerve cap {}'.format(f.cap, cap))
    ND = ordinary_nerve(D, cap)
    cells = []
    for n in range(cap + 1):
        parts = parallel_map(lambda chain: list(enumerate_rel_simplices(f, chain)), ND.cells[n])
        cells.append([c for part in parts for c in part])
        logger.debug('N_f(%s)_%d: %d cells', D.name, n, len(cells[-1]))

    def face_fn(k, i, cell):
        return reindex_rel(RelNerveSimplex.from_cell(f, cell), coface(k, i), ND).as_cell()

    def degen_fn(k, i, cell):
        return reindex_rel(RelNerveSimplex.from_cell(f, cell), codegeneracy(k, i), ND).as_cell()

    N = TruncatedSSet.from_operators(cap, cells, face_fn, degen_fn, name='N_{}({})'.format(f.name, D.name))
    projection = SSetMap.from_function(N, ND, lambda k, cell: cell[0], name='p')
    return N, projection


def rel_simplex_as_maps(T: RelNerveSimplex) -> Dict[Tuple[int, ...], SSetMap]:
    """Each ``s^J`` as a simplicial map ``Δ^J -> f(d_j)``."""
    objects = T.objects()
    out = {}
    for J, x in T.family.items():
        X = T.f(objects[J[-1]])
        source = simplex_on(J, X.cap)
        position = {v: r for r, v in enumerate(J)}
        out[J] = SSetMap.from_function(
            source, X, lambda k, c, x=x, J=J, position=position: pull_back_cell(
                X, x, tuple(position[v] for v in c), len(J) - 1),
            name='s^{}'.format(list(J)))
    return out
