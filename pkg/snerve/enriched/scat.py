"""
Finite simplicially enriched categories.

Composition is held as a function ``compose(x, y, z, k, g, f)`` returning the
k-cell ``g∘f`` of ``hom(x, z)`` for k-cells ``g`` of ``hom(y, z)`` and ``f`` of
``hom(x, y)``. The corresponding simplicial maps out of binary products are
materialized only on demand (validation, documents, data equality).
"""
import itertools
import logging
from typing import Callable, Dict, Hashable, List, Sequence, Tuple

from snerve.enriched.fincat import FinCat
from snerve.extras.concurrency import parallel_map
from snerve.simplicial.horn import horn_check
from snerve.simplicial.limits import binary_product, point, sset_power
from snerve.simplicial.maps import SSetMap
from snerve.simplicial.sset import Cell, TruncatedSSet, sub_sset, validate_sset
from snerve.types.enum import HornMode
from snerve.types.error import BaseCategoryError, CapError
from snerve.types.report import Report

logger = logging.getLogger(__name__)

Obj = Hashable
Compose = Callable[[Obj, Obj, Obj, int, Cell, Cell], Cell]


def empty_sset(cap: int) -> TruncatedSSet:
    return TruncatedSSet(cap, [[] for _ in range(cap + 1)],
                         {(k, i): {} for k in range(1, cap + 1) for i in range(k + 1)},
                         {(k, i): {} for k in range(cap) for i in range(k + 1)}, name='empty')


class SCat:
    """
    A finite simplicially enriched category with a common hom cap.

    Parameters:
    - objects (sequence): The objects, in a fixed order.
    - homs (dict): ``(x, y) -> TruncatedSSet``; missing pairs are empty.
    - compose (callable): ``compose(x, y, z, k, g, f) -> g∘f``.
    - ident (dict): Object -> identity vertex of ``hom(x, x)``.
    - cap (int): Common cap of every hom complex.
    - name (str, optional): Label.
    """

    def __init__(self,
                 objects: Sequence[Obj],
                 homs: Dict[Tuple[Obj, Obj], TruncatedSSet],
                 compose: Compose,
                 ident: Dict[Obj, Cell],
                 cap: int,
                 name: str = ''):
        self.objects = tuple(objects)
        self.cap = cap
        self.name = name
        self.compose = compose
        self.ident = dict(ident)
        empty = None
        self.homs: Dict[Tuple[Obj, Obj], TruncatedSSet] = {}
        for x in self.objects:
            for y in self.objects:
                X = homs.get((x, y))
                if X is None:
                    empty = empty or empty_sset(cap)
                    X = empty
                elif X.cap != cap:
                    raise CapError('hom({!r}, {!r}) has cap {}, expected {}'.format(x, y, X.cap, cap))
                self.homs[(x, y)] = X
        self._ident_cells: Dict[Tuple[Obj, int], Cell] = {}

    def hom(self, x: Obj, y: Obj) -> TruncatedSSet:
        return self.homs[(x, y)]

    def comp(self, x: Obj, y: Obj, z: Obj, k: int, g: Cell, f: Cell) -> Cell:
        return self.compose(x, y, z, k, g, f)

    def ident_cell(self, x: Obj, k: int) -> Cell:
        """The identity of x degenerated to dimension k."""
        key = (x, k)
        if key not in self._ident_cells:
            cell = self.ident[x]
            H = self.homs[(x, x)]
            for j in range(k):
                cell = H.s(j, 0, cell)
            self._ident_cells[key] = cell
        return self._ident_cells[key]

    def comp_map(self, x: Obj, y: Obj, z: Obj) -> SSetMap:
        """Composition ``hom(y, z) x hom(x, y) -> hom(x, z)`` as a simplicial map."""
        P = binary_product(self.hom(y, z), self.hom(x, y))
        return SSetMap.from_function(P, self.hom(x, z), lambda k, c: self.compose(x, y, z, k, c[0], c[1]),
                                     name='comp({!r},{!r},{!r})'.format(x, y, z))

    def __repr__(self):
        return '<{}: {} objects={} cap={}>'.format(self.__class__.__name__, self.name or '-',
                                                   len(self.objects), self.cap)


def validate_scat(C: SCat, d: int = None) -> Report:
    """
    Checks the enrichment axioms up to dimension ``d`` (default: the cap).

    Reports hom complexes that are not simplicial sets, composites that leave
    the target hom or fail to commute with faces and degeneracies, unit law
    failures and non-associative triples (witness ``(w, x, y, z, k, h, g, f)``).
    """
    d = C.cap if d is None else d
    report = Report(subject=C.name or 'scat')
    for (x, y), H in C.homs.items():
        report.extend(validate_sset(H), prefix='hom({!r},{!r}) '.format(x, y))
    for x in C.objects:
        if not C.hom(x, x).has_cell(0, C.ident.get(x)):
            report.add('identity vertex missing', x)
    if not report.ok:
        return report

    def check_pair(pair):
        x, z = pair
        out = Report()
        for y in C.objects:
            G, F, H = C.hom(y, z), C.hom(x, y), C.hom(x, z)
            for k in range(d + 1):
                for g in G.cells[k]:
                    for f in F.cells[k]:
                        h = C.compose(x, y, z, k, g, f)
                        if not H.has_cell(k, h):
                            out.add('composite leaves hom', (x, y, z, k, g, f))
                            continue
                        if k > 0:
                            for i in range(k + 1):
                                if H.d(k, i, h) != C.compose(x, y, z, k - 1, G.d(k, i, g), F.d(k, i, f)):
                                    out.add('composition commutes with d{}'.format(i), (x, y, z, k, g, f))
                        if k < C.cap:
                            for i in range(k + 1):
                                if H.s(k, i, h) != C.compose(x, y, z, k + 1, G.s(k, i, g), F.s(k, i, f)):
                                    out.add('composition commutes with s{}'.format(i), (x, y, z, k, g, f))
        for k in range(d + 1):
            for f in C.hom(x, z).cells[k]:
                if C.compose(x, z, z, k, C.ident_cell(z, k), f) != f:
                    out.add('left unit', (x, z, k, f))
                if C.compose(x, x, z, k, f, C.ident_cell(x, k)) != f:
                    out.add('right unit', (x, z, k, f))
        return out

    pairs = list(itertools.product(C.objects, repeat=2))
    for part in parallel_map(check_pair, pairs):
        report.extend(part)
    if not report.ok:
        return report

    def check_assoc(quad):
        w, x, y, z = quad
        out = Report()
        for k in range(d + 1):
            for f in C.hom(w, x).cells[k]:
                for g in C.hom(x, y).cells[k]:
                    gf = C.compose(w, x, y, k, g, f)
                    for h in C.hom(y, z).cells[k]:
                        if C.compose(w, y, z, k, h, gf) != C.compose(w, x, z, k, C.compose(x, y, z, k, h, g), f):
                            out.add('associativity', (w, x, y, z, k, h, g, f))
        return out

    for part in parallel_map(check_assoc, list(itertools.product(C.objects, repeat=4))):
        report.extend(part)
    logger.debug('validated %s: %d violation(s)', C.name, len(report))
    return report


def opposite_scat(C: SCat) -> SCat:
    """
    ``C^op``: ``hom(x, y)`` is ``C(y, x)`` and composition is transposed.
    """
    homs = {(x, y): C.homs[(y, x)] for x in C.objects for y in C.objects}
    compose = _transposed(C.compose)
    return SCat(C.objects, homs, compose, C.ident, C.cap, name=_op_name(C.name))


def _transposed(compose: Compose) -> Compose:
    original = getattr(compose, 'transposed_of', None)
    if original is not None:
        return original

    def transposed(x, y, z, k, g, f):
        return compose(z, y, x, k, f, g)

    transposed.transposed_of = compose
    return transposed


def _op_name(name: str) -> str:
    if name.endswith('^op'):
        return name[:-3]
    return name + '^op' if name else ''


def discrete_sset(cells: Sequence[Cell], cap: int, name: str = '') -> TruncatedSSet:
    """A discrete simplicial set: the same cells in every dimension, identity operators."""
    cells = list(cells)
    identity = {c: c for c in cells}
    face = {(k, i): identity for k in range(1, cap + 1) for i in range(k + 1)}
    degen = {(k, i): identity for k in range(cap) for i in range(k + 1)}
    return TruncatedSSet(cap, [cells] * (cap + 1), face, degen, name=name)


def discrete_scat(D: FinCat, cap: int) -> SCat:
    """
    ``D`` as a discrete enriched category; every hom cell is an arrow name.
    """
    homs = {(x, y): discrete_sset(D.hom(x, y), cap, name='{}({!r},{!r})'.format(D.name, x, y))
            for x in D.objects for y in D.objects}

    def compose(x, y, z, k, g, f):
        return D.compose(g, f)

    return SCat(D.objects, homs, compose, D.identities, cap, name=D.name)


def underlying_fincat(C: SCat) -> FinCat:
    """
    The ordinary category of a discrete enriched category, vertices as arrows.
    Inverse to ``discrete_scat`` up to the cap.

    Raises:
        BaseCategoryError: If C has non-degenerate cells above dimension 0.
    """
    if not is_discrete(C):
        raise BaseCategoryError('{} is not discrete'.format(C.name or 'scat'))
    arrows = {f: (x, y) for x in C.objects for y in C.objects for f in C.hom(x, y).cells[0]}
    comp = {(g, f): C.compose(x, y, z, 0, g, f)
            for x in C.objects for y in C.objects for z in C.objects
            for f in C.hom(x, y).cells[0] for g in C.hom(y, z).cells[0]}
    return FinCat(C.objects, arrows, comp, C.ident, name=C.name)


def is_discrete(C: SCat) -> bool:
    return all(H.nondegenerate_counts()[1:] == (0,) * C.cap for H in C.homs.values())


def scat_power_list(factors: Sequence[SCat], cap: int = None, name: str = '') -> SCat:
    """
    Product of enriched categories with flattened tuple objects and cells.

    The empty product is the terminal enriched category on the object ``()``.

    Raises:
        CapError: On mismatched caps, or an empty product without ``cap``.
    """
    factors = list(factors)
    if factors:
        caps = {C.cap for C in factors}
        if len(caps) > 1:
            raise CapError('cap mismatch: {}'.format(sorted(caps)))
        cap = caps.pop()
    elif cap is None:
        raise CapError('the empty product needs an explicit cap')
    objects = list(itertools.product(*[C.objects for C in factors]))
    cache: Dict[tuple, TruncatedSSet] = {}
    homs = {}
    for x in objects:
        for y in objects:
            key = tuple(id(C.hom(a, b)) for C, a, b in zip(factors, x, y))
            if key not in cache:
                cache[key] = sset_power([C.hom(a, b) for C, a, b in zip(factors, x, y)], cap) \
                    if factors else point(cap)
            homs[(x, y)] = cache[key]

    def compose(x, y, z, k, g, f):
        return tuple(C.compose(a, b, c, k, gi, fi) for C, a, b, c, gi, fi in zip(factors, x, y, z, g, f))

    ident = {x: tuple(C.ident[a] for C, a in zip(factors, x)) for x in objects}
    if not name:
        name = ' x '.join(C.name for C in factors) if factors else 'terminal'
    return SCat(objects, homs, compose, ident, cap, name=name)


def scat_product(C: SCat, D: SCat) -> SCat:
    return scat_power_list([C, D])


def scat_power(C: SCat, n: int) -> SCat:
    """``C^n``; ``C^0`` is the terminal enriched category."""
    return scat_power_list([C] * n, cap=C.cap, name='{}^{}'.format(C.name, n))


def terminal_scat(cap: int) -> SCat:
    return scat_power_list([], cap=cap)


def sub_scat(C: SCat, objects: Sequence[Obj], keep: Callable[[Obj, Obj, int, Cell], bool],
             name: str = '') -> SCat:
    """
    The sub-enriched category on ``objects`` with hom cells accepted by
    ``keep(x, y, k, cell)``. Closure under composition and operators is
    reported by ``validate_scat``.
    """
    homs = {(x, y): sub_sset(C.hom(x, y), lambda k, c, x=x, y=y: keep(x, y, k, c))
            for x in objects for y in objects}
    return SCat(objects, homs, C.compose, {x: C.ident[x] for x in objects}, C.cap, name=name or C.name)


def is_locally_kan(C: SCat, d: int = None) -> Report:
    """
    Runs ``horn_check(all, d)`` on every hom complex.

    Raises:
        CapError: If ``d`` exceeds the cap.
    """
    d = C.cap if d is None else d
    if d > C.cap:
        raise CapError('horn dimension {} exceeds cap {}'.format(d, C.cap))
    report = Report(subject='{} locally Kan'.format(C.name or 'scat'))
    # homs shared between pairs are checked once
    unique = list({id(H): pair for pair, H in reversed(list(C.homs.items()))}.values())[::-1]
    results = parallel_map(lambda pair: horn_check(C.homs[pair], HornMode.all, d, first_only=True), unique)
    for pair, part in zip(unique, results):
        report.extend(part, prefix='hom({!r},{!r}) '.format(*pair))
    return report


def composition_table(C: SCat, x: Obj, y: Obj, z: Obj) -> List[Dict[Tuple[Cell, Cell], Cell]]:
    """The composition of one triple tabulated per dimension."""
    return [{(g, f): C.compose(x, y, z, k, g, f) for g in C.hom(y, z).cells[k] for f in C.hom(x, y).cells[k]}
            for k in range(C.cap + 1)]


def scat_equal(C: SCat, D: SCat) -> bool:
    """Equality on data: objects, hom complexes, identities and composition tables."""
    if set(C.objects) != set(D.objects) or C.cap != D.cap or C.ident != D.ident:
        return False
    if any(C.hom(x, y) != D.hom(x, y) for x in C.objects for y in C.objects):
        return False
    return all(composition_table(C, x, y, z) == composition_table(D, x, y, z)
               for x, y, z in itertools.product(C.objects, repeat=3))
