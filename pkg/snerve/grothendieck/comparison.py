"""
The simplex-level isomorphism ``N(Gr F) ≅ N_{N∘F}(D)`` over ``N(D)``.

Going right, a coherent simplex S of ``Gr F`` with objects ``(x_i, c_i)``
gives the base chain read off its edges ``d_{ij}`` and, for each J with
maximum j, the coherent simplex of ``F(c_j)`` with objects
``F(d_{ij}) x_i`` and beads ``F(d_{i_m j})`` applied to the fiber
components of S. Going left, the bead ``β`` of I is the bead of ``x_I`` on
the same shape, paired with ``d_{i_0 i_m}``.
"""
import logging
from typing import Dict, Tuple

from snerve.grothendieck.construction import GrCat, grothendieck
from snerve.grothendieck.diagram import DiagramSCat
from snerve.grothendieck.opfibration import projection_nerve_map
from snerve.nerves.bead import bead_order
from snerve.nerves.coherent import coherent_nerve
from snerve.nerves.relative import DiagramSSet, RelNerveSimplex, check_compatibility, relative_nerve, \
    subset_order
from snerve.simplicial.maps import SSetMap, is_bijective, validate_map
from snerve.types.certificate import Certificate
from snerve.types.error import MalformedSimplexError

logger = logging.getLogger(__name__)


def _localize(chain, J) -> tuple:
    position = {v: a for a, v in enumerate(J)}
    return tuple(tuple(position[v] for v in U) for U in chain)


def _globalize(chain, J) -> tuple:
    return tuple(tuple(J[a] for a in U) for U in chain)


def gr_simplex_to_relnerve(F: DiagramSCat, cell: tuple) -> tuple:
    """
    Sends a coherent n-simplex of ``Gr F`` to the matching relative-nerve cell.

    Args:
        F (DiagramSCat): The diagram.
        cell (tuple): ``(objects, values)`` in ``N(Gr F)_n``.

    Returns:
        tuple: ``(chain, values)`` in ``N_{N∘F}(D)_n``.
    """
    D = F.base
    objects, values = cell
    n = len(objects) - 1
    beads = dict(zip(bead_order(n), values))

    def arrow(i: int, j: int):
        if i == j:
            return D.identity(objects[i][1])
        return beads[((i, j),)][1]

    chain = (objects[0][1],) + tuple(arrow(i, i + 1) for i in range(n))
    family = []
    for J in subset_order(n):
        j = J[-1]
        m = len(J) - 1
        local_objects = tuple(F.on_object(arrow(v, j), objects[v][0]) for v in J)
        local_values = []
        for local in bead_order(m):
            glob = _globalize(local, J)
            i0, im = glob[0][0], glob[0][-1]
            sigma, _ = beads[glob]
            source = F.on_object(arrow(i0, im), objects[i0][0])
            local_values.append(F.on_cell(arrow(im, j), source, objects[im][0], len(local) - 1, sigma))
        family.append((local_objects, tuple(local_values)))
    return chain, tuple(family)


def relnerve_simplex_to_gr(F: DiagramSCat, cell: tuple, f: DiagramSSet = None) -> tuple:
    """
    Inverse of ``gr_simplex_to_relnerve``.

    Raises:
        MalformedSimplexError: If ``f`` is given and the family fails the
            compatibility equations.
    """
    D = F.base
    chain, values = cell
    n = len(chain) - 1
    if f is not None:
        report = check_compatibility(RelNerveSimplex.from_cell(f, cell))
        if not report.ok:
            raise MalformedSimplexError('relative simplex violates {}'.format(report.violations[0]))
    family: Dict[Tuple[int, ...], tuple] = dict(zip(subset_order(n), values))
    base_objects = [chain[0]]
    for phi in chain[1:]:
        base_objects.append(D.tgt(phi))

    def arrow(i: int, j: int):
        out = D.identity(base_objects[i])
        for phi in chain[i + 1:j + 1]:
            out = D.compose(phi, out)
        return out

    objects = tuple((family[(i,)][0][0], base_objects[i]) for i in range(n + 1))
    out = []
    for glob in bead_order(n):
        I = glob[-1]
        local_objects, local_values = family[I]
        lookup = dict(zip(bead_order(len(I) - 1), local_values))
        out.append((lookup[_localize(glob, I)], arrow(I[0], I[-1])))
    return objects, tuple(out)


def check_gr_relnerve_iso(F: DiagramSCat, n_max: int, E: GrCat = None) -> Certificate:
    """
    Verifies ``N(Gr F) ≅ N_{N∘F}(D)`` through dimension ``n_max``.

    The certificate records per-dimension counts of both sides, that the two
    explicit maps land in the other side and are mutually inverse, that the
    forward map commutes with faces and degeneracies, and that it commutes
    with both projections to ``N(D)``. The first failing cell is kept as the
    counterexample.
    """
    cert = Certificate(command='check gr-relnerve {} --nmax {}'.format(F.name, n_max))
    E = E or grothendieck(F)
    N_gr = coherent_nerve(E.total, n_max)
    f = DiagramSSet.nerve_of(F, n_max)
    N_rel, p_rel = relative_nerve(F.base, f, n_max)
    p_gr = projection_nerve_map(E.projection, N_gr, p_rel.target)
    cert.counts['N(Gr F)'] = list(N_gr.counts())
    cert.counts['N_f(D)'] = list(N_rel.counts())
    if not cert.record('equal counts', N_gr.counts() == N_rel.counts(), (N_gr.counts(), N_rel.counts())):
        return cert.finish()

    forward = SSetMap.from_function(N_gr, N_rel, lambda k, c: gr_simplex_to_relnerve(F, c), name='Gr->rel')
    backward = SSetMap.from_function(N_rel, N_gr, lambda k, c: relnerve_simplex_to_gr(F, c), name='rel->Gr')
    bad = _first_outside(forward)
    cert.record('forward lands in N_f(D)', bad is None, bad)
    bad = _first_outside(backward)
    cert.record('backward lands in N(Gr F)', bad is None, bad)
    bad = _first_not_fixed(backward, forward)
    cert.record('backward∘forward = id', bad is None, bad)
    bad = _first_not_fixed(forward, backward)
    cert.record('forward∘backward = id', bad is None, bad)
    cert.record('forward bijective', is_bijective(forward))
    cert.record_report('forward commutes with operators', validate_map(forward))
    bad = next(((k, c) for k in range(n_max + 1) for c in N_gr.cells[k]
                if p_rel(k, forward(k, c)) != p_gr(k, c)), None)
    cert.record('commutes with projections', bad is None, bad)
    logger.info('%s: %s', cert.command, cert.verdict)
    return cert.finish()


def _first_outside(m: SSetMap):
    for k, table in enumerate(m.assign):
        for x, y in table.items():
            if not m.target.has_cell(k, y):
                return k, x
    return None


def _first_not_fixed(second: SSetMap, first: SSetMap):
    for k, table in enumerate(first.assign):
        for x, y in table.items():
            if second.assign[k].get(y) != x:
                return k, x
    return None
