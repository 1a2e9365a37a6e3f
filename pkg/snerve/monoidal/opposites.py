"""
Monoidal opposites and the strict forms of the statements that taking
opposites commutes with ``C^•``, ``C^⊗`` and the operadic nerve.
"""
import logging

from snerve.enriched.functor import opposite_sfunctor, sfunctor_equal
from snerve.enriched.scat import opposite_scat, scat_equal, scat_product
from snerve.grothendieck.construction import fiberwise_op_split, grothendieck
from snerve.grothendieck.diagram import op_diagram
from snerve.monoidal.monoidal import MonSCat
from snerve.monoidal.operadic import operadic_nerve
from snerve.monoidal.operators import c_otimes, c_simplicial_object, gr_comparison_functor
from snerve.nerves.coherent import coherent_nerve, nerve_of_functor, opposite_nerve_bijection
from snerve.simplicial.maps import SSetMap, is_bijective, validate_map
from snerve.simplicial.sset import opposite_sset
from snerve.types.certificate import Certificate

logger = logging.getLogger(__name__)


def opposite_monoidal(C: MonSCat) -> MonSCat:
    """
    ``C^op`` with the same objects, the same unit and the transposed tensor:
    ``f ⊗ g`` in ``C^op`` is the cell ``f ⊗ g`` of C read backwards.
    """
    Cop = opposite_scat(C.underlying)
    tensor = opposite_sfunctor(C.tensor, source_op=scat_product(Cop, Cop), target_op=Cop)
    tensor.name = C.tensor.name
    name = C.name[:-3] if C.name.endswith('^op') else C.name + '^op'
    return MonSCat(Cop, tensor, C.unit, name=name)


def monoidal_equal(C: MonSCat, D: MonSCat) -> bool:
    """Equality on data of underlying categories, tensors and units."""
    return (C.unit == D.unit and scat_equal(C.underlying, D.underlying)
            and sfunctor_equal(C.tensor, D.tensor, check_categories=False))


def _is_iso(m: SSetMap) -> bool:
    return is_bijective(m) and validate_map(m).ok


def check_op_theorems(C: MonSCat, M: int, cap: int) -> Certificate:
    """
    Verifies four legs in their strict form:

    (a) ``(C^•)^op = (C^op)^•`` on data;
    (b) ``Gr((C^op)^•)`` equals the fiberwise opposite of ``Gr(C^•)``;
    (c) ``N((C^⊗)^op) ≅ N(C^⊗)^op`` through the canonical bead reversal;
    (d) ``N^⊗(C^op) ≅ N(fiberwise opposite of Gr C^•)``, together with
        ``N(C^op) ≅ N(C)^op`` on the fiber over ``[1]``.

    The source statements are equivalences; the certificate is flagged as a
    strict shadow.
    """
    cert = Certificate(command='check opposites {} --delta-max {} --cap {}'.format(C.name, M, cap),
                       strict_shadow=True)
    Cop = opposite_monoidal(C)
    bullet = c_simplicial_object(C, M)
    bullet_op = c_simplicial_object(Cop, M)

    # (a)
    flipped = op_diagram(bullet)
    D = bullet.base
    bad = next((('object', c) for c in D.objects if not scat_equal(flipped(c), bullet_op(c))), None)
    if bad is None:
        bad = next((('arrow', phi) for phi in D.arrows
                    if not sfunctor_equal(flipped.functor(phi), bullet_op.functor(phi), check_categories=False)),
                   None)
    cert.record('(a) (C•)^op = (Cop)•', bad is None, bad)

    # (b)
    E = grothendieck(bullet)
    split = fiberwise_op_split(E)
    E_op = grothendieck(bullet_op, check=False)
    cert.record('(b) Gr((Cop)•) = fiberwise op of Gr(C•)', scat_equal(E_op.total, split.total))

    # (c)
    total, _ = c_otimes(C, M)
    N_total = coherent_nerve(total, cap)
    source = coherent_nerve(opposite_scat(total), cap)
    target = opposite_sset(N_total)
    cert.counts['N((C⊗)^op)'] = list(source.counts())
    cert.counts['N(C⊗)^op'] = list(target.counts())
    cert.record('(c) N((C⊗)^op) = N(C⊗)^op', _is_iso(opposite_nerve_bijection(total, source, target)))

    # (d)
    X_op = operadic_nerve(Cop, M, cap)
    N_split = coherent_nerve(split.total, cap)
    to_split = nerve_of_functor(gr_comparison_functor(Cop, X_op.operators, split), X_op.nerve, N_split)
    cert.counts['N⊗(Cop)'] = list(X_op.nerve.counts())
    cert.record('(d) N⊗(Cop) = N(fiberwise op)', _is_iso(to_split))
    fiber = X_op.fiber(1)
    N_C = coherent_nerve(C.underlying, cap)
    N_Cop = coherent_nerve(Cop.underlying, cap)
    to_nerve = SSetMap.from_function(
        fiber, N_Cop, lambda k, cell: (tuple(xs[0] for xs in cell[0]), tuple(comps[0] for _, comps in cell[1])),
        name='fiber [1] -> N(Cop)')
    cert.record('(d) fiber [1] of N⊗(Cop) = N(Cop)', _is_iso(to_nerve))
    reversal = opposite_nerve_bijection(C.underlying, N_Cop, opposite_sset(N_C))
    cert.record('(d) N(Cop) = N(C)^op', _is_iso(reversal))
    logger.info('%s: %s', cert.command, cert.verdict)
    return cert.finish()
