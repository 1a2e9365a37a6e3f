"""
The enriched Grothendieck construction.

For ``F: D -> sCat`` the total category has objects ``(x, c)`` with x an
object of ``F(c)``, and

    hom((x, c), (y, d)) = ∐_{φ: c -> d} F(d)(Fφ x, y)

with cells ``(σ, φ)``. Composition is ``(τ, ψ)∘(σ, φ) = (τ∘Fψ σ, ψφ)``.
"""
from dataclasses import dataclass
from typing import Hashable, Optional, Tuple

from snerve.enriched.fincat import Arrow, FinCat
from snerve.enriched.functor import SFunctor
from snerve.enriched.scat import SCat, discrete_scat, underlying_fincat
from snerve.grothendieck.diagram import DiagramSCat, check_diagram, op_diagram
from snerve.simplicial.sset import TruncatedSSet
from snerve.types.error import BaseCategoryError, ProvenanceError

GrObject = Tuple[Hashable, Hashable]


@dataclass(frozen=True)
class GrArrow:
    """
    A vertex ``(σ, φ)`` of a hom complex of a Grothendieck construction.

    Attributes:
    - source (tuple): ``(x, c)``.
    - target (tuple): ``(y, d)``.
    - component: Vertex σ of ``F(d)(Fφ x, y)``.
    - base: The arrow ``φ: c -> d``.
    """
    source: GrObject
    target: GrObject
    component: Hashable
    base: Hashable

    def as_cell(self) -> tuple:
        return self.component, self.base


class GrCat:
    """
    Result of ``grothendieck``.

    Attributes:
    - total (SCat): The total enriched category.
    - projection (SFunctor): ``total -> discrete_scat(D)``.
    - provenance (DiagramSCat, optional): The diagram it was built from.
    - base (FinCat): The base category. Without provenance it is read off
      the discrete target of the projection.
    """

    def __init__(self, total: SCat, projection: SFunctor, provenance: Optional[DiagramSCat] = None):
        self.total = total
        self.projection = projection
        self.provenance = provenance
        if provenance is not None:
            self.base: FinCat = provenance.base
        else:
            self.base = underlying_fincat(projection.target)

    @property
    def objects(self):
        return self.total.objects

    def hom(self, a: GrObject, b: GrObject) -> TruncatedSSet:
        return self.total.hom(a, b)

    def __repr__(self):
        return '<{}: {}>'.format(self.__class__.__name__, self.total.name)


def _gr_hom(F: DiagramSCat, x, c, y, d) -> TruncatedSSet:
    D = F.base
    cap = F.cap
    parts = [(phi, F(d).hom(F.on_object(phi, x), y)) for phi in D.hom(c, d)]
    cells = [[(s, phi) for phi, H in parts for s in H.cells[k]] for k in range(cap + 1)]
    lookup = dict(parts)
    face = {(k, i): {(s, phi): (lookup[phi].face[(k, i)][s], phi) for s, phi in cells[k]}
            for k in range(1, cap + 1) for i in range(k + 1)}
    degen = {(k, i): {(s, phi): (lookup[phi].degen[(k, i)][s], phi) for s, phi in cells[k]}
             for k in range(cap) for i in range(k + 1)}
    return TruncatedSSet(cap, cells, face, degen, name='Gr({!r},{!r})'.format((x, c), (y, d)))


def grothendieck(F: DiagramSCat, check: bool = True) -> GrCat:
    """
    Builds ``Gr F`` with its projection to the discrete enrichment of the base.

    Args:
        F (DiagramSCat): The diagram.
        check (bool): Validate strict functoriality of F first.

    Raises:
        FunctorialityError: If ``check`` is set and F is not a strict functor.
    """
    if check:
        check_diagram(F)
    D = F.base
    cap = F.cap
    objects = [(x, c) for c in D.objects for x in F(c).objects]
    homs = {(a, b): _gr_hom(F, a[0], a[1], b[0], b[1]) for a in objects for b in objects}

    def compose(a, b, e, k, g, f):
        (tau, psi), (sigma, phi) = g, f
        x, y, z, target = a[0], b[0], e[0], e[1]
        fpsi = F.functor(psi)
        moved = fpsi.on_cells(F.on_object(phi, x), y, k, sigma)
        start = F.on_object(D.compose(psi, phi), x)
        return F(target).compose(start, fpsi(y), z, k, tau, moved), D.compose(psi, phi)

    ident = {(x, c): (F(c).ident[x], D.identity(c)) for (x, c) in objects}
    total = SCat(objects, homs, compose, ident, cap, name='Gr({})'.format(F.name))
    base = discrete_scat(D, cap)
    projection = SFunctor(total, base, {(x, c): c for (x, c) in objects}, lambda a, b, k, cell: cell[1],
                          name='P')
    return GrCat(total, projection, F)


def cocartesian_lift(E: GrCat, source: GrObject, phi: Arrow) -> GrArrow:
    """
    The chosen lift ``(id_{Fφ x}, φ)`` of ``φ`` at ``(x, c)``.

    Raises:
        BaseCategoryError: If φ is not an arrow of the base starting at c.
        ProvenanceError: If E carries no diagram.
    """
    if E.provenance is None:
        raise ProvenanceError('chosen lifts need the originating diagram')
    F = E.provenance
    x, c = source
    if phi not in F.base.arrows or F.base.src(phi) != c:
        raise BaseCategoryError('{!r} is not an arrow of {} out of {!r}'.format(phi, F.base.name, c))
    d = F.base.tgt(phi)
    y = F.on_object(phi, x)
    return GrArrow(source, (y, d), F(d).ident[y], phi)


def fiberwise_op_split(E: GrCat) -> GrCat:
    """
    Fiberwise opposite of a split opfibration: ``Gr`` of ``c -> F(c)^op``.

    Raises:
        ProvenanceError: If E has no originating diagram.
    """
    if E.provenance is None:
        raise ProvenanceError('fiberwise opposites are only built for Grothendieck constructions')
    return grothendieck(op_diagram(E.provenance), check=False)
