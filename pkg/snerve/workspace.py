"""
 W O R K S P A C E

 The facade tying the corpus, the document codecs and the checks together.
 A workspace fixes a global cap and a bound for the truncated Δ^op, loads
 structures by fixture name or from JSON documents, runs one construction or
 check per call and writes its documents and certificate to a flat output
 directory.
"""
import logging
import os
from typing import Any, Dict, Optional, Tuple

from snerve.enriched.fincat import FinCat
from snerve.enriched.functor import validate_sfunctor
from snerve.enriched.scat import SCat, validate_scat
from snerve.grothendieck.comparison import check_gr_relnerve_iso
from snerve.grothendieck.construction import GrCat, grothendieck
from snerve.grothendieck.diagram import DiagramSCat
from snerve.grothendieck.opfibration import chosen_lift_report, check_opfibration_nerve, is_opfibration
from snerve.harness.codec import content_hash, decode, encode, read_document, sset_to_document, write_document
from snerve.harness.corpus import build_as, corpus, validate_fixture
from snerve.monoidal.monoidal import MonSCat
from snerve.monoidal.operadic import check_composite_certificate, check_monoidal_fibers, \
    check_operadic_fibration, operadic_nerve
from snerve.monoidal.operators import check_cotimes_gr_iso, check_split_cleavage
from snerve.monoidal.opposites import check_op_theorems
from snerve.nerves.coherent import coherent_nerve
from snerve.nerves.ordinary import ordinary_nerve
from snerve.nerves.relative import DiagramSSet, relative_nerve
from snerve.simplicial.horn import horn_check
from snerve.simplicial.maps import validate_map
from snerve.simplicial.sset import validate_sset
from snerve.types.certificate import Certificate
from snerve.types.enum import FixtureKind, HornMode
from snerve.types.error import CapError, LevelError, SchemaError

logger = logging.getLogger(__name__)

Artifacts = Dict[str, Dict[str, Any]]


class Workspace:
    """
    Entry point for running constructions and checks.

    Parameters:
    - cap (int, optional): Global cap of every loaded complex and of the
      nerves built from them. Defaults to ``DEFAULT_CAP``.
    - delta_max (int, optional): Bound M of ``Δ^op_{≤M}``. Defaults to
      ``DEFAULT_DELTA_MAX``.
    - output_dir (str, optional): Where documents are written. Defaults to
      ``OUTPUT_PATH``; created on first write.

    Every loaded structure is kept under its reference together with the
    content hash of its document; certificates list those hashes as inputs.
    """
    DEFAULT_CAP = 3
    DEFAULT_DELTA_MAX = 2
    OUTPUT_PATH = './snerve-out/'

    def __init__(self, cap: int = None, delta_max: int = None, output_dir: str = None):
        self.cap = Workspace.DEFAULT_CAP if cap is None else cap
        self.delta_max = Workspace.DEFAULT_DELTA_MAX if delta_max is None else delta_max
        self.output_dir = output_dir or Workspace.OUTPUT_PATH
        if self.cap < 0:
            raise CapError('cap must be non-negative, got {}'.format(self.cap))
        if self.delta_max < 1:
            raise LevelError('the Delta^op bound must be at least 1, got {}'.format(self.delta_max))
        self.documents: Dict[Tuple[str, str], Any] = {}
        self.hashes: Dict[str, str] = {}

    # ----------------------------------------------------------- loading

    @staticmethod
    def _is_path(ref: str) -> bool:
        return ref.endswith('.json') or os.path.isfile(ref)

    def kind_of(self, ref: str) -> FixtureKind:
        """The kind a fixture name or document provides."""
        if self._is_path(ref):
            kind = read_document(ref).get('kind')
            if kind == 'sset' or kind == 'certificate' or kind not in {k.value for k in FixtureKind}:
                raise SchemaError('{} does not hold a structure workspaces load'.format(ref))
            return FixtureKind(kind)
        entry = corpus().get(ref)
        if entry is None:
            raise SchemaError('no fixture named {!r}'.format(ref))
        return entry.kind

    def load(self, ref: str, kind: FixtureKind, base: Optional[FinCat] = None) -> Any:
        """
        Loads a structure by fixture name or JSON document path.

        Args:
            ref (str): Fixture name, or a path to a document.
            kind (FixtureKind): Requested kind; monoidal structures serve as
                SCats, finite categories as discrete SCats and diagrams as
                Grothendieck constructions.
            base (FinCat, optional): Base for fixtures that adapt to one.

        Returns:
            The structure, built or decoded at the workspace cap.

        Raises:
            SchemaError: Unknown names, malformed documents, wrong kinds.
            CapError: A document whose cap differs from the workspace cap.
        """
        kind = FixtureKind(kind)
        key = (ref, kind.value, base.name if base is not None else '')
        if key in self.documents:
            return self.documents[key]
        if self._is_path(ref):
            obj = self._coerce(decode(read_document(ref), kinds=[k.value for k in FixtureKind]), kind, ref)
        else:
            obj = build_as(ref, kind, self.cap, base)
        cap = self._cap_of(obj)
        if cap is not None and cap != self.cap:
            raise CapError('{} has cap {}, the workspace cap is {}'.format(ref, cap, self.cap))
        self.documents[key] = obj
        self.hashes[ref] = content_hash(encode(obj.total if isinstance(obj, GrCat) else obj))
        logger.debug('loaded %s as %s (%s)', ref, kind.value, self.hashes[ref])
        return obj

    def _coerce(self, obj: Any, kind: FixtureKind, ref: str) -> Any:
        if kind == FixtureKind.scat and isinstance(obj, MonSCat):
            return obj.underlying
        if kind == FixtureKind.grcat and isinstance(obj, DiagramSCat):
            return grothendieck(obj)
        wanted = {FixtureKind.fincat: FinCat, FixtureKind.scat: SCat, FixtureKind.monoidal: MonSCat,
                  FixtureKind.diagram: DiagramSCat, FixtureKind.grcat: GrCat}[kind]
        if not isinstance(obj, wanted):
            raise SchemaError('{} does not hold a {}'.format(ref, kind.value))
        return obj

    @staticmethod
    def _cap_of(obj: Any) -> Optional[int]:
        if isinstance(obj, GrCat):
            return obj.total.cap
        if isinstance(obj, (SCat, MonSCat, DiagramSCat)):
            return obj.cap
        return None

    def stamp(self, cert: Certificate, *refs: str) -> Certificate:
        """Fills the certificate inputs with the content hashes of ``refs``."""
        for ref in refs:
            if ref in self.hashes:
                cert.inputs[ref] = self.hashes[ref]
        return cert

    def write(self, name: str, document: Dict[str, Any]) -> str:
        """
        Writes ``<output_dir>/<name>.json``.

        Returns:
            str: The written path.
        """
        os.makedirs(self.output_dir, exist_ok=True)
        path = os.path.join(self.output_dir, name + '.json')
        write_document(path, document)
        logger.info('wrote %s', path)
        return path

    # ----------------------------------------------------- constructions

    def nerve(self, base: str) -> Tuple[Certificate, Artifacts]:
        D = self.load(base, FixtureKind.fincat)
        N = ordinary_nerve(D, self.cap)
        cert = Certificate(command='nerve --base {} --cap {}'.format(base, self.cap))
        cert.counts['N({})'.format(D.name)] = list(N.counts())
        cert.record_report('validate_sset', validate_sset(N))
        return self.stamp(cert.finish(), base), {'nerve': sset_to_document(N, labels=True)}

    def coherent_nerve(self, scat: str) -> Tuple[Certificate, Artifacts]:
        C = self.load(scat, FixtureKind.scat)
        N = coherent_nerve(C, self.cap)
        cert = Certificate(command='coherent-nerve --scat {} --cap {}'.format(scat, self.cap))
        cert.counts['N({})'.format(C.name)] = list(N.counts())
        cert.counts['nondegenerate'] = list(N.nondegenerate_counts())
        cert.record_report('validate_sset', validate_sset(N))
        return self.stamp(cert.finish(), scat), {'coherent-nerve': sset_to_document(N, labels=True)}

    def relative_nerve(self, base: str, diagram: str) -> Tuple[Certificate, Artifacts]:
        """
        Raises:
            SchemaError: If the diagram is over another base.
        """
        D = self.load(base, FixtureKind.fincat)
        F = self.load(diagram, FixtureKind.diagram, base=D)
        if F.base != D:
            raise SchemaError('{} is a diagram over {}, not {}'.format(diagram, F.base.name, D.name))
        f = DiagramSSet.nerve_of(F, self.cap)
        N, p = relative_nerve(D, f, self.cap)
        cert = Certificate(command='relative-nerve --base {} --diagram {} --cap {}'.format(base, diagram, self.cap))
        cert.counts['N_f({})'.format(D.name)] = list(N.counts())
        cert.counts['N({})'.format(D.name)] = list(p.target.counts())
        cert.record_report('validate_sset', validate_sset(N))
        cert.record_report('projection simplicial', validate_map(p))
        return self.stamp(cert.finish(), base, diagram), {'relative-nerve': sset_to_document(N, labels=True)}

    def grothendieck(self, diagram: str) -> Tuple[Certificate, Artifacts]:
        E = self.load(diagram, FixtureKind.grcat)
        cert = Certificate(command='grothendieck --diagram {} --cap {}'.format(diagram, self.cap))
        cert.counts['objects'] = [len(E.objects)]
        cert.record_report('validate_scat', validate_scat(E.total))
        cert.record_report('projection is a functor', validate_sfunctor(E.projection))
        if E.provenance is not None:
            cert.record_report('chosen lifts coCartesian', chosen_lift_report(E))
        return self.stamp(cert.finish(), diagram), {'grothendieck': encode(E.total)}

    def operadic_nerve(self, monoidal: str) -> Tuple[Certificate, Artifacts]:
        C = self.load(monoidal, FixtureKind.monoidal)
        X = operadic_nerve(C, self.delta_max, self.cap)
        cert = Certificate(command='operadic-nerve --monoidal {} --delta-max {} --cap {}'.format(
            monoidal, self.delta_max, self.cap))
        cert.counts['N⊗({})'.format(C.name)] = list(X.nerve.counts())
        cert.counts['N(Δ^op)'] = list(X.projection.target.counts())
        cert.record_report('validate_sset', validate_sset(X.nerve))
        cert.record_report('projection simplicial', validate_map(X.projection))
        cert.record_report('split cleavage', check_split_cleavage(C, self.delta_max, X.operators))
        return self.stamp(cert.finish(), monoidal), {'operadic-nerve': sset_to_document(X.nerve, labels=True)}

    # ------------------------------------------------------------ checks

    def check_gr_relnerve(self, diagram: str, nmax: int = None) -> Certificate:
        nmax = self.cap if nmax is None else nmax
        F = self.load(diagram, FixtureKind.diagram)
        return self.stamp(check_gr_relnerve_iso(F, nmax), diagram)

    def check_cotimes_gr(self, monoidal: str) -> Certificate:
        C = self.load(monoidal, FixtureKind.monoidal)
        return self.stamp(check_cotimes_gr_iso(C, self.delta_max), monoidal)

    def check_fibers(self, monoidal: str, level: int) -> Certificate:
        C = self.load(monoidal, FixtureKind.monoidal)
        X = operadic_nerve(C, self.delta_max, self.cap)
        return self.stamp(check_monoidal_fibers(X, level), monoidal)

    def check_opposites(self, monoidal: str) -> Certificate:
        C = self.load(monoidal, FixtureKind.monoidal)
        return self.stamp(check_op_theorems(C, self.delta_max, self.cap), monoidal)

    def check_composite(self, monoidal: str, nmax: int = None) -> Certificate:
        nmax = self.cap if nmax is None else nmax
        C = self.load(monoidal, FixtureKind.monoidal)
        return self.stamp(check_composite_certificate(C, self.delta_max, nmax), monoidal)

    def check_opfibration(self, ref: str) -> Certificate:
        """Pullback criterion on every base arrow, and on the chosen lifts when known."""
        E = self.load(ref, FixtureKind.grcat)
        cert = Certificate(command='check opfibration --diagram {} --cap {}'.format(ref, self.cap))
        cert.record_report('opfibration', is_opfibration(E.projection))
        if E.provenance is not None:
            cert.record_report('chosen lifts coCartesian', chosen_lift_report(E))
        logger.info('%s: %s', cert.command, cert.verdict)
        return self.stamp(cert.finish(), ref)

    def check_quasicat(self, ref: str) -> Certificate:
        """
        Truncated quasicategory and coCartesian fibration checks: for a
        diagram on ``N(Gr F) -> N(D)``, for a monoidal structure on
        ``N^⊗(C) -> N(Δ^op)``, and inner horns only for a bare SCat or a
        Grothendieck construction without its diagram.
        """
        kind = self.kind_of(ref)
        cert = Certificate(command='check quasicat {} --cap {}'.format(ref, self.cap))
        if kind == FixtureKind.diagram:
            E = self.load(ref, FixtureKind.grcat)
            cert.record_report('N(Gr F) -> N(D) coCartesian fibration', check_opfibration_nerve(E, self.cap))
        elif kind == FixtureKind.monoidal:
            X = operadic_nerve(self.load(ref, FixtureKind.monoidal), self.delta_max, self.cap)
            cert.counts['N⊗'] = list(X.nerve.counts())
            cert.record_report('N⊗ -> N(Δ^op) coCartesian fibration', check_operadic_fibration(X))
        else:
            if kind == FixtureKind.grcat:
                C = self.load(ref, FixtureKind.grcat).total
            else:
                C = self.load(ref, FixtureKind.scat)
            N = coherent_nerve(C, self.cap)
            cert.counts['N'] = list(N.counts())
            cert.record_report('inner horns', horn_check(N, HornMode.inner))
        logger.info('%s: %s', cert.command, cert.verdict)
        return self.stamp(cert.finish(), ref)

    def check_corpus(self) -> Certificate:
        """Runs every fixture's validator; corrupted fixtures pass by failing."""
        cert = Certificate(command='corpus --cap {}'.format(self.cap))
        for name, entry in corpus().items():
            report = validate_fixture(name, self.cap)
            cert.record('{} ({})'.format(name, 'valid' if entry.valid else 'rejected'), report.ok == entry.valid,
                        report.violations[0] if report.violations else name)
            cert.notes.append('{}: {}'.format(name, entry.description))
        return cert.finish()

    def __repr__(self):
        return '<{}: cap={} delta_max={} out={}>'.format(self.__class__.__name__, self.cap, self.delta_max,
                                                        self.output_dir)
