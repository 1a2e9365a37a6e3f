"""
JSON documents for finite categories, simplicial sets, enriched categories,
enriched functors, diagrams and strict monoidal enriched categories.

Cells are written as opaque string identifiers ``'k.j'`` (the j-th cell of
dimension k in the order of the encoded complex); objects and arrow names are
written as JSON values with tuples turned into arrays. Decoding turns arrays
back into tuples, so objects such as ``(0, 1)`` survive a round trip while
cells come back as their identifiers.
"""
import hashlib
import json
from typing import Any, Dict, List, Sequence, Tuple

from snerve.enriched.fincat import FinCat
from snerve.enriched.functor import SFunctor
from snerve.enriched.scat import SCat
from snerve.grothendieck.diagram import DiagramSCat
from snerve.monoidal.monoidal import MonSCat
from snerve.simplicial.sset import Cell, TruncatedSSet
from snerve.types.certificate import Certificate
from snerve.types.error import SchemaError

CellIds = List[Dict[Cell, str]]


def thaw(value: Any) -> Any:
    """Tuples to lists, recursively, for JSON output."""
    if isinstance(value, (tuple, list)):
        return [thaw(v) for v in value]
    return value


def freeze(value: Any) -> Any:
    """Lists to tuples, recursively, so decoded values are hashable."""
    if isinstance(value, list):
        return tuple(freeze(v) for v in value)
    return value


def canonical_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, separators=(',', ':'), ensure_ascii=False)


def content_hash(document: Dict[str, Any]) -> str:
    """
    SHA-256 of the canonical form of a document.

    Args:
        document (dict): A JSON-compatible document.

    Returns:
        str: The hex digest, prefixed ``sha256:``.
    """
    return 'sha256:' + hashlib.sha256(canonical_json(document).encode('utf-8')).hexdigest()


def _require(doc: Any, key: str, kind: str = '') -> Any:
    if not isinstance(doc, dict):
        raise SchemaError('expected a JSON object{}'.format(' for ' + kind if kind else ''))
    if key not in doc:
        raise SchemaError('{}document lacks "{}"'.format(kind + ' ' if kind else '', key))
    return doc[key]


def _check_kind(doc: Any, kind: str) -> None:
    found = _require(doc, 'kind', kind)
    if found != kind:
        raise SchemaError('expected a {} document, got {!r}'.format(kind, found))


def cell_ids(X: TruncatedSSet) -> CellIds:
    return [{x: '{}.{}'.format(k, j) for j, x in enumerate(X.cells[k])} for k in range(X.cap + 1)]


def sset_to_document(X: TruncatedSSet, labels: bool = False) -> Dict[str, Any]:
    """
    Encodes a truncated simplicial set.

    Args:
        X (TruncatedSSet): The complex.
        labels (bool): Add a ``labels`` sidecar mapping each id to the
            ``repr`` of the cell it stands for.

    Returns:
        dict: ``{kind, name, cap, cells, face, degen}`` with ``face`` and
        ``degen`` keyed ``"k.i"`` and aligned with ``cells[k]``.
    """
    ids = cell_ids(X)
    doc = {
        'kind': 'sset',
        'name': X.name,
        'cap': X.cap,
        'cells': [[ids[k][x] for x in X.cells[k]] for k in range(X.cap + 1)],
        'face': {'{}.{}'.format(k, i): [ids[k - 1][table[x]] for x in X.cells[k]]
                 for (k, i), table in sorted(X.face.items())},
        'degen': {'{}.{}'.format(k, i): [ids[k + 1][table[x]] for x in X.cells[k]]
                  for (k, i), table in sorted(X.degen.items())},
    }
    if labels:
        doc['labels'] = {ids[k][x]: repr(x) for k in range(X.cap + 1) for x in X.cells[k]}
    return doc


def sset_from_document(doc: Dict[str, Any]) -> TruncatedSSet:
    """
    Raises:
        SchemaError: On missing keys, misaligned tables or unknown ids.
    """
    _check_kind(doc, 'sset')
    cap = _require(doc, 'cap', 'sset')
    cells = _require(doc, 'cells', 'sset')
    if not isinstance(cap, int) or cap < 0 or not isinstance(cells, list) or len(cells) != cap + 1:
        raise SchemaError('sset document needs cap >= 0 and cap + 1 cell lists')
    known = []
    for k, row in enumerate(cells):
        if len(set(row)) != len(row):
            raise SchemaError('duplicate cell ids in dimension {}'.format(k))
        known.append(set(row))

    def table(key: str, shift: int) -> Dict[Tuple[int, int], Dict[str, str]]:
        out = {}
        for label, images in _require(doc, key, 'sset').items():
            try:
                k, i = (int(part) for part in label.split('.'))
            except ValueError:
                raise SchemaError('bad operator key {!r}'.format(label))
            if not 0 <= k + shift <= cap or not 0 <= k <= cap or len(images) != len(cells[k]):
                raise SchemaError('operator {} {!r} does not align with cells'.format(key, label))
            if any(y not in known[k + shift] for y in images):
                raise SchemaError('operator {} {!r} names an unknown cell'.format(key, label))
            out[(k, i)] = dict(zip(cells[k], images))
        return out

    face, degen = table('face', -1), table('degen', 1)
    expected_face = {(k, i) for k in range(1, cap + 1) for i in range(k + 1)}
    expected_degen = {(k, i) for k in range(cap) for i in range(k + 1)}
    if set(face) != expected_face or set(degen) != expected_degen:
        raise SchemaError('sset document lacks operator tables')
    return TruncatedSSet(cap, cells, face, degen, name=doc.get('name', ''))


def fincat_to_document(D: FinCat) -> Dict[str, Any]:
    return {
        'kind': 'fincat',
        'name': D.name,
        'objects': thaw(list(D.objects)),
        'arrows': [[thaw(f), thaw(x), thaw(y)] for f, (x, y) in D.arrows.items()],
        'comp': [[thaw(g), thaw(f), thaw(h)] for (g, f), h in D.comp.items()],
        'identities': [[thaw(x), thaw(i)] for x, i in D.identities.items()],
    }


def fincat_from_document(doc: Dict[str, Any]) -> FinCat:
    _check_kind(doc, 'fincat')
    try:
        objects = [freeze(x) for x in _require(doc, 'objects', 'fincat')]
        arrows = {freeze(f): (freeze(x), freeze(y)) for f, x, y in _require(doc, 'arrows', 'fincat')}
        comp = {(freeze(g), freeze(f)): freeze(h) for g, f, h in _require(doc, 'comp', 'fincat')}
        identities = {freeze(x): freeze(i) for x, i in _require(doc, 'identities', 'fincat')}
    except (TypeError, ValueError) as exc:
        raise SchemaError('malformed fincat document: {}'.format(exc))
    if any(x not in objects or y not in objects for x, y in arrows.values()):
        raise SchemaError('fincat arrow with an unknown endpoint')
    return FinCat(objects, arrows, comp, identities, name=doc.get('name', ''))


def _hom_ids(C: SCat) -> Dict[Tuple[Any, Any], CellIds]:
    cache: Dict[int, CellIds] = {}
    out = {}
    for pair, H in C.homs.items():
        if id(H) not in cache:
            cache[id(H)] = cell_ids(H)
        out[pair] = cache[id(H)]
    return out


def scat_to_document(C: SCat) -> Dict[str, Any]:
    """
    Encodes an enriched category: hom complexes in the sset format, identity
    vertex ids, and one composition table per triple and dimension listing
    ``[g_id, f_id, (g∘f)_id]``.
    """
    ids = _hom_ids(C)
    objects = list(C.objects)
    comp = []
    for x in objects:
        for y in objects:
            for z in objects:
                rows = []
                for k in range(C.cap + 1):
                    gs, fs = C.hom(y, z).cells[k], C.hom(x, y).cells[k]
                    rows.append([[ids[(y, z)][k][g], ids[(x, y)][k][f],
                                  ids[(x, z)][k][C.compose(x, y, z, k, g, f)]] for g in gs for f in fs])
                if any(rows):
                    comp.append([thaw(x), thaw(y), thaw(z), rows])
    return {
        'kind': 'scat',
        'name': C.name,
        'cap': C.cap,
        'objects': thaw(objects),
        'homs': [[thaw(x), thaw(y), sset_to_document(C.hom(x, y))] for x in objects for y in objects],
        'ident': [[thaw(x), ids[(x, x)][0][C.ident[x]]] for x in objects],
        'comp': comp,
    }


def scat_from_document(doc: Dict[str, Any]) -> SCat:
    """
    Raises:
        SchemaError: On malformed documents or composition tables that name
            unknown cells.
    """
    _check_kind(doc, 'scat')
    cap = _require(doc, 'cap', 'scat')
    try:
        objects = [freeze(x) for x in _require(doc, 'objects', 'scat')]
        homs = {(freeze(x), freeze(y)): sset_from_document(h) for x, y, h in _require(doc, 'homs', 'scat')}
        ident = {freeze(x): i for x, i in _require(doc, 'ident', 'scat')}
        tables: Dict[tuple, Dict[Tuple[str, str], str]] = {}
        for x, y, z, rows in _require(doc, 'comp', 'scat'):
            for k, row in enumerate(rows):
                tables[(freeze(x), freeze(y), freeze(z), k)] = {(g, f): h for g, f, h in row}
    except (TypeError, ValueError) as exc:
        raise SchemaError('malformed scat document: {}'.format(exc))
    if any(H.cap != cap for H in homs.values()):
        raise SchemaError('scat hom complexes disagree with cap {}'.format(cap))

    def compose(x, y, z, k, g, f):
        try:
            return tables[(x, y, z, k)][(g, f)]
        except KeyError:
            raise SchemaError('composition table lacks {!r} o {!r} in dimension {}'.format(g, f, k))

    return SCat(objects, homs, compose, ident, cap, name=doc.get('name', ''))


def sfunctor_to_document(F: SFunctor) -> Dict[str, Any]:
    """
    Encodes the tables of an enriched functor; cell ids refer to the
    encodings of its source and target.
    """
    source_ids, target_ids = _hom_ids(F.source), _hom_ids(F.target)
    cells = []
    for x in F.source.objects:
        for y in F.source.objects:
            H = F.source.hom(x, y)
            rows = [[[source_ids[(x, y)][k][c], target_ids[(F(x), F(y))][k][F.on_cells(x, y, k, c)]]
                     for c in H.cells[k]] for k in range(F.source.cap + 1)]
            if any(rows):
                cells.append([thaw(x), thaw(y), rows])
    return {
        'kind': 'sfunctor',
        'name': F.name,
        'objects': [[thaw(x), thaw(F(x))] for x in F.source.objects],
        'cells': cells,
    }


def sfunctor_from_document(doc: Dict[str, Any], source: SCat, target: SCat) -> SFunctor:
    _check_kind(doc, 'sfunctor')
    try:
        on_objects = {freeze(x): freeze(y) for x, y in _require(doc, 'objects', 'sfunctor')}
        tables = {}
        for x, y, rows in _require(doc, 'cells', 'sfunctor'):
            for k, row in enumerate(rows):
                tables[(freeze(x), freeze(y), k)] = dict((c, d) for c, d in row)
    except (TypeError, ValueError) as exc:
        raise SchemaError('malformed sfunctor document: {}'.format(exc))
    if set(on_objects) != set(source.objects) or any(y not in target.objects for y in on_objects.values()):
        raise SchemaError('sfunctor object map does not match its source and target')

    def on_cells(x, y, k, c):
        try:
            return tables[(x, y, k)][c]
        except KeyError:
            raise SchemaError('sfunctor table lacks cell {!r} of hom({!r}, {!r})'.format(c, x, y))

    return SFunctor(source, target, on_objects, on_cells, name=doc.get('name', ''))


def diagram_to_document(F: DiagramSCat) -> Dict[str, Any]:
    """Base table, one SCat document per object and one functor table per arrow."""
    return {
        'kind': 'diagram',
        'name': F.name,
        'base': fincat_to_document(F.base),
        'values': [[thaw(c), scat_to_document(F(c))] for c in F.base.objects],
        'functors': [[thaw(phi), sfunctor_to_document(F.functor(phi))] for phi in F.base.arrows],
    }


def diagram_from_document(doc: Dict[str, Any]) -> DiagramSCat:
    _check_kind(doc, 'diagram')
    base = fincat_from_document(_require(doc, 'base', 'diagram'))
    try:
        values = {freeze(c): scat_from_document(v) for c, v in _require(doc, 'values', 'diagram')}
        raw = [(freeze(phi), f) for phi, f in _require(doc, 'functors', 'diagram')]
    except (TypeError, ValueError) as exc:
        raise SchemaError('malformed diagram document: {}'.format(exc))
    if set(values) != set(base.objects) or {phi for phi, _ in raw} != set(base.arrows):
        raise SchemaError('diagram values and functors do not cover the base')
    functors = {phi: sfunctor_from_document(f, values[base.src(phi)], values[base.tgt(phi)]) for phi, f in raw}
    return DiagramSCat(base, values, functors, name=doc.get('name', ''))


def monoidal_to_document(M: MonSCat) -> Dict[str, Any]:
    """The SCat document plus the tensor table and the unit object."""
    C = M.underlying
    ids = _hom_ids(C)
    objects = list(C.objects)
    cells = []
    for x in objects:
        for x2 in objects:
            for y in objects:
                for y2 in objects:
                    target = ids[(M.tensor_object(x, y), M.tensor_object(x2, y2))]
                    rows = [[[ids[(x, x2)][k][f], ids[(y, y2)][k][g],
                              target[k][M.tensor_cell(x, y, x2, y2, k, f, g)]]
                             for f in C.hom(x, x2).cells[k] for g in C.hom(y, y2).cells[k]]
                            for k in range(C.cap + 1)]
                    if any(rows):
                        cells.append([thaw(x), thaw(y), thaw(x2), thaw(y2), rows])
    return {
        'kind': 'monoidal',
        'name': M.name,
        'scat': scat_to_document(C),
        'unit': thaw(M.unit),
        'tensor': {
            'objects': [[thaw(x), thaw(y), thaw(M.tensor_object(x, y))] for x in objects for y in objects],
            'cells': cells,
        },
    }


def monoidal_from_document(doc: Dict[str, Any]) -> MonSCat:
    _check_kind(doc, 'monoidal')
    C = scat_from_document(_require(doc, 'scat', 'monoidal'))
    tensor = _require(doc, 'tensor', 'monoidal')
    try:
        on_objects = {(freeze(x), freeze(y)): freeze(z) for x, y, z in _require(tensor, 'objects', 'tensor')}
        tables = {}
        for x, y, x2, y2, rows in _require(tensor, 'cells', 'tensor'):
            for k, row in enumerate(rows):
                tables[(freeze(x), freeze(y), freeze(x2), freeze(y2), k)] = {(f, g): h for f, g, h in row}
    except (TypeError, ValueError) as exc:
        raise SchemaError('malformed tensor table: {}'.format(exc))
    unit = freeze(_require(doc, 'unit', 'monoidal'))
    if unit not in C.objects:
        raise SchemaError('monoidal unit {!r} is not an object'.format(unit))

    def on_cells(x, y, x2, y2, k, f, g):
        try:
            return tables[(x, y, x2, y2, k)][(f, g)]
        except KeyError:
            raise SchemaError('tensor table lacks {!r} ⊗ {!r}'.format(f, g))

    try:
        return MonSCat.from_functions(C, lambda x, y: on_objects[(x, y)], on_cells, unit, name=doc.get('name', ''))
    except KeyError as exc:
        raise SchemaError('tensor object table lacks {}'.format(exc))


def certificate_to_document(cert: Certificate, with_time: bool = True) -> Dict[str, Any]:
    return dict(cert.to_dict(with_time), kind='certificate')


def certificate_from_document(doc: Dict[str, Any]) -> Certificate:
    _check_kind(doc, 'certificate')
    return Certificate.from_dict(doc)


_ENCODERS = (
    (MonSCat, monoidal_to_document),
    (DiagramSCat, diagram_to_document),
    (SCat, scat_to_document),
    (SFunctor, sfunctor_to_document),
    (FinCat, fincat_to_document),
    (TruncatedSSet, sset_to_document),
    (Certificate, certificate_to_document),
)

_DECODERS = {
    'sset': sset_from_document,
    'fincat': fincat_from_document,
    'scat': scat_from_document,
    'diagram': diagram_from_document,
    'monoidal': monoidal_from_document,
    'certificate': certificate_from_document,
}


def encode(obj: Any) -> Dict[str, Any]:
    """
    Encodes any supported object by type.

    Raises:
        SchemaError: For an unsupported type.
    """
    for clazz, encoder in _ENCODERS:
        if isinstance(obj, clazz):
            return encoder(obj)
    raise SchemaError('no document format for {}'.format(type(obj).__name__))


def decode(doc: Dict[str, Any], kinds: Sequence[str] = None) -> Any:
    """
    Decodes a document by its ``kind``.

    Args:
        doc (dict): The document.
        kinds (sequence, optional): Accepted kinds; others raise.

    Raises:
        SchemaError: On unknown or unaccepted kinds and malformed documents.
    """
    kind = _require(doc, 'kind')
    if kind not in _DECODERS or (kinds is not None and kind not in kinds):
        raise SchemaError('unexpected document kind {!r}'.format(kind))
    return _DECODERS[kind](doc)


def read_document(path: str) -> Dict[str, Any]:
    """
    Raises:
        SchemaError: If the file is not a JSON object.
    """
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError('{} is not JSON: {}'.format(path, exc))
    if not isinstance(doc, dict):
        raise SchemaError('{} does not hold a JSON object'.format(path))
    return doc


def write_document(path: str, document: Dict[str, Any]) -> None:
    with open(path, 'w', encoding='utf-8') as fh:
        json.dump(document, fh, sort_keys=True, indent=1, ensure_ascii=False)
        fh.write('\n')
