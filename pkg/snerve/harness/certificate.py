"""
Rendering and parsing of certificates.
"""
import json

import pandas as pd

from snerve.types.certificate import Certificate
from snerve.types.enum import ReportFormat
from snerve.types.error import SchemaError


def counts_table(cert: Certificate) -> pd.DataFrame:
    """Counts as a frame with one row per table and one column per dimension."""
    width = max((len(row) for row in cert.counts.values()), default=0)
    rows = {name: list(row) + [None] * (width - len(row)) for name, row in cert.counts.items()}
    frame = pd.DataFrame.from_dict(rows, orient='index', columns=list(range(width)))
    return frame.astype('Int64') if width else frame


def report_render(cert: Certificate, fmt: ReportFormat = ReportFormat.text, with_time: bool = True) -> str:
    """
    Deterministic rendering of a certificate.

    Args:
        cert (Certificate): The certificate.
        fmt (ReportFormat): ``text`` for people, ``structured`` for a JSON
            document that ``parse_certificate`` reads back.
        with_time (bool): Include the wall-clock field.

    Returns:
        str: The rendered document.
    """
    fmt = ReportFormat(fmt)
    if fmt == ReportFormat.structured:
        return json.dumps(cert.to_dict(with_time), sort_keys=True, indent=2, default=repr)
    lines = ['{verdict}  {command}'.format(verdict=cert.verdict, command=cert.command)]
    if cert.strict_shadow:
        lines.append('  (strict shadow: verifies an isomorphism in place of an equivalence)')
    for name, digest in sorted(cert.inputs.items()):
        lines.append('  input {}: {}'.format(name, digest))
    for name, ok in cert.checks.items():
        lines.append('  [{}] {}'.format('ok' if ok else 'FAIL', name))
    if cert.counts:
        lines.append('')
        lines.append(counts_table(cert).to_string())
    if cert.counterexample is not None:
        lines.append('')
        lines.append('counterexample: {}'.format(cert.counterexample))
    for note in cert.notes:
        lines.append('note: {}'.format(note))
    if with_time:
        lines.append('elapsed: {:.3f}s'.format(cert.elapsed))
    return '\n'.join(lines) + '\n'


def parse_certificate(document: str) -> Certificate:
    """
    Raises:
        SchemaError: If the document is not a structured certificate.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaError('certificate is not JSON: {}'.format(exc))
    if not isinstance(doc, dict):
        raise SchemaError('certificate must be a JSON object')
    return Certificate.from_dict(doc)
