"""
Pass/fail certificates for the comparison checks.
"""
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from snerve.types.error import SchemaError
from snerve.types.report import Report


@dataclass
class Certificate:
    """
    Outcome of a certificate-producing check.

    Attributes:
    - command (str): The check or CLI command that produced it.
    - inputs (dict): Input name -> SHA-256 content hash.
    - checks (dict): Sub-check name -> verdict, in execution order.
    - counts (dict): Table name -> list of per-dimension (or per-level) counts.
    - counterexample (str, optional): Rendering of the first failing cell.
    - strict_shadow (bool): The check verifies a strict isomorphism standing
      in for an equivalence.
    - elapsed (float): Wall-clock seconds.
    - notes (list): Free-form remarks.
    """
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    counts: Dict[str, List[int]] = field(default_factory=dict)
    counterexample: Optional[str] = None
    strict_shadow: bool = False
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        self._started = time.perf_counter()

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def verdict(self) -> str:
        return 'PASS' if self.passed else 'FAIL'

    def record(self, name: str, ok: bool, counterexample: Any = None) -> bool:
        """Stores a sub-check verdict; the first failure's witness is kept."""
        self.checks[name] = bool(ok)
        if not ok and self.counterexample is None and counterexample is not None:
            self.counterexample = '{}: {!r}'.format(name, counterexample)
        return bool(ok)

    def record_report(self, name: str, report: Report) -> bool:
        witness = report.violations[0] if report.violations else None
        return self.record(name, report.ok, str(witness) if witness is not None else None)

    def absorb(self, other: 'Certificate', prefix: str = '') -> None:
        """Merges the checks, counts and inputs of a sub-certificate."""
        for name, ok in other.checks.items():
            self.checks[prefix + name] = ok
        for name, row in other.counts.items():
            self.counts[prefix + name] = row
        self.inputs.update(other.inputs)
        if self.counterexample is None and other.counterexample is not None:
            self.counterexample = prefix + other.counterexample
        self.strict_shadow = self.strict_shadow or other.strict_shadow

    def finish(self) -> 'Certificate':
        self.elapsed = round(time.perf_counter() - self._started, 6)
        return self

    def to_dict(self, with_time: bool = True) -> Dict[str, Any]:
        out = {
            'command': self.command,
            'verdict': self.verdict,
            'inputs': dict(sorted(self.inputs.items())),
            'checks': dict(self.checks),
            'counts': {name: list(row) for name, row in self.counts.items()},
            'counterexample': self.counterexample,
            'strict_shadow': self.strict_shadow,
            'notes': list(self.notes),
        }
        if with_time:
            out['elapsed'] = self.elapsed
        return out

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> 'Certificate':
        try:
            cert = cls(command=doc['command'],
                       inputs=dict(doc.get('inputs', {})),
                       checks={k: bool(v) for k, v in doc.get('checks', {}).items()},
                       counts={k: [int(v) for v in row] for k, row in doc.get('counts', {}).items()},
                       counterexample=doc.get('counterexample'),
                       strict_shadow=bool(doc.get('strict_shadow', False)),
                       elapsed=float(doc.get('elapsed', 0.0)),
                       notes=list(doc.get('notes', [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError('malformed certificate document: {}'.format(exc))
        if 'verdict' in doc and doc['verdict'] != cert.verdict:
            raise SchemaError('certificate verdict {} contradicts its checks'.format(doc['verdict']))
        return cert

    def __eq__(self, other) -> bool:
        if not isinstance(other, Certificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()
