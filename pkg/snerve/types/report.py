from dataclasses import dataclass, field
from typing import Any, List


@dataclass(frozen=True)
class Violation:
    """
    A single failed check together with the data that witnesses the failure.

    Attributes:
    - check (str): Name of the violated identity or axiom, e.g. ``'d0d1=d0d0'``.
    - witness (Any): The cells, objects or arrows exhibiting the failure.
    """
    check: str
    witness: Any = None

    def __str__(self) -> str:
        return '{check}: {witness!r}'.format(check=self.check, witness=self.witness)


@dataclass
class Report:
    """
    Result of a validation or horn-filler pass.

    A report is empty (and ``ok``) when every check passed. ``notes`` carry
    information that is not a failure, such as the dimension past which a
    truncated check cannot say anything.

    Attributes:
    - subject (str): What was checked.
    - violations (list): The failed checks, in discovery order.
    - notes (list): Informational remarks.
    """
    subject: str = ''
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __len__(self) -> int:
        return len(self.violations)

    def add(self, check: str, witness: Any = None) -> None:
        self.violations.append(Violation(check, witness))

    def extend(self, other: 'Report', prefix: str = '') -> None:
        """Append the violations and notes of ``other``, optionally prefixing check names."""
        for v in other.violations:
            self.violations.append(Violation(prefix + v.check, v.witness))
        self.notes.extend(other.notes)

    def checks(self) -> List[str]:
        return [v.check for v in self.violations]

    def __str__(self) -> str:
        head = '<{clazz}: {subject} {state}>'.format(clazz=self.__class__.__name__,
                                                     subject=self.subject,
                                                     state='ok' if self.ok else
                                                     '{} violation(s)'.format(len(self)))
        return '\n'.join([head] + ['  ' + str(v) for v in self.violations])
