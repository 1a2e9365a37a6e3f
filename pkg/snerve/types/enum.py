from enum import Enum


class HornMode(Enum):
    """Enumeration of the horn families a filler check covers."""
    inner = 0
    all = 1


class ReportFormat(Enum):
    """Enumeration of certificate rendering formats."""
    text = 'text'
    structured = 'structured'


class ExitStatus(Enum):
    """Enumeration of the command-line exit codes."""
    PASS = 0
    PROPERTY_FAILURE = 1
    MALFORMED_INPUT = 2


class FixtureKind(Enum):
    """Enumeration of the structures a corpus fixture or document provides."""
    fincat = 'fincat'
    scat = 'scat'
    monoidal = 'monoidal'
    diagram = 'diagram'
    grcat = 'grcat'
