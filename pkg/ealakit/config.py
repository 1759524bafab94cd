from enum import Enum
from pathlib import Path

__version__ = "0.1.0"

MANIFESTS = Path(__file__).parent / "cli" / "manifests"
REPORT_SCHEMA_VERSION = 1


class ExitCode(Enum):
    PASSED = 0
    MATH_FAILURE = 1
    INVALID_INPUT = 2
