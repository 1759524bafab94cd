from ealakit.cli.commands import (
    COMMANDS,
    Context,
    build_algebra,
    build_structure,
    cmd_build,
    cmd_check,
    cmd_conjugate,
    cmd_lift,
    cmd_roots,
    parse_psi,
)
from ealakit.cli.main import main, run
