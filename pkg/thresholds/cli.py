"""
Console entry point: ``threshold-codes SUBCOMMAND ...``.

Subcommands are the app's management commands. The exit status is 0 on
success, 1 when a verification finds a counterexample or a computation
fails, and 2 on usage errors.
"""
import os
import sys
from typing import Optional, Sequence

SUBCOMMANDS = ('analyze', 'count', 'edges', 'complement', 'extremal', 'reduce', 'verify', 'scan', 'export')
# Django commands still needed around the subcommands (database setup, help)
PASSTHROUGH = ('migrate', 'help', '--help', '-h', '--version')
PROG = 'threshold-codes'


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Dispatch one subcommand and return its exit status."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'threshold_project.settings')
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS + PASSTHROUGH:
        sys.stderr.write(f"usage: {PROG} {{{','.join(SUBCOMMANDS)}}} ...\n")
        return 2

    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line([PROG, *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
