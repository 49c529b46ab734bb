"""Canonical equations of Riemann surfaces with automorphisms.

Thin wrapper over the C++ core: each function mirrors a CLI subcommand,
takes input file paths, and returns (report_text, exit_code).
"""

from ._canoneq import (
    Error,
    ParseError,
    candidate,
    characters,
    chartable,
    pipeline,
    scalar,
    screen,
    stratify,
    verify,
)

__all__ = [
    "Error",
    "ParseError",
    "candidate",
    "characters",
    "chartable",
    "pipeline",
    "scalar",
    "screen",
    "stratify",
    "verify",
]
