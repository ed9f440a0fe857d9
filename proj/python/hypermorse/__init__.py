"""Embedded homology and discrete Morse theory for hypergraphs."""

import json as _json

from ._core import (
    CommandResult,
    ConditionCError,
    Error,
    ParseError,
    ValidationError,
    condition_c,
    embedded_homology,
    parse_hypergraph,
    run,
    simplicial_homology,
)


def run_json(command, input="", **options):
    """Run a subcommand and return (exit_code, parsed JSON report or None, diagnostics)."""
    res = run(command, input, json=True, **options)
    report = _json.loads(res.output) if res.exit_code == 0 and res.output.strip() else None
    return res.exit_code, report, res.diagnostics


__all__ = [
    "CommandResult",
    "ConditionCError",
    "Error",
    "ParseError",
    "ValidationError",
    "condition_c",
    "embedded_homology",
    "parse_hypergraph",
    "run",
    "run_json",
    "simplicial_homology",
]
