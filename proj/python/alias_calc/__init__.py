"""Alias calculus: may- and must-alias relations of E0/E1/E2 programs."""

from ._alias_calc import (
    AliasRelation,
    ParseError,
    PathExpr,
    Program,
    SoundnessReport,
    analyze,
    check_soundness,
    modified_vars,
    parse,
    trace,
)

__all__ = [
    "AliasRelation",
    "ParseError",
    "PathExpr",
    "Program",
    "SoundnessReport",
    "analyze",
    "check_soundness",
    "modified_vars",
    "parse",
    "trace",
]
