"""Exact Horadam sequence terms, identity audits, and symbolic proofs.

Thin re-export of the compiled extension; exact values are strings.
"""

from ._core import (
    DegenerateQ,
    DegenerateTriple,
    DivisionByZero,
    NotInvertible,
    RepeatedRoot,
    UsageError,
    audit_json,
    check,
    classify,
    de_moivre,
    gf_coefficients,
    identity_ids,
    identity_info,
    pythagorean_triple,
    sym_table,
    sym_term,
    sym_verify,
    term,
    terms,
)

__all__ = [
    "DegenerateQ",
    "DegenerateTriple",
    "DivisionByZero",
    "NotInvertible",
    "RepeatedRoot",
    "UsageError",
    "audit_json",
    "check",
    "classify",
    "de_moivre",
    "gf_coefficients",
    "identity_ids",
    "identity_info",
    "pythagorean_triple",
    "sym_table",
    "sym_term",
    "sym_verify",
    "term",
    "terms",
]
