"""Bijections between wedge walks, matchings and permutations, with the
statistics they carry and the q-series identities they explain."""
from .core import (
    ASYM,
    DYCK,
    KINDS,
    MATCHING,
    MOTZKIN,
    PERMUTATION,
    SYM,
    AsymPdsaw,
    CapExceeded,
    Matching,
    ParseError,
    Permutation,
    Step,
    SymPdsaw,
    ValidationError,
    WeightedDyckPath,
    WeightedMotzkinPath,
    count_free_sym_walks,
    count_objects,
    enumerate_objects,
    parse,
    render_text,
    validate,
)
from .render import render_ascii

__version__ = "0.1.0"

__all__ = [
    "ASYM",
    "DYCK",
    "KINDS",
    "MATCHING",
    "MOTZKIN",
    "PERMUTATION",
    "SYM",
    "AsymPdsaw",
    "CapExceeded",
    "Matching",
    "ParseError",
    "Permutation",
    "Step",
    "SymPdsaw",
    "ValidationError",
    "WeightedDyckPath",
    "WeightedMotzkinPath",
    "count_free_sym_walks",
    "count_objects",
    "enumerate_objects",
    "parse",
    "render_text",
    "render_ascii",
    "validate",
]
