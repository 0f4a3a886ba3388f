"""Modal mu-calculus games: model checking, interpretation and index tools."""

from ._core import (
    Arena,
    Error,
    Formula,
    ParseError,
    Structure,
    bounded_formula,
    challenge,
    check_equivalent,
    check_interprets,
    cleanup,
    corpus,
    enumerate_structures,
    holds,
    mc_game,
    parity_formula,
    parse,
    product,
    satisfies,
    simplify,
)

__all__ = [
    "Arena",
    "Error",
    "Formula",
    "ParseError",
    "Structure",
    "bounded_formula",
    "challenge",
    "check_equivalent",
    "check_interprets",
    "cleanup",
    "corpus",
    "enumerate_structures",
    "holds",
    "mc_game",
    "parity_formula",
    "parse",
    "product",
    "satisfies",
    "simplify",
]
