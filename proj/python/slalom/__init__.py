"""Extremal length invariants of the twice punctured plane."""

from ._slalom import (  # noqa: F401
    DomainError,
    Error,
    ExponentOverflowError,
    FreeWord,
    NumericError,
    ParseError,
    agm,
    braid_invariant,
    classify_exceptional,
    complete_k,
    concat,
    cover_derivative,
    cover_map,
    cstar,
    curve_to_word,
    decompose,
    elementary_slalom_bounds,
    invert,
    lambda_bounds,
    lambda_invariant,
    lift_word,
    parse_word,
    rect_extremal_length,
    run_cli,
    slalom_pieces,
    verify_log_bounds,
    word_to_curve,
)

__version__ = "0.1.0"
