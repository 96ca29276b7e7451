"""Exact arithmetic for the Fibonacci array, oereo sequences, continuants and
the traced Euclidean Algorithm."""

from .continuants import (
    OereoPolynomial,
    build_poly,
    eval_expanded,
    eval_recurrence,
    render,
    shift_identities_check,
)
from .errors import DomainError, NotCoprimeError, SizeLimitError
from .euclid import (
    BezoutResult,
    EATrace,
    bezout,
    bezout_backtrack,
    cofactors,
    construct_input,
    mod_inverse,
    remainder_backward,
    remainder_forward,
    run_ea,
    worst_case_pair,
)
from .fib_array import fib_entry, fib_number, fib_row, terquem_classic_count
from .sequences import SeqKind, enumerate_sequences, phi, phi_inverse, psi, validate

__all__ = [
    "BezoutResult", "DomainError", "EATrace", "NotCoprimeError", "OereoPolynomial",
    "SeqKind", "SizeLimitError", "bezout", "bezout_backtrack", "build_poly", "cofactors",
    "construct_input", "enumerate_sequences", "eval_expanded", "eval_recurrence",
    "fib_entry", "fib_number", "fib_row", "mod_inverse", "phi", "phi_inverse", "psi",
    "remainder_backward", "remainder_forward", "render", "run_ea", "shift_identities_check",
    "terquem_classic_count", "validate", "worst_case_pair",
]
