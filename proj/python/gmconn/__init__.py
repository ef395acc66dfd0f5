"""Exact Gauss-Manin connection matrices for hyperplane arrangements."""

from ._core import (
    ArithmeticError,
    Error,
    InconsistentSystem,
    InvalidInput,
    ParseError,
    analyze,
    canonical,
    connection,
    multiplicities,
    omega_general,
    projection,
    run_cli,
    verify,
)

__all__ = [
    "ArithmeticError",
    "Error",
    "InconsistentSystem",
    "InvalidInput",
    "ParseError",
    "analyze",
    "canonical",
    "connection",
    "multiplicities",
    "omega_general",
    "projection",
    "run_cli",
    "verify",
]
