"""Series solutions of the time-fractional Zakharov-Kuznetsov equation."""

from ._core import (
    DomainError,
    Error,
    Expr,
    IoError,
    ParseError,
    Problem,
    ProblemError,
    SizeGuardError,
    Solution,
    UnboundSymbolError,
    fzk222,
    gamma,
    load_problem,
    parse,
    problem_from_json,
    solve,
    table_csv,
)

__all__ = [
    "DomainError",
    "Error",
    "Expr",
    "IoError",
    "ParseError",
    "Problem",
    "ProblemError",
    "SizeGuardError",
    "Solution",
    "UnboundSymbolError",
    "fzk222",
    "gamma",
    "load_problem",
    "parse",
    "problem_from_json",
    "solve",
    "table_csv",
]
