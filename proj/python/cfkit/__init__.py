"""Continued-fraction toolkit bindings.

Closed-form solutions of three-term recurrences, convergent tables, Lentz and
backward evaluation, and the q-series cross-checks, all over exact rational,
high-precision float, complex, or truncated power-series scalars.  Values cross
the boundary as strings so no precision is lost to binary floats.
"""

from ._core import (
    ConfigError,
    DomainError,
    ExprParseError,
    ToolkitError,
    app3_sum,
    closed_form_term,
    convergent_table,
    eval_fraction,
    evaluate_expression,
    expression_vars,
    hyp0f1_sum,
    iterate_recurrence,
    parse_expression,
    phi_brute,
    phi_layers,
    phi_total,
    q_pochhammer,
    rr_sum,
    run_verify,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "ExprParseError",
    "ToolkitError",
    "app3_sum",
    "closed_form_term",
    "convergent_table",
    "eval_fraction",
    "evaluate_expression",
    "expression_vars",
    "hyp0f1_sum",
    "iterate_recurrence",
    "parse_expression",
    "phi_brute",
    "phi_layers",
    "phi_total",
    "q_pochhammer",
    "rr_sum",
    "run_verify",
]
