"""Exact q-series workbench.

Thin facade over the compiled module: identity verification, product
recognition, asymptotic expansions, and linear-relation search, all in
exact arithmetic.  Coefficients and rationals are returned as strings so
no precision is ever lost crossing the language boundary; feed them to
``int()`` or :class:`fractions.Fraction` as needed.
"""

from qsw._core import (
    WorkbenchError,
    asympt,
    asympt_eval,
    describe,
    expand,
    is_conjecture,
    modular_check,
    normal_form,
    recognize,
    registry_ids,
    relation,
    run_all,
    run_check,
)

__all__ = [
    "WorkbenchError",
    "asympt",
    "asympt_eval",
    "describe",
    "expand",
    "is_conjecture",
    "modular_check",
    "normal_form",
    "recognize",
    "registry_ids",
    "relation",
    "run_all",
    "run_check",
]
