"""Groebner bases over Q with lineage provenance tracking.

The package computes Groebner bases of polynomial ideals with exact rational
arithmetic, either through a serial reference implementation of Buchberger's
algorithm or through a threaded task-pool driver that records, for every
basis element, a recursive lineage key tracing which S-pair produced it.
"""

from .buchberger import buchberger, interreduce, is_groebner, minimalize
from .errors import (
    DivisibilityError,
    ParseError,
    RingMismatchError,
    ZeroPolynomialError,
)
from .formatting import emit_dot, format_lineage_table, render_poly
from .lineage import (
    display_lineage,
    is_leaf,
    leaf_indices,
    lineage_sort_key,
    lineage_to_string,
    parse_lineage,
    task_key,
)
from .parsing import ProblemSpec, parse_input, parse_poly_expr
from .poly import (
    GREVLEX,
    LEX,
    Poly,
    Ring,
    Term,
    cmp_monomials,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)
from .reduction import DivisionResult, reduce_full, s_polynomial, verify_division
from .threaded import (
    InsertionRecord,
    LineageTable,
    RunState,
    RunStatus,
    Task,
    minimalize_table,
    reduce_table,
    table_to_matrix,
    tgb,
)

__version__ = "0.1.0"

__all__ = [
    "DivisibilityError",
    "DivisionResult",
    "GREVLEX",
    "InsertionRecord",
    "LEX",
    "LineageTable",
    "ParseError",
    "Poly",
    "ProblemSpec",
    "Ring",
    "RingMismatchError",
    "RunState",
    "RunStatus",
    "Task",
    "Term",
    "ZeroPolynomialError",
    "buchberger",
    "cmp_monomials",
    "display_lineage",
    "emit_dot",
    "format_lineage_table",
    "interreduce",
    "is_groebner",
    "is_leaf",
    "leaf_indices",
    "lineage_sort_key",
    "lineage_to_string",
    "minimalize",
    "minimalize_table",
    "monomial_div",
    "monomial_divides",
    "monomial_lcm",
    "monomial_mul",
    "parse_input",
    "parse_lineage",
    "parse_poly_expr",
    "reduce_full",
    "reduce_table",
    "render_poly",
    "s_polynomial",
    "table_to_matrix",
    "task_key",
    "tgb",
    "verify_division",
]
