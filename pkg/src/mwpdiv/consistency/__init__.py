"""Equation and formula checking against labeled answers."""

from .answers import (NON_NUMERIC, PAIR, RATIO, SINGLE, AnswerValue, extract_numbers,
                      parse_answer, to_fraction)
from .checker import (CONSISTENT, INCONSISTENT, NON_NUMERIC_ANSWER, STATUSES, UNSUPPORTED,
                      CheckResult, ConsistencyReport, SubsetResult, arithmetic_subset_filter,
                      check, check_corpus, check_record, compute, exclusion_reasons,
                      format_value, matches)
from .equations import (VALUE, VARIABLES, BinOp, ConsistencyError, EquationSystem,
                        EvaluationError, Neg, Num, ParseError, UnsupportedError, Var,
                        evaluate_expression, linear_forms, parse_equation, solve)
from .formulas import (ARITHMETIC_OPS, Constant, FormulaProgram, NumRef, Step, StepRef,
                       evaluate, parse_formula, scan_formula)

__all__ = [
    "AnswerValue", "ARITHMETIC_OPS", "BinOp", "CheckResult", "CONSISTENT", "ConsistencyError",
    "ConsistencyReport", "Constant", "EquationSystem", "EvaluationError", "FormulaProgram",
    "INCONSISTENT", "NON_NUMERIC", "NON_NUMERIC_ANSWER", "Neg", "Num", "NumRef", "PAIR",
    "ParseError", "RATIO", "SINGLE", "STATUSES", "Step", "StepRef", "SubsetResult",
    "UNSUPPORTED", "UnsupportedError", "VALUE", "VARIABLES", "Var", "arithmetic_subset_filter",
    "check", "check_corpus", "check_record", "compute", "evaluate", "evaluate_expression",
    "exclusion_reasons", "extract_numbers", "format_value", "linear_forms", "matches",
    "parse_answer", "parse_equation", "parse_formula", "scan_formula", "solve", "to_fraction",
]
