from logiparam.logic.formula import LogicId
from logiparam.logic.parser import parse_formula, parse_formula_file, parse_formula_lines
from logiparam.logic.printer import pretty
from logiparam.logic.signature import signature, well_formed

__all__ = [
    "LogicId",
    "parse_formula",
    "parse_formula_file",
    "parse_formula_lines",
    "pretty",
    "signature",
    "well_formed",
]
