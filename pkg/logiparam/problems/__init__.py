from logiparam.problems.parser import (
    Formalization,
    ProblemDoc,
    parse_problem,
    parse_problem_file,
    parse_problems,
)

__all__ = ["Formalization", "ProblemDoc", "parse_problem", "parse_problem_file", "parse_problems"]
