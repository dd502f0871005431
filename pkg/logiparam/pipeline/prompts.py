"""
Prompt templates for the remote formalizer.

Templates are text files under ``logiparam/pipeline/prompts``: a shared
``common/syntax.txt`` describing the surface grammar, and for every logic a
``formalize``, ``refine`` and ``sketch`` template. Placeholders use
:class:`string.Template` syntax (``$premise``).
"""

import os
from functools import lru_cache
from string import Template

from logiparam.defaults import PROMPTS_ROOT
from logiparam.exceptions import FormalizerError
from logiparam.logic.formula import LogicId
from logiparam.utils.file import is_file, read_file

STAGES = ("formalize", "refine", "sketch")

OPERATORS = {
    LogicId.FOL: [
        "  forall x. f  exists x. f   quantifiers over constants",
        "  Name(t1, ..., tn)           predicate applied to variables or constants",
    ],
    LogicId.KD: [
        "  O(f)        f is obligatory",
        "  P(f)        f is permitted",
        "  F(f)        f is forbidden",
    ],
    LogicId.DDLE: [
        "  O(f) P(f) F(f)   unconditional obligation, permission, prohibition",
        "  O(g|f)      if f then g is obligatory",
        "  P(g|f)      if f then g is permitted",
        "  Box f       f is settled",
        "  Dia f       f is possible",
    ],
}
OPERATORS[LogicId.DDL_CJ] = OPERATORS[LogicId.DDLE] + [
    "  BoxA f      f holds in all actual versions of this world",
    "  BoxP f      f holds in all potential versions of this world",
    "  Oa f        f is an actual obligation",
    "  Op f        f is a primary obligation",
]


@lru_cache(maxsize=None)
def load_template(name):
    """Return the :class:`string.Template` stored at ``<PROMPTS_ROOT>/<name>.txt``"""
    path = os.path.join(PROMPTS_ROOT, f"{name}.txt")
    if not is_file(path):
        raise FormalizerError(f"missing prompt template: {path}")
    return Template(read_file(path))


def syntax_prompt(logic):
    logic = LogicId.parse(logic)
    return load_template("common/syntax").safe_substitute(
        operators="\n".join(OPERATORS[logic])
    )


def render_prompt(stage, logic, problem, feedback=None, previous=None):
    """Render the chat messages for one formalizer request.

    Args:
        stage (str): ``formalize`` for the first attempt, ``refine`` afterwards
        logic (LogicId): target logic
        problem (ProblemDoc): the case being formalized
        feedback (Feedback, optional): feedback of the previous iteration
        previous (Formalization, optional): the formalization the feedback refers to

    Returns:
        list: ``system`` and ``user`` messages
    """
    if stage not in STAGES:
        raise FormalizerError(f"unknown prompt stage '{stage}', expected one of {STAGES}")
    logic = LogicId.parse(logic)
    syntax = syntax_prompt(logic)

    explanation = "\n".join(
        f"{index}. {step}" for index, step in enumerate(problem.explanation, start=1)
    )
    values = {
        "syntax": syntax,
        "premise": problem.premise,
        "hypothesis": problem.hypothesis,
        "explanation": explanation,
        "feedback": feedback.guidance if feedback is not None else "",
        "previous": previous.to_text() if previous is not None else "(none)",
    }
    system = load_template(f"{logic}/sketch").safe_substitute(values)
    user = load_template(f"{logic}/{stage}").safe_substitute(values)
    return [{"role": "system", "content": system}, {"role": "user", "content": user}]
