"""
Problem files hold natural-language inference cases in JSON. A file is either
a single case object or an array of cases, each with ``id``, ``domain``,
``premise``, ``hypothesis``, an ordered ``explanation`` and optional ``gold``
formalizations keyed by logic. Documents are validated against
``problem.schema.json`` first, then every gold formula is parsed for its logic.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from logiparam.defaults import PROBLEM_SCHEMA
from logiparam.exceptions import ParseError, ProblemFileError
from logiparam.logic.formula import Formula, LogicId
from logiparam.logic.parser import parse_formula
from logiparam.logic.printer import pretty
from logiparam.schemas.defaults import iter_validation_errors
from logiparam.schemas.utils import load_schema
from logiparam.utils.file import read_file

logger = logging.getLogger(__name__)

CASE_SCHEMA = {"$ref": f"{load_schema(PROBLEM_SCHEMA)['$id']}#/definitions/case"}

_SENTENCE_END = re.compile(r"(?<=[.!?])\s+")


@dataclass(frozen=True)
class Formalization:
    """A theory, an ordered step list and a goal, all well-formed for ``logic``"""

    logic: LogicId
    theory: Tuple[Formula, ...]
    steps: Tuple[Formula, ...]
    goal: Formula
    raw: str = ""

    def without_step(self, index):
        """Return a copy with ``steps[index]`` removed"""
        steps = self.steps[:index] + self.steps[index + 1 :]
        return Formalization(self.logic, self.theory, steps, self.goal, self.raw)

    def to_text(self):
        """Render in the sectioned formula-file layout used for traces and prompts"""
        lines = ["# theory"]
        lines += [pretty(f) for f in self.theory]
        lines.append("# steps")
        lines += [pretty(f) for f in self.steps]
        lines.append("# goal")
        lines.append(pretty(self.goal))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ProblemDoc:
    id: str
    domain: str
    premise: str
    hypothesis: str
    explanation: Tuple[str, ...]
    gold: Dict[LogicId, Formalization] = field(default_factory=dict)
    path: Optional[str] = None

    def premise_sentences(self):
        return [s for s in _SENTENCE_END.split(self.premise.strip()) if s]

    def has_gold(self, logic):
        return LogicId.parse(logic) in self.gold


def _describe(err):
    """Turn a jsonschema error into the short message reported for problem files"""
    where = list(err.path)
    if err.validator == "minItems" and where and where[-1] == "explanation":
        return "explanation must be non-empty"
    if err.validator == "required":
        missing = err.message.split("'")[1] if "'" in err.message else err.message
        return f"missing field '{missing}'"
    if err.validator == "enum" and where and where[-1] == "domain":
        return f"unknown domain tag '{err.instance}'"
    return err.message


def _field_path(prefix, parts):
    text = prefix
    for part in parts:
        if isinstance(part, int):
            text += f"[{part}]"
        else:
            text = f"{text}.{part}" if text else str(part)
    return text or None


def _parse_gold(logic_name, entry, prefix):
    logic = LogicId.parse(logic_name)
    base = _field_path(prefix, ["gold", logic_name])

    def parse(text, where):
        try:
            return parse_formula(text, logic)
        except ParseError as err:
            raise err.with_field(f"{base}.{where}")

    theory = tuple(parse(text, f"theory[{i}]") for i, text in enumerate(entry["theory"]))
    steps = tuple(parse(text, f"steps[{i}]") for i, text in enumerate(entry["steps"]))
    goal = parse(entry["goal"], "goal")
    raw = json.dumps(entry, indent=2, ensure_ascii=False)
    return Formalization(logic, theory, steps, goal, raw)


def _build_case(case, prefix="", path=None):
    for err in iter_validation_errors(case, CASE_SCHEMA):
        raise ParseError(
            _describe(err),
            span=(0, 0),
            category="grammar",
            field=_field_path(prefix, list(err.path)),
        )

    gold = {
        LogicId.parse(name): _parse_gold(name, entry, prefix)
        for name, entry in case.get("gold", {}).items()
    }
    return ProblemDoc(
        id=case["id"],
        domain=case["domain"],
        premise=case["premise"],
        hypothesis=case["hypothesis"],
        explanation=tuple(case["explanation"]),
        gold=gold,
        path=path,
    )


def _load(doc):
    try:
        return json.loads(doc)
    except json.JSONDecodeError as err:
        offset = len(doc[: err.pos].encode("utf-8"))
        end = min(offset + 1, len(doc.encode("utf-8")))
        raise ParseError(err.msg, span=(offset, end), category="lexical")


def parse_problems(doc, path=None):
    """Parse a problem document holding one case or an array of cases.

    Args:
        doc (str): JSON text of the problem file
        path (str, optional): file the document was read from, kept on each case

    Returns:
        list: :class:`ProblemDoc` objects in document order

    Raises:
        ParseError: on malformed JSON, schema violations or invalid gold formulas
    """

    data = _load(doc)
    if isinstance(data, list):
        if not data:
            raise ParseError("problem file holds no cases", span=(0, 0), category="grammar")
        cases = [_build_case(case, f"[{i}]", path) for i, case in enumerate(data)]
    elif isinstance(data, dict):
        cases = [_build_case(data, "", path)]
    else:
        raise ParseError(
            "problem file must hold an object or an array of objects",
            span=(0, len(doc.encode("utf-8"))),
            category="grammar",
        )

    seen = set()
    for case in cases:
        if case.id in seen:
            raise ParseError(f"duplicate id '{case.id}'", span=(0, 0), category="grammar")
        seen.add(case.id)
    return cases


def parse_problem(doc, path=None):
    """Parse a document holding exactly one case (a bare object or a one-element array)."""
    cases = parse_problems(doc, path)
    if len(cases) != 1:
        raise ParseError(
            f"expected a single case but found {len(cases)}", span=(0, 0), category="grammar"
        )
    return cases[0]


def parse_problem_file(path):
    """Read and parse a problem file.

    Raises:
        ProblemFileError: when the file cannot be read or does not parse
    """
    content = read_file(path)
    try:
        cases = parse_problems(content, path)
    except ParseError as err:
        raise ProblemFileError(err.msg, path) from err

    logger.debug(f"Loaded {len(cases)} case(s) from {path}")
    return cases
