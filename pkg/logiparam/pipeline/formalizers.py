"""
Formalizers turn a problem into a :class:`~logiparam.problems.parser.Formalization`.

``gold-mock`` returns the gold formalization shipped with the case,
``gap-injecting-mock[:N]`` returns it with step ``N`` (1-based, default the
last step) removed until the first missing-bridge feedback, and
``remote-llm`` asks a chat-completion endpoint and parses the fenced block of
its reply.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional

from logiparam.exceptions import EvaluationError, FormalizerError, ParseError
from logiparam.logic.formula import LogicId
from logiparam.logic.parser import parse_formula
from logiparam.pipeline.llm import ChatClient, first_fenced_block
from logiparam.pipeline.prompts import render_prompt
from logiparam.problems.parser import Formalization
from logiparam.semantics.evaluate import globally_valid

logger = logging.getLogger(__name__)

SECTIONS = ("theory", "steps", "goal")


class FormalizerKind(str, enum.Enum):
    REMOTE = "remote-llm"
    GOLD = "gold-mock"
    GAP = "gap-injecting-mock"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FormalizerSpec:
    kind: FormalizerKind
    step: Optional[int] = None
    settings: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_string(cls, text, settings=None):
        """Parse ``gold-mock``, ``remote-llm`` or ``gap-injecting-mock[:N]``"""
        name, _, argument = text.strip().partition(":")
        try:
            kind = FormalizerKind(name)
        except ValueError:
            choices = ", ".join(str(k) for k in FormalizerKind)
            raise FormalizerError(f"unknown formalizer '{name}', expected one of: {choices}")

        step = None
        if argument:
            if kind is not FormalizerKind.GAP:
                raise FormalizerError(f"formalizer '{name}' takes no argument")
            if not argument.isdigit() or int(argument) < 1:
                raise FormalizerError(
                    f"step to remove must be a positive integer, got '{argument}'"
                )
            step = int(argument)
        return cls(kind, step, dict(settings or {}))

    @property
    def name(self):
        if self.step is not None:
            return f"{self.kind}:{self.step}"
        return str(self.kind)

    def __str__(self):
        return self.name

    @property
    def deterministic(self):
        return self.kind is not FormalizerKind.REMOTE


@dataclass
class SyntacticError:
    """A formalizer reply that does not parse, located by field and byte span"""

    error: ParseError
    raw: str = ""
    text: str = ""

    @property
    def category(self):
        return self.error.category

    @property
    def message(self):
        return self.error.message

    @property
    def span(self):
        return self.error.span

    @property
    def field(self):
        return self.error.field

    def to_dict(self):
        return {
            "category": self.category,
            "message": self.message,
            "span": list(self.span),
            "field": self.field,
            "text": self.text,
        }


def _gold(problem, logic):
    if not problem.has_gold(logic):
        raise FormalizerError(f"case '{problem.id}' has no gold formalization for {logic}")
    return problem.gold[logic]


class GoldFormalizer:
    def __init__(self, spec):
        self.spec = spec

    def formalize(self, problem, logic, feedback=None, previous=None):
        return _gold(problem, LogicId.parse(logic))


class GapInjectingFormalizer(GoldFormalizer):
    """Removes one gold step and puts it back once feedback names it.

    Missing-bridge feedback names the removed step when its failure lies at or
    after the gap and either mentions the step itself or comes with a
    countermodel that falsifies it. Feedback about other failures leaves the
    gap in place.
    """

    def removed_index(self, problem, gold):
        index = (self.spec.step or len(gold.steps)) - 1
        if index >= len(gold.steps):
            raise FormalizerError(
                f"case '{problem.id}' has {len(gold.steps)} step(s), cannot remove step {index + 1}"
            )
        return index

    @staticmethod
    def names_step(feedback, step, index):
        if feedback is None or str(feedback.kind) != "missing-bridge":
            return False
        report = feedback.failed_step
        if report is None or report.failed_index < index:
            return False
        if step in (report.failed_formula, report.obligation):
            return True
        if report.countermodel is None:
            return False
        try:
            return not globally_valid(report.countermodel, step)
        except EvaluationError:
            # the countermodel leaves part of the step uninterpreted
            return True

    def formalize(self, problem, logic, feedback=None, previous=None):
        gold = _gold(problem, LogicId.parse(logic))
        if not gold.steps:
            logger.warning(f"{problem.id}: gold formalization has no step to remove")
            return gold

        index = self.removed_index(problem, gold)
        if self.names_step(feedback, gold.steps[index], index):
            logger.debug(f"{problem.id}: restoring step {index + 1} named by the feedback")
            return gold
        return gold.without_step(index)


def parse_reply(block, logic):
    """Parse the sectioned formula block of a formalizer reply.

    Lines under ``# theory``, ``# steps`` and ``# goal`` hold one formula each;
    blank lines and other ``#`` comments are skipped.

    Returns:
        Formalization or SyntacticError
    """
    logic = LogicId.parse(logic)
    sections = {name: [] for name in SECTIONS}
    current = None
    offset = 0

    for line in block.splitlines(keepends=True):
        start = offset
        offset += len(line.encode("utf-8"))
        text = line.strip()
        if not text:
            continue
        if text.startswith("#"):
            header = text.lstrip("#").strip().lower()
            if header in sections:
                current = header
            continue
        if current is None:
            error = ParseError(
                "formula outside of a '# theory', '# steps' or '# goal' section",
                span=(start, offset),
                category="grammar",
            )
            return SyntacticError(error, block, text)

        index = len(sections[current])
        where = "goal" if current == "goal" else f"{current}[{index}]"
        try:
            formula = parse_formula(text, logic)
        except ParseError as err:
            return SyntacticError(err.with_field(where), block, text)
        sections[current].append(formula)

    if len(sections["goal"]) != 1:
        error = ParseError(
            f"expected exactly one goal formula, found {len(sections['goal'])}",
            span=(0, len(block.encode("utf-8"))),
            category="grammar",
            field="goal",
        )
        return SyntacticError(error, block, "")

    return Formalization(
        logic,
        tuple(sections["theory"]),
        tuple(sections["steps"]),
        sections["goal"][0],
        raw=block,
    )


class RemoteFormalizer:
    def __init__(self, spec, client=None):
        self.spec = spec
        self.client = client or ChatClient.from_settings(spec.settings)

    def formalize(self, problem, logic, feedback=None, previous=None):
        stage = "refine" if feedback is not None else "formalize"
        messages = render_prompt(stage, logic, problem, feedback=feedback, previous=previous)
        reply = self.client.complete(messages)

        block = first_fenced_block(reply)
        if block is None:
            error = ParseError(
                "reply has no fenced formula block",
                span=(0, len((reply or "").encode("utf-8"))),
                category="grammar",
            )
            return SyntacticError(error, reply or "", "")
        return parse_reply(block, logic)


def make_formalizer(spec, client=None):
    if spec.kind is FormalizerKind.GOLD:
        return GoldFormalizer(spec)
    if spec.kind is FormalizerKind.GAP:
        return GapInjectingFormalizer(spec)
    return RemoteFormalizer(spec, client=client)


def formalize(spec, problem, logic, feedback=None, previous=None, client=None):
    """Formalize ``problem`` in ``logic`` with the formalizer described by ``spec``.

    Returns:
        Formalization or SyntacticError

    Raises:
        FormalizerError: if a mock formalizer is asked for a logic without gold
        TransportError: if the remote endpoint stays unreachable after retries
    """
    return make_formalizer(spec, client=client).formalize(
        problem, logic, feedback=feedback, previous=previous
    )
