import enum
from dataclasses import dataclass, field
from typing import List, Optional

from logiparam.semantics.models import dump_model, model_to_dict


class Verdict(str, enum.Enum):
    CONSISTENT = "Consistent"
    ENTAILED = "Entailed"
    ENTAILED_UP_TO_BOUND = "EntailedUpToBound"
    REFUTED = "Refuted"
    INCONSISTENT = "Inconsistent"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value

    @property
    def positive(self):
        """True for verdicts that let a verification proceed"""
        return self in (Verdict.CONSISTENT, Verdict.ENTAILED, Verdict.ENTAILED_UP_TO_BOUND)


@dataclass
class VerdictCertificate:
    """Outcome of one consistency or entailment check.

    ``witness`` is the decoded model for Consistent and Refuted verdicts,
    ``world`` the world where a refuted goal fails, ``proof`` the closed tableau
    trace behind a KD Entailed verdict and ``method`` names the procedure that
    settled the verdict (``bounded``, ``tableau`` or ``grounding``).
    """

    verdict: Verdict
    witness: Optional[object] = None
    world: Optional[int] = None
    proof: Optional[List[str]] = None
    bounds_searched: List[int] = field(default_factory=list)
    elapsed: float = 0.0
    method: str = "bounded"
    timed_out: bool = False

    @property
    def refuted(self):
        return self.verdict is Verdict.REFUTED

    @property
    def entailed(self):
        return self.verdict in (Verdict.ENTAILED, Verdict.ENTAILED_UP_TO_BOUND)

    def countermodel_text(self):
        if self.witness is None:
            return ""
        text = dump_model(self.witness)
        if self.world is not None:
            text += f"failing_world: {self.world}\n"
        return text

    def to_dict(self):
        data = {
            "verdict": str(self.verdict),
            "method": self.method,
            "bounds_searched": list(self.bounds_searched),
            "timed_out": self.timed_out,
            "elapsed_ms": round(self.elapsed, 3),
        }
        if self.witness is not None:
            data["witness"] = model_to_dict(self.witness)
        if self.world is not None:
            data["world"] = self.world
        if self.proof:
            data["proof"] = list(self.proof)
        return data
