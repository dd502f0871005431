from logiparam.pipeline.feedback import Feedback, FeedbackKind, InconsistencyWitness, build_feedback
from logiparam.pipeline.formalizers import (
    FormalizerKind,
    FormalizerSpec,
    SyntacticError,
    formalize,
)
from logiparam.pipeline.runner import CaseOutcome, CaseStatus, IterationTrace, run_case, write_trace
