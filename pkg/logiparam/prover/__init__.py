from logiparam.prover.certificate import Verdict, VerdictCertificate
from logiparam.prover.engine import ProverSettings, check_consistency, check_entailment
from logiparam.prover.grounding import Grounding, ground_fol
from logiparam.prover.steps import AllStepsEntailed, StepReport, locate_failed_step
from logiparam.prover.tableau import TableauRefuted, TableauValid, kd_tableau
