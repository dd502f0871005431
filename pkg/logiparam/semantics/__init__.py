from logiparam.semantics.encoder import Consequence, Decoder, Mode, Witness, encode_bounded
from logiparam.semantics.evaluate import (
    all_interpretations,
    eval_fol,
    evaluate,
    globally_valid,
    truth_set,
)
from logiparam.semantics.models import (
    CJModel,
    FolInterp,
    KripkeModel,
    PreferenceModel,
    dump_model,
    model_to_dict,
    validate_model,
)
