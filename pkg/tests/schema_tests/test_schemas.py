import json
import os

import pytest
from jsonschema.exceptions import ValidationError

from logiparam.defaults import SCHEMA_ROOT
from logiparam.schemas.defaults import custom_validator, iter_validation_errors
from logiparam.schemas.utils import load_schema
from logiparam.utils.file import load_json, walk_tree

schema_file = "problem.schema.json"
problem_schema = os.path.join(SCHEMA_ROOT, schema_file)
problem_schema_examples = os.path.join(SCHEMA_ROOT, "examples", schema_file)


@pytest.mark.schema
def test_problem_examples():
    schema = load_schema(problem_schema)

    for example in walk_tree(os.path.join(problem_schema_examples, "valid"), ".json"):
        print(f"Expecting problem file: {example} to be valid")
        custom_validator(document=load_json(example), schema=schema)

    invalid = walk_tree(os.path.join(problem_schema_examples, "invalid"), ".json")
    assert invalid
    for example in invalid:
        print(f"Expecting problem file: {example} to be invalid")
        with pytest.raises(ValidationError) as excinfo:
            custom_validator(document=load_json(example), schema=schema)
        print(excinfo.value.message)


@pytest.mark.schema
def test_aggregated_errors():
    schema = load_schema(problem_schema)
    case = {"id": "", "domain": "astronomy", "premise": "p.", "explanation": []}
    errors = list(iter_validation_errors(case, {"$ref": f"{schema['$id']}#/definitions/case"}))
    validators = sorted(err.validator for err in errors)
    assert validators == ["enum", "minItems", "minLength", "required"]


@pytest.mark.schema
def test_shipped_fixtures_validate(fixture_file):
    schema = load_schema(problem_schema)
    for domain in ("classical", "commonsense", "default", "modalities", "bioethics"):
        with open(fixture_file(domain), encoding="utf-8") as fd:
            custom_validator(document=json.load(fd), schema=schema)
