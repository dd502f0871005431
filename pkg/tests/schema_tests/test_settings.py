import os
import tempfile

import pytest
from jsonschema.exceptions import ValidationError

from logiparam.config import EngineConfiguration
from logiparam.defaults import DEFAULT_SETTINGS_FILE, SCHEMA_ROOT
from logiparam.exceptions import ConfigurationError
from logiparam.schemas.defaults import custom_validator
from logiparam.schemas.utils import load_schema, load_settings

schema_file = "settings.schema.json"
settings_schema = os.path.join(SCHEMA_ROOT, schema_file)
settings_schema_examples = os.path.join(SCHEMA_ROOT, "examples", schema_file)


@pytest.mark.schema
def test_settings_examples():
    schema = load_schema(settings_schema)

    valid = os.path.join(settings_schema_examples, "valid")
    for example in os.listdir(valid):
        filepath = os.path.join(valid, example)
        print(f"Expecting settings file: {filepath} to be valid")
        custom_validator(document=load_settings(filepath), schema=schema)

    invalid = os.path.join(settings_schema_examples, "invalid")
    for example in os.listdir(invalid):
        filepath = os.path.join(invalid, example)
        print(f"Expecting settings file: {filepath} to be invalid")
        with pytest.raises(ValidationError):
            custom_validator(document=load_settings(filepath), schema=schema)


@pytest.mark.schema
def test_default_configuration():
    configuration = EngineConfiguration(settings_file=DEFAULT_SETTINGS_FILE)
    configuration.validate()

    assert configuration.bounds("DDL_CJ") == [1, 2, 3]
    assert configuration.max_bound("KD") == 5
    assert configuration.consequence("FOL") == "global"
    assert configuration.check_seconds == 5
    assert configuration.case_seconds == 60
    assert configuration.iterations == 3
    assert configuration.timing == "wall"
    assert configuration.benchmark_grid() == (["FOL", "KD", "DDLE", "DDL_CJ"], ["gold-mock"])


@pytest.mark.schema
def test_partial_configuration_falls_back():
    filepath = os.path.join(settings_schema_examples, "valid", "minimal.yml")
    configuration = EngineConfiguration(settings_file=filepath)
    configuration.validate()
    assert configuration.bounds("KD") == [1, 2]
    assert configuration.max_bound("KD") == 3
    # logics left out of the file use the built-in defaults
    assert configuration.bounds("FOL") == [1, 2, 3, 4]
    assert configuration.consequence("DDLE") == "local"
    assert configuration.poolsize == 1


@pytest.mark.schema
def test_bound_above_maximum():
    with tempfile.TemporaryDirectory() as tmpdir:
        filepath = os.path.join(tmpdir, "config.yml")
        with open(filepath, "w") as fd:
            fd.write(
                "engine:\n  bounds:\n    KD: [1, 6]\n  max_bound:\n    KD: 5\n"
                "  budgets: {}\npipeline: {}\n"
            )

        configuration = EngineConfiguration(settings_file=filepath)
        with pytest.raises(ConfigurationError) as err:
            configuration.validate()
        assert "exceed max_bound" in str(err.value)

        # schema violations surface as ConfigurationError too
        with open(filepath, "w") as fd:
            fd.write("engine:\n  bounds:\n    KD: [1]\n  max_bound:\n    KD: 5\n  budgets: {}\n")
        with pytest.raises(ConfigurationError):
            EngineConfiguration(settings_file=filepath).validate()
