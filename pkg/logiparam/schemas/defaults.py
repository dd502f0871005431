import os

from jsonschema import Draft7Validator
from referencing import Registry, Resource

from logiparam.schemas.utils import load_schema

here = os.path.dirname(os.path.abspath(__file__))

schema_table = {}
schema_table["names"] = ["settings.schema.json", "problem.schema.json"]

for name in schema_table["names"]:
    schema_table[name] = {}
    schema_table[name]["path"] = os.path.join(here, name)
    schema_table[name]["document"] = load_schema(schema_table[name]["path"])

schema_store = {
    schema_table[name]["document"]["$id"]: schema_table[name]["document"]
    for name in schema_table["names"]
}

registry = Registry().with_resources(
    [(key, Resource.from_contents(schema)) for key, schema in schema_store.items()]
)


def custom_validator(document, schema):
    """Validate a document against one of the schemas shipped with logiparam.

    References between schemas are resolved locally through a
    `referencing <https://python-jsonschema.readthedocs.io/en/latest/referencing/>`_ registry and
    validation uses `Draft7Validator <https://python-jsonschema.readthedocs.io/en/stable/validate/#jsonschema.Draft7Validator>`_.

    Args:
        document (dict or list): loaded settings file or problem file
        schema (dict): Schema document loaded in JSON format

    Raises:
        jsonschema.exceptions.ValidationError: if document fails to validate with schema
    """

    assert isinstance(document, (dict, list))
    assert isinstance(schema, dict)

    validator = Draft7Validator(schema, registry=registry)
    validator.validate(document)


def iter_validation_errors(document, schema):
    """Yield every validation error sorted by document path, for aggregated reporting"""
    validator = Draft7Validator(schema, registry=registry)
    errors = validator.iter_errors(document)
    yield from sorted(errors, key=lambda err: [str(part) for part in err.path])
