from functools import reduce


def deep_get(dictionary, *keys):
    """Walk nested dictionaries, returning None as soon as a key is missing.

    >>> deep_get({"engine": {"budgets": {"check_seconds": 5}}}, "engine", "budgets")
    {'check_seconds': 5}
    """
    return reduce(
        lambda d, key: d.get(key, None) if isinstance(d, dict) else None,
        keys,
        dictionary,
    )

