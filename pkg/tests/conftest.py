import itertools
import os
import random

import pytest

from logiparam.defaults import FIXTURES_ROOT
from logiparam.semantics.carmo_jones import subsets
from logiparam.semantics.models import KripkeModel, PreferenceModel

TEST_SEED = int(os.getenv("LOGIPARAM_TEST_SEED", "1234"))


@pytest.fixture
def rng(request):
    """A random generator seeded by LOGIPARAM_TEST_SEED and the test name"""
    return random.Random(f"{TEST_SEED}:{request.node.name}")


@pytest.fixture
def fixture_file():
    def path(domain):
        return os.path.join(FIXTURES_ROOT, f"{domain}.json")

    return path


def valuations(worlds, atoms):
    for extensions in itertools.product(subsets(worlds), repeat=len(atoms)):
        yield dict(zip(atoms, extensions))


def serial_kripke_models(max_worlds, atoms=("p", "q")):
    """Every serial Kripke model with 1 to ``max_worlds`` worlds over ``atoms``"""
    for k in range(1, max_worlds + 1):
        worlds = range(k)
        successor_sets = [s for s in subsets(worlds) if s]
        for choice in itertools.product(successor_sets, repeat=k):
            access = {(w, v) for w, targets in zip(worlds, choice) for v in targets}
            for valuation in valuations(worlds, atoms):
                yield KripkeModel.build(k, access, valuation)


def preference_models(max_worlds, atoms=("p", "q")):
    """Every preference model with 1 to ``max_worlds`` worlds over ``atoms``, one per
    ranking, so total preorders reached by several rankings repeat"""
    for k in range(1, max_worlds + 1):
        for ranks in itertools.product(range(k), repeat=k):
            for valuation in valuations(range(k), atoms):
                yield PreferenceModel.from_ranking(dict(enumerate(ranks)), valuation)


@pytest.fixture
def kripke_models():
    return serial_kripke_models


@pytest.fixture
def ranked_models():
    return preference_models
