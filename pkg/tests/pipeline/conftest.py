import pytest

from logiparam.problems.parser import parse_problem_file


@pytest.fixture
def autonomy_case(fixture_file):
    cases = parse_problem_file(fixture_file("bioethics"))
    return next(c for c in cases if c.id == "bioethics-autonomy-competent-choice")


class ScriptedClient:
    """Stands in for ChatClient and answers with the queued replies in order"""

    def __init__(self, *replies):
        self.replies = list(replies)
        self.requests = []

    def complete(self, messages):
        self.requests.append(messages)
        return self.replies.pop(0)


@pytest.fixture
def scripted_client():
    return ScriptedClient
