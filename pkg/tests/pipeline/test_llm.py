import multiprocessing
import threading
import time

import pytest
import requests

from logiparam.defaults import LLM_URL_ENV
from logiparam.exceptions import TransportError
from logiparam.pipeline import llm
from logiparam.pipeline.llm import ChatClient, LLMGateway, first_fenced_block

MESSAGES = [{"role": "user", "content": "formalize"}]


class FakeResponse:
    def __init__(self, status_code=200, content="```\n# goal\np\n```"):
        self.status_code = status_code
        self.content = content

    def json(self):
        return {"choices": [{"message": {"content": self.content}}]}


@pytest.fixture
def posts(monkeypatch):
    """Replace requests.post with a queue of canned outcomes"""
    calls = []
    outcomes = []

    def fake_post(url, json=None, headers=None, timeout=None):
        calls.append({"url": url, "json": json, "headers": headers, "timeout": timeout})
        outcome = outcomes.pop(0)
        if isinstance(outcome, Exception):
            raise outcome
        return outcome

    monkeypatch.setattr(llm.requests, "post", fake_post)
    return calls, outcomes


@pytest.mark.pipeline
def test_first_fenced_block():
    assert first_fenced_block("text\n```fol\nMan(a)\n```\nmore") == "Man(a)\n"
    assert first_fenced_block("```\na\n```\n```\nb\n```") == "a\n"
    assert first_fenced_block("no block") is None
    assert first_fenced_block(None) is None


@pytest.mark.pipeline
def test_complete(posts):
    calls, outcomes = posts
    outcomes.append(FakeResponse())
    client = ChatClient(url="http://localhost:8000/v1/", key="secret", model="m", retries=0)
    assert client.complete(MESSAGES) == "```\n# goal\np\n```"

    (call,) = calls
    assert call["url"] == "http://localhost:8000/v1/chat/completions"
    assert call["json"] == {"model": "m", "messages": MESSAGES, "temperature": 0.0}
    assert call["headers"]["Authorization"] == "Bearer secret"


@pytest.mark.pipeline
def test_retries_then_succeeds(posts):
    calls, outcomes = posts
    outcomes.extend([requests.ConnectionError("refused"), FakeResponse(503), FakeResponse()])
    client = ChatClient(url="http://localhost:8000", retries=2, backoff=0)
    assert client.complete(MESSAGES).startswith("```")
    assert len(calls) == 3


@pytest.mark.pipeline
def test_transport_error(posts, monkeypatch):
    calls, outcomes = posts
    outcomes.extend([FakeResponse(500), FakeResponse(500)])
    client = ChatClient(url="http://localhost:8000", retries=1, backoff=0)
    with pytest.raises(TransportError):
        client.complete(MESSAGES)
    assert len(calls) == 2

    monkeypatch.delenv(LLM_URL_ENV, raising=False)
    with pytest.raises(TransportError):
        ChatClient().complete(MESSAGES)


@pytest.mark.pipeline
def test_from_settings():
    client = ChatClient.from_settings({"model": "local", "retries": 5, "max_in_flight": 1})
    assert client.model == "local"
    assert client.retries == 5
    assert client.gateway.max_in_flight == 1

    gateway = LLMGateway(max_in_flight=1)
    with gateway:
        pass
    with gateway:
        pass


@pytest.mark.pipeline
def test_shared_gateway_bounds_concurrency(monkeypatch):
    lock = threading.Lock()
    state = {"active": 0, "peak": 0, "calls": 0}

    def slow_post(url, json=None, headers=None, timeout=None):
        with lock:
            state["active"] += 1
            state["calls"] += 1
            state["peak"] = max(state["peak"], state["active"])
        time.sleep(0.02)
        with lock:
            state["active"] -= 1
        return FakeResponse()

    monkeypatch.setattr(llm.requests, "post", slow_post)
    with multiprocessing.Manager() as manager:
        gateway = LLMGateway.from_settings({"max_in_flight": 2}, manager=manager)
        # one client per worker, as a process pool builds them
        clients = [
            ChatClient(url="http://localhost:8000", retries=0, gateway=gateway) for _ in range(6)
        ]
        workers = [threading.Thread(target=c.complete, args=(MESSAGES,)) for c in clients]
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()

    assert state["calls"] == 6
    assert state["peak"] <= 2


@pytest.mark.pipeline
def test_gateway_spaces_request_starts():
    gateway = LLMGateway(max_in_flight=4, min_interval=0.05)
    starts = []
    for _ in range(3):
        with gateway:
            starts.append(time.time())
    assert all(later - earlier >= 0.045 for earlier, later in zip(starts, starts[1:]))
