"""
HTTP access to a chat-completion endpoint for the remote formalizer.

:class:`LLMGateway` is shared by every case of a run, across worker processes
when the run uses a pool. It caps the number of requests in flight and keeps a
minimum spacing between request starts.
:class:`ChatClient` performs one POST with retries and exponential backoff and
raises :class:`~logiparam.exceptions.TransportError` once they are exhausted.
"""

import logging
import os
import re
import threading
import time

import requests

from logiparam.defaults import LLM_KEY_ENV, LLM_URL_ENV
from logiparam.exceptions import TransportError

logger = logging.getLogger(__name__)

FENCED_BLOCK = re.compile(r"```[A-Za-z0-9_-]*[ \t]*\n(.*?)```", re.DOTALL)


def first_fenced_block(text):
    """Body of the first fenced code block in ``text``, or None"""
    match = FENCED_BLOCK.search(text or "")
    if match is None:
        return None
    return match.group(1)


class _StartTime:
    def __init__(self):
        self.value = 0.0


class LLMGateway:
    """Bounds concurrent requests and spaces their start times by ``min_interval`` seconds.

    The default instance guards the threads of one process. :meth:`shared` keeps
    the semaphore, the lock and the last start time in a
    :class:`multiprocessing.managers.SyncManager` so every worker of a pool
    draws from the same budget.
    """

    def __init__(self, max_in_flight=2, min_interval=0.0, slots=None, lock=None, last_start=None):
        self.max_in_flight = max_in_flight
        self.min_interval = min_interval
        self._slots = threading.BoundedSemaphore(max_in_flight) if slots is None else slots
        self._lock = threading.Lock() if lock is None else lock
        # .value holds the time.time() of the latest start, 0.0 before the first
        self._last_start = _StartTime() if last_start is None else last_start

    @classmethod
    def shared(cls, manager, max_in_flight=2, min_interval=0.0):
        """A gateway whose state lives in ``manager``, safe to pass to pool workers"""
        return cls(
            max_in_flight=max_in_flight,
            min_interval=min_interval,
            slots=manager.BoundedSemaphore(max_in_flight),
            lock=manager.Lock(),
            last_start=manager.Value("d", 0.0),
        )

    @classmethod
    def from_settings(cls, settings, manager=None):
        options = {
            "max_in_flight": settings.get("max_in_flight", 2),
            "min_interval": settings.get("min_interval", 0.0),
        }
        if manager is not None:
            return cls.shared(manager, **options)
        return cls(**options)

    def __enter__(self):
        self._slots.acquire()
        with self._lock:
            last = self._last_start.value
            if last and self.min_interval:
                wait = last + self.min_interval - time.time()
                if wait > 0:
                    time.sleep(wait)
            self._last_start.value = time.time()
        return self

    def __exit__(self, *exc):
        self._slots.release()


class ChatClient:
    """Sends rendered prompts to ``{url}/chat/completions``.

    Args:
        url (str): base URL, default from ``LOGIPARAM_LLM_URL``
        key (str): bearer token, default from ``LOGIPARAM_LLM_KEY``
        model (str): model name placed in the request body
        retries (int): additional attempts after the first failure
        backoff (float): base delay; attempt ``n`` waits ``backoff * 2**n`` seconds
        timeout (float): per-request timeout in seconds
        temperature (float): sampling temperature
        gateway (LLMGateway): shared rate limiter
    """

    def __init__(
        self,
        url=None,
        key=None,
        model="gpt-4o",
        retries=2,
        backoff=1.0,
        timeout=60,
        temperature=0.0,
        gateway=None,
    ):
        self.url = url or os.getenv(LLM_URL_ENV)
        self.key = key or os.getenv(LLM_KEY_ENV)
        self.model = model
        self.retries = retries
        self.backoff = backoff
        self.timeout = timeout
        self.temperature = temperature
        self.gateway = gateway or LLMGateway()

    @classmethod
    def from_settings(cls, settings, gateway=None):
        """Build a client from the ``pipeline.formalizer`` section of the configuration"""
        gateway = gateway or LLMGateway.from_settings(settings)
        return cls(
            model=settings.get("model", "gpt-4o"),
            retries=settings.get("retries", 2),
            backoff=settings.get("backoff", 1.0),
            timeout=settings.get("timeout", 60),
            temperature=settings.get("temperature", 0.0),
            gateway=gateway,
        )

    @property
    def endpoint(self):
        if not self.url:
            raise TransportError(f"no endpoint configured, set {LLM_URL_ENV}")
        return self.url.rstrip("/") + "/chat/completions"

    def payload(self, messages):
        return {"model": self.model, "messages": messages, "temperature": self.temperature}

    def complete(self, messages):
        """Return the text of the first choice.

        Raises:
            TransportError: when every attempt failed with a network error or a non-200 reply
        """
        headers = {"Content-Type": "application/json"}
        if self.key:
            headers["Authorization"] = f"Bearer {self.key}"

        endpoint = self.endpoint
        last_error = None
        for attempt in range(self.retries + 1):
            if attempt:
                delay = self.backoff * 2 ** (attempt - 1)
                logger.warning(
                    f"formalizer request failed ({last_error}), "
                    f"retry {attempt}/{self.retries} in {delay}s"
                )
                time.sleep(delay)
            try:
                with self.gateway:
                    r = requests.post(
                        endpoint, json=self.payload(messages), headers=headers, timeout=self.timeout
                    )
            except requests.RequestException as err:
                last_error = err
                continue

            if r.status_code != 200:
                last_error = f"HTTP {r.status_code}"
                continue

            try:
                return r.json()["choices"][0]["message"]["content"]
            except (ValueError, KeyError, IndexError, TypeError) as err:
                last_error = f"malformed reply: {err}"

        raise TransportError(
            f"formalizer endpoint {endpoint} unreachable after {self.retries + 1} attempt(s)",
            last_error,
        )
