import time


class TimerError(Exception):
    """A custom exception used to report errors in use of Timer class"""


class Timer:
    """Accumulating stopwatch. Durations are reported in milliseconds."""

    def __init__(self):
        self._start_time = None
        self._elapsed = 0.0

    def start(self):
        """Start a new timer"""
        if self._start_time is not None:
            raise TimerError("Timer is running. Use .stop() to stop it")

        self._start_time = time.perf_counter()

    def stop(self):
        """Stop the timer and add the elapsed interval to the running total"""
        if self._start_time is None:
            raise TimerError("Timer is not running. Use .start() to start it")

        self._elapsed += time.perf_counter() - self._start_time
        self._start_time = None

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *exc):
        self.stop()

    def duration(self):
        """Accumulated time in milliseconds, rounded to three decimals"""
        running = 0.0
        if self._start_time is not None:
            running = time.perf_counter() - self._start_time
        return round((self._elapsed + running) * 1000.0, 3)


class Deadline:
    """A wall-clock budget shared by the solver, the tableau and the pipeline.

    ``Deadline(None)`` never expires.
    """

    def __init__(self, seconds=None):
        self.seconds = seconds
        self._start = time.perf_counter()

    def expired(self):
        if self.seconds is None:
            return False
        return time.perf_counter() - self._start >= self.seconds

    def remaining(self):
        if self.seconds is None:
            return None
        return max(0.0, self.seconds - (time.perf_counter() - self._start))

    def child(self, seconds):
        """Return a deadline that expires at ``seconds`` from now or when this one does"""
        remaining = self.remaining()
        if remaining is None:
            return Deadline(seconds)
        if seconds is None:
            return Deadline(remaining)
        return Deadline(min(seconds, remaining))

    def elapsed_ms(self):
        return round((time.perf_counter() - self._start) * 1000.0, 3)
