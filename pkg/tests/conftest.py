import time
from contextlib import contextmanager

import pytest

_VERDICTS = []


class Criterion:
    """Times a block, records PASS/FAIL and re-raises any failure."""

    def __init__(self, number, title, limit=None):
        self.number, self.title, self.limit = number, title, limit
        self.notes = []

    def note(self, text):
        self.notes.append(str(text))

    @contextmanager
    def check(self):
        t0 = time.perf_counter()
        ok = False
        try:
            yield self
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            if ok and self.limit is not None and elapsed >= self.limit:
                ok = False
                self.note(f"took {elapsed:.1f}s, limit {self.limit}s")
            line = f"criterion {self.number:>2}: {'PASS' if ok else 'FAIL'}  {self.title}  [{elapsed:.2f}s]"
            if self.notes:
                line += "  -- " + "; ".join(self.notes)
            _VERDICTS.append(line)
            print(line)
        if not ok:
            pytest.fail(f"criterion {self.number} exceeded its {self.limit}s limit")


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_VERDICTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
