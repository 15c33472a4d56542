from __future__ import annotations

import os

from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# filled in by tests/test_acceptance.py; a criterion may have several parts
ACCEPTANCE_RESULTS: dict[int, list[tuple[bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        parts = ACCEPTANCE_RESULTS[num]
        ok = all(p[0] for p in parts)
        msg = " || ".join(p[1] for p in parts)
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
