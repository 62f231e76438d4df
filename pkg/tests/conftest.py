from __future__ import annotations

from contextlib import contextmanager

import pytest
from hypothesis import settings

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture
def criterion(request):
    """Emit one pass/fail line per acceptance criterion.

    Lines go through pytest's terminal reporter so they show up even
    while output capture is active.
    """

    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def emit(line: str) -> None:
        if reporter is None:
            print(line)
        else:
            reporter.ensure_newline()
            reporter.write_line(line)

    @contextmanager
    def guard(num: int, name: str):
        try:
            yield
        except BaseException:
            emit(f"criterion {num:2d} ({name}): FAIL")
            raise
        emit(f"criterion {num:2d} ({name}): PASS")

    return guard
