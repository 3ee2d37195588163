import contextlib

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, print_blob=True)
settings.load_profile("default")

_ACCEPTANCE: list[tuple[str, str, bool]] = []


class AcceptanceRecorder:
    @contextlib.contextmanager
    def criterion(self, ident: str, text: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append((ident, text, False))
            raise
        _ACCEPTANCE.append((ident, text, True))


@pytest.fixture
def acceptance():
    return AcceptanceRecorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for ident, text, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {ident:<5} {text}")
