import sys
from pathlib import Path

import pytest

# oracles.py lives beside the tests
sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and rep.when == "call":
        label = getattr(item.function, "criterion", item.name)
        detail = ""
        if rep.failed:
            detail = str(call.excinfo.value).splitlines()[0] if call.excinfo else ""
        _acceptance[label] = ("PASS" if rep.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split()[0][2:]) if s.startswith("AC") else 99):
        status, detail = _acceptance[label]
        line = f"{status}  {label}"
        if detail:
            line += f"  -- {detail[:160]}"
        tr.write_line(line)
