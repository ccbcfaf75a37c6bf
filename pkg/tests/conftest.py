import pytest


def pytest_configure(config):
    config._criteria = {}


@pytest.fixture
def record_criterion(request):
    def record(number, ok, detail=""):
        request.config._criteria[number] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}"
        if detail and not ok:
            line += f" ({detail})"
        terminalreporter.write_line(line)
