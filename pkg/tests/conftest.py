import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, text = mark.args
    record = item.config._criteria.setdefault(n, {"text": text, "ok": True, "seen": False})
    if call.when == "call":
        record["seen"] = True
    if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
        record["ok"] = False


def pytest_terminal_summary(terminalreporter, config):
    criteria = config._criteria
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(criteria):
        r = criteria[n]
        verdict = "PASS" if r["ok"] and r["seen"] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {r['text']}")
