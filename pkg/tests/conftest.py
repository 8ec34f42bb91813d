import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    number, name = int(m.group(1)), m.group(2).replace("_", " ")
    failed = report.failed or (report.when == "call" and report.skipped)
    if failed or number not in _outcomes:
        if report.when == "call" or failed:
            _outcomes[number] = ("FAIL" if failed else "PASS", name)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        verdict, name = _outcomes[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number:2d}: {name}")
