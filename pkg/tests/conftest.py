"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

_criteria: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    for key, value in report.user_properties:
        if key != "criterion":
            continue
        ok = report.passed if report.when == "call" else not report.failed
        _criteria[value] = _criteria.get(value, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if _criteria[name] else 'FAIL'}  {name}")
