"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

_CRITERIA: dict[int, tuple[str, str, float, float]] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props or report.when not in ("call", "setup"):
        return
    if report.when == "setup" and report.passed:
        return
    status = "PASS" if report.passed else "FAIL"
    _CRITERIA[props["criterion"]] = (
        props["title"],
        status,
        props.get("elapsed", float("nan")),
        props["limit"],
    )


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, status, elapsed, limit = _CRITERIA[num]
        terminalreporter.write_line(
            f"criterion {num:>2}: {status}  {elapsed:7.2f} s (limit {limit:g} s)  {title}"
        )
