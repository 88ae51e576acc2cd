import _criteria_log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for status, label, elapsed, budget in _criteria_log.RESULTS:
        terminalreporter.write_line(
            f"[{status}] {label} ({elapsed:.2f}s, budget {budget:g}s)"
        )
