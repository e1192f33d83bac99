import pytest

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    criterion = getattr(item.function, "criterion", None)
    if criterion is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance.append((criterion, item.function.__doc__.strip().splitlines()[0],
                            "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, verdict in sorted(_acceptance):
        terminalreporter.write_line(f"AC{num:02d} {verdict}  {title}")
