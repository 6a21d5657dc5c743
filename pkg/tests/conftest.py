import pytest

# criterion number -> (description, passed)
ACCEPTANCE_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "acceptance_id", None)
    if number is not None and report.when == "call":
        desc = item.function.acceptance_desc
        # parametrized criteria pass only if every case passes
        earlier = ACCEPTANCE_RESULTS.get(number, (desc, True))[1]
        ACCEPTANCE_RESULTS[number] = (desc, earlier and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        desc, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] AC{number}: {desc}")
