import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion, whether or not the test passes."""
    state = {}

    def report(number: int, title: str):
        state["number"], state["title"] = number, title

    yield report
    rep = getattr(request.node, "rep_call", None)
    if "number" in state:
        ok = rep is not None and rep.passed
        line = f"criterion {state['number']:>2}: {'PASS' if ok else 'FAIL'}  {state['title']}"
        ACCEPTANCE_LINES[state["number"]] = line
        print("\n" + line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
