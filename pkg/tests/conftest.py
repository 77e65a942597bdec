import pytest

# criterion number -> (title, passed, detail)
_RESULTS: dict[int, tuple[str, bool, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        detail = dict(item.user_properties).get("detail", "")
        if not rep.passed:
            detail = (detail + " " if detail else "") + f"({rep.outcome})"
        _RESULTS[number] = (title, rep.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, detail = _RESULTS[number]
        line = f"{'PASS' if passed else 'FAIL'}  {number:2d}. {title}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)
