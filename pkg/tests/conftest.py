import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            num, title = mark.args
            _criteria.setdefault(num, {"title": title, "failed": [], "ran": 0})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if not mark or report.when != "call":
        return
    entry = _criteria[mark.args[0]]
    entry["ran"] += 1
    if report.failed:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        entry = _criteria[num]
        if not entry["ran"]:
            continue
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {num:2d} {status}  {entry['title']}"
        if entry["failed"]:
            line += f"  (failing: {', '.join(entry['failed'])})"
        terminalreporter.write_line(line)
