import pytest
from hypothesis import settings

# timings vary a lot on shared machines
settings.register_profile("default", deadline=None)
settings.load_profile("default")

# criterion number -> (title, list of outcomes)
_CRITERIA: dict[int, tuple[str, list[bool]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    number, title = props["criterion"]
    _CRITERIA.setdefault(number, (title, []))[1].append(report.passed)


@pytest.fixture(autouse=True)
def _tag_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        request.node.user_properties.append(("criterion", tuple(marker.args[:2])))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcomes = _CRITERIA[number]
        verdict = "PASS" if all(outcomes) else "FAIL"
        failed = outcomes.count(False)
        detail = f"{len(outcomes)} checks" + (f", {failed} failed" if failed else "")
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title} ({detail})")
