import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("cdcover", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("cdcover")


_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    label, text = marker.args
    _criteria[label] = ("PASS" if call.excinfo is None else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(s.rstrip("abcdefghijklmnopqrstuvwxyz")), s)):
        status, text = _criteria[label]
        terminalreporter.write_line(f"{status} C{label}: {text}")
