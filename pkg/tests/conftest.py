import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

_lines = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    for line in report.capstdout.splitlines():
        if line.startswith("criterion "):
            _lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if not _lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_lines, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
