"""Shared test plumbing.

Acceptance tests record one PASS/FAIL line per criterion in
ACCEPTANCE_LINES; the terminal-summary hook replays them after the run so
they appear in the log regardless of output capturing.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
