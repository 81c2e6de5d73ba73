import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance check at the end of the run."""
    reports = []
    for status in ("passed", "failed"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", "call") != "call":
                continue
            if "test_acceptance.py" in str(getattr(report, "nodeid", "")):
                reports.append((report.nodeid.split("::")[-1], status.upper()))
    if not reports:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, status in sorted(reports):
        terminalreporter.write_line(f"{status:6s} {name}")
