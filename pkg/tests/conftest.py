import sys


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, shown on every run
    that executed the acceptance module (capture-proof)."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "CRITERION_RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, ok in sorted(results):
        word = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{word}] criterion {num:2d}: {label}")
