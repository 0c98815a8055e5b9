import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# filled by test_acceptance.py: number -> (passed, seconds, limit)
CRITERIA = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, secs, limit = CRITERIA[num]
        bound = " limit %ds" % limit if limit else ""
        terminalreporter.write_line("criterion %d: %s (%.2fs%s)" % (num, "PASS" if ok else "FAIL", secs, bound))
