from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    max_examples=30,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    from acceptance_corpus import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}")
