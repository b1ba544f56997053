import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one pass/fail line per acceptance criterion."""
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or not item.module.__name__.endswith("test_acceptance"):
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    status = "PASS" if rep.passed else "FAIL"
    print(f"\n[{status}] {doc}", flush=True)
