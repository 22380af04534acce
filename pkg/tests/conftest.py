import pytest

from shapeinv import catalog


@pytest.fixture(scope="session")
def rm2():
    """Rosen-Morse II at the worked-example parameters."""
    return catalog.make_spec("rosen_morse_2", {"A": 2.0, "B": 1.0, "alpha": 1.0})


@pytest.fixture(scope="session")
def sho():
    return catalog.make_spec("harmonic_oscillator")


@pytest.fixture(scope="session")
def default_specs():
    return {fid: catalog.make_spec(fid) for fid in catalog.list_families()}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
