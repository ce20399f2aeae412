import numpy as np
import pytest


def random_junction_array(rng, spread=3.0):
    """exp(i phi) times a random real SL(2) matrix: a generic symplectic-unitary matrix."""
    while True:
        r = rng.uniform(-spread, spread, size=(2, 2))
        d = np.linalg.det(r)
        if abs(d) > 0.05:
            break
    if d < 0:
        r = r[::-1]
        d = -d
    return np.exp(1j * rng.uniform(0, 2 * np.pi)) * r / np.sqrt(d)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
