import pytest

from loopsphere.dl_core import Element
from loopsphere.loopspace import BasisQuery, enumerate_basis


def corpus_monomials(l=8, n_max=6, max_dim=30):
    out = []
    for n in range(1, n_max + 1):
        for p in enumerate_basis(BasisQuery(l, n, max_dim), products=True):
            out.append(Element(n, [p]))
    return out


@pytest.fixture(scope="session")
def corpus():
    """Every normal-form monomial for l <= 8, n <= 6, dim <= 30."""
    return corpus_monomials()


@pytest.fixture(scope="session")
def generators(corpus):
    return [e for e in corpus if len(next(iter(e.terms))) == 1 and next(iter(e.terms)) != ((),)]


_CRITERIA: dict = {}


@pytest.fixture
def criterion():
    """Record one acceptance line; printed again in the terminal summary."""

    def record(k: int, ok: bool, details: str) -> bool:
        line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {details}"
        _CRITERIA[k] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[k])
