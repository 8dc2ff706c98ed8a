import hypothesis.strategies as st
from hypothesis import settings

from monogenica.core import ComplexScalar, MultiPoly

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")


def exponents(max_degree):
    return st.integers(0, max_degree).flatmap(
        lambda d: st.integers(0, d).flatmap(
            lambda a: st.integers(0, d - a).map(lambda b: (a, b, d - a - b))))


def coefficients(bound=10):
    return st.builds(ComplexScalar, st.integers(-bound, bound), st.integers(-bound, bound))


def polys(space="x", max_degree=8, max_terms=6, bound=10):
    return st.dictionaries(exponents(max_degree), coefficients(bound), max_size=max_terms).map(
        lambda terms: MultiPoly(space, terms))


def homogeneous_polys(k, space="x", max_terms=6):
    return st.dictionaries(exponents(k).filter(lambda e: sum(e) == k) if k else st.just((0, 0, 0)),
                           coefficients(), max_size=max_terms).map(lambda t: MultiPoly(space, t))


def pytest_terminal_summary(terminalreporter):
    import sys
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
