import os
from functools import reduce
from math import gcd

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def generator_tuples(draw, max_e=12, max_gen=60):
    e = draw(st.integers(2, max_e))
    rest = draw(st.lists(st.integers(e + 1, max_gen), min_size=1, max_size=5))
    gens = [e] + rest
    if reduce(gcd, gens) != 1:
        gens.append(draw(st.integers(e + 1, max_gen).filter(lambda g: gcd(g, reduce(gcd, gens)) == 1)))
    return tuple(gens)


@st.composite
def semigroup_and_exps(draw, max_e=10, max_gen=40, max_ideal_gens=3):
    """A semigroup plus a few positive exponents lying in it."""
    from stretched.semigroup import build_semigroup

    H = build_semigroup(draw(generator_tuples(max_e, max_gen)))
    e = H.e
    k = draw(st.integers(1, max_ideal_gens))
    exps = []
    for _ in range(k):
        c = draw(st.integers(0, e - 1))
        lift = draw(st.integers(0, 3))
        x = H.apery[c] + lift * e
        exps.append(x if x > 0 else e)
    return H, tuple(exps)


# acceptance results, filled by test_acceptance.py and echoed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
