from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wittkernel.qform import QuadraticForm

settings.register_profile(
    "default", max_examples=100, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

nonzero_ints = st.integers(-60, 60).filter(bool)
small_primes = st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])


@st.composite
def nonzero_rationals(draw, bound=60):
    num = draw(st.integers(-bound, bound).filter(bool))
    den = draw(st.integers(1, bound))
    return Fraction(num, den)


@st.composite
def forms(draw, rank=None, bound=30):
    n = rank if rank is not None else draw(st.integers(1, 5))
    return QuadraticForm([draw(nonzero_rationals(bound)) for _ in range(n)])


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if rep.when == "call" and "acceptance" in props:
                rows.append((props["acceptance"], "PASS" if outcome == "passed" else "FAIL",
                             props.get("detail", "")))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, detail in sorted(rows):
        terminalreporter.write_line(f"{verdict} criterion {number:>2}: {detail}")
