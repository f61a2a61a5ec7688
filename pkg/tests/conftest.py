"""Shared strategies and independent oracles for the test suite."""
from fractions import Fraction

from gmpy2 import mpq
from hypothesis import settings, strategies as st
import pytest

from dynseq.fields import QQ, AlgebraicField, FunctionField

settings.register_profile("default", deadline=None)
settings.load_profile("default")

Q5 = AlgebraicField([-5, 0, 1], "r")
QCUBE = AlgebraicField([-2, 0, 0, 1], "a")  # a^3 = 2
QT = FunctionField("t")

small_q = st.builds(
    lambda n, d: mpq(n, d),
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
)


def elements(field):
    if field == QQ:
        return small_q
    if isinstance(field, AlgebraicField):
        return st.lists(small_q, min_size=field.degree, max_size=field.degree).map(field.from_coords)
    return st.builds(
        lambda n, d: field.fraction(n, d) if any(d) else field.fraction(n, [1]),
        st.lists(small_q, min_size=0, max_size=3),
        st.lists(small_q, min_size=1, max_size=3),
    )


# ---------------------------------------------------------------------------
# brute-force oracles: plain Python recurrences with Fraction, no dynseq code
# ---------------------------------------------------------------------------


def oracle_somos(k, init, n_max):
    a = [Fraction(v) for v in init]
    while len(a) <= n_max:
        n = len(a)
        s = sum(a[n - i] * a[n - k + i] for i in range(1, k // 2 + 1))
        a.append(s / a[n - k])
    return a[: n_max + 1]


def oracle_eds(w, n_max):
    W = [Fraction(0)] + [Fraction(v) for v in w]
    while len(W) <= n_max:
        m = len(W) - 2  # computing W_{m+2}
        W.append((W[m + 1] * W[m - 1] * W[2] ** 2 - W[3] * W[1] * W[m] ** 2) / (W[m - 2] * W[1] ** 2))
    return W[: n_max + 1]


def oracle_linear(coeffs, init, n_max):
    a = [Fraction(v) for v in init]
    while len(a) <= n_max:
        a.append(sum(Fraction(c) * a[-i] for i, c in enumerate(coeffs, start=1)))
    return a[: n_max + 1]


def oracle_fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.fixture
def q5():
    return Q5


@pytest.fixture
def qt():
    return QT
