from fractions import Fraction
from math import comb, factorial

from gmpy2 import mpq
import pytest

from dynseq.documents import catalog_system
from dynseq.errors import Indeterminacy, NonIntegerValuedPolynomial, ZeroBaseNegativeExponent
from dynseq.fields import QQ
from dynseq.parser import parse_expression
from dynseq.poly import PolyRing
from dynseq.sequences import (
    ExpPolyData,
    Polynomial,
    PowerOfD,
    seq_arith_progression,
    seq_constant,
    seq_eds,
    seq_eval,
    seq_exp_poly_subsequence,
    seq_floor,
    seq_from_linear_recurrence,
    seq_from_recurrence_with_coeffs,
    seq_interlace,
    seq_lambda_poly_exponent,
    seq_lambda_power_tower,
    seq_partial_products,
    seq_partial_sums,
    seq_product,
    seq_shift,
    seq_somos,
    seq_sum,
    seq_with_prefix,
)

from conftest import Q5, QT, oracle_eds, oracle_fib, oracle_somos

SOMOS4 = [1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313, 620297]
EDS = [0, 1, 1, -1, 1, 2, -1, -3, -5, 7, -4, -23, 29, 59, 129, -314]


def vals(s, n):
    return [v for v in seq_eval(s, n)]


def naturals():
    return seq_from_linear_recurrence([2, -1], [0, 1])


def test_catalog_sequences_and_oracles():
    fact = catalog_system("factorial")
    assert vals(fact, 4) == [1, 1, 2, 6, 24]
    assert vals(seq_somos(4, [1, 1, 1, 1]), 13) == SOMOS4
    assert vals(seq_somos(4, [1, 1, 1, 1]), 30) == oracle_somos(4, [1, 1, 1, 1], 30)
    assert vals(seq_eds(1, 1, -1, 1), 15) == EDS
    assert vals(seq_eds(1, 1, -1, 1), 30) == oracle_eds([1, 1, -1, 1], 30)
    assert vals(catalog_system("A006769"), 15) == EDS


def test_somos_examples():
    assert vals(seq_somos(5, [1] * 5), 9) == [1, 1, 1, 1, 1, 2, 3, 5, 11, 37]
    assert vals(seq_somos(5, [1] * 5), 25) == oracle_somos(5, [1] * 5, 25)
    c = mpq(3, 7)
    assert vals(seq_somos(4, [c] * 4), 10) == [c * v for v in SOMOS4[:11]]


def test_eds_examples():
    s = seq_eds(1, 1, 1, 1)
    assert vals(s, 5)[5] == 0  # (W4 W2 W2^2 - W3 W1 W3^2) / (W1 W1^2)
    with pytest.raises(Indeterminacy):
        seq_eval(s, 12)
    assert seq_eval(seq_eds(2, 3, 5, 7), 0) == [0]


def test_sum_and_product():
    fact = catalog_system("factorial")
    zero = seq_constant(0)
    assert vals(seq_sum(fact, zero), 40) == vals(fact, 40)
    assert vals(seq_product(fact, fact), 4) == [1, 1, 4, 36, 576]


def test_partial_sums_and_products():
    assert vals(seq_partial_sums(seq_constant(1)), 5) == [1, 2, 3, 4, 5, 6]
    assert vals(seq_partial_sums(naturals()), 4) == [0, 1, 3, 6, 10]
    assert vals(seq_partial_products(catalog_system("factorial")), 5) == [1, 1, 2, 12, 288, 34560]


def test_shift():
    fact = catalog_system("factorial")
    assert vals(seq_shift(fact, 0), 10) == vals(fact, 10)
    assert vals(seq_shift(fact, 2), 3) == [2, 6, 24, 120]
    shifted = seq_shift(catalog_system("A006769"), 1)
    assert shifted.prefix == ()
    assert shifted.geo.point == tuple(mpq(v) for v in (1, 1, -1, 1))


def test_with_prefix():
    fact = catalog_system("factorial")
    assert vals(seq_with_prefix(fact, [5], 1), 4) == [5, 1, 1, 2, 6]
    assert vals(seq_with_prefix(fact, [], 0), 10) == vals(fact, 10)
    eds1 = seq_shift(catalog_system("A006769"), 1)
    assert vals(seq_with_prefix(eds1, [0], 1), 15) == EDS
    with pytest.raises(ValueError):
        seq_with_prefix(fact, [1], 2)


def test_arith_progression():
    fact = catalog_system("factorial")
    assert vals(seq_arith_progression(fact, 1, 0), 10) == vals(fact, 10)
    odd = seq_arith_progression(catalog_system("A006769"), 2, 1)
    assert vals(odd, 7) == [1, -1, 2, -3, 7, -23, 59, -314]
    assert vals(seq_arith_progression(fact, 2, 0), 3) == [1, 2, 24, 720]


def test_floor():
    fact = catalog_system("factorial")
    assert vals(seq_floor(fact, 1), 10) == vals(fact, 10)
    assert vals(seq_floor(naturals(), 2), 5) == [0, 0, 1, 1, 2, 2]
    assert vals(seq_floor(fact, 3), 9) == [1, 1, 1, 1, 1, 1, 2, 2, 2, 6]


def test_interlace():
    fact = catalog_system("factorial")
    assert vals(seq_interlace([fact]), 10) == vals(fact, 10)
    assert vals(seq_interlace([seq_constant(0), seq_constant(1)]), 5) == [0, 1, 0, 1, 0, 1]
    tri = catalog_system("triangular-closed")
    assert vals(seq_interlace([fact, tri]), 7) == [1, 0, 1, 1, 2, 3, 6, 6]


def test_linear_recurrence():
    assert vals(seq_from_linear_recurrence([1, 1], [0, 1]), 10) == [oracle_fib(n) for n in range(11)]
    assert vals(seq_from_linear_recurrence([0, 1], [1, 0]), 3) == [1, 0, 1, 0]
    assert vals(seq_from_linear_recurrence([1], [mpq(2, 3)]), 4) == [mpq(2, 3)] * 5


def test_recurrence_with_coeffs():
    R = PolyRing(QQ, ["a"])
    shift = seq_from_recurrence_with_coeffs(parse_expression("a", ["a"], ring=R), [], [7])
    assert vals(shift, 5) == [7] * 6
    R2 = PolyRing(QQ, ["c", "a"])
    c = seq_from_linear_recurrence([2, -1], [1, 2])  # n + 1
    fact = seq_from_recurrence_with_coeffs(parse_expression("c*a", ["c", "a"], ring=R2), [c], [1])
    assert vals(fact, 10) == [factorial(n) for n in range(11)]
    R3 = PolyRing(QQ, ["x1", "x2", "x3"])
    somos = parse_expression("(x1*x3^3 + x2^2*x3^2)/x2^3", ["x1", "x2", "x3"], ring=R3)
    sf = seq_from_recurrence_with_coeffs(somos, [], [1, 1, 1])
    # b(-1), b(0), b(1) = 1, 1, 1: term n here is b(n - 1)
    assert vals(sf, 5) == [1, 1, 1, 2, 12, 288]


def test_lambda_power_tower():
    rho2 = Q5("(3 + r)/2")
    s = vals(seq_lambda_power_tower(rho2, 2), 2)
    assert s == [rho2, rho2 ** 2, rho2 ** 4]
    assert vals(seq_lambda_power_tower(1, 3), 5) == [1] * 6
    t = QT.gen
    assert vals(seq_lambda_power_tower(t, 2), 3) == [t, t ** 2, t ** 4, t ** 8]


def test_lambda_poly_exponent():
    assert vals(seq_lambda_poly_exponent(2, [0, 1]), 3) == [1, 2, 4, 8]
    t = QT.gen
    tri = seq_lambda_poly_exponent(t, [0, mpq(1, 2), mpq(1, 2)])
    assert vals(tri, 4) == [1, t, t ** 3, t ** 6, t ** 10]
    neg = seq_lambda_poly_exponent(2, "(x - 1)^2")
    assert vals(neg, 4) == [2, 1, 2, 16, 512]
    assert not neg.geo.observable.is_polynomial()
    assert vals(seq_lambda_poly_exponent(3, [4]), 3) == [81] * 4
    with pytest.raises(NonIntegerValuedPolynomial):
        seq_lambda_poly_exponent(2, [0, mpq(1, 2)])
    with pytest.raises(ZeroBaseNegativeExponent):
        seq_lambda_poly_exponent(0, "(x - 1)^2")


def test_exp_poly_subsequences():
    r = Q5.gen
    phi, psi = (1 + r) / 2, (1 - r) / 2
    fib = ExpPolyData(((phi, 0, 1 / r), (psi, 0, -1 / r)))
    assert vals(seq_exp_poly_subsequence(fib, PowerOfD(2)), 4) == [1, 1, 3, 21, 987]
    assert vals(seq_exp_poly_subsequence(fib, PowerOfD(2)), 6) == [oracle_fib(2 ** n) for n in range(7)]
    ident = ExpPolyData(((1, 1, 1),))
    assert vals(seq_exp_poly_subsequence(ident, PowerOfD(2)), 3) == [1, 2, 4, 8]
    square = ExpPolyData(((1, 1, 1), (1, 2, 2)))  # n^2 = C(n,1) + 2 C(n,2)
    assert vals(seq_exp_poly_subsequence(square, Polynomial([1, 1])), 3) == [1, 4, 9, 16]
    assert vals(seq_exp_poly_subsequence(fib, Polynomial([0, 2])), 8) == [oracle_fib(2 * n) for n in range(9)]


def test_accumulator_state_identity():
    R2 = PolyRing(QQ, ["c", "a1", "a2"])
    c = seq_from_linear_recurrence([2, -1], [1, 2])
    R = parse_expression("c*a2 + a1", ["c", "a1", "a2"], ring=R2)
    s = seq_from_recurrence_with_coeffs(R, [c], [1, 1])
    f = [Fraction(1), Fraction(1)]
    for n in range(30):
        f.append((n + 1) * f[n + 1] + f[n])
    pts = s.geo.orbit(21)
    for n, pt in enumerate(pts):
        assert list(pt[-2:]) == f[n : n + 2]


@pytest.mark.parametrize("lam", [2, mpq(-3, 2)])
@pytest.mark.parametrize("P", [[0, 1], [1, -2, 1], [0, 0, 0, 1], [3, 0, 0, 0, 1], [0, 0, 0, 0, 0, 1]])
def test_binomial_exponent_state_identity(lam, P):
    s = seq_lambda_poly_exponent(lam, P)
    d = s.geo.dim
    for n, pt in enumerate(s.geo.orbit(13)):
        assert list(pt) == [mpq(lam) ** comb(n, i) for i in range(1, d + 1)]
    for n, v in enumerate(seq_eval(s, 12)):
        e = sum(Fraction(c) * n ** k for k, c in enumerate(P))
        assert v == mpq(lam) ** int(e)
