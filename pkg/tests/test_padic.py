import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from padic_thue.errors import DomainError, NonUnitError, PrimeMismatch
from padic_thue.integer_kernel import mod_pow
from padic_thue.padic import (
    PadicInt,
    PadicSeries,
    interpolation_series,
    padic_arith,
    padic_exp,
    padic_inv,
    padic_log,
    series_eval,
)

P = 31


def Z(r, k=4, p=P):
    return PadicInt(p, k, r)


def test_arith_examples():
    s = padic_arith(Z(31), Z(930), "add")
    assert s.residue == 961 and s.valuation == 2
    zero = Z(17) * 0
    assert zero.is_zero() and zero.valuation == 4
    assert (Z(34, 2) * Z(34, 2)).residue == 195  # 1156 - 961


def test_precision_is_min_combined():
    x = PadicInt(P, 6, 5) + PadicInt(P, 3, 7)
    assert x.k == 3 and x.residue == 12


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        padic_arith(PadicInt(31, 3, 1), PadicInt(7, 3, 1), "add")


def test_inverse_examples():
    assert padic_inv(Z(1)).residue == 1
    assert padic_inv(PadicInt(P, 1, 17)).residue == 11  # 17 * 11 = 6 * 31 + 1
    with pytest.raises(NonUnitError):
        padic_inv(PadicInt(P, 2, 31))


def test_inverse_exhaustive_mod_31_squared():
    m = P ** 2
    for r in range(m):
        if r % P == 0:
            continue
        x = PadicInt(P, 2, r)
        inv = padic_inv(x)
        assert (x * inv).residue == 1 and (inv * x).residue == 1


def test_inverse_sampled_mod_31_cubed():
    rng = random.Random(3)
    for _ in range(2000):
        r = rng.randrange(P ** 3)
        if r % P:
            assert (PadicInt(P, 3, r) * padic_inv(PadicInt(P, 3, r))).residue == 1


def test_ultrametric_and_multiplicative_valuation():
    rng = random.Random(11)
    k = 6
    for _ in range(10 ** 4):
        x = PadicInt(P, k, rng.randrange(P ** k) * P ** rng.randrange(4))
        y = PadicInt(P, k, rng.randrange(P ** k) * P ** rng.randrange(4))
        vx, vy = x.valuation, y.valuation
        s = x + y
        assert s.valuation >= min(vx, vy)
        if vx != vy:
            assert s.valuation == min(vx, vy)
        assert (x * y).valuation == min(vx + vy, k)


def test_log_examples():
    assert padic_log(Z(1)).is_zero()
    x = Z(1 + 31 * 5)
    assert padic_exp(padic_log(x)) == x
    # first term dominates for odd p: v(log(1 + a)) = v(a), 837 = 27 * 31
    assert padic_log(PadicInt(P, 3, 838)).valuation == 1


def test_log_domain():
    with pytest.raises(DomainError):
        padic_log(Z(2))


def test_exp_examples():
    assert padic_exp(Z(0)).residue == 1
    z = PadicInt(P, 3, 62)
    assert padic_log(padic_exp(z)) == z
    assert (padic_exp(z) * padic_exp(-z)).residue == 1
    with pytest.raises(DomainError):
        padic_exp(Z(5))


def test_log_against_rational_series_oracle():
    # independent oracle: the log series summed in exact rationals, then reduced
    k = 4
    m = P ** k
    for a in (31, 62, 837, 31 * 29, 961 * 5):
        total = sum(Fraction((-1) ** (n + 1) * a ** n, n) for n in range(1, 40))
        expected = total.numerator * pow(total.denominator, -1, m) % m
        assert padic_log(PadicInt(P, k, 1 + a)).residue == expected


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=P ** 5), st.integers(min_value=0, max_value=P ** 5))
def test_log_homomorphism(s, t):
    k = 6
    a, b = PadicInt(P, k, P * s), PadicInt(P, k, P * t)
    lhs = padic_log((a + 1) * (b + 1))
    assert lhs == padic_log(a + 1) + padic_log(b + 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=P ** 5))
def test_exp_log_inverse(t):
    z = PadicInt(P, 6, P * t)
    assert padic_log(padic_exp(z)) == z
    assert padic_exp(padic_log(z + 1)) == z + 1


def test_interpolation_series_examples():
    b = PadicInt(P, 3, 837)
    phi = interpolation_series(b)
    assert series_eval(phi, 0).residue == 1
    assert series_eval(phi, 1).residue == 838
    assert series_eval(phi, 1).reduce(2).residue == 838 % 961
    assert series_eval(phi, 2).residue == mod_pow(838, 2, P ** 3)
    phi62 = interpolation_series(PadicInt(P, 3, 62))
    assert series_eval(phi62, 3).residue == mod_pow(63, 3, P ** 3)


def test_interpolation_series_tail_bound():
    phi = interpolation_series(PadicInt(P, 6, 837))
    for n, c in enumerate(phi.coefficients):
        if n == 0:
            continue
        assert c.valuation >= min(phi.tail_bound(n), phi.k)
    assert phi.tail_negligible()


def test_interpolation_requires_small_b():
    with pytest.raises(DomainError):
        interpolation_series(PadicInt(P, 3, 5))


def test_series_eval_trivial():
    zero = PadicSeries.polynomial(P, 4, [0])
    assert series_eval(zero, 12345).is_zero()
    const = PadicSeries.polynomial(P, 4, [7])
    assert series_eval(const, 99).residue == 7


def test_series_eval_rational_argument():
    phi = interpolation_series(PadicInt(P, 6, 62))
    half = series_eval(phi, Fraction(1, 2))
    assert (half * half).residue == 63


def test_lemma2_contract_random():
    rng = random.Random(2024)
    k = 6
    m = P ** k
    for _ in range(50):
        b = PadicInt(P, k, P * rng.randrange(1, P ** (k - 1)))
        phi = interpolation_series(b)
        base = 1 + b.residue
        for r in range(-10, 11):
            expected = pow(base, r, m) if r >= 0 else pow(pow(base, -1, m), -r, m)
            assert series_eval(phi, r).residue == expected
