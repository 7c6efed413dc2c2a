import json
import random
from fractions import Fraction

import pytest

from padic_thue import skolem
from padic_thue.certificate import dumps
from padic_thue.integer_kernel import valuation
from padic_thue.padic import PadicInt, series_eval
from padic_thue.polynomial import THETA_POLY
from padic_thue.strassman import INF, strassman_bound

from conftest import brute_force_thue

c = skolem.companion_value


def test_field_constants():
    data = skolem.build_field_constants()
    assert data.disc == -108
    assert data.unit_rank == 1
    assert all(ch.passed for ch in data.checks)
    assert Fraction(2599, 10000) < data.theta.lo and data.theta.hi < Fraction(26, 100)


def test_unit_certificate():
    cert = skolem.verify_fundamental_unit(skolem.build_field_constants())
    assert cert.fundamental
    assert cert.lower_bound_u_cubed == 20
    assert cert.u_lower.lo > Fraction(27144, 10000)
    assert Fraction(3846, 1000) <= cert.theta_inv_enclosure.lo
    assert cert.theta_inv_enclosure.hi <= Fraction(3848, 1000)
    assert cert.sqrt_theta_inv.hi < cert.u_lower.lo


def test_theta_power_coords():
    assert skolem.theta_power_coords(0) == (1, 0, 0)
    assert skolem.theta_power_coords(1) == (0, 1, 0)
    assert skolem.theta_power_coords(3) == (1, -3, -3)
    assert skolem.theta_power_coords(-1) == (3, 3, 1)
    for n in range(-15, 15):
        a = skolem.theta_power_coords(n)
        b = skolem.theta_power_coords(n + 1)
        assert skolem.zt_mul(a, skolem.THETA) == b


def test_companion_values():
    assert [c(n) for n in range(6)] == [0, 0, 1, -3, 6, -8]
    assert c(10) == -279
    # backward: theta^-1 = 3 + 3 theta + theta^2
    assert c(-1) == 1


def test_companion_matches_theta_coordinate():
    for n in range(-20, 21):
        assert c(n) == skolem.theta_power_coords(n)[2]


def test_integer_zeros_in_window():
    assert [n for n in range(-200, 201) if c(n) == 0] == [0, 1]


def test_split_data(split):
    assert split.roots_mod_p == (3, 6, 19)
    assert [x.residue % 961 for x in split.roots] == [282, 409, 267]
    assert [a.residue % 961 for a in split.perturbations] == [434, 806, 682]
    assert all(a.valuation == 1 for a in split.perturbations)
    for x in split.roots:
        assert THETA_POLY(x.residue) % 31 ** 6 == 0


def test_bad_primes():
    with pytest.raises(ValueError):
        skolem.build_split_data(7, 4)  # no roots
    with pytest.raises(ValueError):
        skolem.build_split_data(3, 4)  # divides the discriminant
    with pytest.raises(ValueError):
        skolem.build_split_data(30, 4)


def test_sieve(split):
    # every root satisfies root^10 = 25 mod 31, so c_(n+10) = 25 c_n mod 31
    assert skolem.residue_sieve(split) == {0, 1, 10, 11, 20, 21}
    assert skolem.scalar_period(split) == (10, 25)
    for n in range(-30, 60):
        assert (c(n + 10) - 25 * c(n)) % 31 == 0
    assert skolem.sieve_periodicity(split)


def test_sieve_soundness(split):
    survivors = skolem.residue_sieve(split)
    for r in range(30):
        if r in survivors:
            continue
        for s in range(51):
            assert c(r + 30 * s) % 31 != 0


@pytest.mark.parametrize("r", [0, 1, 10, 11, 20, 21])
def test_lambda_profiles(split, r):
    prof = skolem.lambda_profile(split, r)
    if r in (0, 1):
        assert prof.valuations[0] == INF
    else:
        assert prof.valuations[0] == 1
    assert prof.valuations[1] == 1
    for j, v in enumerate(prof.valuations[2:], start=2):
        assert v >= j or v == INF
    assert strassman_bound(prof) == 1


@pytest.mark.parametrize("r", [0, 1, 10])
def test_series_interpolates_sequence(split, r):
    u = skolem.lambda_series(split, r)
    m = 31 ** 6
    for s in range(0, 6):
        assert series_eval(u, s).residue == c(r + 30 * s) % m


def test_lambda_1_valuation_oracle():
    # u_r(31) = lambda_1 * 31 + O(31^3), so v(c_(r+930)) = 1 + v(lambda_1) = 2
    for r in (0, 1):
        assert valuation(c(r + 930), 31) == 2


def test_shifted_zero_oracle(split):
    # u_10 vanishes at s = -1/3; 320 = -1/3 mod 31^2, so v(u_10(320)) = 1 + 2
    assert (3 * 320 + 1) % 961 == 0
    assert valuation(c(10 + 30 * 320), 31) == 3
    assert valuation(c(11 + 30 * 320), 31) == 3
    u = skolem.lambda_series(split, 10)
    assert series_eval(u, Fraction(-1, 3)).is_zero()


def test_shift_identity_checks(split):
    checks = skolem._shift_identity_checks(split)
    assert all(ch.passed for ch in checks)


def test_skolem_identity(split):
    # sum_i w_i root_i^n = c_n mod 31^k
    w = split.weights()
    for n in range(0, 40):
        acc = PadicInt(31, 6, 0)
        for wi, x in zip(w, split.roots):
            acc = acc + wi * x ** n
        assert acc.residue == c(n) % 31 ** 6


def test_norm_identity_random(split):
    rng = random.Random(11)
    for _ in range(100):
        x, y = rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)
        prod = PadicInt(31, 6, 1)
        for root in split.roots:
            prod = prod * ((root + 1) * x - y)
        assert prod.residue == (2 * x ** 3 - y ** 3) % 31 ** 6


def test_solve_thue_plus(thue_plus, cube_table):
    assert thue_plus.positive_solutions == {(1, 1)}
    assert thue_plus.integer_solutions == {(1, 1), (0, -1)}
    assert brute_force_thue(1, cube_table) == thue_plus.integer_solutions
    assert thue_plus.passed
    assert all(rep.verdict == "exact" for rep in thue_plus.residue_reports)


def test_solve_thue_minus(thue_minus, cube_table):
    assert thue_minus.integer_solutions == {(0, 1), (-1, -1)}
    assert thue_minus.positive_solutions == set()
    assert brute_force_thue(-1, cube_table) == thue_minus.integer_solutions


def test_solve_thue_other_prime(cube_table):
    cert = skolem.solve_thue(1, 43, 6)
    assert cert.integer_solutions == brute_force_thue(1, cube_table)


def test_bad_norm():
    with pytest.raises(ValueError):
        skolem.solve_thue(2)


def test_certificate_json_and_replay(thue_plus):
    doc = json.loads(dumps(thue_plus.to_json()))
    assert doc["schema"] == "padic-thue/1"
    assert doc["surviving_residues"] == [0, 1, 10, 11, 20, 21]
    assert len(doc["divergences_from_paper"]) == 4
    assert skolem.replay_certificate(doc) == []
    doc["checks"][0]["status"] = "fail"
    assert skolem.replay_certificate(doc) != []
