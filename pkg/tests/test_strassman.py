import math
import random
from fractions import Fraction

import pytest

from padic_thue.errors import InconclusiveError, InconsistentCertificate
from padic_thue.integer_kernel import valuation
from padic_thue.polynomial import IntPoly, poly_eval_mod, roots_mod_p
from padic_thue.strassman import INF, ValuationProfile, count_exact_roots, strassman_bound


def poly_profile(coeffs, p):
    return ValuationProfile([INF if c == 0 else valuation(c, p) for c in coeffs])


def test_examples():
    assert strassman_bound(ValuationProfile([INF, 1, 2, 3, 4], tail_slope=1)) == 1
    assert strassman_bound(ValuationProfile([0, INF, 1, 2], tail_slope=1)) == 0
    # X^2 - X has the two roots 0 and 1
    assert strassman_bound(poly_profile([0, -1, 1], 31)) == 2


def test_count_exact_roots():
    prof = ValuationProfile([INF, 1, 2, 3], tail_slope=1)
    assert count_exact_roots(prof, 1) == "exact"
    assert count_exact_roots(prof, 0) == "bounded-only"
    with pytest.raises(InconsistentCertificate):
        count_exact_roots(prof, 2)


def test_hypothesis_failures():
    with pytest.raises(ValueError):
        strassman_bound(ValuationProfile([1, 2], tail_slope=0))
    with pytest.raises(ValueError):
        strassman_bound(ValuationProfile([INF, INF]))


def test_inconclusive_cases():
    # every coefficient vanished at working precision
    with pytest.raises(InconclusiveError):
        strassman_bound(ValuationProfile([6, 6, 6], precision=6, tail_slope=1))
    # a truncated coefficient could beat the observed minimum
    with pytest.raises(InconclusiveError):
        strassman_bound(ValuationProfile([3, 6], precision=3, tail_slope=5))
    # the tail is not yet smaller than the minimum
    with pytest.raises(InconclusiveError):
        strassman_bound(ValuationProfile([2, 3], tail_slope=Fraction(1, 2)))


def simple_root_count(coeffs, p):
    m = min(valuation(c, p) for c in coeffs if c)
    g = IntPoly([c // p ** m for c in coeffs])
    if g.degree < 1:
        return 0
    dg = g.derivative()
    return sum(1 for x in range(p) if poly_eval_mod(g, x, p) == 0 and poly_eval_mod(dg, x, p) != 0)


def test_bound_dominates_lifting_roots():
    rng = random.Random(20261015)
    p = 31
    for _ in range(300):
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-3000, 3000) * p ** rng.choice([0, 0, 1, 2]) for _ in range(deg + 1)]
        if all(c == 0 for c in coeffs):
            continue
        assert simple_root_count(coeffs, p) <= strassman_bound(poly_profile(coeffs, p))


def test_constructed_roots_reach_bound():
    # product of (X - r_i) with distinct residues mod 31: bound equals degree
    rng = random.Random(7)
    for _ in range(50):
        rs = rng.sample(range(31), rng.randint(1, 5))
        coeffs = [1]
        for r in rs:
            coeffs = [(-r) * a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
        assert strassman_bound(poly_profile(coeffs, 31)) == len(rs)
        assert simple_root_count(coeffs, 31) == len(rs)


def test_scaling_invariance():
    rng = random.Random(3)
    for _ in range(100):
        coeffs = [rng.randint(-500, 500) for _ in range(rng.randint(1, 6))]
        if not any(coeffs):
            continue
        base = strassman_bound(poly_profile(coeffs, 31))
        unit = rng.choice([2, 3, 5, 30, -1])
        assert strassman_bound(poly_profile([unit * c for c in coeffs], 31)) == base
        assert strassman_bound(poly_profile([31 ** 2 * c for c in coeffs], 31)) == base


def test_profile_json():
    prof = ValuationProfile([INF, 1, 2], precision=6, tail_slope=1)
    doc = prof.to_json()
    assert doc["valuations"] == ["inf", 1, 2]
    assert doc["tail"] == {"slope": "1", "intercept": "0"}
    assert not math.isinf(prof.tail_bound(3))
