"""Integer polynomials: evaluation mod m, roots mod p, Hensel lifting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import HenselError
from .integer_kernel import is_prime
from .padic import PadicInt


@dataclass(frozen=True)
class IntPoly:
    """Polynomial ``c0 + c1*X + ... + cd*X**d`` with integer coefficients."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i) if self.degree else IntPoly([0])

    def __str__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            coef = str(c) if (abs(c) != 1 or i == 0) else ("-" if c < 0 else "")
            terms.append(f"{coef}{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


# f(X) = (X+1)^3 - 2, the minimal polynomial of 2^(1/3) - 1
THETA_POLY = IntPoly([-1, 3, 3, 1])


def poly_eval_mod(f: IntPoly, x: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % m
    return acc


def roots_mod_p(f: IntPoly, p: int) -> list[int]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return [x for x in range(p) if poly_eval_mod(f, x, p) == 0]


def hensel_lift(f: IntPoly, p: int, x0: int, k: int) -> PadicInt:
    """Lift a simple root ``x0`` of f mod p to the unique root mod ``p**k``.

    Newton iteration; each step doubles the number of correct digits.
    """
    if not f.is_monic():
        raise ValueError("hensel_lift needs a monic polynomial")
    if k < 1:
        raise ValueError("precision must be >= 1")
    if poly_eval_mod(f, x0, p) != 0:
        raise HenselError(f"{x0} is not a root of {f} mod {p}")
    df = f.derivative()
    if poly_eval_mod(df, x0, p) == 0:
        raise HenselError(f"f'({x0}) = 0 mod {p}: root is not simple, lemma inapplicable")
    x, prec = x0 % p, 1
    while prec < k:
        prec = min(2 * prec, k)
        m = p ** prec
        x = (x - f(x) * pow(df(x), -1, m)) % m
    return PadicInt(p, k, x)


def discriminant_cubic(f: IntPoly) -> int:
    """Discriminant of a monic cubic ``X^3 + aX^2 + bX + c``."""
    if f.degree != 3 or not f.is_monic():
        raise ValueError("discriminant_cubic needs a monic polynomial of degree 3")
    c, b, a, _ = f.coeffs
    return 18 * a * b * c - 4 * a ** 3 * c + a * a * b * b - 4 * b ** 3 - 27 * c * c


def rational_roots(f: IntPoly) -> list[Fraction]:
    """Rational roots by the rational root test (f must have c0 != 0)."""
    c0, lead = f.coeffs[0], f.leading
    if c0 == 0:
        raise ValueError("rational_roots expects a nonzero constant term")

    def divisors(n):
        n = abs(n)
        return [d for d in range(1, n + 1) if n % d == 0]

    found = set()
    for num in divisors(c0):
        for den in divisors(lead):
            for sign in (1, -1):
                q = Fraction(sign * num, den)
                if sum(c * q ** i for i, c in enumerate(f.coeffs)) == 0:
                    found.add(q)
    return sorted(found)


def splits_by_cube_criterion(p: int) -> bool:
    """``X^3 - 2`` splits into distinct linear factors mod p (p > 3)."""
    return p % 3 == 1 and pow(2, (p - 1) // 3, p) == 1


def smallest_split_prime(f: IntPoly, excluded: Sequence[int] = (), limit: int = 1000) -> int:
    """Smallest prime not in ``excluded`` modulo which f has deg(f) roots."""
    for p in range(2, limit):
        if p in excluded or not is_prime(p):
            continue
        if len(roots_mod_p(f, p)) == f.degree:
            return p
    raise ValueError(f"no split prime below {limit}")
