"""Exact integer helpers and rational interval arithmetic.

Everything here is exact: integers are Python ints, real quantities are
enclosed by intervals with :class:`fractions.Fraction` endpoints.  No binary
floating point ever enters a comparison used by a proof step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def icbrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(n ** (1/3)), exact)`` for ``n >= 0``.

    Integer Newton iteration started above the root, followed by a floor
    correction, so the result never depends on floating point.
    """
    if n < 0:
        raise ValueError(f"icbrt of negative number {n}")
    if n < 2:
        return n, True
    # 2**ceil(bits/3) >= cbrt(n): a safe starting point from above
    x = 1 << -(-n.bit_length() // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x, x * x * x == n


def is_perfect_cube(n: int) -> bool:
    if n < 0:
        raise ValueError(f"is_perfect_cube expects n >= 0, got {n}")
    return icbrt(n)[1]


def signed_cbrt(n: int) -> int | None:
    """Integer cube root of a possibly negative ``n``, or None."""
    root, exact = icbrt(abs(n))
    if not exact:
        return None
    return root if n >= 0 else -root


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base ** exp mod modulus`` in ``[0, modulus)``."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    # builtin pow is square-and-multiply on arbitrary precision ints
    return pow(base, exp, modulus)


def valuation(n: int, p: int) -> int | None:
    """p-adic valuation of a nonzero integer; None for zero."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def factorial_valuation(n: int, p: int) -> int:
    """v_p(n!) by Legendre's formula."""
    v, q = 0, p
    while q <= n:
        v += n // q
        q *= p
    return v


def is_prime(n: int) -> bool:
    """Trial division; only ever called on small primes."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> RationalInterval:
        return cls(Fraction(x), Fraction(x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __contains__(self, x) -> bool:
        return self.contains(x)

    @staticmethod
    def _coerce(other) -> RationalInterval:
        if isinstance(other, RationalInterval):
            return other
        if isinstance(other, (int, Rational)):
            return RationalInterval.point(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        products = [a * b for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> RationalInterval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __pow__(self, n: int):
        if n < 0:
            return (self ** -n).reciprocal()
        result = RationalInterval.point(1)
        for _ in range(n):
            result = result * self
        return result

    def certainly_lt(self, other) -> bool:
        other = self._coerce(other)
        return self.hi < other.lo

    def certainly_gt(self, other) -> bool:
        other = self._coerce(other)
        return self.lo > other.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def _root_bracket(x: Fraction, degree: int, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect until ``lo**degree <= x <= hi**degree`` and ``hi - lo <= width``."""
    lo, hi = Fraction(0), max(Fraction(1), x)
    while hi - lo > width:
        mid = (lo + hi) / 2
        m = mid ** degree
        if m == x:
            return mid, mid
        if m < x:
            lo = mid
        else:
            hi = mid
    return lo, hi


def root_interval(x, degree: int, width) -> RationalInterval:
    """Enclosure of the real ``degree``-th root of a rational ``x >= 0``."""
    x, width = Fraction(x), Fraction(width)
    if x < 0 or degree < 1 or width <= 0:
        raise ValueError("root_interval needs x >= 0, degree >= 1, width > 0")
    return RationalInterval(*_root_bracket(x, degree, width))


def cbrt_interval(n: int, width) -> RationalInterval:
    """Enclosure ``[t/D, (t+1)/D]`` of ``n ** (1/3)`` with ``D = ceil(1/width)``.

    ``t`` is found by bisection over the integers in
    ``[icbrt(n) * D, (icbrt(n) + 1) * D]``.
    """
    width = Fraction(width)
    if n < 1 or width <= 0:
        raise ValueError("cbrt_interval needs n >= 1 and width > 0")
    root, exact = icbrt(n)
    if exact:
        return RationalInterval.point(root)
    D = -(-width.denominator // width.numerator)
    target = n * D ** 3
    lo, hi = root * D, (root + 1) * D  # lo^3 <= target < hi^3
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** 3 <= target:
            lo = mid
        else:
            hi = mid
    return RationalInterval(Fraction(lo, D), Fraction(hi, D))


def sqrt_enclosure(iv: RationalInterval, width) -> RationalInterval:
    """Enclosure of ``sqrt`` over a nonnegative interval (sqrt is monotone)."""
    if iv.lo < 0:
        raise ValueError("sqrt_enclosure needs a nonnegative interval")
    return RationalInterval(
        root_interval(iv.lo, 2, width).lo, root_interval(iv.hi, 2, width).hi
    )
