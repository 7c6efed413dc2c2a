"""Truncated p-adic integers, log/exp, and the interpolation series of (1+b)^r.

A :class:`PadicInt` is a residue modulo ``p**k``.  Binary operations combine
precision pessimistically (``min`` of the operands).  The log and exp series
divide by ``n`` and ``n!``; those divisions are carried out at a raised
internal precision so that the returned value is correct to the full ``k``
digits of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, NonUnitError, PrimeMismatch
from .integer_kernel import factorial_valuation


@dataclass(frozen=True)
class PadicInt:
    """Residue of a p-adic integer modulo ``p**k``.

    ``valuation`` is capped at ``k``: a value of ``k`` means the residue is
    zero and the true valuation is only known to be ``>= k``.
    """

    p: int
    k: int
    residue: int

    def __post_init__(self):
        if self.p < 2 or self.k < 1:
            raise ValueError(f"bad p-adic parameters p={self.p}, k={self.k}")
        object.__setattr__(self, "residue", self.residue % self.p ** self.k)

    @property
    def modulus(self) -> int:
        return self.p ** self.k

    @property
    def valuation(self) -> int:
        r = self.residue
        if r == 0:
            return self.k
        v = 0
        while r % self.p == 0:
            r //= self.p
            v += 1
        return v

    def is_zero(self) -> bool:
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def reduce(self, k: int) -> PadicInt:
        """Drop to a lower precision."""
        if k > self.k:
            raise ValueError(f"cannot raise precision from {self.k} to {k}")
        return PadicInt(self.p, k, self.residue)

    def signed(self) -> int:
        """Representative in ``(-p**k/2, p**k/2]``."""
        m = self.modulus
        return self.residue - m if self.residue > m // 2 else self.residue

    def _operand(self, other) -> PadicInt:
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise PrimeMismatch(f"primes differ: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return PadicInt(self.p, self.k, other)
        if isinstance(other, Fraction):
            return from_rational(other, self.p, self.k)
        return NotImplemented

    def __add__(self, other):
        return padic_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        return padic_arith(self, other, "sub")

    def __rsub__(self, other):
        return padic_arith(self._operand(other), self, "sub")

    def __mul__(self, other):
        return padic_arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self):
        return PadicInt(self.p, self.k, -self.residue)

    def __pow__(self, n: int):
        if n < 0:
            return padic_inv(self) ** -n
        return PadicInt(self.p, self.k, pow(self.residue, n, self.modulus))

    def __truediv__(self, other):
        return self * padic_inv(self._operand(other))

    def __eq__(self, other):
        if isinstance(other, int):
            return (self.residue - other) % self.modulus == 0
        if not isinstance(other, PadicInt):
            return NotImplemented
        return (self.p, self.k, self.residue) == (other.p, other.k, other.residue)

    def __hash__(self):
        return hash((self.p, self.k, self.residue))

    def __repr__(self):
        return f"PadicInt({self.residue} mod {self.p}^{self.k})"


def from_rational(x, p: int, k: int) -> PadicInt:
    """Image of a rational with p-free denominator in ``Z/p^k``."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonUnitError(f"{x} is not a {p}-adic integer")
    m = p ** k
    return PadicInt(p, k, x.numerator * pow(x.denominator, -1, m))


def padic_arith(x: PadicInt, y, op: str) -> PadicInt:
    """Add, subtract or multiply; precision is the minimum of the operands."""
    y = x._operand(y)
    if y is NotImplemented:
        raise TypeError(f"unsupported operand {y!r}")
    k = min(x.k, y.k)
    if op == "add":
        r = x.residue + y.residue
    elif op == "sub":
        r = x.residue - y.residue
    elif op == "mul":
        r = x.residue * y.residue
    else:
        raise ValueError(f"unknown op {op!r}")
    return PadicInt(x.p, k, r)


def padic_inv(x: PadicInt) -> PadicInt:
    if not x.is_unit():
        raise NonUnitError(f"{x!r} has valuation {x.valuation}, not invertible")
    return PadicInt(x.p, x.k, pow(x.residue, -1, x.modulus))


def _divide_exact(numerator: int, n: int, p: int, k: int) -> int:
    """``numerator / n mod p**k`` when ``v_p(numerator) >= v_p(n)``.

    ``numerator`` must be known modulo ``p**(k + v_p(n))``.
    """
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    q, rem = divmod(numerator, p ** e)
    if rem:
        raise ArithmeticError("division by p-power is not exact")
    return q * pow(n, -1, p ** k) % p ** k


def _require_odd(p: int):
    if p == 2:
        raise DomainError("log/exp are only implemented for odd p")


def _log_terms(v: int, p: int, k: int) -> int:
    # term n vanishes mod p^k once n*v - v_p(n) >= k; p**(n*v - k) >= n
    # implies that, and n*v - log_p(n) is increasing in n
    n = 1
    while n * v < k or p ** (n * v - k) < n:
        n += 1
    return max(n - 1, 1)


def padic_log(x: PadicInt) -> PadicInt:
    """``log(x)`` for ``x = 1 + t`` with ``v(t) >= 1``, to precision ``k``."""
    p, k = x.p, x.k
    _require_odd(p)
    t = x - 1
    if t.is_zero():
        return PadicInt(p, k, 0)
    v = t.valuation
    if v == 0:
        raise DomainError(f"log needs x = 1 mod {p}, got {x!r}")
    terms = _log_terms(v, p, k)
    guard = 0
    while p ** (guard + 1) <= terms:
        guard += 1
    big = p ** (k + guard)
    total, power = 0, 1
    for n in range(1, terms + 1):
        power = power * t.residue % big
        term = _divide_exact(power, n, p, k)
        total += term if n % 2 else -term
    return PadicInt(p, k, total)


def _exp_terms(v: int, p: int, k: int) -> int:
    # v(z^n/n!) >= n*v - (n-1)/(p-1), strictly increasing in n
    n = 1
    while Fraction(n + 1) * v - Fraction(n, p - 1) < k:
        n += 1
    return n


def padic_exp(z: PadicInt) -> PadicInt:
    """``exp(z)`` for ``v(z) >= 1`` (p odd), to precision ``k``."""
    p, k = z.p, z.k
    _require_odd(p)
    if z.is_zero():
        return PadicInt(p, k, 1)
    v = z.valuation
    if v == 0:
        raise DomainError(f"exp needs v(z) >= 1, got {z!r}")
    terms = _exp_terms(v, p, k)
    big = p ** (k + factorial_valuation(terms, p))
    total, power, fact = 1, 1, 1
    for n in range(1, terms + 1):
        power = power * z.residue % big
        fact *= n
        total += _divide_exact(power, fact, p, k)
    return PadicInt(p, k, total)


@dataclass(frozen=True)
class PadicSeries:
    """Power series ``sum coefficients[n] * X**n`` over ``Z_p`` at precision k.

    For ``n >= len(coefficients)`` the coefficients are guaranteed to have
    valuation at least ``tail_slope * n + tail_intercept``.  ``tail_slope`` of
    None means every later coefficient is exactly zero (a polynomial).
    """

    p: int
    k: int
    coefficients: tuple[PadicInt, ...]
    tail_slope: Fraction | None = None
    tail_intercept: Fraction = field(default=Fraction(0))

    def tail_bound(self, n: int) -> Fraction | None:
        if self.tail_slope is None:
            return None
        return self.tail_slope * n + self.tail_intercept

    def tail_negligible(self) -> bool:
        """True when every omitted term vanishes modulo ``p**k``."""
        b = self.tail_bound(len(self.coefficients))
        return b is None or (self.tail_slope > 0 and b >= self.k)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, n):
        return self.coefficients[n]

    @classmethod
    def polynomial(cls, p: int, k: int, coeffs: Sequence[int]) -> PadicSeries:
        return cls(p, k, tuple(PadicInt(p, k, c) for c in coeffs))


def interpolation_series(b: PadicInt, terms: int | None = None) -> PadicSeries:
    """Series Phi_b with ``Phi_b(r) = (1 + b)**r`` for every integer r.

    Coefficients are ``log(1 + b)**n / n!``.  ``terms`` defaults to the
    smallest count after which the tail vanishes modulo ``p**k``.
    """
    p, k = b.p, b.k
    _require_odd(p)
    if not b.is_zero() and b.valuation == 0:
        raise DomainError(f"interpolation series needs v(b) >= 1, got {b!r}")
    ell = padic_log(b + 1)
    v = ell.valuation if not ell.is_zero() else k
    slope = v - Fraction(1, p - 1)
    intercept = Fraction(1, p - 1)
    if terms is None:
        terms = _exp_terms(v, p, k) + 1
    coeffs = []
    fact = 1
    for n in range(terms):
        if n:
            fact *= n
        if ell.is_zero() and n:
            coeffs.append(PadicInt(p, k, 0))
            continue
        e = factorial_valuation(n, p)
        num = pow(ell.residue, n, p ** (k + e))
        coeffs.append(PadicInt(p, k, _divide_exact(num, fact, p, k)))
    return PadicSeries(p, k, tuple(coeffs), slope, intercept)


def series_eval(s: PadicSeries, x) -> PadicInt:
    """Evaluate ``s`` at a p-adic integer ``x`` (int, Fraction or PadicInt)."""
    if not isinstance(x, PadicInt):
        x = from_rational(x, s.p, s.k)
    elif x.p != s.p:
        raise PrimeMismatch(f"primes differ: {s.p} vs {x.p}")
    if not s.tail_negligible():
        raise DomainError("series truncated before its tail drops below precision")
    k = min(s.k, x.k)
    m = s.p ** k
    total = 0
    # Horner from the top
    for c in reversed(s.coefficients):
        total = (total * x.residue + c.residue) % m
    return PadicInt(s.p, k, total)
