"""Strassman's bound on the number of zeros of a p-adic power series.

If the coefficients ``g_n`` of a series tend to zero and are not all zero,
the number of zeros in ``Z_p`` is at most the largest index ``N`` whose
coefficient has the minimal valuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InconclusiveError, InconsistentCertificate
from .padic import PadicSeries

INF = math.inf


@dataclass(frozen=True)
class ValuationProfile:
    """Coefficient valuations of a series.

    ``valuations[n]`` is ``v(g_n)``; ``math.inf`` marks a coefficient known to
    be exactly zero.  When ``precision`` is set, any value ``>= precision`` is
    only a lower bound (the residue vanished at working precision).  For
    ``n >= len(valuations)``, ``v(g_n) >= tail_slope * n + tail_intercept``;
    ``tail_slope=None`` means all later coefficients are exactly zero.
    """

    valuations: tuple
    precision: int | None = None
    tail_slope: Fraction | None = None
    tail_intercept: Fraction = Fraction(0)

    def __init__(self, valuations: Iterable, precision=None, tail_slope=None, tail_intercept=0):
        object.__setattr__(self, "valuations", tuple(valuations))
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "tail_slope", None if tail_slope is None else Fraction(tail_slope))
        object.__setattr__(self, "tail_intercept", Fraction(tail_intercept))

    def is_lower_bound(self, n: int) -> bool:
        v = self.valuations[n]
        return v != INF and self.precision is not None and v >= self.precision

    def tail_bound(self, n: int) -> Fraction | None:
        if self.tail_slope is None:
            return None
        return self.tail_slope * n + self.tail_intercept

    @classmethod
    def from_series(cls, s: PadicSeries, exact_zeros: Sequence[int] = ()) -> ValuationProfile:
        """Profile of a truncated series; ``exact_zeros`` are indices whose
        coefficient is known to vanish exactly, not merely mod ``p**k``."""
        vals = [INF if n in exact_zeros else c.valuation for n, c in enumerate(s.coefficients)]
        return cls(vals, s.k, s.tail_slope, s.tail_intercept)

    def to_json(self) -> dict:
        return {
            "valuations": ["inf" if v == INF else v for v in self.valuations],
            "precision": self.precision,
            "tail": None if self.tail_slope is None
            else {"slope": str(self.tail_slope), "intercept": str(self.tail_intercept)},
        }


def strassman_bound(prof: ValuationProfile) -> int:
    """Largest index attaining the minimal coefficient valuation.

    Raises :class:`InconclusiveError` when the working precision cannot pin
    that index down, and ``ValueError`` when the hypotheses fail (all
    coefficients zero, or a tail that does not tend to zero).
    """
    if prof.tail_slope is not None and prof.tail_slope <= 0:
        raise ValueError("tail bound must increase: coefficients have to tend to 0")
    exact = [
        (n, v) for n, v in enumerate(prof.valuations)
        if v != INF and not prof.is_lower_bound(n)
    ]
    if not exact:
        if prof.tail_slope is None and all(v == INF for v in prof.valuations):
            raise ValueError("all coefficients are zero")
        raise InconclusiveError(
            "no coefficient has a valuation below working precision", check="strassman_bound"
        )
    m = min(v for _, v in exact)
    bound = max(n for n, v in exact if v == m)
    if prof.precision is not None and any(prof.is_lower_bound(n) for n in range(len(prof.valuations))):
        if prof.precision <= m:
            raise InconclusiveError(
                f"coefficients vanishing mod p^{prof.precision} may have valuation <= {m}",
                check="strassman_bound",
            )
    tail = prof.tail_bound(len(prof.valuations))
    if tail is not None and tail <= m:
        raise InconclusiveError(
            f"tail bound {tail} at index {len(prof.valuations)} does not exceed {m}",
            check="strassman_bound",
        )
    return bound


def count_exact_roots(prof: ValuationProfile, known_roots: int) -> str:
    """``"exact"`` if the known roots exhaust the bound, else ``"bounded-only"``."""
    bound = strassman_bound(prof)
    if known_roots > bound:
        raise InconsistentCertificate(
            f"{known_roots} known roots exceed the Strassman bound {bound}"
        )
    return "exact" if known_roots == bound else "bounded-only"
