"""P31-sets (triple products plus one are cubes) and cubic-triangular numbers."""

from __future__ import annotations

from array import array
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable

from .certificate import Check, envelope, make_check
from .errors import InconsistentCertificate
from .integer_kernel import icbrt, is_perfect_cube
from .skolem import ThueCertificate

DEFAULT_BOUND = 10 ** 6


@dataclass(frozen=True)
class P31Set:
    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = [int(x) for x in elements]
        if len(set(elems)) != len(elems):
            raise ValueError(f"elements must be distinct: {elems}")
        if any(x < 1 for x in elems):
            raise ValueError(f"elements must be positive: {elems}")
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, y):
        return y in self.elements

    def union(self, y: int) -> P31Set:
        return P31Set(self.elements + (y,))

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


def validate_p31(s: P31Set) -> tuple[bool, tuple[int, int, int] | None]:
    """Check every 3-subset; returns (valid, first failing triple)."""
    if len(s) < 3:
        raise ValueError("a P31-set needs at least 3 elements")
    for t in combinations(s.elements, 3):
        if not is_perfect_cube(t[0] * t[1] * t[2] + 1):
            return False, t
    return True, None


def family_claim1(a: int) -> P31Set:
    """{a-1, a+1, a^4+a^2+1}; the product plus one is (a^2)^3."""
    if a < 2:
        raise ValueError("family_claim1 needs a >= 2")
    return P31Set((a - 1, a + 1, a ** 4 + a ** 2 + 1))


def family_claim2(a: int, b: int) -> P31Set:
    """{a, b, a^2 b^2 + 3ab + 3}; the product plus one is (ab+1)^3."""
    if not 1 <= a < b:
        raise ValueError("family_claim2 needs 1 <= a < b")
    return P31Set((a, b, a * a * b * b + 3 * a * b + 3))


def check_extension(s: P31Set, y: int) -> tuple[bool, tuple[int, int, int] | None]:
    """Test only the triples of ``s | {y}`` that contain ``y``."""
    if y in s:
        raise ValueError(f"{y} is already in {s}")
    if y < 1:
        raise ValueError("candidate must be positive")
    for xi, xj in combinations(s.elements, 2):
        if not is_perfect_cube(xi * xj * y + 1):
            return False, (xi, xj, y)
    return True, None


@dataclass
class ExtensionReport:
    """Outcome of scanning candidates ``y <= bound`` against ``base``.

    ``failed_pair[y]`` is the index (into ``pairs``) of the first pair
    {x_i, x_j} with x_i x_j y + 1 not a cube, or -1 for members of ``base``
    and for survivors.
    """

    base: P31Set
    bound: int
    survivors: list[int]
    pairs: list[tuple[int, int]]
    failed_pair: array
    tested: int = 0
    proof: ProofRecord | None = None

    def first_failure(self, y: int) -> tuple[int, int, int] | None:
        i = self.failed_pair[y]
        if i < 0:
            return None
        return (*self.pairs[i], y)

    def failing_pair_counts(self) -> dict[tuple[int, int], int]:
        counts = Counter(i for i in self.failed_pair if i >= 0)
        return {self.pairs[i]: c for i, c in sorted(counts.items())}

    def to_json(self) -> dict:
        return envelope("extension_search", {
            "base": list(self.base.elements),
            "bound": self.bound,
            "tested": self.tested,
            "survivors": self.survivors,
            "failing_pair_counts": [
                {"pair": list(k), "count": v} for k, v in self.failing_pair_counts().items()
            ],
            "proof": self.proof.to_json() if self.proof else None,
        })


def search_extensions(s: P31Set, bound: int = DEFAULT_BOUND) -> ExtensionReport:
    """Scan y = 1..bound (y not in s) for extensions of ``s``."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    pairs = list(combinations(s.elements, 2))
    products = [xi * xj for xi, xj in pairs]
    failed = array("i", [-1]) * (bound + 1)
    survivors, tested = [], 0
    for y in range(1, bound + 1):
        if y in s:
            continue
        tested += 1
        for i, prod in enumerate(products):
            if not icbrt(prod * y + 1)[1]:
                failed[y] = i
                break
        else:
            survivors.append(y)
    return ExtensionReport(s, bound, survivors, pairs, failed, tested)


@dataclass
class ProofRecord:
    statement: str
    steps: list[str]
    checks: list[Check]
    conclusion: str

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return envelope("proof", {
            "statement": self.statement,
            "steps": self.steps,
            "checks": [c.to_json() for c in self.checks],
            "conclusion": self.conclusion,
            "status": "pass" if self.passed else "fail",
        })


def _require_cert(cert: ThueCertificate | None, norm: int):
    if cert is None:
        raise ValueError(f"missing certificate for 2x^3 - y^3 = {norm}")
    if cert.norm != norm:
        raise InconsistentCertificate(f"expected a certificate for norm {norm}, got {cert.norm}")
    if not cert.passed:
        raise InconsistentCertificate("certificate has failing checks")


def prove_nonextendible(thue: ThueCertificate) -> ProofRecord:
    """{1, 2, 13} has no extension y (any positive y outside the set)."""
    _require_cert(thue, 1)
    checks = []
    # triples containing d: {1,2,d}, {1,13,d}, {2,13,d}
    system = [(2, 1), (13, 1), (26, 1)]
    # 2*(13d + 1) - (26d + 1) = 1 as polynomials in d
    combo = (2 * system[1][0] - system[2][0], 2 * system[1][1] - system[2][1])
    checks.append(make_check("linear_combination", list(combo), [0, 1],
                             {"v^3": "13d + 1", "w^3": "26d + 1"}))
    checks.append(make_check("identity_at_d=7", 2 * (13 * 7 + 1) - (26 * 7 + 1), 1))
    positive = sorted(thue.positive_solutions)
    checks.append(make_check("thue_positive_solutions", positive, [(1, 1)]))
    d_values = [(v ** 3 - 1) // 13 for v, _ in positive if (v ** 3 - 1) % 13 == 0]
    checks.append(make_check("implied_d", d_values, [0]))
    steps = [
        "a new element d gives 2d + 1 = u^3, 13d + 1 = v^3, 26d + 1 = w^3",
        "v, w > 0 since 13d + 1 >= 14 and 26d + 1 >= 27",
        "2(13d + 1) - (26d + 1) = 1, so 2v^3 - w^3 = 1",
        "the only positive solution is (v, w) = (1, 1)",
        "then 13d + 1 = 1 forces d = 0, contradicting d >= 1",
    ]
    return ProofRecord("{1, 2, 13} is not extendible", steps, checks,
                       "no positive d extends {1, 2, 13}")


def triangular(n: int) -> int:
    if n < 0:
        raise ValueError("triangular needs n >= 0")
    return n * (n + 1) // 2


def search_cubic_triangular(bound: int = DEFAULT_BOUND) -> list[int]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [n for n in range(1, bound + 1) if icbrt(n * (n + 1) // 2)[1]]


def reduce_cubic_triangular(thue_plus: ThueCertificate | None, thue_minus: ThueCertificate | None) -> ProofRecord:
    """n(n+1)/2 = m^3 with n >= 1 forces n = 1.

    gcd(n, n+1) = 1, so the two coprime factors of n(n+1)/2 are cubes:
    odd n gives n = y^3, n + 1 = 2x^3; even n gives n = 2x^3, n + 1 = y^3.
    """
    _require_cert(thue_plus, 1)
    _require_cert(thue_minus, -1)
    checks = []
    odd = []
    for x, y in sorted(thue_plus.integer_solutions):
        n = y ** 3
        if x > 0 and y > 0 and n >= 1:
            odd.append(n)
    checks.append(make_check("odd_case_values", odd, [1],
                             {"equation": "2x^3 - y^3 = 1", "n": "y^3"}))
    even_all = sorted(2 * x ** 3 for x, y in thue_minus.integer_solutions)
    even = [n for n in even_all if n >= 1]
    checks.append(make_check("even_case_values", even, [],
                             {"equation": "2x^3 - y^3 = -1", "n": "2x^3", "all_integer_n": even_all}))
    checks.append(make_check("T_1_is_cube", icbrt(triangular(1)), (1, True)))
    checks.append(make_check("coprime_consecutive", all(gcd(n, n + 1) == 1 for n in range(1, 10001)), True,
                             {"range": [1, 10000]}))
    steps = [
        "gcd(n, n + 1) = 1, so the coprime factors of n(n + 1)/2 are both cubes",
        "n odd: n = y^3, n + 1 = 2x^3, so 2x^3 - y^3 = 1 with x, y > 0; only (1, 1): n = 1",
        "n even: n = 2x^3, n + 1 = y^3, so 2x^3 - y^3 = -1; integer solutions (0, 1), (-1, -1) give n = 0, -2",
        "no even n >= 1 remains",
    ]
    return ProofRecord("n = 1 is the only cubic-triangular index", steps, checks,
                       "unique n = 1 (T_1 = 1 = 1^3)")
