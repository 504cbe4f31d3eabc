"""Dedekind eta quotients: expansion, admissibility checks, exhaustive search.

An eta quotient at level N is a product over divisors d | N of powers of
eta(d z). The admissibility checker evaluates the classical congruence,
square, weight and cusp-order conditions under which such a product is a
modular (resp. cusp) form on Gamma_0(N).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .arith import divisors, prime_factorization
from .qseries import QSeries


class FractionalLeadingExponent(ValueError):
    """The q-prefactor exponent sum is not divisible by 24."""


class NegativeLeadingExponent(ValueError):
    """The leading exponent is negative; no power-series expansion exists."""


@dataclass(frozen=True)
class EtaQuotient:
    """Level N and one integer exponent per divisor of N (zeros omitted)."""

    level: int
    exponents: tuple[tuple[int, int], ...]  # (divisor, exponent), sorted

    @classmethod
    def from_dict(cls, level: int, exponents) -> "EtaQuotient":
        if level < 1:
            raise ValueError(f"level must be positive, got {level}")
        cleaned = {}
        for d, r in dict(exponents).items():
            d, r = int(d), int(r)
            if level % d:
                raise ValueError(f"divisor {d} does not divide level {level}")
            if r:
                cleaned[d] = r
        if not cleaned:
            raise ValueError("at least one exponent must be nonzero")
        return cls(level, tuple(sorted(cleaned.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def exponent(self, d: int) -> int:
        return dict(self.exponents).get(d, 0)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.exponents), 2)

    @property
    def leading_exponent_numerator(self) -> int:
        """Sum of d * r_d; the expansion starts at q^(this / 24)."""
        return sum(d * r for d, r in self.exponents)

    def to_json_dict(self) -> dict:
        return {"level": self.level, "exponents": {str(d): r for d, r in self.exponents}}

    @classmethod
    def from_json_dict(cls, data: dict) -> "EtaQuotient":
        return cls.from_dict(data["level"], data["exponents"])


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the eta-quotient admissibility conditions at one level.

    orders maps each divisor d of the level to the cusp-order sum
    sum_over_delta gcd(delta, d)^2 * r_delta / delta.
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    weight: Fraction
    cond_iv: bool
    orders: dict[int, Fraction]
    cond_v: bool
    cond_v_prime: bool

    @property
    def is_modular_form(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv and self.cond_v

    @property
    def is_cusp_form(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv and self.cond_v_prime

    def to_json_dict(self) -> dict:
        return {
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "weight": f"{self.weight.numerator}/{self.weight.denominator}",
            "cond_iv": self.cond_iv,
            "orders": {str(d): f"{o.numerator}/{o.denominator}" for d, o in self.orders.items()},
            "cond_v": self.cond_v,
            "cond_v_prime": self.cond_v_prime,
        }


@lru_cache(maxsize=64)
def euler_F(truncation: int) -> QSeries:
    """Product of (1 - q^n) for n >= 1, via the pentagonal number theorem."""
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    coeffs = [0] * (truncation + 1)
    coeffs[0] = 1
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 > truncation:
            break
        sign = -1 if k % 2 else 1
        coeffs[e1] = sign
        e2 = k * (3 * k + 1) // 2
        if e2 <= truncation:
            coeffs[e2] = sign
        k += 1
    return QSeries(coeffs, truncation)


def _squarefree_part_is_one(factor_exponents: dict[int, int]) -> bool:
    return all(e % 2 == 0 for e in factor_exponents.values())


def check_admissibility(f: EtaQuotient) -> AdmissibilityReport:
    """Evaluate all admissibility conditions; nothing raises, the report tells."""
    n = f.level
    exps = f.as_dict()
    sum_d_r = sum(d * r for d, r in exps.items())
    sum_nd_r = sum((n // d) * r for d, r in exps.items())
    # condition (iii): the product of d^r_d is a rational square iff its
    # squarefree part is 1; work on prime exponents, never on huge powers
    prime_exps: dict[int, int] = {}
    for d, r in exps.items():
        for p, e in prime_factorization(d).items():
            prime_exps[p] = prime_exps.get(p, 0) + e * r
    weight = f.weight
    orders: dict[int, Fraction] = {}
    for d in divisors(n):
        orders[d] = sum(
            (Fraction(gcd(delta, d) ** 2 * r, delta) for delta, r in exps.items()),
            Fraction(0),
        )
    return AdmissibilityReport(
        cond_i=sum_d_r % 24 == 0,
        cond_ii=sum_nd_r % 24 == 0,
        cond_iii=_squarefree_part_is_one(prime_exps),
        weight=weight,
        cond_iv=weight.denominator == 1 and weight.numerator % 2 == 0,
        orders=orders,
        cond_v=all(o >= 0 for o in orders.values()),
        cond_v_prime=all(o > 0 for o in orders.values()),
    )


def expand_eta_quotient(f: EtaQuotient, truncation: int) -> QSeries:
    """q-expansion of the quotient up to the given truncation.

    Requires the q-prefactor exponent (sum of d*r_d)/24 to be a
    non-negative integer, which holds for every cusp candidate.
    """
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    num = f.leading_exponent_numerator
    if num % 24:
        raise FractionalLeadingExponent(
            f"sum of d*r_d = {num} is not divisible by 24; no integral q-expansion"
        )
    e0 = num // 24
    if e0 < 0:
        raise NegativeLeadingExponent(f"leading exponent {e0} is negative")
    result = QSeries.one(truncation)
    for d, r in f.exponents:
        base = euler_F((truncation + d - 1) // d).substitute(d, cap=truncation)
        if base.truncation < truncation:
            base = QSeries(base.coeffs, truncation)
        result = result * (base**r)
    return result.shift(e0)


def search_eta_quotients(
    level: int, weight: int, bound: int, strict: bool = False
) -> list[EtaQuotient]:
    """All admissible cusp candidates at the level and weight, exponents in
    [-bound, bound], in lexicographic exponent order over sorted divisors.

    The last exponent is determined by the weight constraint, so the scan
    is over a box of dimension (number of divisors - 1).

    By default a candidate qualifies when it is an admissible modular form
    whose expansion vanishes at infinity (positive leading exponent). With
    strict=True the all-cusp-orders-strictly-positive condition is required
    instead; that stricter filter provably misses two of the known level-22
    basis elements, whose order sum at d = 1 is exactly 0.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if weight < 2 or weight % 2:
        raise ValueError("weight must be a positive even integer")
    divs = divisors(level)
    target_sum = 2 * weight
    found: list[EtaQuotient] = []
    for head in product(range(-bound, bound + 1), repeat=len(divs) - 1):
        r_last = target_sum - sum(head)
        if not -bound <= r_last <= bound:
            continue
        exps = dict(zip(divs, head + (r_last,)))
        if not any(exps.values()):
            continue
        candidate = EtaQuotient.from_dict(level, exps)
        report = check_admissibility(candidate)
        if strict:
            ok = report.is_cusp_form
        else:
            ok = report.is_modular_form and candidate.leading_exponent_numerator > 0
        if ok:
            found.append(candidate)
    return found
