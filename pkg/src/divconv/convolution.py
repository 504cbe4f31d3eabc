"""Convolution sums of sigma over al + bm = n: brute-force oracle, the
squared Eisenstein difference target series, closed-formula derivation by
solving in a weight-4 basis, and exact range verification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import divisors, rational_to_str, sigma_at, sigma_table
from .modforms import Basis, eisenstein_L, express_in_basis
from .qseries import QSeries


class TruncationExceeded(IndexError):
    """Formula evaluated beyond the truncation of a supplied cusp series."""


def _sigma1(n_max: int) -> tuple[int, ...]:
    # round the table size up so repeated calls share one cached sieve
    size = max(1024, 1 << (n_max - 1).bit_length())
    return sigma_table(1, size)


def brute_force_W(alpha: int, beta: int, n: int) -> int:
    """Sum of sigma(l) sigma(m) over l, m >= 0 with alpha*l + beta*m = n.

    Terms with l = 0 or m = 0 vanish since sigma(0) = 0. Accepts any
    positive alpha, beta (no coprimality requirement)."""
    if alpha < 1 or beta < 1 or n < 1:
        raise ValueError("brute_force_W requires alpha, beta, n >= 1")
    table = _sigma1(n)
    total = 0
    for l in range(1, n // alpha + 1):
        rest = n - alpha * l
        if rest % beta == 0 and rest:
            total += table[l] * table[rest // beta]
    return total


def target_series(alpha: int, beta: int, truncation: int) -> QSeries:
    """(alpha L(q^alpha) - beta L(q^beta))^2, constant term (alpha-beta)^2."""
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha and beta must be coprime, got ({alpha}, {beta})")
    l = eisenstein_L(truncation)

    def at(t: int) -> QSeries:
        s = l.substitute(t, cap=truncation)
        if s.truncation < truncation:
            s = QSeries(s.coeffs, truncation)
        return s.truncate(truncation)

    diff = at(alpha).scale(alpha) - at(beta).scale(beta)
    return diff * diff


def target_coefficient_via_sums(alpha: int, beta: int, n: int) -> int:
    """The q^n coefficient of target_series computed without any series:
    240 a^2 sigma3(n/a) + 240 b^2 sigma3(n/b) + 48 a (b - 6n) sigma(n/a)
    + 48 b (a - 6n) sigma(n/b) - 1152 a b W(a,b,n)."""
    return (
        240 * alpha**2 * sigma_at(3, n, alpha)
        + 240 * beta**2 * sigma_at(3, n, beta)
        + 48 * alpha * (beta - 6 * n) * sigma_at(1, n, alpha)
        + 48 * beta * (alpha - 6 * n) * sigma_at(1, n, beta)
        - 1152 * alpha * beta * brute_force_W(alpha, beta, n)
    )


@dataclass(frozen=True)
class ConvolutionFormula:
    """Closed form for W(alpha,beta)(n): rational coefficients on
    sigma_3(n/d), (c0 + c1 n) sigma(n/d), and registered cusp series."""

    alpha: int
    beta: int
    level: int
    sigma3_terms: dict[int, Fraction]
    sigma_terms: dict[int, tuple[Fraction, Fraction]]
    cusp_terms: tuple[tuple[str, Fraction], ...]

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "level": self.level,
            "sigma3": {str(d): rational_to_str(c) for d, c in self.sigma3_terms.items()},
            "sigma": {
                str(d): [rational_to_str(c0), rational_to_str(c1)]
                for d, (c0, c1) in self.sigma_terms.items()
            },
            "cusp": [[eid, rational_to_str(c)] for eid, c in self.cusp_terms],
        }


def derive_convolution_formula(alpha: int, beta: int, basis: Basis) -> ConvolutionFormula:
    """Express the target series in the basis and solve for W(alpha,beta)(n).

    A basis coefficient x_t on the Eisenstein element at scale t folds into
    the sigma_3(n/t) term as (240 [t=alpha] alpha^2 + 240 [t=beta] beta^2
    - 240 x_t) / (1152 alpha beta); cusp coefficients pick up -1/(1152
    alpha beta); the sigma terms come straight from the weight-2 algebra.
    """
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha and beta must be coprime, got ({alpha}, {beta})")
    if alpha >= beta:
        raise ValueError(f"derivation requires alpha < beta, got ({alpha}, {beta})")
    level = alpha * beta
    if basis.level != level:
        raise ValueError(f"basis level {basis.level} != alpha*beta = {level}")
    target = target_series(alpha, beta, basis.truncation)
    x = express_in_basis(target, basis)
    denom = 1152 * alpha * beta
    sigma3_terms: dict[int, Fraction] = {}
    cusp_terms: list[tuple[str, Fraction]] = []
    for coeff, element in zip(x, basis.elements):
        if element.kind == "eisenstein":
            t = element.t
            direct = 240 * (alpha**2 if t == alpha else 0) + 240 * (
                beta**2 if t == beta else 0
            )
            sigma3_terms[t] = Fraction(direct - 240 * coeff, denom)
        else:
            cusp_terms.append((element.element_id, Fraction(-coeff, denom)))
    sigma_terms = {
        alpha: (Fraction(48 * alpha * beta, denom), Fraction(-288 * alpha, denom)),
        beta: (Fraction(48 * alpha * beta, denom), Fraction(-288 * beta, denom)),
    }
    return ConvolutionFormula(
        alpha=alpha,
        beta=beta,
        level=level,
        sigma3_terms=sigma3_terms,
        sigma_terms=dict(sorted(sigma_terms.items())),
        cusp_terms=tuple(cusp_terms),
    )


def evaluate_formula(
    formula: ConvolutionFormula, n: int, cusp_series: list[QSeries]
) -> Fraction:
    """Evaluate the closed form at n; cusp_series aligned with cusp_terms."""
    if n < 1:
        raise ValueError("n must be positive")
    if len(cusp_series) != len(formula.cusp_terms):
        raise ValueError("cusp_series must align with the formula's cusp terms")
    for series in cusp_series:
        if n > series.truncation:
            raise TruncationExceeded(
                f"n = {n} exceeds cusp series truncation {series.truncation}"
            )
    total = Fraction(0)
    for d, c in formula.sigma3_terms.items():
        total += c * sigma_at(3, n, d)
    for d, (c0, c1) in formula.sigma_terms.items():
        total += (c0 + c1 * n) * sigma_at(1, n, d)
    for (eid, c), series in zip(formula.cusp_terms, cusp_series):
        total += c * series.coeffs[n]
    return total


@dataclass(frozen=True)
class VerificationReport:
    alpha: int
    beta: int
    checked: int
    mismatches: tuple[tuple[int, str, int], ...]  # (n, formula value, oracle value)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "checked": self.checked,
            "mismatches": [list(m) for m in self.mismatches],
        }


def verify_formula(
    formula: ConvolutionFormula, cusp_series: list[QSeries], n_max: int
) -> VerificationReport:
    """Check formula == brute force (and integrality) for 1 <= n <= n_max.

    Mismatches are collected in the report, never raised."""
    mismatches: list[tuple[int, str, int]] = []
    for n in range(1, n_max + 1):
        value = evaluate_formula(formula, n, cusp_series)
        oracle = brute_force_W(formula.alpha, formula.beta, n)
        if value != oracle or value.denominator != 1 or value < 0:
            mismatches.append((n, rational_to_str(value), oracle))
    return VerificationReport(
        alpha=formula.alpha,
        beta=formula.beta,
        checked=n_max,
        mismatches=tuple(mismatches),
    )
