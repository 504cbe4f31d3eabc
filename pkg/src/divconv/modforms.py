"""Weight-4 modular form spaces on Gamma_0(N): Eisenstein series, dimension
formulas, basis assembly, and exact expression of a series in a basis.

All linear algebra is exact Gaussian elimination over the rationals with
first-nonzero pivoting; there is no floating point and therefore no
stability concern, only reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, euler_phi, prime_factorization, sigma_table
from .eta import EtaQuotient, check_admissibility, expand_eta_quotient
from .qseries import QSeries


class WrongCount(ValueError):
    """Cusp quotient list does not have dim S4(Gamma_0(N)) elements."""


class NotIndependent(ValueError):
    """Proposed basis elements are linearly dependent."""


class SingularSystem(ArithmeticError):
    """The solve rows stay rank-deficient all the way to the truncation."""


class Inconsistent(ArithmeticError):
    """Solution fails verification at some coefficient: target not in span."""


def eisenstein_L(truncation: int) -> QSeries:
    """E2-normalized series 1 - 24 sum sigma(n) q^n."""
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    table = sigma_table(1, truncation)
    return QSeries([1] + [-24 * table[n] for n in range(1, truncation + 1)], truncation)


def eisenstein_M(truncation: int) -> QSeries:
    """E4-normalized series 1 + 240 sum sigma_3(n) q^n."""
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    table = sigma_table(3, truncation)
    return QSeries([1] + [240 * table[n] for n in range(1, truncation + 1)], truncation)


# -- Gamma_0(N) invariants and weight-4 dimensions -------------------------


def gamma0_index(n: int) -> int:
    """Index of Gamma_0(N) in SL_2(Z): N * prod (1 + 1/p)."""
    mu = n
    for p in prime_factorization(n):
        mu += mu // p
    return mu


def elliptic_points_order2(n: int) -> int:
    if n % 4 == 0:
        return 0
    count = 1
    for p in prime_factorization(n):
        if p == 2:
            continue
        if p % 4 == 1:
            count *= 2
        elif p % 4 == 3:
            return 0
    return count


def elliptic_points_order3(n: int) -> int:
    if n % 9 == 0:
        return 0
    count = 1
    for p in prime_factorization(n):
        if p == 3:
            continue
        if p % 3 == 1:
            count *= 2
        elif p % 3 == 2:
            return 0
    return count


def cusp_count(n: int) -> int:
    from math import gcd

    return sum(euler_phi(gcd(d, n // d)) for d in divisors(n))


def genus(n: int) -> int:
    g = Fraction(gamma0_index(n), 12) - Fraction(elliptic_points_order2(n), 4) \
        - Fraction(elliptic_points_order3(n), 3) - Fraction(cusp_count(n), 2) + 1
    assert g.denominator == 1
    return int(g)


def dim_M4(n: int) -> int:
    """dim of weight-4 modular forms on Gamma_0(N), standard valence formula."""
    return (
        3 * (genus(n) - 1)
        + elliptic_points_order2(n)
        + elliptic_points_order3(n)
        + 2 * cusp_count(n)
    )


def dim_E4(n: int) -> int:
    return cusp_count(n)


def dim_S4(n: int) -> int:
    return dim_M4(n) - dim_E4(n)


# -- the registered cusp families for levels 14, 22, 26 --------------------
#
# Exponent vectors of the compiled-in weight-4 cusp bases, keyed by level,
# in registered order. The level-26 fifth entry is eta(z)eta(2z)
# eta^3(13z)eta^3(26z); the exponent 3 on the last factor is forced by the
# weight (the only choice making the exponent sum 8 and all admissibility
# conditions hold).
REGISTERED_CUSP_EXPONENTS: dict[int, tuple[dict[int, int], ...]] = {
    14: (
        {1: 5, 2: -1, 7: 5, 14: -1},
        {1: 2, 2: 2, 7: 2, 14: 2},
        {1: -1, 2: 5, 7: -1, 14: 5},
        {1: 6, 2: -2, 7: -2, 14: 6},
    ),
    22: (
        {1: 6, 2: -2, 11: 6, 22: -2},
        {1: 4, 11: 4},
        {1: 2, 2: 2, 11: 2, 22: 2},
        {2: 4, 22: 4},
        {1: -2, 2: 6, 11: -2, 22: 6},
        {1: -1, 2: 1, 11: 3, 22: 5},
        {1: -5, 2: 9, 11: 7, 22: -3},
    ),
    26: (
        {1: 1, 2: 5, 13: 3, 26: -1},
        {1: 3, 2: 3, 13: 1, 26: 1},
        {1: 1, 2: 3, 13: 3, 26: 1},
        {1: 3, 2: 1, 13: 1, 26: 3},
        {1: 1, 2: 1, 13: 3, 26: 3},
        {1: 3, 2: -1, 13: 1, 26: 5},
        {1: -1, 2: 3, 13: 5, 26: 1},
        {1: -1, 2: 5, 13: 5, 26: -1},
        {1: 7, 2: -3, 13: -3, 26: 7},
    ),
}


def registered_cusp_quotients(level: int) -> list[EtaQuotient]:
    try:
        family = REGISTERED_CUSP_EXPONENTS[level]
    except KeyError:
        raise KeyError(f"no registered cusp basis for level {level}") from None
    return [EtaQuotient.from_dict(level, exps) for exps in family]


# -- basis types -----------------------------------------------------------


@dataclass(frozen=True)
class BasisElement:
    """One basis element: an Eisenstein series M(q^t) or a cusp quotient."""

    kind: str  # "eisenstein" | "cusp"
    element_id: str
    series: QSeries
    t: int | None = None
    eta: EtaQuotient | None = None


@dataclass(frozen=True)
class Basis:
    level: int
    elements: tuple[BasisElement, ...]
    truncation: int

    @property
    def eisenstein_elements(self) -> list[BasisElement]:
        return [e for e in self.elements if e.kind == "eisenstein"]

    @property
    def cusp_elements(self) -> list[BasisElement]:
        return [e for e in self.elements if e.kind == "cusp"]

    @property
    def cusp_series(self) -> list[QSeries]:
        return [e.series for e in self.cusp_elements]


def rank(series_list, max_index: int) -> int:
    """Rank over Q of the matrix rows = series coefficients q^0..q^max_index."""
    rows = [list(s.coeffs[: max_index + 1]) for s in series_list]
    r = 0
    for col in range(max_index + 1):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1, 1) / rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def build_basis(level: int, cusp_quotients, truncation: int) -> Basis:
    """Assemble Eisenstein block + cusp block and certify independence.

    Cusp quotients must be admissible modular forms with vanishing
    constant term (positive leading exponent); two of the registered
    level-22 quotients have cusp-order sum exactly 0 at d = 1, so the
    strict all-orders-positive condition is deliberately not required
    here.
    """
    cusp_quotients = list(cusp_quotients)
    expected = dim_S4(level)
    if len(cusp_quotients) != expected:
        raise WrongCount(
            f"level {level} needs {expected} cusp quotients, got {len(cusp_quotients)}"
        )
    m = eisenstein_M(truncation)
    elements: list[BasisElement] = []
    for t in divisors(level):
        series = m.substitute(t, cap=truncation)
        if series.truncation < truncation:
            series = QSeries(series.coeffs, truncation)
        else:
            series = series.truncate(truncation)
        elements.append(BasisElement("eisenstein", f"E{t}", series, t=t))
    for i, quotient in enumerate(cusp_quotients, start=1):
        if quotient.level != level:
            raise ValueError(f"cusp quotient level {quotient.level} != {level}")
        report = check_admissibility(quotient)
        if not (report.is_modular_form and report.weight == 4):
            raise ValueError(f"cusp quotient {quotient} is not a weight-4 modular form")
        series = expand_eta_quotient(quotient, truncation)
        if series.coeffs[0] != 0:
            raise ValueError(f"cusp quotient {quotient} has nonzero constant term")
        elements.append(
            BasisElement("cusp", f"S{level}.{i}", series, eta=quotient)
        )
    if rank([e.series for e in elements], truncation) != len(elements):
        raise NotIndependent(f"level {level} basis elements are linearly dependent")
    return Basis(level, tuple(elements), truncation)


def standard_basis(level: int, truncation: int) -> Basis:
    """Basis from the registered cusp family (levels 14, 22, 26)."""
    return build_basis(level, registered_cusp_quotients(level), truncation)


def select_independent(quotients, level: int, truncation: int) -> list[EtaQuotient]:
    """Greedy prefix of quotients whose expansions are linearly independent,
    stopping at dim S4(level). Used when a search returns an over-complete
    candidate list."""
    needed = dim_S4(level)
    chosen: list[EtaQuotient] = []
    chosen_series: list[QSeries] = []
    for quotient in quotients:
        if len(chosen) == needed:
            break
        series = expand_eta_quotient(quotient, truncation)
        if rank(chosen_series + [series], truncation) == len(chosen) + 1:
            chosen.append(quotient)
            chosen_series.append(series)
    return chosen


def express_in_basis(target: QSeries, basis: Basis) -> list[Fraction]:
    """The unique rational vector x with target = sum x_i * element_i.

    Solves on coefficient rows 0..(size-1), augmenting with later rows if
    the square system is singular, then verifies the solution on every
    remaining coefficient up to the basis truncation.
    """
    if target.truncation < basis.truncation:
        raise ValueError(
            f"target truncation {target.truncation} < basis truncation {basis.truncation}"
        )
    size = len(basis.elements)
    t = basis.truncation
    columns = [e.series.coeffs for e in basis.elements]
    # greedily collect coefficient rows (starting at index 0) until they
    # form an invertible square system; this realizes "rows 0..size-1,
    # augmented with further rows when singular"
    chosen_rows: list[list] = []
    chosen_rhs: list = []
    echelon: list[tuple[list, int]] = []  # (normalized reduced row, pivot col)
    for n in range(t + 1):
        if len(chosen_rows) == size:
            break
        row = [col[n] for col in columns]
        red = list(row)
        for erow, pcol in echelon:
            if red[pcol]:
                factor = red[pcol]
                red = [a - factor * b for a, b in zip(red, erow)]
        pcol = next((j for j in range(size) if red[j]), None)
        if pcol is None:
            continue
        inv = Fraction(1, 1) / red[pcol]
        echelon.append(([a * inv for a in red], pcol))
        chosen_rows.append(row)
        chosen_rhs.append(target.coeffs[n])
    if len(chosen_rows) < size:
        raise SingularSystem(
            f"only {len(chosen_rows)} independent rows up to truncation {t}, need {size}"
        )
    x = _solve_square(chosen_rows, chosen_rhs)
    # full verification: every coefficient index must agree exactly
    for n in range(t + 1):
        acc = sum(x[j] * columns[j][n] for j in range(size))
        if acc != target.coeffs[n]:
            raise Inconsistent(
                f"expansion fails at q^{n}: got {acc}, target {target.coeffs[n]}"
            )
    return x


def _solve_square(matrix, rhs) -> list[Fraction]:
    """Solve a small invertible square system exactly (first-nonzero pivot)."""
    size = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next(i for i in range(col, size) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1, 1) / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for i in range(size):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [Fraction(aug[i][size]) for i in range(size)]
