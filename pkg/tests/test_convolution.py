from fractions import Fraction

import pytest

from divconv.convolution import (
    TruncationExceeded,
    brute_force_W,
    derive_convolution_formula,
    evaluate_formula,
    target_coefficient_via_sums,
    target_series,
    verify_formula,
)
from divconv.modforms import standard_basis

TRUNC = 80


@pytest.fixture(scope="module")
def basis14():
    return standard_basis(14, TRUNC)


@pytest.fixture(scope="module")
def formula27(basis14):
    return derive_convolution_formula(2, 7, basis14)


def test_brute_force_small_values():
    assert brute_force_W(1, 1, 3) == 6
    assert brute_force_W(2, 7, 9) == 1
    assert brute_force_W(2, 7, 8) == 0


def test_brute_force_symmetry():
    for n in range(1, 60):
        assert brute_force_W(2, 7, n) == brute_force_W(7, 2, n)
        assert brute_force_W(1, 22, n) == brute_force_W(22, 1, n)


def test_brute_force_accepts_non_coprime():
    # 2l + 2m = 4 has the single interior solution l = m = 1
    assert brute_force_W(2, 2, 4) == 1


def test_target_series_constant_terms():
    assert target_series(2, 7, 20).coefficient(0) == 25
    assert target_series(1, 26, 30).coefficient(0) == 625
    assert target_series(1, 1, 10).is_zero()


def test_target_series_rejects_non_coprime():
    with pytest.raises(ValueError):
        target_series(2, 4, 10)


def test_eisenstein_identity_matches_series():
    # basis-free consistency: series coefficient vs the sigma/brute-force form
    for alpha, beta in ((2, 7), (1, 22)):
        series = target_series(alpha, beta, 120)
        for n in range(1, 121):
            assert series.coefficient(n) == target_coefficient_via_sums(alpha, beta, n)


def test_derive_requires_ordered_coprime_pair(basis14):
    with pytest.raises(ValueError):
        derive_convolution_formula(7, 2, basis14)
    with pytest.raises(ValueError):
        derive_convolution_formula(2, 11, basis14)  # level mismatch


def test_derived_formula_27_matches_known_coefficients(formula27):
    assert formula27.sigma3_terms == {
        1: Fraction(1, 600),
        2: Fraction(1, 150),
        7: Fraction(49, 600),
        14: Fraction(49, 150),
    }
    assert formula27.sigma_terms == {
        2: (Fraction(1, 24), Fraction(-1, 28)),
        7: (Fraction(1, 24), Fraction(-1, 8)),
    }
    assert [c for _, c in formula27.cusp_terms] == [
        Fraction(-1, 600),
        Fraction(-1, 4200),
        Fraction(-1, 75),
        Fraction(-1, 42),
    ]


def test_evaluate_formula_against_oracle(formula27, basis14):
    cusp = basis14.cusp_series
    assert evaluate_formula(formula27, 9, cusp) == 1
    assert evaluate_formula(formula27, 8, cusp) == 0
    assert evaluate_formula(formula27, 1, cusp) == 0
    for n in range(1, TRUNC + 1):
        assert evaluate_formula(formula27, n, cusp) == brute_force_W(2, 7, n)


def test_evaluate_formula_truncation_guard(formula27, basis14):
    with pytest.raises(TruncationExceeded):
        evaluate_formula(formula27, TRUNC + 1, basis14.cusp_series)


def test_verify_formula_report(formula27, basis14):
    report = verify_formula(formula27, basis14.cusp_series, TRUNC)
    assert report.ok and report.checked == TRUNC
    data = report.to_json_dict()
    assert data["mismatches"] == [] and data["checked"] == TRUNC


def test_verify_detects_corruption(formula27, basis14):
    broken = formula27.__class__(
        alpha=formula27.alpha,
        beta=formula27.beta,
        level=formula27.level,
        sigma3_terms={**formula27.sigma3_terms, 1: Fraction(1, 599)},
        sigma_terms=formula27.sigma_terms,
        cusp_terms=formula27.cusp_terms,
    )
    report = verify_formula(broken, basis14.cusp_series, 30)
    assert not report.ok


def test_formula_json_schema(formula27):
    data = formula27.to_json_dict()
    assert data["alpha"] == 2 and data["beta"] == 7
    assert data["sigma3"]["1"] == "1/600"
    assert data["sigma"]["2"] == ["1/24", "-1/28"]
    assert data["cusp"][3] == ["S14.4", "-1/42"]
