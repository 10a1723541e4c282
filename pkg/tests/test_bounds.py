from fractions import Fraction

import pytest

from linecensus.bounds import (BOUND_NAMES, BoundRow, BoundSheet, line_total,
                               meets_ratio_classical, meets_ratio_smooth,
                               meets_ratio_zero_dim)


def test_line_total_values():
    assert line_total(2) == 35
    assert line_total(3) == 130
    assert line_total(5) == 806
    assert line_total(7) == 2850
    assert line_total(9) == 7462


def test_sheet_row_order_fixed():
    sheet = BoundSheet(3, 2)
    assert tuple(sheet.rows) == BOUND_NAMES


def test_sheet_rejects_degenerate_input():
    with pytest.raises(ValueError):
        BoundSheet(1, 3)
    with pytest.raises(ValueError):
        BoundSheet(3, 0)


def test_homma_kim_threshold():
    sheet = BoundSheet(3, 4, smooth=True)
    row = sheet["homma_kim_points"]
    assert row.threshold() == 40
    assert row.applicable is True
    assert row.check(40)
    assert not row.check(41)


def test_homma_gate_is_no_contained_line():
    gated = BoundSheet(3, 4, no_contained_line=True)["homma_points"]
    assert gated.value == Fraction(3 * 10)
    assert gated.applicable is True
    off = BoundSheet(3, 4, no_contained_line=False)["homma_points"]
    assert off.applicable is False
    unknown = BoundSheet(3, 4)["homma_points"]
    assert unknown.applicable is None


def test_transverse_lower_zero_dim_value():
    sheet = BoundSheet(5, 3, smooth=True, gamma_zero_dim=True)
    row = sheet["transverse_lower_zero_dim"]
    assert row.value == Fraction(809, 2)
    assert row.threshold() == 405
    assert row.applicable is True
    assert row.check(405)
    assert not row.check(404)


def test_transverse_lower_classical_value():
    # q=7, d=3: 2401 - (5*343 + 12*49 + 84 + 12)/2 = 2401 - 2399/2
    sheet = BoundSheet(7, 3, smooth=True, classical_r1=True)
    row = sheet["transverse_lower_classical"]
    assert row.value == Fraction(2403, 2)
    assert row.threshold() == 1202
    assert row.applicable is True


def test_transverse_lower_smooth_value():
    sheet = BoundSheet(9, 3, smooth=True)
    row = sheet["transverse_lower_smooth"]
    assert row.value == Fraction(6393, 2)
    assert row.threshold() == 3197
    assert row.applicable is True


def test_rational_tangent_upper_needs_point_count():
    without = BoundSheet(3, 2, smooth=True)["rational_tangent_upper"]
    assert without.value is None
    assert without.threshold() is None
    with pytest.raises(ValueError):
        without.check(10)
    sheet = BoundSheet(3, 2, point_count=16, smooth=True)
    row = sheet["rational_tangent_upper"]
    assert row.value == Fraction(64)
    assert row.check(64)


def test_special_tangent_upper_zero_dim_value():
    sheet = BoundSheet(3, 4, point_count=40, smooth=True,
                       gamma_zero_dim=True)
    row = sheet["special_tangent_upper_zero_dim"]
    # (d(q+d-1)(qd-q+1) - #S)/2 = (4*6*10 - 40)/2
    assert row.value == Fraction(100)
    assert row.applicable is True


def test_special_tangent_upper_classical_value():
    sheet = BoundSheet(7, 3, smooth=True, classical_r1=True)
    row = sheet["special_tangent_upper_classical"]
    assert row.value == Fraction(3 * 9 * 51, 2)
    assert row.threshold() == 688


def test_applicability_three_valued():
    sheet = BoundSheet(5, 3, smooth=None, classical_r1=True,
                       gamma_zero_dim=False)
    assert sheet["transverse_lower_zero_dim"].applicable is False
    assert sheet["transverse_lower_classical"].applicable is None
    assert sheet["transverse_lower_smooth"].applicable is None
    decided = BoundSheet(5, 3, smooth=True, classical_r1=True)
    assert decided["transverse_lower_classical"].applicable is True


def test_classical_rows_gate_on_q_at_least_d():
    sheet = BoundSheet(3, 4, smooth=True, classical_r1=True)
    assert sheet["special_tangent_upper_classical"].applicable is False
    assert sheet["transverse_lower_classical"].applicable is False
    assert sheet["transverse_lower_smooth"].applicable is False


def test_threshold_rounds_toward_the_inequality():
    lower = BoundRow("x", "lower", "transverse", Fraction(7, 2), True)
    assert lower.threshold() == 4
    upper = BoundRow("x", "upper", "transverse", Fraction(7, 2), True)
    assert upper.threshold() == 3
    assert lower.check(4) and not lower.check(3)
    assert upper.check(3) and not upper.check(4)


def test_violations_only_from_applicable_rows():
    sheet = BoundSheet(3, 2, point_count=16, smooth=True,
                       gamma_zero_dim=True, no_contained_line=False)
    counts = {"total": 130, "points": 16, "contained": 8,
              "transverse": 90, "rational_tangent": 32,
              "special_tangent": 0}
    assert sheet.violations(counts) == []
    bad = dict(counts, transverse=0)
    names = sheet.violations(bad)
    assert "transverse_lower_zero_dim" in names
    # homma_points fails numerically but its gate is off
    assert "homma_points" not in names


def test_to_json_shape():
    sheet = BoundSheet(3, 2, point_count=16, smooth=True)
    counts = {"total": 130, "points": 16, "contained": 8,
              "transverse": 90, "rational_tangent": 32,
              "special_tangent": 0}
    blob = sheet.to_json(counts)
    assert set(blob) == set(BOUND_NAMES)
    row = blob["homma_kim_points"]
    assert row["value_numerator"] == 16
    assert row["value_denominator"] == 1
    assert row["threshold"] == 16
    assert row["applicable"] is True
    assert row["satisfied"] is True
    assert blob["rational_tangent_upper"]["satisfied"] is True
    assert blob["special_tangent_upper_zero_dim"]["applicable"] is None


def _root_of_zero_dim_cubic() -> float:
    lo, hi = 1.0, 2.0
    for _ in range(80):
        mid = (lo + hi) / 2
        if 2 * mid ** 3 - 2 * mid ** 2 - mid - 1 >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def test_meets_ratio_zero_dim_matches_bisection():
    c = _root_of_zero_dim_cubic()
    assert abs(c - 1.53697) < 1e-4
    for q in range(2, 31):
        for d in range(1, 31):
            assert meets_ratio_zero_dim(q, d) == (q >= c * d)


def test_meets_ratio_classical_matches_float_oracle():
    c = (3 + 17 ** 0.5) / 4
    for q in range(2, 31):
        for d in range(1, 31):
            assert meets_ratio_classical(q, d) == (q >= c * d)


def test_meets_ratio_smooth():
    for q in range(2, 31):
        for d in range(1, 8):
            assert meets_ratio_smooth(q, d) == (q >= d * d)
