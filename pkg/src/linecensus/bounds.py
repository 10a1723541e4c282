"""Exact bound arithmetic for line censuses.

Every bound is a rational number computed from (q, d, #S) with Fraction
arithmetic; half-integer bounds stay exact and the effective integer
threshold is the ceiling (lower bounds) or floor (upper bounds).
Ratio preconditions involving irrational constants are decided by
integer comparisons, never floating point.
"""

import math
from fractions import Fraction
from typing import Optional

# fixed row order, also the JSON emission order
BOUND_NAMES = (
    "line_total",
    "homma_points",
    "homma_kim_points",
    "rational_tangent_upper",
    "special_tangent_upper_zero_dim",
    "special_tangent_upper_classical",
    "transverse_lower_zero_dim",
    "transverse_lower_classical",
    "transverse_lower_smooth",
)


def line_total(q: int) -> int:
    return (q * q + 1) * (q * q + q + 1)


def meets_ratio_zero_dim(q: int, d: int) -> bool:
    """q >= c*d for the zero-dimensional-intersection theorem.

    c is the unique real root of 2x^3 - 2x^2 - x - 1 (about 1.53697),
    and the polynomial is increasing past its root, so the comparison
    reduces to an integer sign test.
    """
    return 2 * q ** 3 - 2 * q ** 2 * d - q * d ** 2 - d ** 3 >= 0


def meets_ratio_classical(q: int, d: int) -> bool:
    """q >= (3 + sqrt(17))/4 * d, decided exactly: 4q - 3d >= d*sqrt(17)."""
    lhs = 4 * q - 3 * d
    return lhs >= 0 and lhs * lhs >= 17 * d * d


def meets_ratio_smooth(q: int, d: int) -> bool:
    return q >= d * d


class BoundRow:
    """One named inequality: an exact rational value plus applicability."""

    __slots__ = ("name", "kind", "subject", "value", "applicable")

    def __init__(self, name: str, kind: str, subject: str,
                 value: Optional[Fraction], applicable: Optional[bool]):
        # kind: 'upper', 'lower' or 'equal'; subject names the census count
        self.name = name
        self.kind = kind
        self.subject = subject
        self.value = value
        self.applicable = applicable

    def threshold(self) -> Optional[int]:
        """Effective integer form: ceil for lower bounds, floor for upper."""
        if self.value is None:
            return None
        if self.kind == "lower":
            return math.ceil(self.value)
        if self.kind == "upper":
            return math.floor(self.value)
        return int(self.value)

    def check(self, count: int) -> bool:
        """Whether the count satisfies the inequality (exact)."""
        if self.value is None:
            raise ValueError(f"{self.name} has no value to check against")
        if self.kind == "lower":
            return count >= self.value
        if self.kind == "upper":
            return count <= self.value
        return count == self.value

    def to_json(self, counts: Optional[dict] = None) -> dict:
        satisfied = None
        if counts is not None and self.value is not None:
            satisfied = self.check(counts[self.subject])
        return {
            "value_numerator": (None if self.value is None
                                else self.value.numerator),
            "value_denominator": (None if self.value is None
                                  else self.value.denominator),
            "threshold": self.threshold(),
            "applicable": self.applicable,
            "satisfied": satisfied,
        }

    def __repr__(self):
        return f"<BoundRow {self.name} {self.kind} {self.value}>"


def _transverse_lower_zero_dim(q: int, d: int) -> Fraction:
    return (Fraction(q ** 4 - (d - 2) * q ** 3)
            - Fraction((d * d - 5) * q * q
                       + (d ** 3 - 2 * d * d + 4 * d - 4) * q
                       + (d * d - 3), 2))


def _transverse_lower_classical(q: int, d: int) -> Fraction:
    return (Fraction(q ** 4)
            - Fraction((3 * d - 4) * q ** 3
                       + (d * d + 3 * d - 6) * q * q
                       + d * (d + 1) * q
                       + d * (d - 1) ** 2, 2))


def _transverse_lower_smooth(q: int, d: int) -> Fraction:
    return (Fraction(q ** 4)
            - Fraction((d * d + d - 4) * q ** 3
                       + (5 * d - 6) * q * q
                       + d * (d * d - 2 * d + 3) * q
                       + d * (d - 1), 2))


class BoundSheet:
    """All named bounds for one (q, d, #S) instance.

    Hypothesis arguments are tri-state: True/False when decided, None
    when unknown; a bound whose hypotheses are not all True is never
    marked applicable (unknown propagates to applicable=None, meaning
    "value shown, nothing enforced").
    """

    __slots__ = ("q", "d", "point_count", "rows")

    def __init__(self, q: int, d: int, point_count: Optional[int] = None,
                 smooth: Optional[bool] = None,
                 classical_r1: Optional[bool] = None,
                 gamma_zero_dim: Optional[bool] = None,
                 no_contained_line: Optional[bool] = None):
        if q < 2 or d < 1:
            raise ValueError("need q >= 2 and d >= 1")
        self.q = q
        self.d = d
        self.point_count = point_count

        def conj(*flags):
            # three-valued AND: False dominates, then None, then True
            if any(f is False for f in flags):
                return False
            if any(f is None for f in flags):
                return None
            return True

        s = point_count
        rows = [
            BoundRow("line_total", "equal", "total",
                     Fraction(line_total(q)), True),
            BoundRow("homma_points", "upper", "points",
                     Fraction((d - 1) * (q * q + 1)),
                     no_contained_line),
            BoundRow("homma_kim_points", "upper", "points",
                     Fraction((q + 1) * (q * d - q + 1)), smooth),
            BoundRow("rational_tangent_upper", "upper", "rational_tangent",
                     None if s is None else Fraction(s * (q + 1)), smooth),
            BoundRow("special_tangent_upper_zero_dim", "upper",
                     "special_tangent",
                     None if s is None else
                     Fraction(d * (q + d - 1) * (q * d - q + 1) - s, 2),
                     conj(smooth, gamma_zero_dim)),
            BoundRow("special_tangent_upper_classical", "upper",
                     "special_tangent",
                     Fraction(d * (q + d - 1) * (q * q + d - 1), 2),
                     conj(smooth, classical_r1, q >= d)),
            BoundRow("transverse_lower_zero_dim", "lower", "transverse",
                     _transverse_lower_zero_dim(q, d),
                     conj(smooth, gamma_zero_dim)),
            BoundRow("transverse_lower_classical", "lower", "transverse",
                     _transverse_lower_classical(q, d),
                     conj(smooth, classical_r1, q >= d)),
            BoundRow("transverse_lower_smooth", "lower", "transverse",
                     _transverse_lower_smooth(q, d),
                     conj(smooth, q >= d)),
        ]
        self.rows = {r.name: r for r in rows}

    def __getitem__(self, name: str) -> BoundRow:
        return self.rows[name]

    def violations(self, counts: dict) -> list:
        """Names of applicable rows the counts fail; counts keys are the
        row subjects (total, points, transverse, ...)."""
        out = []
        for name in BOUND_NAMES:
            r = self.rows[name]
            if r.applicable is True and r.value is not None:
                if not r.check(counts[r.subject]):
                    out.append(name)
        return out

    def to_json(self, counts: Optional[dict] = None) -> dict:
        return {name: self.rows[name].to_json(counts)
                for name in BOUND_NAMES}
