"""Exhaustive rational-line classification against a surface in P^3.

Every F_q-line falls into exactly one class by the restriction test:
zero restriction (Contained), squarefree restriction (Transverse),
repeated rational root (RationalTangent), repeated factor with no
rational repetition (SpecialTangent).  The census ties the four tallies
to exact bound arithmetic and to the hypothesis checks the bounds need.
"""

import json
import multiprocessing
import time
from typing import Optional

from .bounds import BoundSheet, line_total
from .errors import BudgetExceeded, ZeroSurface
from .field import FieldSpec, make_field
from .groebner import (DEFAULT_DEGREE_CAP, SMOOTH, certify_smooth,
                       projective_dimension)
from .poly import (BinaryForm, Polynomial, _u_deriv, _u_gcd, _u_trim,
                   divides, format_binary, format_poly, frobenius_substitute,
                   hessian_det, partial_derivative, rational_multiplicities,
                   restrict_to_line, squarefree_binary)
from .projgeom import (DEFAULT_EXT_CAP, LineRep, ProjectivePoint,
                       count_common_zeros, count_points_on, line_from_index,
                       point_count, point_sort_key)

DEFAULT_BUDGET_Q = 13
_POINT_SCAN_LIMIT = 10_000_000

CONTAINED = "Contained"
TRANSVERSE = "Transverse"
RATIONAL_TANGENT = "RationalTangent"
SPECIAL_TANGENT = "SpecialTangent"

CLASS_NAMES = (CONTAINED, TRANSVERSE, RATIONAL_TANGENT, SPECIAL_TANGENT)


class LineClassification:
    """Outcome for one line, with the witness data for tangent classes."""

    __slots__ = ("kind", "line", "witness", "repeated_factor")

    def __init__(self, kind, line, witness=None, repeated_factor=None):
        self.kind = kind
        self.line = line
        self.witness = witness
        self.repeated_factor = repeated_factor

    def __repr__(self):
        extra = ""
        if self.witness is not None:
            extra = f" at {self.witness!r}"
        if self.repeated_factor is not None:
            extra = f" factor {self.repeated_factor}"
        return f"<{self.kind}{extra}>"


class ClassicalVerdict:
    __slots__ = ("value", "method")

    def __init__(self, value: bool, method: str = "exact"):
        self.value = value
        self.method = method

    def to_json(self):
        return {"value": self.value, "method": self.method}

    def __repr__(self):
        return f"<classical={self.value} ({self.method})>"


class GammaVerdict:
    """Projective dimension of S ∩ S_{1,0} ∩ S_{0,1}, or a labeled guess."""

    __slots__ = ("value", "method")

    def __init__(self, value: Optional[int], method: str):
        self.value = value
        self.method = method

    @property
    def certified_zero_dim(self) -> Optional[bool]:
        if self.method == "groebner" and self.value is not None:
            return self.value <= 0
        return None

    def to_json(self):
        return {"value": self.value, "method": self.method}

    def __repr__(self):
        return f"<gamma dim={self.value} ({self.method})>"


def classify_line(F: Polynomial, line: LineRep) -> LineClassification:
    """Decision tree: restrict, then squarefree, then rational roots."""
    a, b = line.span()
    g = restrict_to_line(F, a, b)
    if g.is_zero():
        return LineClassification(CONTAINED, line)
    squarefree, _ = squarefree_binary(g)
    if squarefree:
        return LineClassification(TRANSVERSE, line)
    mults = rational_multiplicities(g)
    witnesses = []
    for (s0, t0), m in mults.items():
        if m >= 2:
            coords = [s0 * x + t0 * y for x, y in zip(a, b)]
            witnesses.append(ProjectivePoint(coords))
    if witnesses:
        witnesses.sort(key=point_sort_key)
        return LineClassification(RATIONAL_TANGENT, line, witness=witnesses[0])
    # repeated factor exists but carries no rational point
    field = F.field
    u = _u_trim(list(g.coeffs))
    common = _u_gcd(u, _u_deriv(u, field), field)
    factor = BinaryForm(field, len(common) - 1, common)
    return LineClassification(SPECIAL_TANGENT, line,
                              repeated_factor=format_binary(factor))


def aux_surface(F: Polynomial, m: int, n: int) -> Polynomial:
    """Sum of X_i^(q^m) * F_{X_i}(X^(q^n)); may cancel to zero.

    Negative shifts are not constructed directly: (m, n) and
    (m+1, n+1) cut the same point sets, so callers normalize first.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative; shift both up instead")
    field = F.field
    nvars = F.nvars
    qm = field.q ** m
    acc = Polynomial.zero(field, nvars)
    for i in range(nvars):
        gi = partial_derivative(F, i)
        if gi.is_zero():
            continue
        mono = [0] * nvars
        mono[i] = qm
        xi = Polynomial(field, nvars, {tuple(mono): 1})
        acc = acc + xi * frobenius_substitute(gi, n)
    return acc


def is_frobenius_classical(F: Polynomial, r: int = 1) -> ClassicalVerdict:
    """Exact test: non-classical means F divides its auxiliary polynomial."""
    if F.is_zero():
        raise ZeroSurface("the zero polynomial cuts no surface")
    if r < 1:
        raise ValueError("r must be positive")
    aux = aux_surface(F, r, 0)
    return ClassicalVerdict(not divides(F, aux))


def hessian_vanishes_on(F: Polynomial) -> bool:
    """Whether det H_F vanishes identically on the surface F = 0."""
    if F.is_zero():
        raise ZeroSurface("the zero polynomial cuts no surface")
    return divides(F, hessian_det(F))


def gamma_dimension(F: Polynomial,
                    degree_cap: int = DEFAULT_DEGREE_CAP,
                    ext_cap: int = DEFAULT_EXT_CAP) -> GammaVerdict:
    """Dimension of S ∩ S_{1,0} ∩ S_{0,1}.

    Groebner route when the top auxiliary degree q^2+d-1 fits the cap;
    otherwise a point-growth probe over F_{q^2} against the Bezout
    budget, which can only ever be a labeled heuristic.
    """
    q = F.field.q
    d = F.degree
    a10 = aux_surface(F, 1, 0)
    a01 = aux_surface(F, 0, 1)
    gens = [g for g in (F, a10, a01) if not g.is_zero()]
    if q * q + d - 1 <= degree_cap:
        dim = projective_dimension(gens, degree_cap)
        if dim is not None:
            return GammaVerdict(dim, "groebner")
    if point_count(q * q, 3) > _POINT_SCAN_LIMIT:
        return GammaVerdict(None, "heuristic")
    bezout = d * (q + d - 1) * (q * d - q + 1)
    n2 = count_common_zeros(gens, 2, ext_cap=max(2, ext_cap))
    return GammaVerdict(0 if n2 <= bezout else 1, "heuristic")


# --- parallel classification over line-index ranges ---

_WORK: dict = {}


def _census_init(p, e, modulus, terms, nvars):
    field = make_field(p, e, modulus)
    _WORK["field"] = field
    _WORK["F"] = Polynomial(field, nvars, dict(terms))


def _census_chunk(rng):
    a, b = rng
    field = _WORK["field"]
    F = _WORK["F"]
    tallies = dict.fromkeys(CLASS_NAMES, 0)
    contained = []
    for i in range(a, b):
        cls = classify_line(F, line_from_index(field, i))
        tallies[cls.kind] += 1
        if cls.kind == CONTAINED:
            contained.append(i)
    return tallies, contained


def _classify_all(F: Polynomial, workers: int):
    field = F.field
    total = line_total(field.q)
    if workers <= 1 or total < 512:
        _census_init(field.p, field.e, field.modulus,
                     tuple(F.terms.items()), F.nvars)
        return _census_chunk((0, total))
    step = max(256, -(-total // (workers * 8)))
    ranges = [(a, min(a + step, total)) for a in range(0, total, step)]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers, initializer=_census_init,
                  initargs=(field.p, field.e, field.modulus,
                            tuple(F.terms.items()), F.nvars)) as pool:
        parts = pool.map(_census_chunk, ranges)
    tallies = dict.fromkeys(CLASS_NAMES, 0)
    contained = []
    for t, c in parts:
        for k, v in t.items():
            tallies[k] += v
        contained.extend(c)
    contained.sort()
    return tallies, contained


class CensusReport:
    """Everything full_census decides, JSON-shaped on demand."""

    def __init__(self, field, surface_text, source, degree, tallies,
                 contained_literals, points, smooth_verdict, classical_r1,
                 classical_r2, gamma, sheet, wall_ms, workers):
        self.field = field
        self.surface_text = surface_text
        self.source = source
        self.degree = degree
        self.tallies = tallies
        self.contained_literals = contained_literals
        self.points = points
        self.smooth_verdict = smooth_verdict
        self.classical_r1 = classical_r1
        self.classical_r2 = classical_r2
        self.gamma = gamma
        self.sheet = sheet
        self.wall_ms = wall_ms
        self.workers = workers

    @property
    def counts(self) -> dict:
        return {
            "total": sum(self.tallies.values()),
            "points": self.points["count_q"],
            "contained": self.tallies[CONTAINED],
            "transverse": self.tallies[TRANSVERSE],
            "rational_tangent": self.tallies[RATIONAL_TANGENT],
            "special_tangent": self.tallies[SPECIAL_TANGENT],
        }

    @property
    def violations(self) -> list:
        return self.sheet.violations(self.counts)

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": {"p": f.p, "e": f.e, "modulus": list(f.modulus)},
            "surface": {"text": self.surface_text, "degree": self.degree,
                        "source": self.source},
            "census": {
                "contained": self.tallies[CONTAINED],
                "transverse": self.tallies[TRANSVERSE],
                "rational_tangent": self.tallies[RATIONAL_TANGENT],
                "special_tangent": self.tallies[SPECIAL_TANGENT],
                "total": sum(self.tallies.values()),
            },
            "points": dict(self.points),
            "lines_in_surface": list(self.contained_literals),
            "hypotheses": {
                "smooth": self.smooth_verdict,
                "frobenius_classical_r1": self.classical_r1.to_json(),
                "frobenius_classical_r2": self.classical_r2.to_json(),
                "gamma_dimension": self.gamma.to_json(),
            },
            "bounds": self.sheet.to_json(self.counts),
            "timing": {"wall_ms": self.wall_ms, "workers": self.workers},
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def full_census(F: Polynomial, workers: int = 1,
                degree_cap: int = DEFAULT_DEGREE_CAP,
                ext_cap: int = DEFAULT_EXT_CAP,
                budget_q: int = DEFAULT_BUDGET_Q,
                source: str = "inline") -> CensusReport:
    """Classify every F_q-line against F and assemble the full report."""
    t0 = time.monotonic()
    if F.is_zero():
        raise ZeroSurface("the zero polynomial cuts no surface")
    if not F.is_homogeneous() or F.degree < 1:
        raise ValueError("need a homogeneous polynomial of degree >= 1")
    field = F.field
    q = field.q
    if q > budget_q:
        raise BudgetExceeded(f"q={q} above the census budget {budget_q}")

    tallies, contained_idx = _classify_all(F, workers)
    contained_lines = [line_from_index(field, i) for i in contained_idx]
    literals = [L.literal() for L in contained_lines]

    points = {"count_q": count_points_on(F, 1, ext_cap=max(1, ext_cap))}
    for k in (2, 3):
        if k <= ext_cap and point_count(q ** k, 3) <= _POINT_SCAN_LIMIT:
            points[f"count_q{k}"] = count_points_on(F, k, ext_cap=ext_cap)

    smooth_verdict = certify_smooth(F, degree_cap, ext_cap)
    classical_r1 = is_frobenius_classical(F, 1)
    classical_r2 = is_frobenius_classical(F, 2)
    gamma = gamma_dimension(F, degree_cap, ext_cap)

    sheet = BoundSheet(
        q, F.degree, point_count=points["count_q"],
        smooth=(smooth_verdict == SMOOTH),
        classical_r1=classical_r1.value,
        gamma_zero_dim=gamma.certified_zero_dim,
        no_contained_line=(tallies[CONTAINED] == 0),
    )
    wall_ms = int((time.monotonic() - t0) * 1000)
    return CensusReport(field, format_poly(F), source, F.degree, tallies,
                        literals, points, smooth_verdict, classical_r1,
                        classical_r2, gamma, sheet, wall_ms, workers)
