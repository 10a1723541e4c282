"""Named example surfaces and the seeded smooth-surface searches.

Variable naming is fixed: the four coordinates are always X0..X3.
"""

import random
import time
from itertools import combinations
from typing import Callable, Optional, Sequence

from .errors import EvenCharacteristic, NoSmoothFound, ZeroSurface
from .field import FieldSpec
from .groebner import (DEFAULT_DEGREE_CAP, SMOOTH, certify_smooth)
from .poly import Polynomial, format_poly, variables
from .projgeom import DEFAULT_EXT_CAP

# index pairs for the degree-(q+2) space-filling family, fixed order
_PAIRS = tuple(combinations(range(4), 2))


def katz_surface(field: FieldSpec) -> Polynomial:
    """X0^q*X1 - X0*X1^q + X2^q*X3 - X2*X3^q, degree q+1."""
    q = field.q
    X = variables(field, 4)
    return (X[0] ** q * X[1] - X[0] * X[1] ** q
            + X[2] ** q * X[3] - X[2] * X[3] ** q)


def spacefilling_surface(field: FieldSpec,
                         forms: Sequence[Polynomial]) -> Polynomial:
    """The degree-(q+2) combination sum L_k*(X_i^q*X_j - X_i*X_j^q).

    The six coefficients follow the pair order (0,1),(0,2),(0,3),
    (1,2),(1,3),(2,3).  Degenerate choices cancel to zero, which is an
    error since no surface is cut.
    """
    if len(forms) != 6:
        raise ValueError("need exactly 6 linear forms")
    q = field.q
    X = variables(field, 4)
    acc = Polynomial.zero(field, 4)
    for L, (i, j) in zip(forms, _PAIRS):
        if L.is_zero():
            continue
        if L.field != field or L.degree != 1 or not L.is_homogeneous():
            raise ValueError("coefficients must be linear forms over the field")
        acc = acc + L * (X[i] ** q * X[j] - X[i] * X[j] ** q)
    if acc.is_zero():
        raise ZeroSurface("the six linear forms cancel to the zero polynomial")
    return acc


def fermat_surface(field: FieldSpec) -> Polynomial:
    """X0^(p+1) + X1^(p+1) + X2^(p+1) + X3^(p+1) over F_{p^e}, odd p."""
    p = field.p
    if p == 2:
        raise EvenCharacteristic("Fermat generator needs odd characteristic")
    X = variables(field, 4)
    return X[0] ** (p + 1) + X[1] ** (p + 1) + X[2] ** (p + 1) + X[3] ** (p + 1)


def nonreflexive_family(field: FieldSpec,
                        forms: Sequence[Polynomial]) -> Polynomial:
    """X0*T0^p + X1*T1^p + X2*T2^p + X3*T3^p for degree-r forms T_i.

    Degree 1 + r*p.  The member is smooth exactly when the T_i have no
    common projective zero (the Jacobian reduces to the T_i^p).
    """
    if len(forms) != 4:
        raise ValueError("need exactly 4 forms")
    p = field.p
    r = None
    for T in forms:
        if T.is_zero():
            continue
        if not T.is_homogeneous():
            raise ValueError("forms must be homogeneous")
        if r is None:
            r = T.degree
        elif T.degree != r:
            raise ValueError("forms must share one degree")
    if r is None:
        raise ZeroSurface("all four forms are zero")
    X = variables(field, 4)
    acc = Polynomial.zero(field, 4)
    for xi, T in zip(X, forms):
        if not T.is_zero():
            acc = acc + xi * T ** p
    if acc.is_zero():
        raise ZeroSurface("the combination cancels to the zero polynomial")
    return acc


def _random_linear(field: FieldSpec, rng: random.Random) -> Polynomial:
    terms = {}
    for i in range(4):
        c = rng.randrange(field.q)
        if c:
            m = [0] * 4
            m[i] = 1
            terms[tuple(m)] = c
    return Polynomial(field, 4, terms)


def seeded_spacefilling(field: FieldSpec, seed: int) -> Polynomial:
    """Seeded random nonzero member of the degree-(q+2) family."""
    rng = random.Random(seed)
    for _ in range(64):
        forms = [_random_linear(field, rng) for _ in range(6)]
        try:
            return spacefilling_surface(field, forms)
        except ZeroSurface:
            continue
    raise ZeroSurface("no nonzero member in 64 seeded draws")


def _random_form(field: FieldSpec, r: int, rng: random.Random) -> Polynomial:
    terms = {}
    for m in _degree_monomials(r):
        c = rng.randrange(field.q)
        if c:
            terms[m] = c
    return Polynomial(field, 4, terms)


def seeded_nonreflexive(field: FieldSpec, r: int, seed: int) -> Polynomial:
    """Seeded random degree-(1+rp) member with degree-r forms T0..T3."""
    if r < 1:
        raise ValueError("form degree must be positive")
    rng = random.Random(seed)
    for _ in range(64):
        forms = [_random_form(field, r, rng) for _ in range(4)]
        if any(T.is_zero() or T.degree != r for T in forms):
            continue
        try:
            return nonreflexive_family(field, forms)
        except ZeroSurface:
            continue
    raise ZeroSurface("no nonzero member in 64 seeded draws")


class SearchOutcome:
    """Outcome record of one seeded search run."""

    __slots__ = ("tried", "found", "verdicts", "seed", "elapsed_ms")

    def __init__(self, tried, found, verdicts, seed, elapsed_ms):
        self.tried = tried
        self.found = found
        self.verdicts = verdicts
        self.seed = seed
        self.elapsed_ms = elapsed_ms

    def to_json(self):
        return {
            "tried": self.tried,
            "found": list(self.found),
            "verdicts": list(self.verdicts),
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def __repr__(self):
        return (f"<SearchOutcome tried={self.tried} "
                f"found={len(self.found)} seed={self.seed}>")


def search_smooth_spacefilling(field: FieldSpec, budget: int, seed: int,
                               degree_cap: int = DEFAULT_DEGREE_CAP,
                               ext_cap: int = DEFAULT_EXT_CAP,
                               forms_source: Optional[Callable] = None,
                               ) -> SearchOutcome:
    """Certify seeded random members of the space-filling family.

    Candidates are 6-tuples of linear forms with uniform independent
    coefficients; the sequence is fully determined by (seed, budget).
    Finding nothing is a valid outcome, not an error.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    t0 = time.monotonic()
    rng = random.Random(seed)
    draw = forms_source or (lambda r: [_random_linear(field, r)
                                       for _ in range(6)])
    found = []
    verdicts = []
    for _ in range(budget):
        forms = draw(rng)
        try:
            F = spacefilling_surface(field, forms)
        except ZeroSurface:
            verdicts.append("ZeroSurface")
            continue
        verdict = certify_smooth(F, degree_cap, ext_cap)
        verdicts.append(verdict)
        if verdict == SMOOTH:
            found.append({
                "text": format_poly(F),
                "forms": [format_poly(L) for L in forms],
            })
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    return SearchOutcome(len(verdicts), found, verdicts, seed, elapsed_ms)


def random_smooth_surface(field: FieldSpec, d: int, seed: int,
                          attempts: int = 200,
                          degree_cap: int = DEFAULT_DEGREE_CAP,
                          ext_cap: int = DEFAULT_EXT_CAP) -> Polynomial:
    """First seeded random degree-d surface that certifies Smooth."""
    if d < 1:
        raise ValueError("degree must be positive")
    rng = random.Random(seed)
    monos = _degree_monomials(d)
    for _ in range(attempts):
        terms = {}
        for m in monos:
            c = rng.randrange(field.q)
            if c:
                terms[m] = c
        F = Polynomial(field, 4, terms)
        if F.is_zero():
            continue
        if certify_smooth(F, degree_cap, ext_cap) == SMOOTH:
            return F
    raise NoSmoothFound(f"no smooth degree-{d} surface in {attempts} attempts")


def _degree_monomials(d: int):
    out = []
    for a in range(d + 1):
        for b in range(d + 1 - a):
            for c in range(d + 1 - a - b):
                out.append((a, b, c, d - a - b - c))
    return out
