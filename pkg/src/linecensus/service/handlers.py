"""Request handlers shared by the HTTP app and the in-process CLI client.

Every handler takes a validated request model and returns a plain dict
shaped like the matching response model.  Configuration problems raise
one of the types collected in CONFIG_ERRORS; anything else is a bug.
"""

import os

from ..bounds import BoundSheet
from ..census import (CensusReport, aux_surface, classify_line, full_census,
                      hessian_vanishes_on, is_frobenius_classical)
from ..errors import (BudgetExceeded, CoefficientOutOfField, DegreeTooLarge,
                      DependentSpan, EvenCharacteristic, NoEmbedding,
                      NonPrimeCharacteristic, NoSmoothFound,
                      PolynomialSyntaxError, ReducibleModulus, ZeroDivisor,
                      ZeroForm, ZeroSurface)
from ..field import FieldSpec, make_field
from ..gallery import (fermat_surface, katz_surface, random_smooth_surface,
                       search_smooth_spacefilling, seeded_nonreflexive,
                       seeded_spacefilling)
from ..groebner import certify_smooth
from ..poly import Polynomial, format_poly, is_pth_power, parse_poly
from ..projgeom import find_singular_point, parse_line_literal

CONFIG_ERRORS = (NonPrimeCharacteristic, ReducibleModulus, DegreeTooLarge,
                 NoEmbedding, PolynomialSyntaxError, CoefficientOutOfField,
                 DependentSpan, ZeroForm, ZeroDivisor, EvenCharacteristic,
                 ZeroSurface, BudgetExceeded, NoSmoothFound, ValueError)

GALLERY_NAMES = ("katz", "fermat", "spacefilling", "nonreflexive", "random")


def parse_field_literal(text: str) -> FieldSpec:
    """'p' or 'p^e' with p prime, e.g. '3', '3^2'."""
    text = text.strip()
    try:
        if "^" in text:
            p_txt, e_txt = text.split("^", 1)
            p, e = int(p_txt), int(e_txt)
        else:
            p, e = int(text), 1
    except ValueError:
        raise ValueError(f"bad field literal {text!r}: want 'p' or 'p^e'")
    return make_field(p, e)


def gallery_surface(field: FieldSpec, name: str, d=None, seed: int = 0,
                    budget=None) -> Polynomial:
    name = name.strip().lower()
    if name == "katz":
        return katz_surface(field)
    if name == "fermat":
        return fermat_surface(field)
    if name == "spacefilling":
        return seeded_spacefilling(field, seed)
    if name == "nonreflexive":
        return seeded_nonreflexive(field, d if d is not None else 1, seed)
    if name == "random":
        if d is None:
            raise ValueError("gallery 'random' needs a degree (--d)")
        return random_smooth_surface(field, d, seed, attempts=budget or 200)
    raise ValueError(f"unknown gallery name {name!r}; "
                     f"choose from {', '.join(GALLERY_NAMES)}")


def resolve_surface(req) -> tuple:
    """(field, polynomial, source label) from a SurfaceRequest block."""
    field = parse_field_literal(req.field)
    if (req.surface is None) == (req.gallery is None):
        raise ValueError("give exactly one of surface text/file or gallery")
    if req.gallery is not None:
        F = gallery_surface(field, req.gallery, req.d, req.seed, req.budget)
        return field, F, f"gallery:{req.gallery.strip().lower()}"
    text = req.surface
    if os.path.isfile(text):
        with open(text) as fh:
            body = fh.read().strip()
        return field, parse_poly(body, field), text
    return field, parse_poly(text, field), "inline"


def _check_reduced(F: Polynomial) -> None:
    # necessary screen only: a p-th power is never reduced
    if is_pth_power(F):
        raise ValueError(
            "surface is a p-th power, hence not reduced; the "
            "irreducibility assertion cannot hold")


def handle_census(req) -> CensusReport:
    field, F, source = resolve_surface(req)
    if req.assume_irreducible:
        _check_reduced(F)
    return full_census(F, workers=req.workers, degree_cap=req.groebner_cap,
                       ext_cap=req.ext_cap, budget_q=req.budget_q,
                       source=source)


def handle_census_json(req) -> dict:
    return handle_census(req).to_json()


def _point_text(P) -> str:
    return "[" + ":".join(str(x) for x in P.coords) + "]"


def handle_smooth(req) -> dict:
    field, F, _ = resolve_surface(req)
    verdict = certify_smooth(F, req.groebner_cap, req.ext_cap)
    witness = None
    if verdict == "Singular":
        for k in range(1, req.ext_cap + 1):
            P = find_singular_point(F, k, ext_cap=req.ext_cap)
            if P is not None:
                witness = _point_text(P)
                break
    return {"verdict": verdict, "witness": witness}


def handle_classical(req) -> dict:
    field, F, _ = resolve_surface(req)
    if req.r < 1:
        raise ValueError("Frobenius power r must be positive")
    if req.assume_irreducible:
        _check_reduced(F)
    v = is_frobenius_classical(F, req.r)
    return {"r": req.r, "value": v.value, "method": v.method}


def handle_aux(req) -> dict:
    field, F, _ = resolve_surface(req)
    A = aux_surface(F, req.m, req.n)
    return {"m": req.m, "n": req.n, "text": format_poly(A),
            "degree": None if A.is_zero() else A.degree}


def handle_hessian(req) -> dict:
    field, F, _ = resolve_surface(req)
    if req.assume_irreducible:
        _check_reduced(F)
    return {"vanishes_on_surface": hessian_vanishes_on(F)}


def handle_classify_line(req) -> dict:
    field, F, _ = resolve_surface(req)
    L = parse_line_literal(req.line, field)
    c = classify_line(F, L)
    return {
        "kind": c.kind,
        "line": L.literal(),
        "witness": None if c.witness is None else _point_text(c.witness),
        "repeated_factor": c.repeated_factor,
    }


def handle_bounds(req) -> dict:
    if req.q < 2 or req.d < 1:
        raise ValueError("need q >= 2 and d >= 1")
    sheet = BoundSheet(req.q, req.d, point_count=req.point_count,
                       smooth=req.smooth, classical_r1=req.classical_r1,
                       gamma_zero_dim=req.gamma_zero_dim,
                       no_contained_line=req.no_contained_line)
    return {"q": req.q, "d": req.d, "bounds": sheet.to_json(None)}


def handle_search(req) -> dict:
    field = parse_field_literal(req.field)
    outcome = search_smooth_spacefilling(field, req.budget, req.seed,
                                         degree_cap=req.groebner_cap,
                                         ext_cap=req.ext_cap)
    return outcome.to_json()


def handle_gallery(req) -> dict:
    field = parse_field_literal(req.field)
    F = gallery_surface(field, req.name, req.d, req.seed, req.budget)
    return {"name": req.name.strip().lower(), "text": format_poly(F),
            "degree": F.degree}
