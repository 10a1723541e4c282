import random

import pytest

from linecensus import (INCONCLUSIVE, SINGULAR, SMOOTH, buchberger,
                        certify_smooth, format_poly, gradient,
                        lt_ideal_dimension, make_field, parse_poly,
                        projective_dimension, variables)
from linecensus.errors import DegreeCapExceeded, IncompleteBasis


def test_already_reduced_pair(F3):
    b = buchberger([parse_poly("X0", F3), parse_poly("X1", F3)])
    # basis is sorted by ascending leading monomial
    assert [format_poly(p) for p in b.polys] == ["X1", "X0"]
    assert b.reduced and b.complete
    assert b.validate()


def test_one_reduction_step(F3):
    b = buchberger([parse_poly("X0*X3 - X1*X2", F3), parse_poly("X0", F3)])
    assert [format_poly(p) for p in b.polys] == ["X0", "X1*X2"]
    assert b.validate()


def test_membership(F3):
    b = buchberger([parse_poly("X0*X3 - X1*X2", F3), parse_poly("X0", F3)])
    assert b.contains(parse_poly("X1*X2", F3))
    assert b.contains(parse_poly("X0*X3", F3))
    assert not b.contains(parse_poly("X3", F3))


def test_reduce_normal_form(F3):
    b = buchberger([parse_poly("X0*X3 - X1*X2", F3), parse_poly("X0", F3)])
    r = b.reduce(parse_poly("X0*X3 + X1*X2 + X3^2", F3))
    assert format_poly(r) == "X3^2"


def test_two_variable_generic_path(F3):
    # the flat-table reducer only handles 4 variables, so this exercises
    # the generic reduction path
    f = parse_poly("X0^2 - X1^2", F3, nvars=2)
    g = parse_poly("X0*X1", F3, nvars=2)
    b = buchberger([f, g])
    assert [format_poly(p) for p in b.polys] == [
        "X0*X1", "X0^2 + 2*X1^2", "X1^3"]
    assert b.validate()
    assert lt_ideal_dimension(b) == 0
    assert projective_dimension([f, g]) == -1


def test_fermat_partials_pure_powers(F3):
    # char 3: each partial of the Fermat quartic is its own pure cube
    F = parse_poly("X0^4 + X1^4 + X2^4 + X3^4", F3)
    b = buchberger([g for g in gradient(F) if g.degree >= 0])
    leads = {format_poly(p) for p in b.polys}
    assert leads == {"X0^3", "X1^3", "X2^3", "X3^3"}
    assert lt_ideal_dimension(b) == 0


def test_degree_cap_exceeded_carries_partial_state(F3):
    gens = [parse_poly("X0*X3 - X1*X2", F3), parse_poly("X0*X1", F3)]
    with pytest.raises(DegreeCapExceeded) as exc:
        buchberger(gens, degree_cap=2)
    err = exc.value
    assert err.degree == 3
    assert not err.partial.complete
    with pytest.raises(IncompleteBasis):
        err.partial.contains(parse_poly("X0", F3))


def test_projective_dimension_values(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    assert projective_dimension([Q]) == 2
    assert projective_dimension([Q, parse_poly("X0", F3)]) == 1
    assert projective_dimension(
        [parse_poly("X%d" % i, F3) for i in range(4)]) == -1


def test_buchberger_deterministic(F5):
    gens = [parse_poly("X0^2 + X1*X3", F5), parse_poly("X1^2 + X2*X3", F5),
            parse_poly("X0*X2 - X3^2", F5)]
    a = buchberger(gens)
    b = buchberger(list(gens))
    assert [format_poly(p) for p in a.polys] == [
        format_poly(p) for p in b.polys]


def test_random_ideals_validate(F3, F5):
    # validate() re-reduces every S-pair without the pair-skipping
    # criteria, so this guards their soundness
    for field in (F3, F5):
        X = variables(field, 4)
        rng = random.Random(field.q)
        elems = list(field.elements())
        for trial in range(6):
            gens = []
            for _ in range(3):
                f = X[0] - X[0]
                for _ in range(4):
                    c = elems[rng.randrange(field.q)]
                    i = rng.randrange(4)
                    j = rng.randrange(4)
                    f = f + X[i] * X[j] * c
                if f.degree >= 0:
                    gens.append(f)
            if not gens:
                continue
            b = buchberger(gens)
            assert b.validate()


def test_certify_smooth_verdicts(F3, F5):
    assert certify_smooth(parse_poly("X0*X3 - X1*X2", F3)) == SMOOTH
    assert certify_smooth(parse_poly("X0^2*X1", F3)) == SINGULAR
    assert certify_smooth(parse_poly("X0*X1", F5)) == SINGULAR
    assert certify_smooth(
        parse_poly("X0^3 + X1^3 + X2^3 + X3^3", F5)) == SMOOTH


def test_certify_smooth_fermat_f9(F9):
    F = parse_poly("X0^4 + X1^4 + X2^4 + X3^4", F9)
    assert certify_smooth(F) == SMOOTH


def test_smooth_constants_are_distinct():
    assert len({SMOOTH, SINGULAR, INCONCLUSIVE}) == 3
