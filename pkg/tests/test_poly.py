import pytest

from linecensus import (BinaryForm, compose_linear, divides, evaluate,
                        format_poly, frobenius_substitute, gradient,
                        hessian_det, is_pth_power, make_field, parse_poly,
                        partial_derivative, rational_multiplicities,
                        restrict_to_line, squarefree_binary, try_divide,
                        variables)
from linecensus.errors import (CoefficientOutOfField, EvenCharacteristic,
                               PolynomialSyntaxError, ZeroDivisor, ZeroForm)
from linecensus.poly import Polynomial, euler_combination, format_binary


def test_parse_format_round_trip(F3):
    text = "2*X1*X2 + X0*X3"
    f = parse_poly(text, F3)
    assert format_poly(f) == text
    assert parse_poly(format_poly(f), F3) == f


def test_parse_absorbs_minus(F3):
    f = parse_poly("X0*X3 - X1*X2", F3)
    assert format_poly(f) == "2*X1*X2 + X0*X3"


def test_parse_whitespace_insignificant(F5):
    a = parse_poly("X0^2+   2*X1 * X2", F5)
    b = parse_poly("X0^2 + 2*X1*X2", F5)
    assert a == b


def test_parse_integer_coefficients_reduce_mod_p(F3):
    assert parse_poly("5*X0", F3) == parse_poly("2*X0", F3)
    assert parse_poly("3*X0", F3).degree == -1


def test_parse_extension_coefficient(F9):
    f = parse_poly("X0 + (1+2*g)*X1", F9)
    assert format_poly(f) == "X0 + (1+2*g)*X1"


def test_parse_rejects_bad_variable(F3):
    with pytest.raises(PolynomialSyntaxError) as exc:
        parse_poly("X0 + X4", F3)
    assert "position" in str(exc.value)


def test_parse_rejects_group_parens(F9):
    # parens only delimit extension coefficients, never grouping
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("(X0 + X1)*X2", F9)


def test_parse_extension_syntax_needs_extension_field(F3):
    with pytest.raises(CoefficientOutOfField):
        parse_poly("(1+g)*X0", F3)


def test_parse_generator_power_capped_by_degree(F9):
    with pytest.raises(CoefficientOutOfField):
        parse_poly("(1+g^2)*X0", F9)


def test_polynomial_arithmetic(F3):
    X = variables(F3, 4)
    f = X[0] * X[0] - X[1] * X[2]
    assert format_poly(f) == "X0^2 + 2*X1*X2"
    assert (f - f).degree == -1
    assert f.degree == 2


def test_partial_derivative(F3):
    f = parse_poly("X0^3*X1 + 2*X0*X1^3", F3)
    # d/dX0: 3*X0^2*X1 + 2*X1^3 = 2*X1^3 in characteristic 3
    assert format_poly(partial_derivative(f, 0)) == "2*X1^3"
    g = gradient(f)
    assert len(g) == 4
    assert g[0] == partial_derivative(f, 0)
    assert g[3].degree == -1


def test_euler_combination_is_degree_times_f(F5):
    f = parse_poly("X0^3 + 2*X1^2*X2 + X3^3", F5)
    three = F5.element(3)
    assert euler_combination(f) == f * three


def test_frobenius_substitute(F3):
    f = parse_poly("X0*X3 - X1*X2", F3)
    assert format_poly(frobenius_substitute(f, 1)) == "2*X1^3*X2^3 + X0^3*X3^3"
    assert frobenius_substitute(f, 0) == f


def test_frobenius_substitute_commutes_with_products(F9):
    a = parse_poly("X0 + (g)*X1", F9)
    b = parse_poly("X2 + (1+g)*X3", F9)
    assert frobenius_substitute(a * b, 1) == (
        frobenius_substitute(a, 1) * frobenius_substitute(b, 1))


def test_evaluate(F3):
    f = parse_poly("X0*X3 - X1*X2", F3)
    one, two, zero = F3.one, F3.element(2), F3.zero
    assert evaluate(f, (one, zero, zero, two)).i == 2
    assert evaluate(f, (one, one, one, one)).i == 0


def test_restrict_to_line(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    one, zero = F3.one, F3.zero
    g = restrict_to_line(Q, (one, zero, zero, zero), (zero, one, zero, one))
    assert format_binary(g) == "s*t"
    h = restrict_to_line(Q, (one, zero, zero, zero), (zero, one, one, zero))
    assert format_binary(h) == "2*t^2"


def test_squarefree_binary(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    one, zero = F3.one, F3.zero
    g = restrict_to_line(Q, (one, zero, zero, zero), (zero, one, zero, one))
    assert squarefree_binary(g) == (True, 1)
    h = restrict_to_line(Q, (one, zero, zero, zero), (zero, one, one, zero))
    assert squarefree_binary(h) == (False, 0)


def test_squarefree_binary_zero_form_rejected(F3):
    with pytest.raises(ZeroForm):
        squarefree_binary(BinaryForm(F3, 2, [F3.zero, F3.zero, F3.zero]))


def test_multiplicity_at_infinity_is_degree_drop(F3):
    # s^2*t as a cubic: [1:0] is a simple zero, reported in slot two
    g = BinaryForm(F3, 3, [F3.zero, F3.zero, F3.one, F3.zero])
    assert squarefree_binary(g) == (False, 1)


def test_rational_multiplicities(F3):
    # s*t^2 over F_3: mult 2 at [1:0], mult 1 at [0:1], 0 elsewhere
    g = BinaryForm(F3, 3, [F3.zero, F3.zero, F3.one, F3.zero])
    mults = rational_multiplicities(g)
    assert len(mults) == 4
    total = {}
    for (s0, t0), m in mults.items():
        total[(s0.i, t0.i)] = m
    assert total[(1, 0)] == 2
    assert total[(0, 1)] == 1
    assert sum(total.values()) == 3


def test_binary_form_evaluate(F3):
    g = BinaryForm(F3, 2, [F3.one, F3.zero, F3.element(2)])
    # s^2 + 2t^2 at (1, 1) = 0
    assert g.evaluate(F3.one, F3.one).i == 0
    assert g.evaluate(F3.one, F3.zero).i == 1


def test_try_divide_success_and_failure(F3):
    f = parse_poly("X0 + X1", F3)
    prod = parse_poly("X0^2 - X1^2", F3)
    q = try_divide(f, prod)
    assert format_poly(q) == "X0 + 2*X1"
    assert q * f == prod
    assert try_divide(prod, f) is None
    assert divides(f, prod)
    assert not divides(prod, f)


def test_divides_zero_conventions(F3):
    f = parse_poly("X0 + X1", F3)
    zero = Polynomial(F3, 4, {})
    assert divides(f, zero)
    assert try_divide(f, zero).degree == -1
    with pytest.raises(ZeroDivisor):
        divides(zero, f)


def test_is_pth_power(F3, F9):
    assert is_pth_power(parse_poly("X0^3", F3))
    assert is_pth_power(parse_poly("X0^3 + 2*X1^3*X2^3", F3))
    assert not is_pth_power(parse_poly("X0*X3 - X1*X2", F3))
    # coefficients must be cubes too, automatic over F_3 but not the point in F_9
    assert is_pth_power(parse_poly("(2+g)*X0^3", F9))


def test_hessian_det_quadric(F3):
    Q = parse_poly("X0*X3 - X1*X2", F3)
    assert format_poly(hessian_det(Q)) == "1"


def test_hessian_det_diagonal_cubic(F5):
    f = parse_poly("X0^3 + X1^3 + X2^3 + X3^3", F5)
    # det diag(6*Xi) = 1296 * X0*X1*X2*X3 and 1296 = 1 mod 5
    assert format_poly(hessian_det(f)) == "X0*X1*X2*X3"


def test_hessian_needs_odd_characteristic(F2):
    with pytest.raises(EvenCharacteristic):
        hessian_det(parse_poly("X0*X3 - X1*X2", F2))


def test_compose_linear_identity_and_swap(F3):
    f = parse_poly("X0*X3 - X1*X2", F3)
    one, zero = F3.one, F3.zero
    ident = [[one if i == j else zero for j in range(4)] for i in range(4)]
    assert compose_linear(f, ident) == f
    swap = [ident[1], ident[0], ident[2], ident[3]]
    g = compose_linear(f, swap)
    assert format_poly(g) == "2*X0*X2 + X1*X3"


def test_compose_linear_is_multiplicative(F5):
    import random
    from conftest import random_gl4, rank4

    rng = random.Random(5)
    f = parse_poly("X0^2 + X1*X3 + X2^2", F5)
    m = random_gl4(F5, rng)
    n = random_gl4(F5, rng)
    nm = [[sum((n[i][k] * m[k][j] for k in range(4)), F5.zero)
           for j in range(4)] for i in range(4)]
    assert compose_linear(compose_linear(f, n), m) == compose_linear(f, nm)
    assert rank4(F5, nm) == 4
