import pytest

from linecensus import embed, enumerate_field, frobenius, make_field
from linecensus.errors import (DegreeTooLarge, FieldMismatch, NoEmbedding,
                               NonPrimeCharacteristic, ReducibleModulus)


def test_prime_field_arithmetic(F5):
    a = F5.element(3)
    b = F5.element(4)
    assert (a + b).i == 2
    assert (a - b).i == 4
    assert (a * b).i == 2
    assert (-a).i == 2
    assert (a * a.inverse()).i == 1


def test_prime_field_enumeration(F3):
    assert F3.p == 3 and F3.e == 1 and F3.q == 3
    assert [x.i for x in F3.elements()] == [0, 1, 2]
    assert [str(x) for x in enumerate_field(F3)] == ["0", "1", "2"]


def test_extension_field_basics(F9):
    assert F9.p == 3 and F9.e == 2 and F9.q == 9
    assert F9.modulus == (1, 0, 1)
    assert F9.modulus_text() == "1 + t^2"
    names = [str(x) for x in F9.elements()]
    assert names == ["0", "1", "2", "(g)", "(1+g)", "(2+g)", "(2*g)",
                     "(1+2*g)", "(2+2*g)"]


def test_extension_element_indexing(F9):
    # index i has base-p digits as coefficients, low degree first
    assert F9.index_to_coeffs(5) == (2, 1)
    assert F9.coeffs_to_index((2, 1)) == 5
    g = list(F9.elements())[3]
    assert g.coeffs == (0, 1)
    # g^2 = -1 under the pinned modulus
    assert (g * g).i == 2


def test_element_reduces_mod_p(F5, F9):
    assert F5.element(12).i == 2
    # element() addresses the prime subfield only
    assert F9.element(5).i == 2


def test_pow_and_multiplicative_order(F9):
    g = list(F9.elements())[3]
    assert (g ** 4).i == 1
    assert (g ** 2).i != 1
    x = F9.element(2)
    assert (x ** 2).i == 1


def test_zero_inverse_raises(F3):
    with pytest.raises(ZeroDivisionError):
        F3.zero.inverse()


def test_mixed_field_arithmetic_rejected(F3, F9):
    with pytest.raises(FieldMismatch):
        F3.element(1) + F9.element(1)


def test_make_field_rejects_composite_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4)
    with pytest.raises(NonPrimeCharacteristic):
        make_field(9)


def test_make_field_degree_cap():
    with pytest.raises(DegreeTooLarge):
        make_field(2, 13)
    make_field(2, 12)


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, modulus=(1, 0, 1))


def test_frobenius_fixes_prime_subfield(F9):
    for x in F9.elements():
        y = frobenius(x, 3)
        assert (y == x) == (x.i in (0, 1, 2))
        assert frobenius(y, 3) == x


def test_embedding_into_extension(F3, F9):
    two = embed(F3.element(2), F9)
    assert two.i == 2
    g = list(F9.elements())[3]
    F81 = make_field(3, 4)
    h = embed(g, F81)
    # g^2 = -1, so the image keeps multiplicative order 4
    assert (h ** 4) == F81.one
    assert (h ** 2) != F81.one
    assert frobenius(frobenius(h, 3), 3) == h


def test_no_embedding_when_degree_does_not_divide(F9):
    F27 = make_field(3, 3)
    g = list(F9.elements())[3]
    with pytest.raises(NoEmbedding):
        embed(g, F27)


def test_embedding_is_a_ring_map(F3, F9):
    xs = list(F3.elements())
    for a in xs:
        for b in xs:
            assert embed(a + b, F9) == embed(a, F9) + embed(b, F9)
            assert embed(a * b, F9) == embed(a, F9) * embed(b, F9)
