"""Sparse multivariate polynomials over finite fields.

A polynomial is a map from monomials (exponent tuples, at most 8 variables)
to nonzero field elements; the zero polynomial is the empty map.  Coefficients
are stored as canonical element indices.  The monomial order everywhere is
graded reverse lexicographic with X0 > X1 > ... > Xn.

Text syntax: terms joined by '+'/'-'; a term is an optional coefficient and
'*'-separated factors 'Xi' or 'Xi^k'; coefficients are integers or
parenthesized extension elements like "(1+2*g)".  Canonical output lists
terms grevlex-descending with '-' absorbed into the coefficients.
"""

from __future__ import annotations

import heapq
from math import comb

from .errors import (
    CoefficientOutOfField,
    DependentSpan,
    EvenCharacteristic,
    FieldMismatch,
    PolynomialSyntaxError,
    ZeroDivisor,
    ZeroForm,
)
from .field import FieldElement, FieldSpec, embed, format_element

MAX_VARS = 8


def grevlex_key(m: tuple[int, ...]):
    """Sort key: bigger key = bigger monomial in grevlex."""
    return (sum(m), tuple(-m[i] for i in reversed(range(len(m)))))


def _heap_key(m: tuple[int, ...]):
    # min-heap entry that pops the grevlex-largest monomial first
    if len(m) == 4:
        return (-m[0] - m[1] - m[2] - m[3], (m[3], m[2], m[1], m[0]))
    return (-sum(m), tuple(reversed(m)))


def _mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Does X^a divide X^b?"""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class Polynomial:
    """Immutable sparse polynomial; do not mutate `terms` from outside."""

    __slots__ = ("field", "nvars", "terms", "_lm")

    def __init__(self, field: FieldSpec, nvars: int, terms: dict | None = None):
        if not 1 <= nvars <= MAX_VARS:
            raise ValueError(f"nvars must be 1..{MAX_VARS}")
        self.field = field
        self.nvars = nvars
        self._lm = None
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for m, c in terms.items():
                if isinstance(c, FieldElement):
                    if c.field != field:
                        raise FieldMismatch("coefficient from a different field")
                    c = c.i
                if c:
                    if len(m) != nvars or any(e < 0 for e in m):
                        raise ValueError(f"bad monomial {m}")
                    clean[tuple(m)] = c
        self.terms = clean

    # --- constructors ---

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int = 4) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, c, nvars: int = 4) -> "Polynomial":
        if isinstance(c, int):
            c = field.element(c)
        return cls(field, nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=grevlex_key, reverse=True)

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise ZeroDivisor("zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = max(self.terms, key=grevlex_key)
        return self._lm

    def leading_coefficient(self) -> FieldElement:
        return FieldElement(self.field, self.terms[self.leading_monomial()])

    def coefficient(self, m: tuple[int, ...]) -> FieldElement:
        return FieldElement(self.field, self.terms.get(tuple(m), 0))

    def items(self):
        for m in self.monomials():
            yield m, FieldElement(self.field, self.terms[m])

    # --- arithmetic ---

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field or other.nvars != self.nvars:
                raise FieldMismatch("polynomials over different fields/variables")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        add = self.field._raw_add
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field._raw_neg
        return Polynomial(self.field, self.nvars,
                          {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            if isinstance(other, int):
                other = self.field.element(other)
            if other.field != self.field:
                raise FieldMismatch("scalar from a different field")
            if other.is_zero():
                return Polynomial.zero(self.field, self.nvars)
            mul = self.field._raw_mul
            return Polynomial(self.field, self.nvars,
                              {m: mul(c, other.i) for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        mul = self.field._raw_mul
        add = self.field._raw_add
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = add(out.get(m, 0), mul(c1, c2))
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, 1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        if lc.i == 1:
            return self
        return self * lc.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self._coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<{format_poly(self)}>"


def variable(field: FieldSpec, i: int, nvars: int = 4) -> Polynomial:
    """The coordinate polynomial X_i."""
    m = [0] * nvars
    m[i] = 1
    return Polynomial(field, nvars, {tuple(m): 1})


def variables(field: FieldSpec, nvars: int = 4) -> list[Polynomial]:
    return [variable(field, i, nvars) for i in range(nvars)]


# --- text format ---

def _format_coeff(field: FieldSpec, c: int, with_star: bool) -> str:
    """Coefficient prefix for a term; empty string when the coefficient is 1."""
    x = FieldElement(field, c)
    txt = format_element(x)
    if c == 1 and with_star:
        return ""
    return txt + ("*" if with_star else "")


def format_poly(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for m in f.monomials():
        c = f.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f"X{i}")
            elif e > 1:
                factors.append(f"X{i}^{e}")
        if factors:
            head = _format_coeff(f.field, c, True)
            parts.append(head + "*".join(factors))
        else:
            parts.append(_format_coeff(f.field, c, False))
    return " + ".join(parts)


class _Parser:
    def __init__(self, text: str, field: FieldSpec, nvars: int):
        self.text = text
        self.pos = 0
        self.field = field
        self.nvars = nvars

    def error(self, msg: str):
        raise PolynomialSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected '{ch}'")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_ext_element(self) -> int:
        """Inside parentheses: c0 + c1*g + c2*g^2 ...; returns element index."""
        if self.field.e == 1:
            raise CoefficientOutOfField(
                "extension-element syntax over a prime field")
        coeffs = [0] * self.field.e
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            c = 1
            power = 0
            if self.peek().isdigit():
                c = self.parse_int()
                if self.peek() == "*":
                    self.pos += 1
                    if self.peek() != "g":
                        self.error("expected 'g'")
            if self.peek() == "g":
                self.pos += 1
                power = 1
                if self.peek() == "^":
                    self.pos += 1
                    power = self.parse_int()
            if power >= self.field.e:
                raise CoefficientOutOfField(
                    f"g^{power} outside basis of degree {self.field.e}")
            coeffs[power] = (coeffs[power] + sign * c) % self.field.p
            nxt = self.peek()
            if nxt in ("+", "-"):
                sign = -1 if nxt == "-" else 1
                self.pos += 1
                continue
            break
        return self.field.coeffs_to_index(coeffs)

    def parse_factor(self) -> tuple[int, int]:
        """Returns (variable index, exponent)."""
        if self.peek() != "X":
            self.error("expected a variable 'X'")
        self.pos += 1
        idx = self.parse_int()
        if idx >= self.nvars:
            self.error(f"variable X{idx} outside X0..X{self.nvars - 1}")
        e = 1
        if self.peek() == "^":
            self.pos += 1
            e = self.parse_int()
        return idx, e

    def parse_term(self) -> tuple[tuple[int, ...], int]:
        coeff_idx = 1
        exps = [0] * self.nvars
        has_factor = False
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            coeff_idx = self.parse_ext_element()
            self.expect(")")
            if self.peek() == "*":
                self.pos += 1
        elif ch.isdigit():
            coeff_idx = self.parse_int() % self.field.p
            if self.peek() == "*":
                self.pos += 1
        if self.peek() == "X":
            while True:
                i, e = self.parse_factor()
                exps[i] += e
                has_factor = True
                if self.peek() == "*":
                    self.pos += 1
                    continue
                break
        elif not has_factor and (not ch or ch not in "(0123456789"):
            self.error("expected a term")
        return tuple(exps), coeff_idx

    def parse(self) -> Polynomial:
        add = self.field._raw_add
        neg = self.field._raw_neg
        out: dict[tuple[int, ...], int] = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            m, c = self.parse_term()
            if sign < 0:
                c = neg(c)
            v = add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
            nxt = self.peek()
            if nxt in ("+", "-"):
                sign = -1 if nxt == "-" else 1
                self.pos += 1
                continue
            break
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing input")
        return Polynomial(self.field, self.nvars, out)


def parse_poly(text: str, field: FieldSpec, nvars: int = 4) -> Polynomial:
    return _Parser(text, field, nvars).parse()


# --- calculus-style operations ---

def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    """Formal partial derivative in characteristic p."""
    if not 0 <= i < f.nvars:
        raise ValueError(f"variable index {i} out of range")
    mul = f.field._raw_mul
    p = f.field.p
    out: dict[tuple[int, ...], int] = {}
    for m, c in f.terms.items():
        e = m[i]
        if e % p == 0:
            continue
        new_m = list(m)
        new_m[i] = e - 1
        out[tuple(new_m)] = mul(c, e % p)
    return Polynomial(f.field, f.nvars, out)


def gradient(f: Polynomial) -> list[Polynomial]:
    return [partial_derivative(f, i) for i in range(f.nvars)]


def frobenius_substitute(f: Polynomial, n: int) -> Polynomial:
    """Substitute X_i -> X_i^(q^n) for every variable; coefficients unchanged."""
    if n < 0:
        raise ValueError("Frobenius power must be nonnegative; shift both "
                         "indices of an auxiliary pair instead")
    if n == 0:
        return f
    factor = f.field.q ** n
    return Polynomial(f.field, f.nvars,
                      {tuple(e * factor for e in m): c for m, c in f.terms.items()})


def euler_combination(f: Polynomial) -> Polynomial:
    """sum_i X_i * dF/dX_i (equals (deg mod p) * F for homogeneous F)."""
    out = Polynomial.zero(f.field, f.nvars)
    for i in range(f.nvars):
        out = out + variable(f.field, i, f.nvars) * partial_derivative(f, i)
    return out


def evaluate(f: Polynomial, point) -> FieldElement:
    """Evaluate at a point with coordinates in an extension of f's field."""
    coords = list(point)
    if len(coords) != f.nvars:
        raise ValueError(f"expected {f.nvars} coordinates")
    target = coords[0].field
    for x in coords[1:]:
        if x.field != target:
            raise FieldMismatch("mixed coordinate fields")
    mul = target._raw_mul
    add = target._raw_add
    # powers of each coordinate, built once up to the needed exponent
    max_e = [0] * f.nvars
    for m in f.terms:
        for i, e in enumerate(m):
            if e > max_e[i]:
                max_e[i] = e
    pows = []
    for i, x in enumerate(coords):
        row = [1]
        for _ in range(max_e[i]):
            row.append(mul(row[-1], x.i))
        pows.append(row)
    acc = 0
    for m, c in f.terms.items():
        v = c if target == f.field else embed(FieldElement(f.field, c), target).i
        for i, e in enumerate(m):
            if e:
                v = mul(v, pows[i][e])
        acc = add(acc, v)
    return FieldElement(target, acc)


# --- binary forms (restrictions to lines) ---

class BinaryForm:
    """Homogeneous binary form g(s,t) = sum c_i s^(d-i) t^i of formal degree d."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: FieldSpec, degree: int, coeffs):
        coeffs = [c.i if isinstance(c, FieldElement) else c for c in coeffs]
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        self.field = field
        self.degree = degree
        self.coeffs = tuple(coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i])

    def evaluate(self, s: FieldElement, t: FieldElement) -> FieldElement:
        mul = self.field._raw_mul
        add = self.field._raw_add
        acc = 0
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c:
                v = mul(c, self.field._raw_pow(s.i, d - i))
                v = mul(v, self.field._raw_pow(t.i, i))
                acc = add(acc, v)
        return FieldElement(self.field, acc)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return (self.field == other.field and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"<{format_binary(self)}>"


def format_binary(g: BinaryForm) -> str:
    if g.is_zero():
        return "0"
    parts = []
    d = g.degree
    for i, c in enumerate(g.coeffs):
        if c == 0:
            continue
        factors = []
        if d - i == 1:
            factors.append("s")
        elif d - i > 1:
            factors.append(f"s^{d - i}")
        if i == 1:
            factors.append("t")
        elif i > 1:
            factors.append(f"t^{i}")
        if factors:
            head = _format_coeff(g.field, c, True)
            parts.append(head + "*".join(factors))
        else:
            parts.append(_format_coeff(g.field, c, False))
    return " + ".join(parts)


def restrict_to_line(f: Polynomial, row_a, row_b) -> BinaryForm:
    """The binary form F(s*A + t*B) for independent coordinate rows A, B."""
    field = f.field
    a = [x.i if isinstance(x, FieldElement) else field.element(x).i for x in row_a]
    b = [x.i if isinstance(x, FieldElement) else field.element(x).i for x in row_b]
    if len(a) != f.nvars or len(b) != f.nvars:
        raise ValueError("rows must have one entry per variable")
    mul = field._raw_mul
    add = field._raw_add
    neg = field._raw_neg
    rank2 = False
    for i in range(f.nvars):
        for j in range(i + 1, f.nvars):
            if add(mul(a[i], b[j]), neg(mul(a[j], b[i]))):
                rank2 = True
                break
        if rank2:
            break
    if not rank2:
        raise DependentSpan("rows do not span a line")
    d = f.degree
    if f.is_zero():
        raise ZeroForm("cannot restrict the zero polynomial")
    p = field.p
    # per-variable powers of (a_i s + b_i t), as coefficient lists
    max_e = [0] * f.nvars
    for m in f.terms:
        for i, e in enumerate(m):
            if e > max_e[i]:
                max_e[i] = e
    pw: list[list[list[int]]] = []
    for i in range(f.nvars):
        rows = [[1]]
        for e in range(1, max_e[i] + 1):
            # binomial expansion: C(e,j) a^(e-j) b^j
            row = []
            for j in range(e + 1):
                cmb = comb(e, j) % p
                if cmb == 0:
                    row.append(0)
                    continue
                v = mul(cmb, field._raw_pow(a[i], e - j))
                v = mul(v, field._raw_pow(b[i], j))
                row.append(v)
            rows.append(row)
        pw.append(rows)
    out = [0] * (d + 1)
    for m, c in f.terms.items():
        conv = [c]
        for i, e in enumerate(m):
            if e == 0:
                continue
            other = pw[i][e]
            new = [0] * (len(conv) + e)
            for x, cx in enumerate(conv):
                if cx:
                    for y, cy in enumerate(other):
                        if cy:
                            new[x + y] = add(new[x + y], mul(cx, cy))
            conv = new
        for j, v in enumerate(conv):
            if v:
                out[j] = add(out[j], v)
    return BinaryForm(field, d, out)


# --- univariate helpers on index-coefficient lists (ascending powers) ---

def _u_trim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _u_deriv(u: list[int], field: FieldSpec) -> list[int]:
    mul = field._raw_mul
    p = field.p
    out = []
    for i in range(1, len(u)):
        out.append(mul(u[i], i % p) if i % p else 0)
    return _u_trim(out)


def _u_divmod(a: list[int], b: list[int], field: FieldSpec) -> tuple[list[int], list[int]]:
    mul = field._raw_mul
    add = field._raw_add
    neg = field._raw_neg
    a = a[:]
    db = len(b) - 1
    inv_lb = field._raw_inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        k = len(a) - 1 - db
        c = mul(a[-1], inv_lb)
        q[k] = c
        for i, bi in enumerate(b):
            if bi:
                a[k + i] = add(a[k + i], neg(mul(c, bi)))
        _u_trim(a)
    return _u_trim(q), a


def _u_gcd(a: list[int], b: list[int], field: FieldSpec) -> list[int]:
    a, b = _u_trim(a[:]), _u_trim(b[:])
    while b:
        a, b = b, _u_divmod(a, b, field)[1]
    if a:
        inv = field._raw_inv(a[-1])
        a = [field._raw_mul(c, inv) for c in a]
    return a


def squarefree_binary(g: BinaryForm) -> tuple[bool, int]:
    """(is squarefree, multiplicity of the point at infinity [0:1]).

    Convention: u(t) = g(1,t); the multiplicity at infinity is d - deg u, and
    g is squarefree iff that is <= 1 and gcd(u, u') is constant (gcd(u,0)=u).
    """
    if g.is_zero():
        raise ZeroForm("squarefree test on the zero form")
    u = _u_trim(list(g.coeffs))
    mult_inf = g.degree - (len(u) - 1)
    if mult_inf > 1:
        return False, mult_inf
    if len(u) == 1:
        return True, mult_inf
    du = _u_deriv(u, g.field)
    if not du:
        return False, mult_inf
    return len(_u_gcd(u, du, g.field)) == 1, mult_inf


def _u_synth_div(u: list[int], t0: int, field: FieldSpec) -> tuple[list[int], int]:
    """Divide u(t) by (t - t0); returns (quotient ascending, remainder)."""
    mul = field._raw_mul
    add = field._raw_add
    k = len(u) - 1
    if k == 0:
        return [], u[0]
    b = [0] * k
    b[k - 1] = u[k]
    for i in range(k - 1, 0, -1):
        b[i - 1] = add(u[i], mul(t0, b[i]))
    return b, add(u[0], mul(t0, b[0]))


def rational_multiplicities(g: BinaryForm) -> dict[tuple, int]:
    """Root multiplicity at each of the q+1 rational points of P^1.

    Keys are normalized coordinate pairs (FieldElement, FieldElement):
    (1, t0) for finite points and (0, 1) for the point at infinity.
    """
    if g.is_zero():
        raise ZeroForm("multiplicities of the zero form")
    field = g.field
    u = _u_trim(list(g.coeffs))
    out: dict[tuple, int] = {}
    one = field.one
    for t0 in range(field.q):
        mult = 0
        cur = u
        while cur:
            quot, rem = _u_synth_div(cur, t0, field)
            if rem != 0:
                break
            mult += 1
            cur = _u_trim(quot)
        out[(one, FieldElement(field, t0))] = mult
    out[(field.zero, one)] = g.degree - (len(u) - 1)
    return out


# --- divisibility ---

def try_divide(f: Polynomial, g: Polynomial):
    """Quotient g / f when f divides g exactly, else None."""
    if f.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if g.field != f.field or g.nvars != f.nvars:
        raise FieldMismatch("operands over different fields/variables")
    field = f.field
    if g.is_zero():
        return Polynomial.zero(field, f.nvars)
    mul = field._raw_mul
    add = field._raw_add
    neg = field._raw_neg
    lm = f.leading_monomial()
    lc_inv = field._raw_inv(f.terms[lm])
    tail = [(m, c) for m, c in f.terms.items() if m != lm]
    cur = dict(g.terms)
    heap = [(*_heap_key(m), m) for m in cur]
    heapq.heapify(heap)
    quot: dict[tuple[int, ...], int] = {}
    while heap:
        m = heapq.heappop(heap)[-1]
        c = cur.get(m)
        if not c:
            continue
        if not _mono_divides(lm, m):
            return None
        shift = tuple(x - y for x, y in zip(m, lm))
        qc = mul(c, lc_inv)
        quot[shift] = qc
        del cur[m]
        for m2, c2 in tail:
            mm = tuple(x + y for x, y in zip(shift, m2))
            v = add(cur.get(mm, 0), neg(mul(qc, c2)))
            if v:
                if mm not in cur:
                    heapq.heappush(heap, (*_heap_key(mm), mm))
                cur[mm] = v
            else:
                cur.pop(mm, None)
    return Polynomial(field, f.nvars, quot)


def divides(f: Polynomial, g: Polynomial) -> bool:
    """Whether f divides g exactly (the zero polynomial is divisible by all)."""
    return try_divide(f, g) is not None


def is_pth_power(f: Polynomial) -> bool:
    """Whether f = g^p for some polynomial g over the same field.

    Exact over a finite field: coefficients are always p-th powers, so
    only the exponents decide.  A p-th power is never reduced, which is
    the cheap necessary screen behind the assume-irreducible switch.
    """
    if f.is_zero():
        return True
    p = f.field.p
    return all(e % p == 0 for m in f.terms for e in m)


# --- Hessian determinant ---

def hessian_det(f: Polynomial) -> Polynomial:
    """Determinant of the matrix of second partials.

    Cofactor expansion along successive rows (memoized on column subsets);
    refuses characteristic 2, where the symmetric-matrix determinant
    degenerates.
    """
    if f.field.p == 2:
        raise EvenCharacteristic("Hessian determinant needs odd characteristic")
    n = f.nvars
    grads = gradient(f)
    H = [[partial_derivative(grads[i], j) for j in range(n)] for i in range(n)]
    memo: dict[tuple[int, tuple[int, ...]], Polynomial] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if not cols:
            return Polynomial.constant(f.field, 1, n)
        key = (row, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        acc = Polynomial.zero(f.field, n)
        for j, col in enumerate(cols):
            entry = H[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:j] + cols[j + 1:])
            term = entry * sub
            acc = acc - term if j % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


# --- linear coordinate change ---

def compose_linear(f: Polynomial, matrix) -> Polynomial:
    """Substitute X_i -> sum_j M[i][j] X_j for a square matrix over the field."""
    field = f.field
    n = f.nvars
    rows = []
    for r in matrix:
        row = [x if isinstance(x, FieldElement) else field.element(x) for x in r]
        if len(row) != n:
            raise ValueError("matrix shape must match the variable count")
        rows.append(row)
    if len(rows) != n:
        raise ValueError("matrix shape must match the variable count")
    lin = []
    for r in rows:
        lin.append(Polynomial(field, n,
                              {tuple(1 if k == j else 0 for k in range(n)): r[j]
                               for j in range(n) if not r[j].is_zero()}))
    max_e = [0] * n
    for m in f.terms:
        for i, e in enumerate(m):
            if e > max_e[i]:
                max_e[i] = e
    pw = []
    for i in range(n):
        rows_i = [Polynomial.constant(field, 1, n)]
        for _ in range(max_e[i]):
            rows_i.append(rows_i[-1] * lin[i])
        pw.append(rows_i)
    out = Polynomial.zero(field, n)
    for m, c in f.terms.items():
        term = Polynomial.constant(field, FieldElement(field, c), n)
        for i, e in enumerate(m):
            if e:
                term = term * pw[i][e]
        out = out + term
    return out
