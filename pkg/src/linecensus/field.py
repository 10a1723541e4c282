"""Finite fields F_{p^e} in polynomial-basis representation.

A field spec is (p, e, modulus) with modulus a monic irreducible of degree e
over F_p, stored constant-term first.  Elements are indexed 0..q-1 by the
integer sum(c_i * p^i) of their coefficient sequence, which makes the index
order the canonical element order (constant term varies fastest).  Small
fields carry multiplication/addition lookup tables built from a discrete-log
table; larger fields fall back to coefficient arithmetic.
"""

from __future__ import annotations

import threading

from .errors import (
    DegreeTooLarge,
    FieldMismatch,
    NoEmbedding,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

# q up to this bound gets flat python-list mul/add tables (scalar hot loops)
_TABLE_CAP = 1200
# q up to this bound gets int32 numpy tables on demand (vector scans)
_NUMPY_CAP = 3000

_MAX_DEGREE = 12

_table_lock = threading.Lock()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- univariate helpers over F_p (coefficient lists, constant-term first) ---

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    # b must be nonzero; returns (quotient, remainder)
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = (a[-1] * inv_lb) % p
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] = (a[k + i] - c * bi) % p
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_powmod(base: list[int], exp: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_divmod(base, mod, p)[1]
    while exp:
        if exp & 1:
            result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
        exp >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Exact irreducibility of a monic polynomial over F_p."""
    e = len(coeffs) - 1
    if e <= 0:
        return False
    if e == 1:
        return True
    # no roots in F_p
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    if e <= 3:
        return True
    if p ** (e // 2) <= 200_000:
        # trial division by every monic polynomial of degree 2..e//2
        for deg in range(2, e // 2 + 1):
            for idx in range(p ** deg):
                div = []
                n = idx
                for _ in range(deg):
                    div.append(n % p)
                    n //= p
                div.append(1)
                if not _poly_divmod(coeffs, div, p)[1]:
                    return False
        return True
    # power-mod test: x^(p^e) == x mod f, and gcd(x^(p^(e/r)) - x, f) = 1
    x = [0, 1]
    t = _poly_powmod(x, p ** e, coeffs, p)
    if _poly_trim([(ti - xi) % p for ti, xi in
                   zip(t + [0] * 2, x + [0] * len(t))]):
        return False
    for r in _prime_factors(e):
        t = _poly_powmod(x, p ** (e // r), coeffs, p)
        diff = [(a - b) % p for a, b in zip(t + [0] * 2, x + [0] * len(t))]
        g = _poly_gcd(coeffs, _poly_trim(diff), p)
        if len(g) != 1:
            return False
    return True


class FieldSpec:
    """A concrete finite field F_{p^e} with a fixed polynomial basis."""

    __slots__ = ("p", "e", "q", "modulus", "_mul", "_add", "_neg", "_inv",
                 "_exp", "_log", "_np_mul", "_np_add", "_elements", "__weakref__")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._mul = None
        self._add = None
        self._neg = None
        self._inv = None
        self._exp = None
        self._log = None
        self._np_mul = None
        self._np_add = None
        self._elements = None

    # identity is (p, e, modulus)
    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"FieldSpec(q={self.q})"
        return f"FieldSpec(q={self.q}, modulus={self.modulus_text()})"

    def modulus_text(self) -> str:
        parts = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}t" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts) if parts else "0"

    # --- index <-> coefficient conversions ---

    def index_to_coeffs(self, n: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(n % p)
            n //= p
        return tuple(out)

    def coeffs_to_index(self, coeffs) -> int:
        n = 0
        for c in reversed(list(coeffs)):
            n = n * self.p + (c % self.p)
        return n

    # --- raw index arithmetic (no FieldElement wrappers) ---

    def _raw_mul(self, a: int, b: int) -> int:
        t = self.mul_table()
        if t is not None:
            return t[a * self.q + b]
        pa = list(self.index_to_coeffs(a))
        pb = list(self.index_to_coeffs(b))
        prod = _poly_mul(_poly_trim(pa), _poly_trim(pb), self.p)
        rem = _poly_divmod(prod, list(self.modulus), self.p)[1]
        return self.coeffs_to_index(rem + [0] * (self.e - len(rem)))

    def _raw_add(self, a: int, b: int) -> int:
        t = self.add_table()
        if t is not None:
            return t[a * self.q + b]
        ca = self.index_to_coeffs(a)
        cb = self.index_to_coeffs(b)
        return self.coeffs_to_index((x + y) % self.p for x, y in zip(ca, cb))

    def _raw_neg(self, a: int) -> int:
        t = self.neg_table()
        if t is not None:
            return t[a]
        return self.coeffs_to_index((-c) % self.p for c in self.index_to_coeffs(a))

    def _raw_inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        t = self.inv_table()
        if t is not None:
            return t[a]
        return self._raw_pow(a, self.q - 2)

    def _raw_pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        self._build_tables()
        if self._log is not None:
            return self._exp[(self._log[a] * k) % (self.q - 1)]
        result, base = 1, a
        while k:
            if k & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            k >>= 1
        return result

    # --- lookup tables ---

    def _build_tables(self) -> None:
        if self._mul is not None or self.q > _TABLE_CAP:
            return
        with _table_lock:
            if self._mul is not None:
                return
            import numpy as np

            p, e, q = self.p, self.e, self.q
            # digit matrix: row n = coefficient vector of element n
            digits = np.zeros((q, e), dtype=np.int64)
            n = np.arange(q)
            for i in range(e):
                digits[:, i] = (n // p ** i) % p
            weights = np.array([p ** i for i in range(e)], dtype=np.int64)

            # discrete log via the smallest generator of the unit group
            gen = self._find_generator()
            exp = [1]
            cur = 1
            for _ in range(q - 2):
                cur = self._mul_by_tuples(cur, gen)
                exp.append(cur)
            log = [0] * q
            for k, v in enumerate(exp):
                log[v] = k
            exp_np = np.array(exp, dtype=np.int64)
            log_np = np.array(log, dtype=np.int64)

            lt = np.zeros((q, q), dtype=np.int64)
            nz = np.arange(1, q)
            lt[1:, 1:] = exp_np[(log_np[nz][:, None] + log_np[nz][None, :]) % (q - 1)]
            at = ((digits[:, None, :] + digits[None, :, :]) % p @ weights)

            self._exp = exp
            self._log = log
            self._neg = list(((-digits % p) @ weights))
            self._inv = [0] + [exp[(q - 1 - log[a]) % (q - 1)] for a in range(1, q)]
            self._mul = [int(x) for x in lt.ravel()]
            self._add = [int(x) for x in at.ravel()]
            if q <= _NUMPY_CAP:
                self._np_mul = lt.astype(np.int32)
                self._np_add = at.astype(np.int32)

    def _mul_by_tuples(self, a: int, b: int) -> int:
        pa = _poly_trim(list(self.index_to_coeffs(a)))
        pb = _poly_trim(list(self.index_to_coeffs(b)))
        prod = _poly_mul(pa, pb, self.p)
        rem = _poly_divmod(prod, list(self.modulus), self.p)[1]
        return self.coeffs_to_index(rem + [0] * (self.e - len(rem)))

    def _order_by_tuples(self, a: int) -> int:
        k, cur = 1, a
        while cur != 1:
            cur = self._mul_by_tuples(cur, a)
            k += 1
        return k

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        factors = _prime_factors(self.q - 1)
        for cand in range(1, self.q):
            ok = True
            for r in factors:
                # cand^((q-1)/r) == 1 means order divides a proper divisor
                k = (self.q - 1) // r
                acc, base = 1, cand
                while k:
                    if k & 1:
                        acc = self._mul_by_tuples(acc, base)
                    base = self._mul_by_tuples(base, base)
                    k >>= 1
                if acc == 1:
                    ok = False
                    break
            if ok:
                return cand
        raise AssertionError("no generator found")

    def mul_table(self):
        self._build_tables()
        return self._mul

    def add_table(self):
        self._build_tables()
        return self._add

    def neg_table(self):
        self._build_tables()
        return self._neg

    def inv_table(self):
        self._build_tables()
        return self._inv

    def numpy_tables(self):
        """(mul, add) as 2-d int32 numpy arrays, or raises for huge fields."""
        from .errors import ExtensionTooLarge

        if self.q > _NUMPY_CAP:
            raise ExtensionTooLarge(
                f"no vector tables for q={self.q} (cap {_NUMPY_CAP})")
        if self._np_mul is None:
            if self.q <= _TABLE_CAP:
                self._build_tables()
            else:
                with _table_lock:
                    if self._np_mul is None:
                        self._build_numpy_only()
        return self._np_mul, self._np_add

    def _build_numpy_only(self) -> None:
        import numpy as np

        p, e, q = self.p, self.e, self.q
        digits = np.zeros((q, e), dtype=np.int64)
        n = np.arange(q)
        for i in range(e):
            digits[:, i] = (n // p ** i) % p
        weights = np.array([p ** i for i in range(e)], dtype=np.int64)
        gen = self._find_generator()
        exp = [1]
        cur = 1
        for _ in range(q - 2):
            cur = self._mul_by_tuples(cur, gen)
            exp.append(cur)
        log = [0] * q
        for k, v in enumerate(exp):
            log[v] = k
        exp_np = np.array(exp, dtype=np.int64)
        log_np = np.array(log, dtype=np.int64)
        lt = np.zeros((q, q), dtype=np.int32)
        nz = np.arange(1, q)
        lt[1:, 1:] = exp_np[(log_np[nz][:, None] + log_np[nz][None, :]) % (q - 1)]
        at = ((digits[:, None, :] + digits[None, :, :]) % p @ weights).astype(np.int32)
        self._np_mul = lt
        self._np_add = at

    # --- public element API ---

    def from_index(self, n: int) -> "FieldElement":
        return FieldElement(self, n)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElement(self, self.coeffs_to_index(coeffs))

    def element(self, n: int) -> "FieldElement":
        """The prime-subfield element n mod p."""
        return FieldElement(self, n % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        if self._elements is None:
            self._elements = [FieldElement(self, i) for i in range(self.q)]
        return list(self._elements)


class FieldElement:
    """An element of a FieldSpec, identified by its canonical index."""

    __slots__ = ("field", "i")

    def __init__(self, field: FieldSpec, i: int):
        self.field = field
        self.i = i

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.index_to_coeffs(self.i)

    def is_zero(self) -> bool:
        return self.i == 0

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_add(self.i, other.i))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._raw_neg(self.i))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field,
                            self.field._raw_add(self.i, self.field._raw_neg(other.i)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._raw_mul(self.i, other.i))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field,
                            self.field._raw_mul(self.i, self.field._raw_inv(other.i)))

    def __pow__(self, k: int):
        if k < 0:
            return FieldElement(self.field,
                                self.field._raw_pow(self.field._raw_inv(self.i), -k))
        return FieldElement(self.field, self.field._raw_pow(self.i, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._raw_inv(self.i))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.i == other % self.field.p
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.i == other.i

    def __hash__(self):
        return hash((self.field.p, self.field.e, self.i))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{format_element(self)} in GF({self.field.q})>"


def make_field(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Construct F_{p^e}.

    When the modulus is omitted, the lexicographically smallest monic
    irreducible of degree e is used (coefficient sequences compared
    constant-term first).
    """
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if not 1 <= e <= _MAX_DEGREE:
        raise DegreeTooLarge(f"extension degree {e} outside 1..{_MAX_DEGREE}")
    if modulus is not None:
        mod = tuple(c % p for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {e} (constant-term first)")
        if not _is_irreducible(list(mod), p):
            raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
        return FieldSpec(p, e, mod)
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    for idx in range(p ** e):
        cand = []
        n = idx
        for _ in range(e):
            cand.append(n % p)
            n //= p
        # idx encodes (c0, c1, ...) with c0 most significant for the lex scan
        cand = list(reversed(cand))
        cand.append(1)
        if _is_irreducible(cand, p):
            return FieldSpec(p, e, tuple(cand))
    raise AssertionError("unreachable: irreducibles of every degree exist")


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    """All q elements in canonical order (constant term varies fastest)."""
    return spec.elements()


def frobenius(x: FieldElement, q0: int) -> FieldElement:
    """x^q0, the Frobenius power for the base order q0."""
    spec = x.field
    p = spec.p
    m = 0
    n = q0
    while n > 1 and n % p == 0:
        n //= p
        m += 1
    if n != 1 or m == 0 or spec.e % m != 0:
        raise NoEmbedding(
            f"base order {q0} does not sit under field of order {spec.q}")
    return x ** q0


_embed_cache: dict[tuple, tuple[FieldSpec, list[int]]] = {}


def _embedding_root_powers(src: FieldSpec, dst: FieldSpec) -> list[int]:
    """Powers rho^0..rho^(e_src-1) of the chosen root of src's modulus in dst."""
    key = (src.p, src.e, src.modulus, dst.p, dst.e, dst.modulus)
    hit = _embed_cache.get(key)
    if hit is not None:
        return hit[1]
    root = None
    for cand in range(dst.q):
        acc = 0
        for c in reversed(src.modulus):
            acc = dst._raw_add(dst._raw_mul(acc, cand), c % dst.p)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise NoEmbedding("source modulus has no root in target field")
    powers = [1]
    for _ in range(src.e - 1):
        powers.append(dst._raw_mul(powers[-1], root))
    _embed_cache[key] = (dst, powers)
    return powers


def embed(x: FieldElement, into: FieldSpec) -> FieldElement:
    """Canonical embedding F_{p^a} -> F_{p^b} (a | b), via the smallest root."""
    src = x.field
    if src == into:
        return x
    if src.p != into.p or into.e % src.e != 0:
        raise NoEmbedding(f"no embedding of GF({src.q}) into GF({into.q})")
    powers = _embedding_root_powers(src, into)
    acc = 0
    for c, rho_i in zip(x.coeffs, powers):
        if c:
            acc = into._raw_add(acc, into._raw_mul(c % into.p, rho_i))
    return FieldElement(into, acc)


def format_element(x: FieldElement) -> str:
    """Canonical element text: an integer, or "(c0+c1*g+...)" for extensions."""
    coeffs = x.coeffs
    if x.field.e == 1 or all(c == 0 for c in coeffs[1:]):
        return str(coeffs[0])
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}g" + (f"^{i}" if i > 1 else ""))
    return "(" + "+".join(parts) + ")"
