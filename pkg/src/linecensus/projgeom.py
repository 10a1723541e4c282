"""Points of P^n over finite fields, lines of P^3, tangent planes, point scans.

Lines are represented by the reduced row-echelon form of a 2x4 matrix
spanning the line; this gives a duplicate-free enumeration split across
the six possible pivot-column patterns.  Plucker coordinates are kept as
a checksum, not as the primary representation.
"""

from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import (DependentSpan, ExtensionTooLarge, FieldMismatch,
                     PointNotOnSurface, SingularPoint)
from .field import FieldElement, FieldSpec, embed, make_field
from .poly import Polynomial, evaluate, gradient, restrict_to_line

DEFAULT_EXT_CAP = 3

# pivot-column patterns of a rank-2 RREF 2x4 matrix, enumeration order
_PATTERNS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _free_slots(pattern):
    c1, c2 = pattern
    slots = [(0, j) for j in range(c1 + 1, 4) if j != c2]
    slots += [(1, j) for j in range(c2 + 1, 4)]
    return slots


_SLOTS = tuple(_free_slots(p) for p in _PATTERNS)


def extension_field(field: FieldSpec, k: int) -> FieldSpec:
    """The degree-k extension of field, with the default modulus."""
    if k < 1:
        raise ValueError("extension degree must be positive")
    if k == 1:
        return field
    return make_field(field.p, field.e * k)


class ProjectivePoint:
    """A point of P^n, first nonzero coordinate normalized to 1."""

    __slots__ = ("field", "coords", "_key")

    def __init__(self, coords: Sequence[FieldElement]):
        coords = tuple(coords)
        if not coords:
            raise ValueError("empty coordinate sequence")
        field = coords[0].field
        j = next((i for i, x in enumerate(coords) if x.i), None)
        if j is None:
            raise ValueError("all coordinates zero")
        if coords[j].i != 1:
            s = coords[j].inverse()
            coords = tuple(s * x for x in coords)
        self.field = field
        self.coords = coords
        self._key = tuple(x.i for x in coords)

    @classmethod
    def from_indices(cls, field: FieldSpec, idxs) -> "ProjectivePoint":
        return cls([FieldElement(field, i) for i in idxs])

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.field == other.field and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "[" + " : ".join(str(x) for x in self.coords) + "]"


def point_count(q: int, n: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def point_sort_key(P: ProjectivePoint):
    """Sort key matching the enumerate_points order."""
    pivot = next(i for i, v in enumerate(P._key) if v)
    return (pivot, P._key)


def enumerate_points(field: FieldSpec, n: int = 3) -> Iterator[ProjectivePoint]:
    """All points of P^n(field), grouped by first-nonzero position,
    then lexicographic in the remaining coordinates (canonical element
    order, leftmost coordinate most significant)."""
    q = field.q
    one = field.one
    zero = field.zero
    elems = field.elements()
    for piv in range(n + 1):
        nfree = n - piv
        head = (zero,) * piv + (one,)
        for number in range(q ** nfree):
            tail = []
            rem = number
            for j in range(nfree):
                d = q ** (nfree - 1 - j)
                tail.append(elems[(rem // d) % q])
                rem %= d
            yield ProjectivePoint(head + tuple(tail))


class PlaneRep:
    """A hyperplane of P^3: coefficient 4-sequence, first nonzero = 1."""

    __slots__ = ("field", "coeffs", "_key")

    def __init__(self, field: FieldSpec, coeffs: Sequence[FieldElement]):
        coeffs = tuple(coeffs)
        if len(coeffs) != 4:
            raise ValueError("a plane needs 4 coefficients")
        j = next((i for i, x in enumerate(coeffs) if x.i), None)
        if j is None:
            raise ValueError("zero coefficient sequence")
        if coeffs[j].i != 1:
            s = coeffs[j].inverse()
            coeffs = tuple(s * x for x in coeffs)
        self.field = field
        self.coeffs = coeffs
        self._key = tuple(x.i for x in coeffs)

    def contains(self, point: ProjectivePoint) -> bool:
        if point.field != self.field:
            raise FieldMismatch("plane and point over different fields")
        acc = self.field.zero
        for c, x in zip(self.coeffs, point.coords):
            acc = acc + c * x
        return acc.i == 0

    def __eq__(self, other):
        if not isinstance(other, PlaneRep):
            return NotImplemented
        return self.field == other.field and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "plane(" + ",".join(str(x) for x in self.coeffs) + ")"


class LineRep:
    """An F_q-line of P^3 as the RREF of a spanning 2x4 matrix."""

    __slots__ = ("field", "rows", "pivots", "pluecker")

    def __init__(self, field: FieldSpec, rows, pivots):
        # trusted constructor: rows already RREF with the given pivots
        self.field = field
        self.rows = (tuple(rows[0]), tuple(rows[1]))
        self.pivots = tuple(pivots)
        self.pluecker = self._pluecker()

    def _pluecker(self):
        mul = self.field._raw_mul
        add = self.field._raw_add
        neg = self.field._raw_neg
        r0, r1 = self.rows
        ps = []
        for i in range(4):
            for j in range(i + 1, 4):
                ps.append(add(mul(r0[i], r1[j]), neg(mul(r0[j], r1[i]))))
        jj = next(i for i, v in enumerate(ps) if v)
        iv = self.field._raw_inv(ps[jj])
        ps = tuple(mul(iv, v) for v in ps)
        # quadric relation satisfied by any rank-2 row space
        check = add(mul(ps[0], ps[5]),
                    add(neg(mul(ps[1], ps[4])), mul(ps[2], ps[3])))
        if check:
            raise AssertionError("Plucker relation violated")
        return ps

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "LineRep":
        """Canonicalize two spanning rows (indices or FieldElements)."""
        m = []
        for r in rows:
            row = []
            for x in r:
                if isinstance(x, FieldElement):
                    if x.field != field:
                        raise FieldMismatch("row entry over a different field")
                    row.append(x.i)
                else:
                    row.append(int(x) % field.p)
            if len(row) != 4:
                raise ValueError("rows must have 4 entries")
            m.append(row)
        if len(m) != 2:
            raise ValueError("need exactly 2 rows")
        mul = field._raw_mul
        add = field._raw_add
        neg = field._raw_neg
        inv = field._raw_inv
        pr = 0
        pivots = []
        for col in range(4):
            sel = next((r for r in range(pr, 2) if m[r][col]), None)
            if sel is None:
                continue
            m[pr], m[sel] = m[sel], m[pr]
            iv = inv(m[pr][col])
            m[pr] = [mul(iv, x) for x in m[pr]]
            for r in range(2):
                if r != pr and m[r][col]:
                    f = m[r][col]
                    m[r] = [add(x, neg(mul(f, y)))
                            for x, y in zip(m[r], m[pr])]
            pivots.append(col)
            pr += 1
            if pr == 2:
                break
        if pr < 2:
            raise DependentSpan("rows do not span a line")
        return cls(field, m, pivots)

    @classmethod
    def from_points(cls, p: ProjectivePoint, q: ProjectivePoint) -> "LineRep":
        if p.field != q.field:
            raise FieldMismatch("points over different fields")
        return cls.from_rows(p.field, [p._key, q._key])

    def span(self):
        """The two canonical spanning points as FieldElement 4-tuples."""
        f = self.field
        a = tuple(FieldElement(f, x) for x in self.rows[0])
        b = tuple(FieldElement(f, x) for x in self.rows[1])
        return a, b

    def points(self) -> list:
        """The q+1 rational points on the line, canonical forms."""
        f = self.field
        a, b = self.span()
        out = [ProjectivePoint([x + t * y for x, y in zip(a, b)])
               for t in f.elements()]
        out.append(ProjectivePoint(b))
        return out

    def literal(self) -> str:
        return "|".join(",".join(str(FieldElement(self.field, x))
                                 for x in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, LineRep):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"line({self.literal()})"


def line_count(q: int) -> int:
    return (q * q + 1) * (q * q + q + 1)


def _block_sizes(q: int):
    return [q ** len(slots) for slots in _SLOTS]


def line_from_index(field: FieldSpec, idx: int) -> LineRep:
    """The idx-th line in enumeration order; supports chunked iteration."""
    q = field.q
    if not 0 <= idx < line_count(q):
        raise IndexError("line index out of range")
    rem = idx
    for pattern, slots, size in zip(_PATTERNS, _SLOTS, _block_sizes(q)):
        if rem >= size:
            rem -= size
            continue
        c1, c2 = pattern
        rows = [[0] * 4, [0] * 4]
        rows[0][c1] = 1
        rows[1][c2] = 1
        for pos, (r, c) in enumerate(slots):
            d = q ** (len(slots) - 1 - pos)
            rows[r][c] = (rem // d) % q
            rem %= d
        return LineRep(field, rows, pattern)
    raise AssertionError("unreachable")


def enumerate_lines(field: FieldSpec) -> Iterator[LineRep]:
    """Every F_q-line of P^3 exactly once, in pivot-pattern order."""
    q = field.q
    for pattern, slots in zip(_PATTERNS, _SLOTS):
        c1, c2 = pattern
        for number in range(q ** len(slots)):
            rows = [[0] * 4, [0] * 4]
            rows[0][c1] = 1
            rows[1][c2] = 1
            rem = number
            for pos, (r, c) in enumerate(slots):
                d = q ** (len(slots) - 1 - pos)
                rows[r][c] = (rem // d) % q
                rem %= d
            yield LineRep(field, rows, pattern)


def parse_line_literal(text: str, field: FieldSpec) -> LineRep:
    """Parse "a0,a1,a2,a3|b0,b1,b2,b3" into a canonical LineRep.

    Entries are integers (prime subfield) or parenthesized extension
    literals like "(1+2*g)".
    """
    parts = text.split("|")
    if len(parts) != 2:
        raise ValueError("line literal needs two '|'-separated rows")
    rows = []
    for part in parts:
        entries = part.split(",")
        if len(entries) != 4:
            raise ValueError("each row needs 4 comma-separated entries")
        row = []
        for tok in entries:
            tok = tok.strip()
            if tok.startswith("("):
                from .poly import _Parser
                pp = _Parser(tok, field, 4)
                pp.expect("(")
                row.append(pp.parse_ext_element())
                pp.expect(")")
            else:
                row.append(int(tok) % field.p)
        rows.append(row)
    return LineRep.from_rows(field, rows)


# --- tangent planes ---

def tangent_plane(F: Polynomial, P: ProjectivePoint) -> PlaneRep:
    """The plane with coefficients grad F (P); P must be a smooth point."""
    if evaluate(F, P.coords).i != 0:
        raise PointNotOnSurface(f"{P!r} is not on the surface")
    vals = [evaluate(g, P.coords) for g in gradient(F)]
    if all(v.i == 0 for v in vals):
        raise SingularPoint(f"gradient vanishes at {P!r}")
    plane = PlaneRep(P.field, vals)
    assert plane.contains(P)
    return plane


# --- vectorized point scans ---

def _np_pow(mul_t, arr, e: int, cache=None):
    if e == 1:
        return arr
    if cache is not None and e in cache:
        return cache[e]
    acc = None
    base = arr
    k = e
    while k:
        if k & 1:
            acc = base if acc is None else mul_t[acc, base]
        k >>= 1
        if k:
            base = mul_t[base, base]
    if cache is not None:
        cache[e] = acc
    return acc


def _embedded_terms(F: Polynomial, E: FieldSpec):
    if E == F.field:
        return list(F.terms.items())
    out = []
    memo = {}
    for m, c in F.terms.items():
        ci = memo.get(c)
        if ci is None:
            ci = embed(FieldElement(F.field, c), E).i
            memo[c] = ci
        out.append((m, ci))
    return out


def _eval_block(terms, E: FieldSpec, cols, mul_t, add_t):
    """Evaluate a term list at a block of points given as index columns."""
    n = len(cols[0])
    acc = np.zeros(n, dtype=np.int32)
    caches = [dict() for _ in cols]
    for m, ci in terms:
        term = None
        for i, e in enumerate(m):
            if e:
                pw = _np_pow(mul_t, cols[i], e, caches[i])
                term = pw if term is None else mul_t[term, pw]
        if term is None:
            tv = np.full(n, ci, dtype=np.int32)
        elif ci == 1:
            tv = term
        else:
            tv = mul_t[ci, term]
        acc = add_t[acc, tv]
    return acc


def _point_blocks(E: FieldSpec, n: int = 3, chunk: int = 1 << 18):
    """Index-column blocks covering P^n(E) once, in enumeration order."""
    q = E.q
    for piv in range(n + 1):
        nfree = n - piv
        total = q ** nfree
        for a in range(0, total, chunk):
            b = min(a + chunk, total)
            idx = np.arange(a, b, dtype=np.int64)
            cols = [np.zeros(b - a, np.int32) for _ in range(piv)]
            cols.append(np.ones(b - a, np.int32))
            for j in range(nfree):
                d = q ** (nfree - 1 - j)
                cols.append(((idx // d) % q).astype(np.int32))
            yield cols


def _check_ext(k: int, ext_cap: int):
    if k < 1:
        raise ValueError("extension degree must be positive")
    if k > ext_cap:
        raise ExtensionTooLarge(f"extension degree {k} above cap {ext_cap}")


def count_points_on(F: Polynomial, k: int = 1,
                    ext_cap: int = DEFAULT_EXT_CAP) -> int:
    """Exact #V(F)(F_{q^k}) in P^3 by exhaustive evaluation."""
    _check_ext(k, ext_cap)
    E = extension_field(F.field, k)
    terms = _embedded_terms(F, E)
    try:
        mul_t, add_t = E.numpy_tables()
    except ExtensionTooLarge:
        count = 0
        for P in enumerate_points(E, 3):
            if evaluate(F, P.coords).i == 0:
                count += 1
        return count
    count = 0
    for cols in _point_blocks(E, 3):
        vals = _eval_block(terms, E, cols, mul_t, add_t)
        count += int(np.count_nonzero(vals == 0))
    return count


def count_common_zeros(polys, k: int = 1,
                       ext_cap: int = DEFAULT_EXT_CAP) -> int:
    """#(V(F1) ∩ ... ∩ V(Fm))(F_{q^k}) in P^3 by exhaustive evaluation."""
    polys = list(polys)
    if not polys:
        raise ValueError("no polynomials given")
    base = polys[0].field
    # the zero polynomial vanishes everywhere, so it never cuts anything
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        _check_ext(k, ext_cap)
        return point_count(extension_field(base, k).q, 3)
    polys = nonzero
    for f in polys[1:]:
        if f.field != base:
            raise FieldMismatch("polynomials over different fields")
    _check_ext(k, ext_cap)
    E = extension_field(base, k)
    term_lists = [_embedded_terms(f, E) for f in polys]
    try:
        mul_t, add_t = E.numpy_tables()
    except ExtensionTooLarge:
        count = 0
        for P in enumerate_points(E, 3):
            if all(evaluate(f, P.coords).i == 0 for f in polys):
                count += 1
        return count
    count = 0
    for cols in _point_blocks(E, 3):
        mask = _eval_block(term_lists[0], E, cols, mul_t, add_t) == 0
        for terms in term_lists[1:]:
            if not mask.any():
                break
            sub = [c[mask] for c in cols]
            vals = _eval_block(terms, E, sub, mul_t, add_t)
            keep = vals == 0
            new_mask = np.zeros_like(mask)
            new_mask[np.nonzero(mask)[0][keep]] = True
            mask = new_mask
        count += int(np.count_nonzero(mask))
    return count


def find_singular_point(F: Polynomial, k: int = 1,
                        ext_cap: int = DEFAULT_EXT_CAP) -> Optional[ProjectivePoint]:
    """First point of V(F)(F_{q^k}) where the gradient vanishes, or None."""
    _check_ext(k, ext_cap)
    E = extension_field(F.field, k)
    grads = gradient(F)
    terms = _embedded_terms(F, E)
    grad_terms = [_embedded_terms(g, E) for g in grads]
    try:
        mul_t, add_t = E.numpy_tables()
    except ExtensionTooLarge:
        for P in enumerate_points(E, 3):
            if evaluate(F, P.coords).i == 0:
                if all(evaluate(g, P.coords).i == 0 for g in grads):
                    return P
        return None
    for cols in _point_blocks(E, 3):
        mask = _eval_block(terms, E, cols, mul_t, add_t) == 0
        if not mask.any():
            continue
        sub = [c[mask] for c in cols]
        sing = np.ones(len(sub[0]), dtype=bool)
        for gt in grad_terms:
            if not sing.any():
                break
            if gt:
                sing &= _eval_block(gt, E, sub, mul_t, add_t) == 0
        if sing.any():
            j = int(np.nonzero(sing)[0][0])
            idxs = [int(c[j]) for c in sub]
            return ProjectivePoint.from_indices(E, idxs)
    return None


def lines_contained_in(F: Polynomial) -> list:
    """All F_q-lines whose restriction to F vanishes identically."""
    out = []
    for line in enumerate_lines(F.field):
        a, b = line.span()
        if restrict_to_line(F, a, b).is_zero():
            out.append(line)
    return out
