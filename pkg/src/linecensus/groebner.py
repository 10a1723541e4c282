"""A minimal Buchberger engine over F_{p^e}, grevlex only.

Enough for ideal membership, the Krull dimension of the leading-term
ideal, and smoothness certification of hypersurface cones.  Pair
selection is the normal strategy (lowest lcm degree, ties by creation
order); pairs are filtered by the coprime-leading-monomial criterion
and by the chain criterion (both classical, selection order unchanged).
"""

import heapq
from typing import Optional, Sequence

from .errors import DegreeCapExceeded, IncompleteBasis
from .field import FieldSpec
from .poly import Polynomial, _heap_key, _mono_divides, gradient, grevlex_key
from .projgeom import DEFAULT_EXT_CAP, find_singular_point

DEFAULT_DEGREE_CAP = 64

SMOOTH = "Smooth"
SINGULAR = "Singular"
INCONCLUSIVE = "Inconclusive"


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_mul(a, b):
    if len(a) == 4:
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])
    return tuple(x + y for x, y in zip(a, b))


class _Reducer:
    """Divisor list prepared for repeated normal-form computation."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, polys: Sequence[Polynomial]):
        self.field = field
        self.data = []
        for g in polys:
            lm = g.leading_monomial()
            lc_inv = field._raw_inv(g.terms[lm])
            tail = [(m, c) for m, c in g.terms.items() if m != lm]
            self.data.append((lm, lc_inv, tail))

    def normal_form(self, f: Polynomial) -> Polynomial:
        field = self.field
        data = self.data
        push = heapq.heappush
        pop = heapq.heappop
        cur = dict(f.terms)
        heap = [(*_heap_key(m), m) for m in cur]
        heapq.heapify(heap)
        out = {}
        mt = field.mul_table()
        if mt is not None and f.nvars == 4:
            # flat-table fast path: indices combined as a*q + b
            at = field.add_table()
            nt = field.neg_table()
            q = field.q
            get = cur.get
            while heap:
                m = pop(heap)[-1]
                c = cur.pop(m, 0)
                if not c:
                    continue
                for lm, lc_inv, tail in data:
                    if (lm[0] <= m[0] and lm[1] <= m[1]
                            and lm[2] <= m[2] and lm[3] <= m[3]):
                        break
                else:
                    out[m] = c
                    continue
                s0 = m[0] - lm[0]
                s1 = m[1] - lm[1]
                s2 = m[2] - lm[2]
                s3 = m[3] - lm[3]
                nqc = nt[mt[c * q + lc_inv]]
                for m2, c2 in tail:
                    mm = (s0 + m2[0], s1 + m2[1], s2 + m2[2], s3 + m2[3])
                    v = at[get(mm, 0) * q + mt[nqc * q + c2]]
                    if v:
                        if mm not in cur:
                            push(heap, (-mm[0] - mm[1] - mm[2] - mm[3],
                                        (mm[3], mm[2], mm[1], mm[0]), mm))
                        cur[mm] = v
                    else:
                        cur.pop(mm, None)
            return Polynomial(field, f.nvars, out)
        mul = field._raw_mul
        add = field._raw_add
        neg = field._raw_neg
        while heap:
            m = pop(heap)[-1]
            c = cur.pop(m, 0)
            if not c:
                continue
            for lm, lc_inv, tail in data:
                if _mono_divides(lm, m):
                    break
            else:
                out[m] = c
                continue
            shift = tuple(x - y for x, y in zip(m, lm))
            qc = mul(c, lc_inv)
            for m2, c2 in tail:
                mm = _mono_mul(shift, m2)
                v = add(cur.get(mm, 0), neg(mul(qc, c2)))
                if v:
                    if mm not in cur:
                        push(heap, (*_heap_key(mm), mm))
                    cur[mm] = v
                else:
                    cur.pop(mm, None)
        return Polynomial(field, f.nvars, out)


class GroebnerBasis:
    """A grevlex Groebner basis with its originating generators."""

    __slots__ = ("field", "nvars", "polys", "generators", "order",
                 "reduced", "complete", "_reducer")

    def __init__(self, field, nvars, polys, generators,
                 reduced: bool, complete: bool):
        self.field = field
        self.nvars = nvars
        self.polys = tuple(polys)
        self.generators = tuple(generators)
        self.order = "grevlex"
        self.reduced = reduced
        self.complete = complete
        self._reducer = None

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f modulo the basis."""
        if self._reducer is None:
            self._reducer = _Reducer(self.field, self.polys)
        return self._reducer.normal_form(f)

    def contains(self, f: Polynomial) -> bool:
        """Ideal membership; requires a complete basis."""
        if not self.complete:
            raise IncompleteBasis("membership needs a completed basis")
        return self.reduce(f).is_zero()

    def validate(self) -> bool:
        """Recheck the defining properties; used by tests."""
        red = _Reducer(self.field, self.polys)
        lms = self.leading_monomials()
        for i in range(len(self.polys)):
            for j in range(i + 1, len(self.polys)):
                s = _spair(self.polys[i], self.polys[j])
                if not red.normal_form(s).is_zero():
                    return False
        if self.reduced:
            for i, g in enumerate(self.polys):
                if g.terms[lms[i]] != 1:
                    return False
                for j, lm in enumerate(lms):
                    if j == i:
                        continue
                    if any(_mono_divides(lm, m) for m in g.terms):
                        return False
        return True

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        tag = "reduced" if self.reduced else "partial"
        return f"<GroebnerBasis {tag}, {len(self.polys)} polys>"


def _spair(f: Polynomial, g: Polynomial) -> Polynomial:
    field = f.field
    lmf = f.leading_monomial()
    lmg = g.leading_monomial()
    L = _mono_lcm(lmf, lmg)
    cf = field._raw_inv(f.terms[lmf])
    cg = field._raw_inv(g.terms[lmg])
    sf = tuple(x - y for x, y in zip(L, lmf))
    sg = tuple(x - y for x, y in zip(L, lmg))
    a = Polynomial(field, f.nvars, {sf: cf}) * f
    b = Polynomial(field, f.nvars, {sg: cg}) * g
    return a - b


def buchberger(generators: Sequence[Polynomial],
               degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Reduced grevlex Groebner basis of the given ideal.

    Raises DegreeCapExceeded (carrying the partial basis) when any
    S-polynomial lcm degree passes the cap.
    """
    gens = [g for g in generators]
    if not gens:
        raise ValueError("no generators")
    field = gens[0].field
    nvars = gens[0].nvars
    for g in gens:
        if g.is_zero():
            raise ValueError("zero generator")
        if g.field != field or g.nvars != nvars:
            raise ValueError("generators over different rings")

    basis: list[Polynomial] = []
    lms: list = []
    red = _Reducer(field, [])
    pairs: list = []
    pending: set = set()
    counter = 0

    def add_poly(f):
        nonlocal counter
        f = f.monic()
        idx = len(basis)
        lmf = f.leading_monomial()
        for j in range(idx):
            L = _mono_lcm(lmf, lms[j])
            # coprime leading monomials: S-pair reduces to zero
            if L == _mono_mul(lmf, lms[j]):
                continue
            heapq.heappush(pairs, (sum(L), counter, j, idx, L))
            pending.add((j, idx))
            counter += 1
        basis.append(f)
        lms.append(lmf)
        red.data.append((lmf, field._raw_inv(f.terms[lmf]),
                         [(m, c) for m, c in f.terms.items() if m != lmf]))

    def chain_skippable(i, j, L):
        # some k whose LM divides the lcm, with both cross pairs done
        for k in range(len(basis)):
            if k == i or k == j or not _mono_divides(lms[k], L):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                return True
        return False

    for g in gens:
        r = red.normal_form(g)
        if not r.is_zero():
            add_poly(r)

    while pairs:
        ldeg, _, i, j, L = heapq.heappop(pairs)
        pending.discard((i, j))
        if chain_skippable(i, j, L):
            continue
        if ldeg > degree_cap:
            partial = GroebnerBasis(field, nvars, basis, gens,
                                    reduced=False, complete=False)
            raise DegreeCapExceeded(ldeg, partial)
        s = _spair(basis[i], basis[j])
        r = red.normal_form(s)
        if not r.is_zero():
            add_poly(r)

    # minimal: drop elements whose leading monomial another one divides
    # (each added poly was in normal form, so equal LMs cannot occur)
    lms = [g.leading_monomial() for g in basis]
    minimal = [g for i, g in enumerate(basis)
               if not any(j != i and _mono_divides(lms[j], lms[i])
                          for j in range(len(basis)))]
    # tail-reduce every element by the others
    final = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        if others:
            g = _Reducer(field, others).normal_form(g)
        final.append(g.monic())
    final.sort(key=lambda h: grevlex_key(h.leading_monomial()))
    return GroebnerBasis(field, nvars, final, gens,
                         reduced=True, complete=True)


def lt_ideal_dimension(basis: GroebnerBasis) -> int:
    """Affine Krull dimension of the quotient by the leading-term ideal.

    Largest number of variables U such that no leading monomial involves
    only variables from U; -1 for the unit ideal.
    """
    if not basis.complete:
        raise IncompleteBasis("dimension needs a completed basis")
    n = basis.nvars
    supports = []
    for lm in basis.leading_monomials():
        mask = 0
        for i, e in enumerate(lm):
            if e:
                mask |= 1 << i
        if mask == 0:
            return -1
        supports.append(mask)
    best = -1
    for u in range(1 << n):
        if any(s & ~u == 0 for s in supports):
            continue
        best = max(best, bin(u).count("1"))
    return best


def projective_dimension(generators: Sequence[Polynomial],
                         degree_cap: int = DEFAULT_DEGREE_CAP) -> Optional[int]:
    """Projective dimension of the common zero set, or None on cap overflow.

    -1 means empty (the cone is at most the origin).
    """
    try:
        gb = buchberger(generators, degree_cap)
    except DegreeCapExceeded:
        return None
    return lt_ideal_dimension(gb) - 1


def certify_smooth(F: Polynomial,
                   degree_cap: int = DEFAULT_DEGREE_CAP,
                   ext_cap: int = DEFAULT_EXT_CAP) -> str:
    """Verdict on geometric smoothness of the surface F = 0.

    The cone over a smooth projective hypersurface has its singular
    locus cut out by (F, dF); for a homogeneous ideal a zero-dimensional
    zero set is at most the origin, so leading-term dimension 0
    certifies an empty projective singular locus.  A dimension >= 1
    certifies a geometric singular point even when no rational witness
    exists.  On degree-cap overflow the verdict falls back to point
    scans over extensions, which can only ever certify Singular.
    """
    if F.is_zero() or not F.is_homogeneous():
        raise ValueError("need a nonzero homogeneous polynomial")
    if find_singular_point(F, 1) is not None:
        return SINGULAR
    gens = [F] + [g for g in gradient(F) if not g.is_zero()]
    try:
        gb = buchberger(gens, degree_cap)
    except DegreeCapExceeded:
        for k in range(2, ext_cap + 1):
            if find_singular_point(F, k, ext_cap) is not None:
                return SINGULAR
        return INCONCLUSIVE
    dim = lt_ideal_dimension(gb)
    return SMOOTH if dim <= 0 else SINGULAR
