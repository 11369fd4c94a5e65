"""Sparse multivariate polynomials over F_q with exponents in N[1/q].

Monomials map variable indices to exponents of the form num / q^dpow,
normalized so dpow == 0 or num is not divisible by q. Fractional exponents
arise from the inverse Frobenius twist (exponents divided by q) and are
first-class citizens: arithmetic, ordering, printing and parsing all handle
them exactly. Substitution is the one operation that insists on integer
exponents.

A PolyRing fixes the coefficient field, the variable names, and a kind tag.
Rings of kind "universal" hold the generic coordinates that quotient
polynomials are computed in before substitution; rings of kind "ambient"
hold actual working variables. Mixing rings in arithmetic is an error, and
evaluate_morphism (substitution) is the only bridge between them.

The monomial order is graded lexicographic: compare exact total degrees
first, then the exponent vectors with the lowest-index variable most
significant. Polynomials print in descending order of that comparison.

Internal monomial shape: a tuple of (var, num, dpow) triples sorted by var,
each exponent normalized and nonzero. The empty tuple is the unit monomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import (
    FractionalExponent,
    NotDivisible,
    PolyParseError,
    RingMismatch,
    TermLimitExceeded,
)
from .gf import FieldElement, FieldSpec

DEFAULT_TERM_LIMIT = 2_000_000
_term_limit = DEFAULT_TERM_LIMIT


def set_term_limit(limit: int) -> None:
    """Set the global guard on term counts produced by multiplication."""
    global _term_limit
    if limit < 1:
        raise ValueError("term limit must be positive")
    _term_limit = limit


def get_term_limit() -> int:
    return _term_limit


class QExp(NamedTuple):
    """An exponent num / q^dpow; normalized iff dpow == 0 or q does not divide num."""

    num: int
    dpow: int


def qexp(num: int, dpow: int, q: int) -> QExp:
    """Normalized exponent num / q^dpow; num must be nonnegative."""
    if num < 0:
        raise ValueError("exponents must be nonnegative")
    if num == 0:
        return QExp(0, 0)
    while dpow > 0 and num % q == 0:
        num //= q
        dpow -= 1
    return QExp(num, dpow)


def _exp_add(n1: int, d1: int, n2: int, d2: int, q: int) -> tuple[int, int]:
    if d1 == d2:
        n, d = n1 + n2, d1
    elif d1 < d2:
        n, d = n1 * q ** (d2 - d1) + n2, d2
    else:
        n, d = n1 + n2 * q ** (d1 - d2), d1
    while d and n % q == 0:
        n //= q
        d -= 1
    return n, d


def _exp_sub(n1: int, d1: int, n2: int, d2: int, q: int) -> tuple[int, int] | None:
    """Exponent difference, or None when the result would be negative."""
    if d1 == d2:
        n, d = n1 - n2, d1
    elif d1 < d2:
        n, d = n1 * q ** (d2 - d1) - n2, d2
    else:
        n, d = n1 - n2 * q ** (d1 - d2), d1
    if n < 0:
        return None
    if n == 0:
        return 0, 0
    while d and n % q == 0:
        n //= q
        d -= 1
    return n, d


def _exp_qshift(n: int, d: int, k: int, q: int) -> tuple[int, int]:
    """Multiply the exponent n / q^d by q^k (k may be negative)."""
    if k >= 0:
        if d >= k:
            return n, d - k
        return n * q ** (k - d), 0
    d -= k
    while d and n % q == 0:
        n //= q
        d -= 1
    return n, d


Monomial = tuple  # of (var, num, dpow) triples, sorted by var

UNIT_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial, q: int) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    push = out.append
    ia, ib = 0, 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        ea = a[ia]
        eb = b[ib]
        va = ea[0]
        vb = eb[0]
        if va < vb:
            push(ea)
            ia += 1
        elif vb < va:
            push(eb)
            ib += 1
        else:
            da = ea[2]
            db = eb[2]
            if da == 0 and db == 0:
                # integer exponents add without renormalizing
                push((va, ea[1] + eb[1], 0))
            else:
                n, d = _exp_add(ea[1], da, eb[1], db, q)
                push((va, n, d))
            ia += 1
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def mono_div(a: Monomial, b: Monomial, q: int) -> Monomial | None:
    """a / b, or None when some exponent of b exceeds the one in a."""
    if not b:
        return a
    bext = dict((v, (n, d)) for v, n, d in b)
    out = []
    for v, n, d in a:
        nb = bext.pop(v, None)
        if nb is None:
            out.append((v, n, d))
            continue
        res = _exp_sub(n, d, nb[0], nb[1], q)
        if res is None:
            return None
        if res[0]:
            out.append((v, res[0], res[1]))
    if bext:
        return None
    return tuple(out)


def mono_frobenius(m: Monomial, k: int, q: int) -> Monomial:
    if k == 0 or not m:
        return m
    return tuple((v,) + _exp_qshift(n, d, k, q) for v, n, d in m)


def mono_degree(m: Monomial, q: int) -> Fraction:
    deg = Fraction(0)
    for _, n, d in m:
        deg += Fraction(n, q**d)
    return deg


def mono_key(m: Monomial, q: int, nvars: int):
    """Graded-lex sort key: (total degree, exponent vector, var 0 first).

    Entries are plain ints for integer exponents and Fractions otherwise;
    the two compare exactly against each other, so keys stay cheap on the
    common integer-exponent path.
    """
    vec = [0] * nvars
    deg = 0
    for v, n, d in m:
        e = n if d == 0 else Fraction(n, q**d)
        vec[v] = e
        deg = deg + e
    return (deg, tuple(vec))


AMBIENT_NAMES = ("x", "y", "z", "w", "v", "u", "s", "r")

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")


class PolyRing:
    """Polynomial ring: a field spec, ordered variable names, and a kind tag."""

    __slots__ = ("spec", "names", "kind", "zero", "one", "_gens", "_name_index", "_hash")

    def __init__(self, spec: FieldSpec, names: Iterable[str], kind: str = "ambient"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise RingMismatch("ring variable names must be distinct")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise RingMismatch(f"bad variable name {nm!r}")
        if kind not in ("ambient", "universal"):
            raise RingMismatch(f"unknown ring kind {kind!r}")
        self.spec = spec
        self.names = names
        self.kind = kind
        self._hash = hash((spec, names, kind))
        self._name_index = {nm: i for i, nm in enumerate(names)}
        self.zero = Poly(self, {})
        self.one = Poly(self, {UNIT_MONO: spec.one})
        self._gens = tuple(
            Poly(self, {((i, 1, 0),): spec.one}) for i in range(len(names))
        )

    @property
    def nvars(self) -> int:
        return len(self.names)

    def gens(self) -> tuple["Poly", ...]:
        return self._gens

    def gen(self, i: int) -> "Poly":
        return self._gens[i]

    def from_coeff(self, c: FieldElement | int) -> "Poly":
        if isinstance(c, int):
            c = self.spec.element(c)
        elif c.spec != self.spec:
            raise RingMismatch("coefficient from a different field")
        if c.idx == 0:
            return self.zero
        return Poly(self, {UNIT_MONO: c})

    def key(self, m: Monomial):
        return mono_key(m, self.spec.q, len(self.names))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolyRing)
            and other.spec == self.spec
            and other.names == self.names
            and other.kind == self.kind
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PolyRing({self.spec.to_text()}, {self.names}, {self.kind})"

    def parse(self, text: str) -> "Poly":
        return _parse_poly(self, text)


_AMBIENT_CACHE: dict[tuple[FieldSpec, int], PolyRing] = {}
_UNIVERSAL_CACHE: dict[tuple[FieldSpec, int], PolyRing] = {}


def ambient_ring(spec: FieldSpec, n: int) -> PolyRing:
    """Working ring with n variables named x, y, z, w, v, u, s, r."""
    if n > len(AMBIENT_NAMES):
        raise RingMismatch(f"ambient rings support at most {len(AMBIENT_NAMES)} variables")
    ring = _AMBIENT_CACHE.get((spec, n))
    if ring is None:
        ring = PolyRing(spec, AMBIENT_NAMES[:n], "ambient")
        _AMBIENT_CACHE[(spec, n)] = ring
    return ring


def universal_ring(spec: FieldSpec, n: int) -> PolyRing:
    """Generic-coordinate ring with n variables named x1..xn."""
    ring = _UNIVERSAL_CACHE.get((spec, n))
    if ring is None:
        ring = PolyRing(spec, tuple(f"x{i}" for i in range(1, n + 1)), "universal")
        _UNIVERSAL_CACHE[(spec, n)] = ring
    return ring


def _merge_term(out: dict, m: Monomial, c: FieldElement) -> None:
    prev = out.get(m)
    if prev is None:
        out[m] = c
        return
    s = prev + c
    if s.idx == 0:
        del out[m]
    else:
        out[m] = s


class Poly:
    """Immutable sparse polynomial; terms is a dict Monomial -> nonzero coeff."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(
                    f"operands in different rings: {self.ring!r} vs {other.ring!r}"
                )
            return other
        if isinstance(other, FieldElement) or isinstance(other, int):
            return self.ring.from_coeff(other)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and UNIT_MONO in self.terms and self.terms[UNIT_MONO].idx == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        spec = self.ring.spec
        add_t = spec.add_table
        elems = spec.elements
        out = dict(self.terms)
        get = out.get
        for m, c in other.terms.items():
            prev = get(m)
            if prev is None:
                out[m] = c
            else:
                s = add_t[prev.idx][c.idx]
                if s:
                    out[m] = elems[s]
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        if self.ring.spec.p == 2 or not self.terms:
            return self
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(
                f"operands in different rings: {self.ring!r} vs {other.ring!r}"
            )
        ta, tb = self.terms, other.terms
        if not ta or not tb:
            return self.ring.zero
        limit = _term_limit
        spec = self.ring.spec
        q = spec.q
        mul_t = spec.mul_table
        add_t = spec.add_table
        elems = spec.elements
        # accumulate coefficient indices; nonzero products never hit index 0
        out: dict = {}
        get = out.get
        tb_items = [(mb, cb.idx) for mb, cb in tb.items()]
        for ma, ca in ta.items():
            mrow = mul_t[ca.idx]
            for mb, cbi in tb_items:
                m = mono_mul(ma, mb, q)
                ci = mrow[cbi]
                prev = get(m)
                if prev is None:
                    out[m] = ci
                else:
                    s = add_t[prev][ci]
                    if s:
                        out[m] = s
                    else:
                        del out[m]
            if len(out) > limit:
                raise TermLimitExceeded(
                    f"product holds {len(out)} terms, over the limit {limit}"
                )
        return Poly(self.ring, {m: elems[i] for m, i in out.items()})

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: FieldElement | int) -> "Poly":
        if isinstance(c, int):
            c = self.ring.spec.element(c)
        elif c.spec != self.ring.spec:
            raise RingMismatch("scalar from a different field")
        if c.idx == 0:
            return self.ring.zero
        if c.idx == 1:
            return self
        spec = self.ring.spec
        crow = spec.mul_table[c.idx]
        elems = spec.elements
        return Poly(self.ring, {m: elems[crow[cc.idx]] for m, cc in self.terms.items()})

    def __pow__(self, m: int) -> "Poly":
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            raise ValueError("polynomial powers must be nonnegative")
        if m == 0:
            return self.ring.one
        if not self.terms:
            return self
        q = self.ring.spec.q
        digits = []
        mm = m
        while mm:
            digits.append(mm % q)
            mm //= q
        small: dict[int, Poly] = {1: self}
        result = None
        for k, d in enumerate(digits):
            if d == 0:
                continue
            if d not in small:
                acc = self
                for _ in range(d - 1):
                    acc = acc * self
                small[d] = acc
            piece = small[d].frobenius(k)
            result = piece if result is None else result * piece
        return result

    def frobenius(self, k: int) -> "Poly":
        """Raise every exponent by the factor q^k; coefficients unchanged."""
        if k == 0 or not self.terms:
            return self
        q = self.ring.spec.q
        return Poly(
            self.ring,
            {mono_frobenius(m, k, q): c for m, c in self.terms.items()},
        )

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    def leading_coeff(self) -> FieldElement:
        return self.terms[self.leading_monomial()]

    def has_fractional_exponents(self) -> bool:
        return any(d for m in self.terms for _, _, d in m)

    def degrees(self) -> set[Fraction]:
        q = self.ring.spec.q
        return {mono_degree(m, q) for m in self.terms}

    def total_degree(self) -> Fraction | None:
        degs = self.degrees()
        return max(degs) if degs else None

    def coeff_of(self, m: Monomial) -> FieldElement:
        return self.terms.get(m, self.ring.spec.zero)

    def evaluate_points(self, values: list[FieldElement]) -> FieldElement:
        """Evaluate at field elements (one per ring variable); integer exponents only."""
        spec = self.ring.spec
        if len(values) != self.ring.nvars:
            raise RingMismatch(
                f"expected {self.ring.nvars} values, got {len(values)}"
            )
        for v in values:
            if v.spec != spec:
                raise RingMismatch("evaluation point from a different field")
        acc = spec.zero
        for m, c in self.terms.items():
            term = c
            for var, n, d in m:
                if d:
                    raise FractionalExponent(
                        "point evaluation requires integer exponents"
                    )
                term = term * values[var] ** n
            acc = acc + term
        return acc

    def sort_key(self):
        """Deterministic total order key among polynomials of one ring."""
        key = self.ring.key
        return tuple(
            (key(m), self.terms[m].idx)
            for m in sorted(self.terms, key=key, reverse=True)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return other.ring == self.ring and other.terms == self.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset((m, c.idx) for m, c in self.terms.items())))
            self._hash = h
        return h

    def __str__(self) -> str:
        return poly_to_text(self)

    def __repr__(self) -> str:
        return f"Poly({self!s})"


def poly_to_text(p: Poly) -> str:
    """Canonical text: terms in descending graded-lex order joined by " + "."""
    if not p.terms:
        return "0"
    ring = p.ring
    q = ring.spec.q
    names = ring.names
    parts = []
    for m in sorted(p.terms, key=ring.key, reverse=True):
        c = p.terms[m]
        factors = []
        for v, n, d in m:
            name = names[v]
            if d == 0:
                factors.append(name if n == 1 else f"{name}^{n}")
            else:
                factors.append(f"{name}^{n}/{q ** d}")
        if not factors:
            parts.append(str(c))
        elif c.is_one():
            parts.append("*".join(factors))
        else:
            parts.append(str(c) + "*" + "*".join(factors))
    return " + ".join(parts)


_COEFF_VEC_RE = re.compile(r"^\[\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*\]$")
_VAR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^([0-9]+)(?:/([0-9]+))?)?$")


def _parse_poly(ring: PolyRing, text: str) -> Poly:
    spec = ring.spec
    q = spec.q
    stripped = text.strip()
    if not stripped:
        raise PolyParseError("empty polynomial text")
    out: dict = {}
    for raw_term in stripped.split("+"):
        term = raw_term.strip()
        if not term:
            raise PolyParseError(f"empty term in {text!r}")
        coeff = spec.one
        exps: dict[int, tuple[int, int]] = {}
        for raw_factor in term.split("*"):
            factor = raw_factor.strip()
            if not factor:
                raise PolyParseError(f"empty factor in term {term!r}")
            if factor.isdigit():
                coeff = coeff * spec.element(int(factor))
                continue
            mvec = _COEFF_VEC_RE.match(factor)
            if mvec:
                cs = [int(c) for c in mvec.group(1).split(",")]
                if len(cs) != spec.e:
                    raise PolyParseError(
                        f"coefficient {factor} has {len(cs)} coordinates, field needs {spec.e}"
                    )
                coeff = coeff * spec.element(cs)
                continue
            mv = _VAR_RE.match(factor)
            if not mv:
                raise PolyParseError(f"cannot parse factor {factor!r}")
            name = mv.group(1)
            var = ring._name_index.get(name)
            if var is None:
                raise PolyParseError(
                    f"unknown variable {name!r}; ring variables are {', '.join(ring.names)}"
                )
            num = int(mv.group(2)) if mv.group(2) else 1
            dpow = 0
            if mv.group(3):
                den = int(mv.group(3))
                if den < 1:
                    raise PolyParseError(f"bad exponent denominator in {factor!r}")
                while den > 1:
                    if den % q:
                        raise PolyParseError(
                            f"exponent denominator in {factor!r} is not a power of q={q}"
                        )
                    den //= q
                    dpow += 1
            if num == 0:
                continue
            prev = exps.get(var)
            if prev is None:
                exps[var] = qexp(num, dpow, q)
            else:
                exps[var] = QExp(*_exp_add(prev[0], prev[1], num, dpow, q))
        if coeff.idx == 0:
            continue
        mono = tuple(sorted((v, n, d) for v, (n, d) in exps.items()))
        _merge_term(out, mono, coeff)
    return Poly(ring, out)


def exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient a / b by repeated leading-term cancellation; raises NotDivisible."""
    if a.ring != b.ring:
        raise RingMismatch("exact_div operands in different rings")
    if not b.terms:
        raise NotDivisible("division by the zero polynomial")
    ring = a.ring
    if not a.terms:
        return ring.zero
    key = ring.key
    q = ring.spec.q
    mb = max(b.terms, key=key)
    cb_inv = b.terms[mb].inverse()
    b_items = list(b.terms.items())
    rem = dict(a.terms)
    out: dict = {}
    while rem:
        mr = max(rem, key=key)
        mq = mono_div(mr, mb, q)
        if mq is None:
            raise NotDivisible(
                "leading term "
                + poly_to_text(Poly(ring, {mr: rem[mr]}))
                + " is not divisible by the divisor's leading term"
            )
        cq = rem[mr] * cb_inv
        out[mq] = cq
        ncq = -cq
        for m2, c2 in b_items:
            _merge_term(rem, mono_mul(mq, m2, q), ncq * c2)
    return Poly(ring, out)


def _variable_images(images) -> list[int] | None:
    """Indices of the target variables when every image is a bare variable."""
    out = []
    for im in images:
        if len(im.terms) != 1:
            return None
        m, c = next(iter(im.terms.items()))
        if len(m) != 1 or m[0][1] != 1 or m[0][2] != 0 or not c.is_one():
            return None
        out.append(m[0][0])
    return out


def evaluate_morphism(
    p: Poly, images: list[Poly], target_ring: PolyRing | None = None
) -> Poly:
    """Substitute images for the variables of a universal-ring polynomial.

    The source must be a universal ring and p must have integer exponents;
    the images must all live in one ring over the same field, which becomes
    the target. target_ring is only needed for zero-variable sources.
    """
    ring = p.ring
    if ring.kind != "universal":
        raise RingMismatch("substitution source must be a universal ring")
    if len(images) != ring.nvars:
        raise RingMismatch(
            f"need {ring.nvars} images for {ring.nvars} variables, got {len(images)}"
        )
    if images:
        tring = images[0].ring
        for im in images[1:]:
            if im.ring != tring:
                raise RingMismatch("images live in different rings")
        if target_ring is not None and target_ring != tring:
            raise RingMismatch("explicit target ring disagrees with the images")
    else:
        if target_ring is None:
            raise RingMismatch("zero-variable substitution needs an explicit target ring")
        tring = target_ring
    if tring.spec != ring.spec:
        raise RingMismatch("substitution cannot change the coefficient field")
    spec = tring.spec
    q = spec.q
    add_t = spec.add_table
    mul_t = spec.mul_table
    elems = spec.elements
    varmap = _variable_images(images)
    if varmap is not None:
        # Plain variable images: substitution is a relabeling, no products.
        acc: dict = {}
        get = acc.get
        for m, c in p.terms.items():
            ents: dict[int, tuple[int, int]] = {}
            for var, n, d in m:
                if d:
                    raise FractionalExponent("substitution requires integer exponents")
                w = varmap[var]
                if w in ents:
                    ents[w] = _exp_add(ents[w][0], ents[w][1], n, 0, q)
                else:
                    ents[w] = (n, 0)
            mm = tuple((w, nn, dd) for w, (nn, dd) in sorted(ents.items()))
            prev = get(mm)
            if prev is None:
                acc[mm] = c.idx
            else:
                s = add_t[prev][c.idx]
                if s:
                    acc[mm] = s
                else:
                    del acc[mm]
        return Poly(tring, {m: elems[i] for m, i in acc.items()})
    acc = {}
    get = acc.get
    pow_cache: dict[tuple[int, int], Poly] = {}
    for m, c in p.terms.items():
        piece: Poly | None = None
        for var, n, d in m:
            if d:
                raise FractionalExponent("substitution requires integer exponents")
            pw = pow_cache.get((var, n))
            if pw is None:
                pw = images[var] ** n
                pow_cache[(var, n)] = pw
            piece = pw if piece is None else piece * pw
        if piece is None:
            prev = get(UNIT_MONO)
            if prev is None:
                acc[UNIT_MONO] = c.idx
            else:
                s = add_t[prev][c.idx]
                if s:
                    acc[UNIT_MONO] = s
                else:
                    del acc[UNIT_MONO]
        else:
            crow = mul_t[c.idx]
            for mm, cc in piece.terms.items():
                v = crow[cc.idx]
                prev = get(mm)
                if prev is None:
                    acc[mm] = v
                else:
                    s = add_t[prev][v]
                    if s:
                        acc[mm] = s
                    else:
                        del acc[mm]
    return Poly(tring, {m: elems[i] for m, i in acc.items()})


class UniPoly:
    """Polynomial in one extra variable t with Poly coefficients.

    Exponents of t are plain nonnegative integers; coefficients are nonzero
    polynomials of one shared ring. Used for additive annihilators of
    subspaces, where every exponent is a power of q.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    @classmethod
    def t(cls, ring: PolyRing) -> "UniPoly":
        return cls(ring, {1: ring.one})

    @classmethod
    def t_plus(cls, v: Poly) -> "UniPoly":
        coeffs = {1: v.ring.one}
        if v.terms:
            coeffs[0] = v
        return cls(v.ring, coeffs)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch("univariate operands in different rings")
        out: dict = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                prod = ca * cb
                prev = out.get(e)
                s = prod if prev is None else prev + prod
                if s.terms:
                    out[e] = s
                elif e in out:
                    del out[e]
        return UniPoly(self.ring, out)

    def apply(self, v: Poly) -> Poly:
        """Evaluate at a polynomial argument."""
        if v.ring != self.ring:
            raise RingMismatch("argument in a different ring")
        acc = self.ring.zero
        for e, c in self.coeffs.items():
            acc = acc + c * v**e
        return acc

    __call__ = apply

    def coefficient(self, e: int) -> Poly:
        return self.coeffs.get(e, self.ring.zero)

    def t_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero univariate polynomial")
        return max(self.coeffs)

    def is_q_poly(self) -> bool:
        """True iff every t-exponent is a power of q (1, q, q^2, ...)."""
        q = self.ring.spec.q
        for e in self.coeffs:
            if e < 1:
                return False
            while e % q == 0:
                e //= q
            if e != 1:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return other.ring == self.ring and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                ctext = str(c)
                parts.append(f"({ctext})" if " + " in ctext else ctext)
                continue
            tpart = "t" if e == 1 else f"t^{e}"
            if c.is_one():
                parts.append(tpart)
            else:
                parts.append(f"({c})*{tpart}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self!s})"
