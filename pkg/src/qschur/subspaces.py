"""Finite-dimensional F_q-subspaces of a polynomial ring.

A Subspace stores the canonical reduced echelon basis of its span: each
basis vector is monic at its leading monomial, that monomial appears in no
other basis vector, and the basis is sorted by descending leading monomial.
This makes equality of subspaces plain tuple equality and gives every
enumeration a deterministic order. The zero subspace has the empty basis.

The additive annihilator of a subspace U is the univariate polynomial
f_U(t), the product of (t + u) over all u in U; it is F_q-linear with
t-exponents the powers q^i. Applying f_U to a basis of V >= U produces the
internal quotient of V by U, again a subspace of the same ring.
"""

from __future__ import annotations

from itertools import product

from .errors import (
    DimensionDrop,
    EnumerationTooLarge,
    NotQPolynomial,
    NotSubspace,
    RingMismatch,
)
from .ppoly import Poly, PolyRing, UniPoly

DEFAULT_ENUMERATION_CEILING = 243


def _reduce(v: Poly, basis: list[Poly]) -> Poly:
    """Eliminate every basis leading monomial from v (F_q-linear reduction)."""
    for b in basis:
        lm = b.leading_monomial()
        c = v.terms.get(lm)
        if c is not None:
            v = v - b.scale(c)
    return v


class Subspace:
    """Span of finitely many ring elements, held as a reduced echelon basis."""

    __slots__ = ("ring", "basis", "_hash")

    def __init__(self, ring: PolyRing, basis: tuple[Poly, ...]):
        # Trusted constructor; use span() to build from arbitrary vectors.
        self.ring = ring
        self.basis = basis
        self._hash = None

    @classmethod
    def span(cls, ring: PolyRing, vectors) -> "Subspace":
        basis: list[Poly] = []
        for v in vectors:
            if v.ring != ring:
                raise RingMismatch("spanning vector from a different ring")
            v = _reduce(v, basis)
            if not v.terms:
                continue
            v = v.scale(v.leading_coeff().inverse())
            lm = v.leading_monomial()
            basis = [
                b - v.scale(b.terms[lm]) if lm in b.terms else b for b in basis
            ]
            basis.append(v)
        key = ring.key
        basis.sort(key=lambda b: key(b.leading_monomial()), reverse=True)
        return cls(ring, tuple(basis))

    @classmethod
    def zero(cls, ring: PolyRing) -> "Subspace":
        return cls(ring, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Poly) -> Poly:
        if v.ring != self.ring:
            raise RingMismatch("vector from a different ring")
        return _reduce(v, list(self.basis))

    def contains_vector(self, v: Poly) -> bool:
        return not self.reduce(v).terms

    def contains(self, other: "Subspace") -> bool:
        if other.ring != self.ring:
            raise RingMismatch("subspace over a different ring")
        return all(self.contains_vector(b) for b in other.basis)

    def describe(self) -> str:
        """Human-readable basis: vectors joined by "; ", "0" when trivial."""
        if not self.basis:
            return "0"
        return "; ".join(str(b) for b in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return other.ring == self.ring and other.basis == self.basis

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring, self.basis))
            self._hash = h
        return h

    def __repr__(self) -> str:
        return f"Subspace({self.describe()})"


def span(ring: PolyRing, vectors) -> Subspace:
    return Subspace.span(ring, vectors)


def _check_ceiling(q: int, dim: int, ceiling: int | None) -> None:
    cap = DEFAULT_ENUMERATION_CEILING if ceiling is None else ceiling
    if q**dim > cap:
        raise EnumerationTooLarge(
            f"enumerating q^dim = {q}^{dim} vectors exceeds the ceiling {cap}"
        )


def enumerate_vectors(V: Subspace, ceiling: int | None = None) -> list[Poly]:
    """All q^dim vectors, zero first; coefficients run in field order with
    the first basis vector most significant."""
    spec = V.ring.spec
    _check_ceiling(spec.q, V.dim, ceiling)
    out = []
    for coeffs in product(spec.elements, repeat=V.dim):
        acc = V.ring.zero
        for c, b in zip(coeffs, V.basis):
            if c.idx:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def enumerate_lines(V: Subspace, ceiling: int | None = None) -> list[Subspace]:
    """All one-dimensional subspaces, each keyed by its monic direction
    vector, in the order those directions appear in enumerate_vectors."""
    spec = V.ring.spec
    _check_ceiling(spec.q, V.dim, ceiling)
    lines = []
    for v in enumerate_vectors(V, ceiling):
        if v.terms and v.leading_coeff().is_one():
            lines.append(Subspace(V.ring, (v,)))
    expected = (spec.q**V.dim - 1) // (spec.q - 1) if V.dim else 0
    assert len(lines) == expected, "line count mismatch"
    return lines


class Flag:
    """A complete flag: a chain V = V_0 > V_1 > ... > V_n = 0, dims dropping by 1."""

    __slots__ = ("chain",)

    def __init__(self, chain):
        chain = tuple(chain)
        if not chain:
            raise NotSubspace("a flag needs at least the zero subspace")
        if chain[-1].dim != 0:
            raise NotSubspace("flag must end at the zero subspace")
        for big, small in zip(chain, chain[1:]):
            if big.dim != small.dim + 1 or not big.contains(small):
                raise NotSubspace("flag steps must drop dimension by exactly one")
        self.chain = chain

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Flag):
            return NotImplemented
        return other.chain == self.chain

    def __hash__(self) -> int:
        return hash(self.chain)

    def __repr__(self) -> str:
        return "Flag(" + " > ".join(s.describe() for s in self.chain) + ")"


def _hyperplanes(V: Subspace) -> list[Subspace]:
    """All codimension-1 subspaces of V, in a deterministic order.

    Each hyperplane is the kernel of a covector on the basis coordinates;
    covectors are normalized so the first nonzero coordinate is one and are
    enumerated in field order.
    """
    spec = V.ring.spec
    n = V.dim
    out = []
    for alpha in product(spec.elements, repeat=n):
        pivot = next((i for i, a in enumerate(alpha) if a.idx), None)
        if pivot is None or not alpha[pivot].is_one():
            continue
        vectors = []
        for j in range(n):
            if j == pivot:
                continue
            vectors.append(V.basis[j] - V.basis[pivot].scale(alpha[j]))
        out.append(Subspace.span(V.ring, vectors))
    return out


def enumerate_flags(V: Subspace, ceiling: int | None = None) -> list[Flag]:
    """All complete flags of V; the zero space has exactly one (itself)."""
    spec = V.ring.spec
    _check_ceiling(spec.q, V.dim, ceiling)

    def rec(W: Subspace) -> list[tuple[Subspace, ...]]:
        if W.dim == 0:
            return [(W,)]
        chains = []
        for H in _hyperplanes(W):
            for tail in rec(H):
                chains.append((W,) + tail)
        return chains

    flags = [Flag(chain) for chain in rec(V)]
    expected = 1
    for i in range(1, V.dim + 1):
        expected *= (spec.q**i - 1) // (spec.q - 1)
    assert len(flags) == expected, "flag count mismatch"
    return flags


def pi_product(V: Subspace, ceiling: int | None = None) -> Poly:
    """Product of all nonzero vectors of V; one for the zero subspace."""
    acc = V.ring.one
    for v in enumerate_vectors(V, ceiling):
        if v.terms:
            acc = acc * v
    return acc


def additive_poly(U: Subspace, ceiling: int | None = None) -> UniPoly:
    """The annihilator f_U(t), the product of (t + u) over all u in U.

    Always additive: every t-exponent is a power of q (asserted)."""
    f = UniPoly.t(U.ring)
    for u in enumerate_vectors(U, ceiling):
        if u.terms:
            f = f * UniPoly.t_plus(u)
    if not f.is_q_poly():
        raise NotQPolynomial(f"annihilator has a non-q-power exponent: {f}")
    return f


def internal_quotient(V: Subspace, U: Subspace, ceiling: int | None = None) -> Subspace:
    """The image of V under the annihilator of U; requires U <= V.

    The result has dimension dim V - dim U; losing more is impossible over
    an integral domain and raises DimensionDrop as an internal guard.
    """
    if U.ring != V.ring:
        raise RingMismatch("quotient of subspaces over different rings")
    if not V.contains(U):
        raise NotSubspace(
            f"quotient denominator {U.describe()} is not contained in {V.describe()}"
        )
    f = additive_poly(U, ceiling)
    images = [f.apply(b) for b in V.basis]
    Q = Subspace.span(V.ring, images)
    if Q.dim != V.dim - U.dim:
        raise DimensionDrop(
            f"quotient dimension {Q.dim}, expected {V.dim - U.dim}"
        )
    return Q


def quotient_tower_check(V: Subspace, U: Subspace, T: Subspace) -> bool:
    """For T <= U <= V: quotient by U equals the two-step quotient through T."""
    if not U.contains(T) or not V.contains(U):
        raise NotSubspace("tower check requires T <= U <= V")
    direct = internal_quotient(V, U)
    two_step = internal_quotient(internal_quotient(V, T), internal_quotient(U, T))
    return direct == two_step


def coset_product_check(U: Subspace, Uprime: Subspace) -> bool:
    """For U' <= U: the product of all nonzero vectors of the quotient U // U'
    equals the product of the vectors of U outside U'."""
    if not U.contains(Uprime):
        raise NotSubspace("coset product check requires U' <= U")
    lhs = pi_product(internal_quotient(U, Uprime))
    rhs = U.ring.one
    for u in enumerate_vectors(U):
        if u.terms and not Uprime.contains_vector(u):
            rhs = rhs * u
    return lhs == rhs


def enumerate_subspaces(V: Subspace, ceiling: int | None = None) -> list[Subspace]:
    """All subspaces of V of every dimension, deduplicated via canonical
    bases, ordered by dimension then basis order."""
    spec = V.ring.spec
    _check_ceiling(spec.q, V.dim, ceiling)
    vectors = [v for v in enumerate_vectors(V, ceiling) if v.terms]
    levels: list[list[Subspace]] = [[Subspace.zero(V.ring)]]
    for d in range(1, V.dim + 1):
        seen = set()
        level = []
        for S in levels[d - 1]:
            for v in vectors:
                if S.contains_vector(v):
                    continue
                W = Subspace.span(V.ring, list(S.basis) + [v])
                if W not in seen:
                    seen.add(W)
                    level.append(W)
        level.sort(key=lambda W: tuple(b.sort_key() for b in W.basis))
        levels.append(level)
    out = []
    for level in levels:
        out.extend(level)
    return out
