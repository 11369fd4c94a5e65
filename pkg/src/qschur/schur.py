"""Schur-style polynomials built from q-power alternants.

The alternant of a composition a = (a_1 > ... > a_n) is the determinant of
the n x n matrix with entries x_i raised to q^(a_j). The quotient of the
alternant at lam + staircase by the staircase alternant is an exact
polynomial in the generic coordinates x1..xn; substituting a basis of an
n-dimensional subspace V gives the straight value S_lam(V), which does not
depend on the basis chosen.

Complete and elementary values H_r and E_r are the straight values at the
one-row and one-column shapes. Skew values are Frobenius-twisted
determinants in the H_r (their tilde companions in the E_r); for skew
values the twist can be negative, so fractional exponents may and do occur.

A SchurContext carries the per-field caches: universal quotients keyed by
(shape, dimension), straight values keyed by (shape, canonical basis), and
skew values keyed likewise with the matrix size. Cache inserts happen once,
under a re-entrant lock.
"""

from __future__ import annotations

import threading
from typing import Sequence

from . import fmatrix, partitions, subspaces
from .errors import (
    HypothesisViolated,
    LengthTooLong,
    NotALine,
    NotSubspace,
    ZeroVector,
)
from .gf import FieldSpec
from .partitions import Partition
from .ppoly import Poly, PolyRing, evaluate_morphism, universal_ring
from .ppoly import _variable_images
from .subspaces import Subspace


def _plain_basis(V: Subspace) -> bool:
    """True when every basis vector is a bare variable.

    Substitution onto such a basis is a relabeling, so the universal route
    costs nothing extra. Denser bases pay for every power of every image,
    which is what the window-identity route avoids.
    """
    return _variable_images(list(V.basis)) is not None


class SchurContext:
    """Caches for one coefficient field."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self._universal: dict[tuple[Partition, int], Poly] = {}
        self._universal_skew: dict[tuple[Partition, Partition, int, int], Poly] = {}
        self._straight: dict[tuple[Partition, Subspace], Poly] = {}
        self._skew: dict[tuple[Partition, Partition, int, Subspace], Poly] = {}
        self._lock = threading.RLock()

    # Universal layer -----------------------------------------------------

    def alternant(self, alpha: Sequence[int], n: int) -> Poly:
        """det(x_i ** q**alpha_j) in the n-variable generic ring."""
        alpha = tuple(alpha)
        if len(alpha) != n:
            raise LengthTooLong(f"composition {alpha} must have length n={n}")
        ring = universal_ring(self.spec, n)
        q = self.spec.q
        one = self.spec.one
        rows = [
            [Poly(ring, {((i, q ** alpha[j], 0),): one}) for j in range(n)]
            for i in range(n)
        ]
        if n == 0:
            return ring.one
        return fmatrix.det(fmatrix.PolyMatrix(ring, rows))

    def universal_schur(self, lam: Partition, n: int) -> Poly:
        """Alternant quotient at lam, an exact polynomial in x1..xn."""
        lam = partitions.partition(lam)
        key = (lam, n)
        with self._lock:
            got = self._universal.get(key)
            if got is None:
                from .ppoly import exact_div

                top = self.alternant(partitions.pad_and_add(lam, n), n)
                bottom = self.alternant(partitions.delta(n), n)
                got = exact_div(top, bottom)
                self._universal[key] = got
        return got

    def universal_skew(self, lam: Partition, mu: Partition, k: int, n: int) -> Poly:
        """Twisted k x k determinant over the one-row values in x1..xn.

        The determinant collapses in the generic ring, which keeps it far
        smaller than the product of its entries after substitution. Negative
        twists can leave fractional exponents in an entry; they usually
        cancel out of the determinant.
        """
        key = (lam, mu, k, n)
        with self._lock:
            got = self._universal_skew.get(key)
            if got is None:
                ring = universal_ring(self.spec, n)
                rows = []
                for i in range(1, k + 1):
                    li = partitions.part(lam, i)
                    row = []
                    for j in range(1, k + 1):
                        mj = partitions.part(mu, j)
                        r = li - mj - i + j
                        if r < 0:
                            entry = ring.zero
                        elif r == 0:
                            entry = ring.one
                        else:
                            entry = self.universal_schur((r,), n)
                        row.append(entry.frobenius(mj - j + 1))
                    rows.append(row)
                got = fmatrix.det(fmatrix.PolyMatrix(ring, rows))
                self._universal_skew[key] = got
        return got

    # Straight values -----------------------------------------------------

    def schur_on_basis(self, lam: Partition, vectors: Sequence[Poly], ring: PolyRing) -> Poly:
        """Straight value on an explicit (independent) spanning list.

        Used to witness basis independence; schur_S is the cached entry point
        on canonical bases.
        """
        lam = partitions.partition(lam)
        n = len(vectors)
        if Subspace.span(ring, vectors).dim != n:
            raise NotSubspace("spanning list is linearly dependent")
        if len(lam) > n:
            return ring.zero
        if n == 0:
            return ring.one
        return evaluate_morphism(self.universal_schur(lam, n), list(vectors))

    def _alternant_on(self, vectors: Sequence[Poly], alpha: Sequence[int], ring: PolyRing) -> Poly:
        """det(v_i ** q**alpha_j) for explicit vectors in their own ring."""
        rows = [[v.frobenius(a) for a in alpha] for v in vectors]
        return fmatrix.det(fmatrix.PolyMatrix(ring, rows))

    def schur_direct(self, lam: Partition, V: Subspace) -> Poly:
        """Straight value by dividing alternants formed on the basis itself.

        Slower than schur_S but shares no code path with the universal
        quotient, so the two serve as cross-checks on each other.
        """
        lam = partitions.partition(lam)
        n = V.dim
        if len(lam) > n:
            return V.ring.zero
        if n == 0:
            return V.ring.one
        from .ppoly import exact_div

        basis = list(V.basis)
        top = self._alternant_on(basis, partitions.pad_and_add(lam, n), V.ring)
        bottom = self._alternant_on(basis, partitions.delta(n), V.ring)
        return exact_div(top, bottom)

    def schur_S(self, lam: Partition, V: Subspace) -> Poly:
        """The straight value S_lam(V); zero when lam is longer than dim V."""
        lam = partitions.partition(lam)
        n = V.dim
        if len(lam) > n:
            return V.ring.zero
        if n == 0:
            return V.ring.one
        key = (lam, V)
        with self._lock:
            got = self._straight.get(key)
            if got is None:
                got = self._straight_value(lam, V)
                self._straight[key] = got
        return got

    def _straight_value(self, lam: Partition, V: Subspace) -> Poly:
        """Uncached straight value, routed by the density of the basis.

        One-column shapes and bare-variable bases morph the universal
        quotient directly. On denser bases the one-row values climb the
        window identity sum_j (-1)^j phi^(r-1)(E_j) H_(r-j) = 0, whose E_j
        are the (small) one-column values, and every other shape is the
        twisted determinant in the one-row values.
        """
        n = V.dim
        if all(p == 1 for p in lam) or _plain_basis(V):
            return evaluate_morphism(self.universal_schur(lam, n), list(V.basis))
        if len(lam) == 1:
            r = lam[0]
            acc = V.ring.zero
            for j in range(1, min(r, n) + 1):
                ej = self.schur_S((1,) * j, V)
                step = ej.frobenius(r - 1) * self.h_r(r - j, V)
                acc = acc + step.scale(self.spec.sign(j + 1))
            return acc
        return self._skew_entrywise(lam, (), V, len(lam))

    def h_r(self, r: int, V: Subspace) -> Poly:
        """Complete value: S at the one-row shape; zero for r < 0, one at r = 0."""
        if r < 0:
            return V.ring.zero
        if r == 0:
            return V.ring.one
        return self.schur_S((r,), V)

    def e_r(self, r: int, V: Subspace) -> Poly:
        """Elementary value: S at the one-column shape; zero outside 0..dim V."""
        if r < 0 or r > V.dim:
            return V.ring.zero
        if r == 0:
            return V.ring.one
        return self.schur_S((1,) * r, V)

    # Skew values ----------------------------------------------------------

    def skew_S(self, lam: Partition, mu: Partition, V: Subspace, k: int | None = None) -> Poly:
        """Twisted determinant det(phi^(mu_j - j + 1) H_(lam_i - mu_j - i + j)).

        The size k defaults to max(len(lam), len(mu)) and any larger k gives
        the same value. Negative twists make fractional exponents possible;
        they are returned as-is. On a bare-variable basis the determinant
        collapses in the generic ring before the basis goes in; when it
        carries fractional exponents (where substitution is undefined) it is
        pushed through k - 1 Frobenius steps first, which clear every
        denominator, and pulled back after. Denser bases take the entrywise
        determinant over the one-row values instead, which never raises a
        basis vector to a large power.
        """
        lam = partitions.partition(lam)
        mu = partitions.partition(mu)
        least = max(len(lam), len(mu))
        if k is None:
            k = least
        elif k < least:
            raise LengthTooLong(f"matrix size {k} below max length {least}")
        if k == 0:
            return V.ring.one
        n = V.dim
        if n == 0:
            return self._skew_entrywise(lam, mu, V, k)
        key = (lam, mu, k, V)
        with self._lock:
            got = self._skew.get(key)
            if got is None:
                if not _plain_basis(V):
                    got = self._skew_entrywise(lam, mu, V, k)
                else:
                    generic = self.universal_skew(lam, mu, k, n)
                    if generic.has_fractional_exponents():
                        # Twists sit at 1 - k or above, so denominators
                        # divide q^(k-1); substitution commutes with
                        # Frobenius.
                        b = k - 1
                        shifted = evaluate_morphism(generic.frobenius(b), list(V.basis))
                        got = shifted.frobenius(-b)
                    else:
                        got = evaluate_morphism(generic, list(V.basis))
                self._skew[key] = got
        return got

    def _skew_entrywise(self, lam: Partition, mu: Partition, V: Subspace, k: int) -> Poly:
        """Determinant over already-substituted entries, in the ring of V."""
        rows = []
        for i in range(1, k + 1):
            li = partitions.part(lam, i)
            row = []
            for j in range(1, k + 1):
                mj = partitions.part(mu, j)
                row.append(self.h_r(li - mj - i + j, V).frobenius(mj - j + 1))
            rows.append(row)
        return fmatrix.det(fmatrix.PolyMatrix(V.ring, rows))

    def tilde_S(self, lam: Partition, mu: Partition, U: Subspace, k: int | None = None) -> Poly:
        """Companion determinant det(phi^(lam_i - i) E_(lam_i - mu_j - i + j))."""
        lam = partitions.partition(lam)
        mu = partitions.partition(mu)
        least = max(len(lam), len(mu))
        if k is None:
            k = least
        elif k < least:
            raise LengthTooLong(f"matrix size {k} below max length {least}")
        if k == 0:
            return U.ring.one
        rows = []
        for i in range(1, k + 1):
            li = partitions.part(lam, i)
            row = []
            for j in range(1, k + 1):
                mj = partitions.part(mu, j)
                row.append(self.e_r(li - mj - i + j, U).frobenius(li - i))
            rows.append(row)
        return fmatrix.det(fmatrix.PolyMatrix(U.ring, rows))

    # Triangular arrays ----------------------------------------------------

    def h_matrix(self, V: Subspace, twist: int = 0) -> fmatrix.TriangularZMatrix:
        """Entries phi^(i + 1 + twist) H_(j - i)(V); unitriangular."""
        return fmatrix.TriangularZMatrix(
            V.ring,
            lambda i, j: self.h_r(j - i, V).frobenius(i + 1 + twist),
            tag=f"H[{V.describe()}]+{twist}",
        )

    def e_matrix(self, V: Subspace) -> fmatrix.TriangularZMatrix:
        """Entries (-1)^(j - i) phi^j E_(j - i)(V); unitriangular."""
        spec = self.spec
        return fmatrix.TriangularZMatrix(
            V.ring,
            lambda i, j: self.e_r(j - i, V).frobenius(j).scale(spec.sign(j - i)),
            tag=f"E[{V.describe()}]",
        )

    def he_inverse_check(self, V: Subspace, lo: int, hi: int) -> bool:
        """The H and E arrays are mutually inverse on any window."""
        prod = fmatrix.window_product(self.h_matrix(V), self.e_matrix(V), lo, hi)
        return prod.is_identity()

    def quotient_factorization_check(self, V: Subspace, U: Subspace) -> bool:
        """H-array of V equals H-array of V // U times the m-twisted H-array
        of U, with m = dim V - dim U, on the window [-(dim V + 3), dim V + 3]."""
        if not V.contains(U):
            raise NotSubspace("factorization check requires U <= V")
        Q = subspaces.internal_quotient(V, U)
        m = V.dim - U.dim
        lo, hi = -(V.dim + 3), V.dim + 3
        prod = fmatrix.window_product(self.h_matrix(Q), self.h_matrix(U, twist=m), lo, hi)
        direct = fmatrix.window_of(self.h_matrix(V), lo, hi)
        return prod == direct

    # Expansions -----------------------------------------------------------

    def coproduct_expand(self, lam: Partition, mu: Partition, V: Subspace, U: Subspace):
        """Expansion of the skew value on V // U through values on V and U.

        Returns (addends, total): for each nu between mu and lam the addend
        (-1)^(|lam| - |nu|) S_(nu/mu)(V) phi^m tilde_S_(lam/nu)(U), with
        m = dim V - dim U. The total equals skew_S(lam, mu, V // U).
        """
        lam = partitions.partition(lam)
        mu = partitions.partition(mu)
        if not V.contains(U):
            raise NotSubspace("coproduct expansion requires U <= V")
        m = V.dim - U.dim
        spec = self.spec
        addends = []
        total = V.ring.zero
        for nu in partitions.subpartitions_between(mu, lam):
            term = (
                self.skew_S(nu, mu, V)
                * self.tilde_S(lam, nu, U).frobenius(m)
            ).scale(spec.sign(partitions.weight(lam) - partitions.weight(nu)))
            addends.append((nu, term))
            total = total + term
        return addends, total

    def pieri_expand(self, lam: Partition, mu: Partition, V: Subspace, ell: Poly) -> Poly:
        """Vertical-strip expansion of the skew value on V // span(ell).

        Sum over nu with lam/nu a vertical strip of
        (-1)^(|lam| - |nu|) ell^(twist exponent) S_(nu/mu)(V).
        Requires ell a nonzero vector of V and len(lam), len(mu) < dim V.
        """
        lam = partitions.partition(lam)
        mu = partitions.partition(mu)
        if not ell.terms:
            raise ZeroVector("expansion direction must be nonzero")
        n = V.dim
        if len(lam) >= n or len(mu) >= n:
            raise LengthTooLong(
                f"shape lengths {len(lam)}, {len(mu)} must be below dim V = {n}"
            )
        if not V.contains_vector(ell):
            raise NotSubspace("expansion direction must lie in V")
        spec = self.spec
        q = spec.q
        total = V.ring.zero
        for nu in partitions.vertical_strip_subpartitions(lam):
            e = partitions.q_exponent(lam, nu, n, q)
            term = (ell**e * self.skew_S(nu, mu, V)).scale(
                spec.sign(partitions.weight(lam) - partitions.weight(nu))
            )
            total = total + term
        return total

    def fullhouse_reduce(self, lam: Partition, V: Subspace) -> Poly:
        """For a shape filling every row of V: S_lam(V) rewritten as
        (-1)^n pi(V) times the q-th power of the shrunken straight value."""
        lam = partitions.partition(lam)
        n = V.dim
        reduced = partitions.decrement_all(lam, n)
        q = self.spec.q
        return (
            subspaces.pi_product(V) * self.schur_S(reduced, V) ** q
        ).scale(self.spec.sign(n))

    def hook_step_check(self, U: Subspace, r: int) -> bool:
        """On a line U: pi(U) * phi(H_(r-1)(U)) == -H_r(U), for r >= 1."""
        if U.dim != 1:
            raise NotALine(f"hook step needs dim 1, got {U.dim}")
        if r < 1:
            raise HypothesisViolated(f"hook step needs r >= 1, got {r}")
        lhs = subspaces.pi_product(U) * self.h_r(r - 1, U).frobenius(1)
        rhs = -self.h_r(r, U)
        return lhs == rhs
