"""Determinant calculus for matrices of polynomials.

Two matrix shapes appear here. PolyMatrix is a finite dense matrix with
0-based indices. TriangularZMatrix is an infinite upper-triangular array
indexed by arbitrary integers, given by an entry function; windows of it
are materialized as PolyMatrix values. Entry functions must vanish below
the diagonal, and that contract is asserted by sampling on every window a
caller touches.

Determinants are computed by cofactor expansion with memoized minors, which
is exact and fast at the sizes used here (at most seven rows).
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import (
    HypothesisViolated,
    IndexNotDecreasing,
    NotSquare,
    ShapeMismatch,
    WindowInvalid,
)
from .ppoly import Poly, PolyRing


class PolyMatrix:
    """Dense matrix of Poly entries sharing one ring; 0-based indices."""

    __slots__ = ("ring", "entries", "rows", "cols")

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[Poly]]):
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        ents = []
        for row in entries:
            if len(row) != cols:
                raise ShapeMismatch("ragged rows in matrix")
            for e in row:
                if e.ring != ring:
                    raise ShapeMismatch("matrix entry from a different ring")
            ents.append(tuple(row))
        self.ring = ring
        self.entries = tuple(ents)
        self.rows = rows
        self.cols = cols

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.entries[i][j]
                if i == j:
                    if not e.is_one():
                        return False
                elif e.terms:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return other.ring == self.ring and other.entries == self.entries

    def __hash__(self) -> int:
        return hash((self.ring, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(e) for e in row) for row in self.entries
        )
        return f"PolyMatrix[{self.rows}x{self.cols}: {body}]"


def det(m: PolyMatrix) -> Poly:
    """Determinant by cofactor expansion along rows, minors memoized.

    The empty matrix has determinant one.
    """
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    ring = m.ring
    n = m.rows
    if n == 0:
        return ring.one
    entries = m.entries
    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def minor(r: int, cols: tuple[int, ...]) -> Poly:
        if r == n:
            return ring.one
        key = (r, cols)
        got = memo.get(key)
        if got is not None:
            return got
        acc = ring.zero
        for pos, c in enumerate(cols):
            e = entries[r][c]
            if not e.terms:
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1 :])
            term = e * sub
            if pos % 2:
                term = -term
            acc = acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


class TriangularZMatrix:
    """Upper-triangular array over all integer indices, defined by a function.

    entry_fn(i, j) must return a ring element for every pair of integers and
    must vanish whenever i > j. The tag names the array in error messages.
    """

    __slots__ = ("ring", "entry_fn", "tag")

    def __init__(self, ring: PolyRing, entry_fn: Callable[[int, int], Poly], tag: str):
        self.ring = ring
        self.entry_fn = entry_fn
        self.tag = tag

    def entry(self, i: int, j: int) -> Poly:
        return self.entry_fn(i, j)

    def audit_window(self, lo: int, hi: int) -> None:
        """Assert the below-diagonal entries vanish on the window [lo, hi]."""
        for i in range(lo, hi + 1):
            for j in range(lo, i):
                e = self.entry_fn(i, j)
                if e.terms:
                    raise HypothesisViolated(
                        f"array {self.tag} is not upper triangular: "
                        f"entry ({i}, {j}) = {e}"
                    )

    def __repr__(self) -> str:
        return f"TriangularZMatrix({self.tag})"


def window_product(
    a: TriangularZMatrix, b: TriangularZMatrix, lo: int, hi: int
) -> PolyMatrix:
    """The product a*b restricted to rows and columns lo..hi.

    For upper-triangular arrays the (i, j) product entry is the finite sum
    over k in [i, j], so the window is exact.
    """
    if lo > hi:
        raise WindowInvalid(f"window [{lo}, {hi}] is empty")
    if a.ring != b.ring:
        raise WindowInvalid("window product of arrays over different rings")
    a.audit_window(lo, hi)
    b.audit_window(lo, hi)
    ring = a.ring
    size = hi - lo + 1
    rows = []
    for i in range(lo, hi + 1):
        row = []
        for j in range(lo, hi + 1):
            if i > j:
                row.append(ring.zero)
                continue
            acc = ring.zero
            for k in range(i, j + 1):
                left = a.entry_fn(i, k)
                if not left.terms:
                    continue
                right = b.entry_fn(k, j)
                if not right.terms:
                    continue
                acc = acc + left * right
            row.append(acc)
        rows.append(row)
    assert len(rows) == size
    return PolyMatrix(ring, rows)


def window_of(m: TriangularZMatrix, lo: int, hi: int) -> PolyMatrix:
    """Materialize the window [lo, hi] of a triangular array."""
    if lo > hi:
        raise WindowInvalid(f"window [{lo}, {hi}] is empty")
    m.audit_window(lo, hi)
    return PolyMatrix(
        m.ring,
        [[m.entry_fn(i, j) if i <= j else m.ring.zero for j in range(lo, hi + 1)]
         for i in range(lo, hi + 1)],
    )


def sub_minor(
    m: TriangularZMatrix, row_idx: Sequence[int], col_idx: Sequence[int]
) -> PolyMatrix:
    """The finite submatrix on the given integer rows and columns."""
    return PolyMatrix(
        m.ring,
        [[m.entry_fn(i, j) for j in col_idx] for i in row_idx],
    )


def _check_decreasing(idx: Sequence[int], label: str) -> tuple[int, ...]:
    idx = tuple(idx)
    for a, b in zip(idx, idx[1:]):
        if a <= b:
            raise IndexNotDecreasing(f"{label} indices {idx} are not strictly decreasing")
    return idx


def cauchy_binet(
    a: TriangularZMatrix,
    b: TriangularZMatrix,
    row_idx: Sequence[int],
    col_idx: Sequence[int],
):
    """Minor of a product of triangular arrays and its expansion.

    For strictly decreasing rows i and columns j of equal length u, returns
    (d, addends) where d is det of the (i, j) minor of a*b and addends lists
    (g, left, right) over all strictly decreasing g with i_k <= g_k <= j_k:
    left is det of the (i, g) minor of a, right det of the (g, j) minor of b.
    The sum of left*right over the addends equals d. An empty index pair
    yields determinant one and a single empty addend.
    """
    ii = _check_decreasing(row_idx, "row")
    jj = _check_decreasing(col_idx, "column")
    if len(ii) != len(jj):
        raise ShapeMismatch("row and column index tuples differ in length")
    if a.ring != b.ring:
        raise ShapeMismatch("arrays over different rings")
    ring = a.ring
    u = len(ii)
    if u:
        lo = min(ii[-1], jj[-1]) - 1
        hi = max(ii[0], jj[0]) + 1
        a.audit_window(lo, hi)
        b.audit_window(lo, hi)

    rows = []
    for i in ii:
        row = []
        for j in jj:
            acc = ring.zero
            for k in range(i, j + 1):
                left = a.entry_fn(i, k)
                if not left.terms:
                    continue
                right = b.entry_fn(k, j)
                if not right.terms:
                    continue
                acc = acc + left * right
            row.append(acc)
        rows.append(row)
    direct = det(PolyMatrix(ring, rows))

    addends = []

    def build(k: int, prev: int | None, acc: tuple[int, ...]):
        if k == u:
            g = acc
            left = det(sub_minor(a, ii, g))
            right = det(sub_minor(b, g, jj))
            addends.append((g, left, right))
            return
        hi_k = jj[k] if prev is None else min(jj[k], prev - 1)
        for gk in range(hi_k, ii[k] - 1, -1):
            build(k + 1, gk, acc + (gk,))

    build(0, None, ())
    return direct, addends


def scale_sign_det(
    c: PolyMatrix, lam: Sequence[int], nu: Sequence[int]
) -> Poly:
    """Determinant of the matrix with entries (-1)^(lam_i - nu_j - i + j) c_ij.

    Rows and columns are 0-based here; the exponent uses the 1-based form
    lam_i - nu_j - i + j, whose value is unchanged by the shift. Parts beyond
    the length of lam or nu read as zero. Equals (-1)^(|lam| - |nu|) det(c).
    """
    if c.rows != c.cols:
        raise NotSquare(f"determinant of a {c.rows}x{c.cols} matrix")
    u = c.rows
    if len(lam) > u or len(nu) > u:
        raise ShapeMismatch(
            f"partitions of length {len(lam)}, {len(nu)} on a {u}x{u} matrix"
        )
    spec = c.ring.spec
    rows = []
    for i in range(u):
        li = lam[i] if i < len(lam) else 0
        row = []
        for j in range(u):
            nj = nu[j] if j < len(nu) else 0
            row.append(c.entries[i][j].scale(spec.sign(li - nj - i + j)))
        rows.append(row)
    return det(PolyMatrix(c.ring, rows))


def too_many_zeroes_check(c: PolyMatrix, zero_rows, zero_cols) -> bool:
    """Check the vanishing criterion: a u x u matrix with a zero block on
    rows X and columns Y, |X| + |Y| > u, has determinant zero.

    Indices are 0-based. Raises HypothesisViolated when |X| + |Y| <= u or
    some listed entry is nonzero; returns True after asserting det == 0.
    """
    if c.rows != c.cols:
        raise NotSquare(f"determinant of a {c.rows}x{c.cols} matrix")
    u = c.rows
    xs = sorted(set(zero_rows))
    ys = sorted(set(zero_cols))
    for i in xs + ys:
        if not 0 <= i < u:
            raise HypothesisViolated(f"index {i} outside 0..{u - 1}")
    if len(xs) + len(ys) <= u:
        raise HypothesisViolated(
            f"|X| + |Y| = {len(xs) + len(ys)} does not exceed u = {u}"
        )
    for i in xs:
        for j in ys:
            if c.entries[i][j].terms:
                raise HypothesisViolated(
                    f"entry ({i}, {j}) = {c.entries[i][j]} is not zero"
                )
    d = det(c)
    assert not d.terms, f"determinant {d} is nonzero despite the zero block"
    return True
