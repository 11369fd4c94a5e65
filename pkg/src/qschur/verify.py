"""Identity sweeps: every statement the library implements has a runnable
exact check here, reported case by case.

A CaseReport names the identity, the parameters it ran at, and pass/fail;
failing reports carry both sides verbatim in text form. run_sweep drives a
grid of checks from a SweepConfig and returns a JSON-ready dict. Everything
is exact equality; there is no tolerance anywhere. Randomized pieces draw
from seeded generators only, so a sweep is reproducible from its seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from . import fmatrix, partitions, subspaces
from .errors import ConfigInvalid, NotDivisible, QschurError
from .gf import FieldSpec, parse_field_spec, power_sum
from .ppoly import (
    Poly,
    PolyRing,
    ambient_ring,
    evaluate_morphism,
    exact_div,
    universal_ring,
)
from .schur import SchurContext
from .subspaces import (
    DEFAULT_ENUMERATION_CEILING,
    Flag,
    Subspace,
    enumerate_flags,
    enumerate_lines,
    enumerate_subspaces,
    enumerate_vectors,
    internal_quotient,
    pi_product,
    span,
)

GROUPS = {
    "vl-recursion": ("vl-recursion",),
    "straight-recursion": ("straight-recursion",),
    "flag-formula": ("flag-formula",),
    "pieri": ("pieri",),
    "coproduct": ("coproduct",),
    "matrix-calculus": (
        "he-inverse",
        "h-factorization",
        "cauchy-binet",
        "sign-scaled-det",
        "zero-block-det",
    ),
    "subspace-calculus": (
        "quotient-tower",
        "coset-product",
        "pi-flag-product",
        "hook-step",
        "full-column-reduction",
    ),
    "elementary": (
        "power-sum-zero",
        "line-sum",
        "pi-of-line",
        "low-degree-point-sum",
        "vector-power-sum",
        "perm-witness",
    ),
    "structural": (
        "gl-invariance",
        "k-independence",
        "vanishing",
        "division-round-trip",
        "degree-formula",
        "functoriality",
        "coproduct-truncation",
    ),
}

ALL_IDENTITIES = tuple(name for members in GROUPS.values() for name in members)


@dataclass
class CaseReport:
    """One checked instance of one identity."""

    identity: str
    q: int
    n: int
    lam: tuple = ()
    mu: tuple = ()
    basis: str = ""
    status: str = "pass"
    lhs: str = ""
    rhs: str = ""
    millis: int = 0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "q": self.q,
            "n": self.n,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "basis": self.basis,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "millis": self.millis,
        }

    def sort_key(self):
        return (self.identity, self.q, self.n, self.lam, self.mu, self.basis)


def _case(identity, ctx_q, V_or_n, lam, mu, t0, ok, lhs_text, rhs_text) -> CaseReport:
    """Assemble a report; sides are only rendered on failure."""
    if isinstance(V_or_n, Subspace):
        n = V_or_n.dim
        basis = V_or_n.describe()
    else:
        n = V_or_n
        basis = ""
    rep = CaseReport(
        identity=identity,
        q=ctx_q,
        n=n,
        lam=tuple(lam),
        mu=tuple(mu),
        basis=basis,
        millis=int((time.perf_counter() - t0) * 1000),
    )
    if not ok:
        rep.status = "fail"
        rep.lhs = lhs_text() if callable(lhs_text) else str(lhs_text)
        rep.rhs = rhs_text() if callable(rhs_text) else str(rhs_text)
    return rep


# Theorem checks -----------------------------------------------------------


def check_vl_recursion(ctx: SchurContext, lam, mu, V: Subspace, summand_fn=None) -> CaseReport:
    """Skew value on V equals the sum of skew values on V // L over all lines L.

    summand_fn(lam, mu, V, L) may replace the per-line term; the default is
    the direct internal-quotient evaluation. The hook exists so the harness
    can be shown to catch a corrupted summand.
    """
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    mu = partitions.partition(mu)
    if summand_fn is None:
        summand_fn = lambda la, m, W, L: ctx.skew_S(la, m, internal_quotient(W, L))
    lhs = ctx.skew_S(lam, mu, V)
    rhs = V.ring.zero
    for L in enumerate_lines(V):
        rhs = rhs + summand_fn(lam, mu, V, L)
    return _case("vl-recursion", ctx.spec.q, V, lam, mu, t0,
                 lhs == rhs, lambda: str(lhs), lambda: str(rhs))


def check_straight_recursion(ctx: SchurContext, lam, V: Subspace) -> CaseReport:
    """Straight value on V equals the sum over lines, by two routes.

    Direct route: evaluate both sides in the ambient ring. Transport route:
    run the same comparison on the generic space spanned by the universal
    variables, then push both sides through the substitution onto V's basis.
    The case passes only when each route holds and the pushed-forward sides
    agree bit for bit with the direct ones.
    """
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    lhs = ctx.schur_S(lam, V)
    rhs = V.ring.zero
    for L in enumerate_lines(V):
        rhs = rhs + ctx.schur_S(lam, internal_quotient(V, L))
    n = V.dim
    uring = universal_ring(ctx.spec, n)
    W = span(uring, uring.gens())
    u_lhs = ctx.schur_S(lam, W)
    u_rhs = uring.zero
    for L in enumerate_lines(W):
        u_rhs = u_rhs + ctx.schur_S(lam, internal_quotient(W, L))
    images = list(V.basis)
    ok = (
        lhs == rhs
        and u_lhs == u_rhs
        and evaluate_morphism(u_lhs, images, target_ring=V.ring) == lhs
        and evaluate_morphism(u_rhs, images, target_ring=V.ring) == rhs
    )
    return _case("straight-recursion", ctx.spec.q, V, lam, (), t0,
                 ok, lambda: str(lhs), lambda: str(rhs))


def check_flag_formula(ctx: SchurContext, lam, V: Subspace) -> CaseReport:
    """Straight value as a sum over complete flags of products of one-row
    values on the successive quotients."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    lhs = ctx.schur_S(lam, V)
    n = V.dim
    rhs = V.ring.zero
    for flag in enumerate_flags(V):
        term = V.ring.one
        for i in range(1, n + 1):
            Q = internal_quotient(flag.chain[i - 1], flag.chain[i])
            term = term * ctx.h_r(partitions.part(lam, i), Q)
        rhs = rhs + term
    return _case("flag-formula", ctx.spec.q, V, lam, (), t0,
                 lhs == rhs, lambda: str(lhs), lambda: str(rhs))


def check_pieri(ctx: SchurContext, lam, mu, V: Subspace, ell: Poly) -> CaseReport:
    """The vertical-strip expansion along ell equals the skew value on the
    quotient by span(ell)."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    mu = partitions.partition(mu)
    L = span(V.ring, [ell])
    lhs = ctx.skew_S(lam, mu, internal_quotient(V, L))
    rhs = ctx.pieri_expand(lam, mu, V, ell)
    return _case("pieri", ctx.spec.q, V, lam, mu, t0,
                 lhs == rhs, lambda: str(lhs), lambda: str(rhs))


def check_coproduct(ctx: SchurContext, lam, mu, V: Subspace, U: Subspace) -> CaseReport:
    """The signed two-factor expansion over intermediate shapes reconstructs
    the skew value on V // U."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    mu = partitions.partition(mu)
    _, total = ctx.coproduct_expand(lam, mu, V, U)
    lhs = ctx.skew_S(lam, mu, internal_quotient(V, U))
    return _case("coproduct", ctx.spec.q, V, lam, mu, t0,
                 lhs == total, lambda: str(lhs), lambda: str(total))


# Matrix calculus ----------------------------------------------------------


def check_he_inverse(ctx: SchurContext, V: Subspace, lo: int, hi: int) -> CaseReport:
    t0 = time.perf_counter()
    ok = ctx.he_inverse_check(V, lo, hi)
    rep = _case("he-inverse", ctx.spec.q, V, (), (), t0,
                ok, "window product", "identity window")
    rep.basis = f"{V.describe()} window [{lo},{hi}]"
    return rep


def check_factorization(ctx: SchurContext, V: Subspace, U: Subspace) -> CaseReport:
    t0 = time.perf_counter()
    ok = ctx.quotient_factorization_check(V, U)
    rep = _case("h-factorization", ctx.spec.q, V, (), (), t0,
                ok, "factored window product", "direct window")
    rep.basis = V.describe() + " // " + U.describe()
    return rep


def _random_poly(ring: PolyRing, rng: random.Random, max_terms=2, max_exp=6,
                 allow_zero=False) -> Poly:
    """A small random polynomial with integer exponents."""
    spec = ring.spec
    nv = ring.nvars
    lo = 0 if allow_zero else 1
    out = ring.zero
    for _ in range(rng.randint(lo, max_terms)):
        m = []
        for v in range(nv):
            e = rng.randint(0, max_exp)
            if e:
                m.append((v, e, 0))
        c = spec.elements[rng.randrange(1, spec.q)]
        out = out + Poly(ring, {tuple(m): c})
    return out


def _band_array(ring: PolyRing, rng: random.Random, lo: int, hi: int, width: int, tag: str):
    """A random unitriangular array supported on a band above the diagonal."""
    cells = {}
    for i in range(lo - 1, hi + 2):
        for j in range(i + 1, min(i + width, hi + 1) + 1):
            cells[(i, j)] = _random_poly(ring, rng, max_terms=2, max_exp=3, allow_zero=True)

    def entry(i, j):
        if i == j:
            return ring.one
        if i > j:
            return ring.zero
        return cells.get((i, j), ring.zero)

    return fmatrix.TriangularZMatrix(ring, entry, tag=tag)


def check_matrix_lemmas(spec: FieldSpec, seed: int, trials: int = 50) -> list[CaseReport]:
    """Randomized exact trials of the product-minor expansion, the sign
    rescaling of a determinant, and the zero-block vanishing criterion."""
    rng = random.Random(f"matrix:{spec.to_text()}:{seed}")
    ring = ambient_ring(spec, 2)
    reports = []

    t0 = time.perf_counter()
    ok = True
    bad = ""
    lo, hi = -4, 6
    for t in range(trials):
        a = _band_array(ring, rng, lo, hi, 2, tag=f"a{t}")
        b = _band_array(ring, rng, lo, hi, 2, tag=f"b{t}")
        u = rng.randint(0, 3)
        ii = tuple(sorted(rng.sample(range(lo, hi + 1), u), reverse=True))
        jj = tuple(sorted(rng.sample(range(lo, hi + 1), u), reverse=True))
        direct, addends = fmatrix.cauchy_binet(a, b, ii, jj)
        total = ring.zero
        for _, left, right in addends:
            total = total + left * right
        if direct != total:
            ok = False
            bad = f"trial {t} rows {ii} cols {jj}"
            break
    reports.append(_case("cauchy-binet", spec.q, 2, (), (), t0, ok,
                         bad or "expansion", "direct minor"))

    t0 = time.perf_counter()
    ok = True
    bad = ""
    for t in range(trials):
        u = rng.randint(1, 3)
        c = fmatrix.PolyMatrix(ring, [
            [_random_poly(ring, rng, max_terms=2, max_exp=3, allow_zero=True)
             for _ in range(u)]
            for _ in range(u)
        ])
        lam = partitions.partition(sorted((rng.randint(0, 3) for _ in range(rng.randint(0, u))), reverse=True))
        nu = partitions.partition(sorted((rng.randint(0, 3) for _ in range(rng.randint(0, u))), reverse=True))
        lhs = fmatrix.scale_sign_det(c, lam, nu)
        rhs = fmatrix.det(c).scale(spec.sign(partitions.weight(lam) - partitions.weight(nu)))
        if lhs != rhs:
            ok = False
            bad = f"trial {t} size {u} lam {lam} nu {nu}"
            break
    reports.append(_case("sign-scaled-det", spec.q, 2, (), (), t0, ok,
                         bad or "rescaled det", "signed det"))

    t0 = time.perf_counter()
    ok = True
    bad = ""
    for t in range(trials):
        u = rng.randint(2, 4)
        xs_count = rng.randint(1, u)
        ys_count = u + 1 - xs_count
        xs = rng.sample(range(u), xs_count)
        ys = rng.sample(range(u), ys_count)
        rows = []
        for i in range(u):
            row = []
            for j in range(u):
                if i in xs and j in ys:
                    row.append(ring.zero)
                else:
                    row.append(_random_poly(ring, rng, max_terms=2, max_exp=3, allow_zero=True))
            rows.append(row)
        c = fmatrix.PolyMatrix(ring, rows)
        if not fmatrix.too_many_zeroes_check(c, xs, ys):
            ok = False
            bad = f"trial {t} size {u} rows {sorted(xs)} cols {sorted(ys)}"
            break
    reports.append(_case("zero-block-det", spec.q, 2, (), (), t0, ok,
                         bad or "det", "0"))
    return reports


# Subspace calculus --------------------------------------------------------


def check_quotient_tower(V: Subspace, U: Subspace, T: Subspace, q: int) -> CaseReport:
    t0 = time.perf_counter()
    ok = subspaces.quotient_tower_check(V, U, T)
    rep = _case("quotient-tower", q, V, (), (), t0, ok, "one-step", "two-step")
    rep.basis = f"{V.describe()} / {U.describe()} / {T.describe()}"
    return rep


def check_coset_product(U: Subspace, Uprime: Subspace, q: int) -> CaseReport:
    t0 = time.perf_counter()
    ok = subspaces.coset_product_check(U, Uprime)
    rep = _case("coset-product", q, U, (), (), t0, ok, "pi of quotient", "coset product")
    rep.basis = f"{U.describe()} / {Uprime.describe()}"
    return rep


def check_pi_flag_product(flag: Flag, q: int) -> CaseReport:
    """pi of the whole space equals the product of pi over the flag steps."""
    t0 = time.perf_counter()
    V = flag.chain[0]
    lhs = pi_product(V)
    rhs = V.ring.one
    for big, small in zip(flag.chain, flag.chain[1:]):
        rhs = rhs * pi_product(internal_quotient(big, small))
    return _case("pi-flag-product", q, V, (), (), t0,
                 lhs == rhs, lambda: str(lhs), lambda: str(rhs))


def check_hook_step(ctx: SchurContext, U: Subspace, r: int) -> CaseReport:
    t0 = time.perf_counter()
    ok = ctx.hook_step_check(U, r)
    return _case("hook-step", ctx.spec.q, U, (r,), (), t0,
                 ok, "pi * twisted H", "-H")


def check_full_column(ctx: SchurContext, lam, V: Subspace) -> CaseReport:
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    lhs = ctx.schur_S(lam, V)
    rhs = ctx.fullhouse_reduce(lam, V)
    return _case("full-column-reduction", ctx.spec.q, V, lam, (), t0,
                 lhs == rhs, lambda: str(lhs), lambda: str(rhs))


# Elementary lemmas --------------------------------------------------------


def check_elementary_lemmas(spec: FieldSpec, n: int, seed: int = 0, trials: int = 20) -> list[CaseReport]:
    """The small arithmetic facts, at dimension n.

    Per-field facts (power sums, the permutation-witness search) are only
    emitted at n = 1 so a sweep does not repeat them per dimension.
    """
    rng = random.Random(f"elementary:{spec.to_text()}:{n}:{seed}")
    q = spec.q
    reports = []
    ring = ambient_ring(spec, max(n, 1))
    V = span(ring, list(ring.gens())[:n])

    if n == 1:
        t0 = time.perf_counter()
        bad_i = next((i for i in range(q - 1) if not power_sum(spec, i).is_zero()), None)
        reports.append(_case("power-sum-zero", q, 1, (), (), t0, bad_i is None,
                             f"sum of {bad_i}-th powers" if bad_i is not None else "0", "0"))
        reports.extend(_check_perm_witness(q))

    if n >= 1:
        t0 = time.perf_counter()
        lines = enumerate_lines(V)
        ok = True
        for _ in range(trials):
            b = {L: _random_poly(ring, rng, max_terms=2, max_exp=4, allow_zero=True)
                 for L in lines}
            lhs = ring.zero
            for L in lines:
                lhs = lhs + b[L]
            rhs = ring.zero
            for w in enumerate_vectors(V):
                if w.terms:
                    rhs = rhs + b[span(ring, [w])]
            if lhs != -rhs:
                ok = False
                break
        reports.append(_case("line-sum", q, V, (), (), t0, ok,
                             lambda: str(lhs), lambda: str(-rhs)))

    if n == 2:
        t0 = time.perf_counter()
        ok = True
        bad = ""
        for w in enumerate_vectors(V):
            if not w.terms:
                continue
            lhs = pi_product(span(ring, [w]))
            rhs = -(w ** (q - 1))
            if lhs != rhs:
                ok = False
                bad = str(w)
                break
        reports.append(_case("pi-of-line", q, V, (), (), t0, ok, bad or "pi", "-v^(q-1)"))

    if n >= 2:
        t0 = time.perf_counter()
        ok = True
        bad = ""
        vectors = [w for w in enumerate_vectors(V) if w.terms]
        for k in range(1, n):
            for a in combinations_with_replacement(range(4), k):
                e = (q - 1) * sum(q**ai for ai in a)
                total = ring.zero
                for w in vectors:
                    total = total + w**e
                if not total.is_zero():
                    ok = False
                    bad = f"k={k} a={a}: " + str(total)
                    break
            if not ok:
                break
        reports.append(_case("vector-power-sum", q, V, (), (), t0, ok, bad or "sum", "0"))

    if 1 <= n <= 3:
        t0 = time.perf_counter()
        degree_bound = n * (q - 1)
        coeff_ring = ambient_ring(spec, 2)
        ok = True
        for _ in range(trials):
            terms = []
            for _ in range(rng.randint(1, 5)):
                exps = _random_exponents(rng, n, degree_bound - 1)
                terms.append((exps, _random_poly(coeff_ring, rng, max_terms=2, max_exp=3)))
            total = coeff_ring.zero
            for point in product(spec.elements, repeat=n):
                for exps, coeff in terms:
                    factor = spec.one
                    for alpha, e in zip(point, exps):
                        factor = factor * alpha**e
                    total = total + coeff.scale(factor)
            if not total.is_zero():
                ok = False
                break
        reports.append(_case("low-degree-point-sum", q, n, (), (), t0, ok,
                             lambda: str(total), "0"))
    return reports


def _random_exponents(rng: random.Random, n: int, total_max: int) -> tuple[int, ...]:
    """A random exponent tuple with nonnegative entries summing to <= total_max."""
    if total_max <= 0:
        return (0,) * n
    exps = []
    left = rng.randint(0, total_max)
    for i in range(n):
        e = rng.randint(0, left) if i < n - 1 else left
        exps.append(e)
        left -= e
    return tuple(exps)


def _check_perm_witness(q: int) -> list[CaseReport]:
    """Exhaustive witness search for sizes up to 6 over a fixed entry window:
    for strictly decreasing alpha, beta with alpha - beta in {0, 1} slotwise
    and any non-identity permutation, some position falls outside {0, 1}."""
    reports = []
    for size in range(1, 7):
        t0 = time.perf_counter()
        ok = True
        bad = ""
        perms = [s for s in partitions.all_permutations(size) if s != tuple(range(size))]
        for beta in combinations(range(3, -4, -1), size):
            for bits in product((0, 1), repeat=size):
                alpha = tuple(b + d for b, d in zip(beta, bits))
                if any(alpha[i - 1] <= alpha[i] for i in range(1, size)):
                    continue
                for sigma in perms:
                    i = partitions.perm_witness(alpha, beta, sigma)
                    if i is None or alpha[i] - beta[sigma[i]] in (0, 1):
                        ok = False
                        bad = f"alpha={alpha} beta={beta} sigma={sigma}"
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(_case("perm-witness", q, size, (), (), t0, ok,
                             bad or "witness", "outside {0,1}"))
    return reports


# Structural properties ----------------------------------------------------


def check_gl_invariance(ctx: SchurContext, lam, V: Subspace, seed: int, changes: int = 10) -> CaseReport:
    """The straight value is unchanged under invertible basis changes."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    rng = random.Random(f"gl:{ctx.spec.to_text()}:{V.describe()}:{lam}:{seed}")
    spec = ctx.spec
    n = V.dim
    base = ctx.schur_S(lam, V)
    ok = True
    done = 0
    while done < changes:
        vectors = []
        for _ in range(n):
            w = V.ring.zero
            for b in V.basis:
                w = w + b.scale(spec.elements[rng.randrange(spec.q)])
            vectors.append(w)
        if Subspace.span(V.ring, vectors).dim != n:
            continue
        done += 1
        if ctx.schur_on_basis(lam, vectors, V.ring) != base:
            ok = False
            break
    return _case("gl-invariance", spec.q, V, lam, (), t0, ok,
                 "value on changed basis", lambda: str(base))


def check_k_independence(ctx: SchurContext, lam, mu, V: Subspace) -> CaseReport:
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    mu = partitions.partition(mu)
    least = max(len(lam), len(mu))
    a = ctx.skew_S(lam, mu, V)
    b = ctx.skew_S(lam, mu, V, k=least + 1)
    return _case("k-independence", ctx.spec.q, V, lam, mu, t0,
                 a == b, lambda: str(a), lambda: str(b))


def check_vanishing(ctx: SchurContext, lam, mu, V: Subspace, U: Subspace) -> list[CaseReport]:
    """Vanishing laws: skew is zero when mu is not contained in lam; the
    companion value is zero when some lam_i - mu_i falls outside 0..dim U."""
    reports = []
    lam = partitions.partition(lam)
    mu = partitions.partition(mu)
    if not partitions.contains(lam, mu):
        t0 = time.perf_counter()
        val = ctx.skew_S(lam, mu, V)
        reports.append(_case("vanishing", ctx.spec.q, V, lam, mu, t0,
                             val.is_zero(), lambda: str(val), "0"))
    k = max(len(lam), len(mu), 1)
    if any(not 0 <= partitions.part(lam, i) - partitions.part(mu, i) <= U.dim
           for i in range(1, k + 1)):
        t0 = time.perf_counter()
        val = ctx.tilde_S(lam, mu, U)
        rep = _case("vanishing", ctx.spec.q, U, lam, mu, t0,
                    val.is_zero(), lambda: str(val), "0")
        rep.basis = "tilde:" + U.describe()
        reports.append(rep)
    return reports


def check_division_round_trip(spec: FieldSpec, seed: int, pairs: int = 200) -> CaseReport:
    """exact_div inverts multiplication, and refuses a forced non-multiple."""
    t0 = time.perf_counter()
    rng = random.Random(f"divide:{spec.to_text()}:{seed}")
    ring = ambient_ring(spec, 2)
    ok = True
    bad = ""
    for t in range(pairs):
        a = _random_poly(ring, rng, max_terms=3, max_exp=spec.q**2, allow_zero=True)
        b = _random_poly(ring, rng, max_terms=3, max_exp=spec.q**2)
        while not b.terms:
            b = _random_poly(ring, rng, max_terms=3, max_exp=spec.q**2)
        if exact_div(a * b, b) != a:
            ok = False
            bad = f"trial {t}: ({a}) * ({b})"
            break
        if t % 10 == 0 and b.total_degree():
            try:
                exact_div(a * b + ring.one, b)
                ok = False
                bad = f"trial {t}: non-multiple divided cleanly by {b}"
                break
            except NotDivisible:
                pass
    rep = _case("division-round-trip", spec.q, 2, (), (), t0, ok,
                bad or "quotient", "a")
    rep.basis = f"pairs={pairs}"
    return rep


def check_degree_formula(ctx: SchurContext, lam, V: Subspace) -> CaseReport:
    """The straight value is homogeneous of degree sum (q^lam_i - 1) q^(n-i)."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    q = ctx.spec.q
    n = V.dim
    val = ctx.schur_S(lam, V)
    expected = sum((q ** partitions.part(lam, i) - 1) * q ** (n - i) for i in range(1, n + 1))
    degs = val.degrees()
    ok = degs == {expected} or (expected == 0 and val.is_one())
    return _case("degree-formula", q, V, lam, (), t0, ok,
                 lambda: "degrees " + str(sorted(degs)), str(expected))


def check_functoriality(ctx: SchurContext, lam, n: int, ring: PolyRing, seed: int) -> CaseReport:
    """Substituting a random independent family commutes with taking values:
    the pushed-forward generic value equals the value on the spanned space."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    spec = ctx.spec
    rng = random.Random(f"func:{spec.to_text()}:{n}:{lam}:{seed}")
    while True:
        images = []
        for _ in range(n):
            w = ring.zero
            for g in ring.gens():
                w = w + g.scale(spec.elements[rng.randrange(spec.q)])
            images.append(w)
        W = Subspace.span(ring, images)
        if W.dim == n:
            break
    pushed = evaluate_morphism(ctx.universal_schur(lam, n), images, target_ring=ring)
    direct = ctx.schur_S(lam, W)
    return _case("functoriality", spec.q, W, lam, (), t0,
                 pushed == direct, lambda: str(pushed), lambda: str(direct))


def check_coproduct_truncation(ctx: SchurContext, lam, mu, nu, V: Subspace, U: Subspace) -> CaseReport:
    """Addends at shapes outside the interval mu..lam vanish."""
    t0 = time.perf_counter()
    lam = partitions.partition(lam)
    mu = partitions.partition(mu)
    nu = partitions.partition(nu)
    if partitions.contains(lam, nu) and partitions.contains(nu, mu):
        raise ConfigInvalid(f"{nu} lies between {mu} and {lam}; pick an outside shape")
    m = V.dim - U.dim
    term = ctx.skew_S(nu, mu, V) * ctx.tilde_S(lam, nu, U).frobenius(m)
    rep = _case("coproduct-truncation", ctx.spec.q, V, lam, mu, t0,
                term.is_zero(), lambda: str(term), "0")
    rep.basis = f"{V.describe()} // {U.describe()} at nu={nu}"
    return rep


# Sweep driver -------------------------------------------------------------


@dataclass
class SweepConfig:
    """Grid description for run_sweep. All bounds are validated up front."""

    fields: tuple = ("q=2", "q=3")
    min_dim: int = 0
    max_dim: int = 3
    max_weight: int = 4
    identities: tuple = ("all",)
    seed: int = 0
    trials: int = 20
    ceiling: int = DEFAULT_ENUMERATION_CEILING

    def selected(self) -> set:
        chosen = set()
        for name in self.identities:
            if name == "all":
                chosen.update(ALL_IDENTITIES)
            elif name in GROUPS:
                chosen.update(GROUPS[name])
            elif name in ALL_IDENTITIES:
                chosen.add(name)
            else:
                raise ConfigInvalid(f"unknown identity {name!r}")
        return chosen

    def validate(self) -> None:
        if not self.fields:
            raise ConfigInvalid("no field specs given")
        for text in self.fields:
            try:
                spec = parse_field_spec(text)
            except QschurError as exc:
                raise ConfigInvalid(f"bad field spec {text!r}: {exc}") from exc
            if spec.q**self.max_dim > self.ceiling:
                raise ConfigInvalid(
                    f"dimension {self.max_dim} at q={spec.q} exceeds the "
                    f"enumeration ceiling {self.ceiling}"
                )
        if not 0 <= self.min_dim <= self.max_dim:
            raise ConfigInvalid(
                f"need 0 <= min_dim <= max_dim, got {self.min_dim}..{self.max_dim}"
            )
        if self.max_weight < 0:
            raise ConfigInvalid(f"max_weight must be nonnegative, got {self.max_weight}")
        if self.trials < 0:
            raise ConfigInvalid(f"trials must be nonnegative, got {self.trials}")
        if not isinstance(self.seed, int):
            raise ConfigInvalid(f"seed must be an integer, got {self.seed!r}")
        self.selected()

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        known = {
            "fields", "min_dim", "max_dim", "max_weight", "identities",
            "seed", "trials", "ceiling",
        }
        unknown = set(data) - known
        if unknown:
            raise ConfigInvalid(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        for key in ("fields", "identities"):
            if key in kwargs:
                value = kwargs[key]
                if isinstance(value, str):
                    value = [value]
                if not isinstance(value, (list, tuple)) or not all(
                    isinstance(v, str) for v in value
                ):
                    raise ConfigInvalid(f"{key} must be a list of strings")
                kwargs[key] = tuple(value)
        for key in ("min_dim", "max_dim", "max_weight", "seed", "trials", "ceiling"):
            if key in kwargs and not isinstance(kwargs[key], int):
                raise ConfigInvalid(f"{key} must be an integer")
        cfg = cls(**kwargs)
        cfg.validate()
        return cfg


def _pair_grid(max_weight: int, max_len: int | None) -> list[tuple]:
    """All (lam, mu) with the stated weight/length caps and |mu| <= |lam|."""
    lams = partitions.partitions_up_to_weight(max_weight, max_len)
    out = []
    for lam in lams:
        for mu in lams:
            if partitions.weight(mu) <= partitions.weight(lam):
                out.append((lam, mu))
    return out


def run_sweep(cfg: SweepConfig) -> dict:
    """Run the selected identities over the configured grid.

    Returns {"cases": [...], "aggregate": {total, passed, failed, seed}} with
    cases sorted canonically. Deterministic for a fixed config apart from the
    millis timing fields.
    """
    cfg.validate()
    chosen = cfg.selected()
    reports: list[CaseReport] = []
    dims = range(cfg.min_dim, cfg.max_dim + 1)
    # Window identities and the coproduct grid stop at dimension 2: their
    # windows need one-row values of index up to dim + 10, which blow up
    # combinatorially in three or more generic variables. See README.
    dim_cap = 2

    for ftext in cfg.fields:
        spec = parse_field_spec(ftext)
        q = spec.q
        ctx = SchurContext(spec)
        ring = ambient_ring(spec, max(cfg.max_dim, 1))
        space_of = {n: span(ring, list(ring.gens())[:n]) for n in dims}

        for n in dims:
            V = space_of[n]
            if n >= 1 and "vl-recursion" in chosen:
                for lam, mu in _pair_grid(cfg.max_weight, n - 1):
                    reports.append(check_vl_recursion(ctx, lam, mu, V))
            if n >= 1 and "straight-recursion" in chosen:
                for lam in partitions.partitions_up_to_weight(cfg.max_weight, n - 1):
                    reports.append(check_straight_recursion(ctx, lam, V))
            if "flag-formula" in chosen:
                for lam in partitions.partitions_up_to_weight(cfg.max_weight, n):
                    reports.append(check_flag_formula(ctx, lam, V))
            if n >= 1 and "pieri" in chosen:
                grid = _pair_grid(cfg.max_weight, n - 1)
                for L in enumerate_lines(V):
                    ell = L.basis[0]
                    for lam, mu in grid:
                        reports.append(check_pieri(ctx, lam, mu, V, ell))
            if n <= dim_cap and "coproduct" in chosen:
                grid = _pair_grid(min(cfg.max_weight, 3), None)
                for U in enumerate_subspaces(V):
                    for lam, mu in grid:
                        reports.append(check_coproduct(ctx, lam, mu, V, U))
            if n <= dim_cap and "he-inverse" in chosen:
                reports.append(check_he_inverse(ctx, V, -(n + 4), n + 4))
            if n <= dim_cap and "h-factorization" in chosen:
                for U in enumerate_subspaces(V):
                    reports.append(check_factorization(ctx, V, U))
            if "quotient-tower" in chosen:
                for U in enumerate_subspaces(V):
                    for T in enumerate_subspaces(U):
                        reports.append(check_quotient_tower(V, U, T, q))
            if "coset-product" in chosen:
                for U in enumerate_subspaces(V):
                    for T in enumerate_subspaces(U):
                        reports.append(check_coset_product(U, T, q))
            if n >= 1 and "pi-flag-product" in chosen:
                for flag in enumerate_flags(V):
                    reports.append(check_pi_flag_product(flag, q))
            if n >= 1 and "hook-step" in chosen:
                for L in enumerate_lines(V):
                    for r in range(1, 4):
                        reports.append(check_hook_step(ctx, L, r))
            if n >= 1 and "full-column-reduction" in chosen:
                for lam in partitions.partitions_up_to_weight(cfg.max_weight, n):
                    if len(lam) == n and partitions.part(lam, n) >= 1:
                        reports.append(check_full_column(ctx, lam, V))
            if n >= 1 and "gl-invariance" in chosen:
                cap = cfg.max_weight if n <= 2 else min(cfg.max_weight, 2)
                for lam in partitions.partitions_up_to_weight(cap, n):
                    reports.append(check_gl_invariance(ctx, lam, V, cfg.seed))
            if "k-independence" in chosen:
                cap = cfg.max_weight if n <= 2 else min(cfg.max_weight, 2)
                for lam, mu in _pair_grid(cap, n):
                    reports.append(check_k_independence(ctx, lam, mu, V))
            if "vanishing" in chosen:
                for lam, mu in _pair_grid(min(cfg.max_weight, 3), None):
                    reports.extend(check_vanishing(ctx, lam, mu, V, V))
            if n >= 1 and "degree-formula" in chosen:
                cap = cfg.max_weight if n <= 2 else min(cfg.max_weight, 2)
                for lam in partitions.partitions_up_to_weight(cap, n):
                    reports.append(check_degree_formula(ctx, lam, V))
            if 1 <= n <= 2 and "functoriality" in chosen:
                for lam in partitions.partitions_up_to_weight(min(cfg.max_weight, 3), n):
                    reports.append(check_functoriality(ctx, lam, n, ring, cfg.seed))

        if any(name in chosen for name in GROUPS["elementary"]):
            for n in range(1, min(3, max(cfg.max_dim, 1)) + 1):
                wanted = check_elementary_lemmas(spec, n, seed=cfg.seed, trials=cfg.trials)
                reports.extend(r for r in wanted if r.identity in chosen)
        if "cauchy-binet" in chosen or "sign-scaled-det" in chosen or "zero-block-det" in chosen:
            wanted = check_matrix_lemmas(spec, cfg.seed, trials=cfg.trials)
            reports.extend(r for r in wanted if r.identity in chosen)
        if "division-round-trip" in chosen:
            reports.append(check_division_round_trip(spec, cfg.seed, pairs=cfg.trials))
        if "coproduct-truncation" in chosen and cfg.max_dim >= 2:
            V = space_of[2]
            U = span(ring, [ring.gen(0)])
            reports.append(check_coproduct_truncation(ctx, (2,), (), (1, 1), V, U))
            reports.append(check_coproduct_truncation(ctx, (1,), (1,), (), V, U))

    reports.sort(key=CaseReport.sort_key)
    passed = sum(1 for r in reports if r.status == "pass")
    return {
        "cases": [r.to_dict() for r in reports],
        "aggregate": {
            "total": len(reports),
            "passed": passed,
            "failed": len(reports) - passed,
            "seed": cfg.seed,
        },
    }
