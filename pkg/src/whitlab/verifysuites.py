"""Named verification suites pairing every closed formula with an oracle.

Each suite returns a list of Check records (name, passed, lhs, rhs, seconds).
The CLI `verify` command prints them; the acceptance test module asserts
them.  Check names carry a cNN prefix tying them to the numbered acceptance
criteria.

Oracle vocabulary used throughout:
  closure brute force   build the geometry, run the Moebius recursion, sum
                        by rank (lattice.build_geometry + whitney_and_charpoly)
  enumeration brute     stream all k-subspaces, count avoiders/meeters
                        against the minimal representatives, then transform
Both are independent of every closed formula they are compared against.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import distributions as dist
from . import hwdl
from . import polyfit
from .agreement import (
    gamma,
    gamma_enum_oracle,
    gamma_poly,
    gamma_poly_degree_observed,
    gamma_poly_matches_at,
    line_count,
    line_count_enum,
)
from .errors import BudgetExceeded
from .exactmath import UniPolyQ, binom, expand_linear_factors, deflate_roots, qbinom
from .gfq import field_new
from .lattice import (
    RestrictionGeometry,
    assert_sign_alternation,
    build_geometry,
    critical_exponent,
    mobius_of,
    mobius_via_distribution,
    verify_decomposition,
    verify_modular_factor,
    verify_nested,
    verify_two_part,
    whitney_and_charpoly,
)
from .subspaces import (
    AtomSet,
    Subspace,
    canonicalize,
    explicit_atoms,
    hwdl_atoms,
    odd_weight_atoms,
    subspace_support,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: str
    rhs: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  lhs={self.lhs} rhs={self.rhs}"
        return f"[{status}] {self.name}{extra}"


def _check(name: str, lhs, rhs, t0: float) -> Check:
    return Check(
        name=name,
        passed=(lhs == rhs),
        lhs=repr(lhs),
        rhs=repr(rhs),
        seconds=time.monotonic() - t0,
    )


# ---------------------------------------------------------------------------
# shared geometry registry (criterion 11 replays transforms on these)
# ---------------------------------------------------------------------------

_GEOMETRIES: dict[tuple, RestrictionGeometry] = {}


def cached_geometry(atoms: AtomSet) -> RestrictionGeometry:
    key = (atoms.spec.q, atoms.n, atoms.vectors)
    g = _GEOMETRIES.get(key)
    if g is None:
        g = build_geometry(atoms)
        _GEOMETRIES[key] = g
    return g


def hwdl_geometry(q: int, n: int, d: int) -> RestrictionGeometry:
    return cached_geometry(hwdl_atoms(field_new(q), n, d))


def registered_geometries() -> list[RestrictionGeometry]:
    return list(_GEOMETRIES.values())


def brute_whitney(q: int, n: int, d: int) -> list[int]:
    """Closure brute force for the full Whitney sequence of H(q, n, d)."""
    w, _ = whitney_and_charpoly(hwdl_geometry(q, n, d))
    return w


def brute_w_alpha(q: int, n: int, d: int, upto: int) -> list[int]:
    """Enumeration brute force: w_0..w_upto via counted avoiders."""
    alphas = [dist.alpha_hwdl(q, n, d, k) for k in range(upto + 1)]
    return dist.whitney_from_alpha(alphas, n, q)


# ---------------------------------------------------------------------------
# paper-tables suite (criteria 1-4)
# ---------------------------------------------------------------------------

TABLE1_FACTORED = {
    (2, 5, 3): expand_linear_factors([1, 2, 4, 8, 10]),
    (3, 5, 3): expand_linear_factors([1, 3, 9, 25, 27]),
    (4, 5, 3): expand_linear_factors([1, 4, 16]) * UniPolyQ([2722, -104, 1]),
}


def suite_paper_tables() -> list[Check]:
    checks: list[Check] = []

    for (q, n, d), factored in sorted(TABLE1_FACTORED.items()):
        t0 = time.monotonic()
        _, chi = whitney_and_charpoly(hwdl_geometry(q, n, d))
        checks.append(_check(f"c01:table1-charpoly({q},{n},{d})", chi.coeffs, factored.coeffs, t0))

    t0 = time.monotonic()
    alphas = [dist.alpha_hwdl(3, 6, 3, k, shortcut=False) for k in range(7)]
    w = dist.whitney_from_alpha(alphas, 6, 3)
    chi = UniPolyQ([Fraction(w[6 - e]) for e in range(7)])
    quotient = deflate_roots(chi, [3**i for i in range(4)])
    checks.append(
        _check("c02:deflated-charpoly(3,6,3)", quotient.coeffs, UniPolyQ([1515, -76, 1]).coeffs, t0)
    )

    t0 = time.monotonic()
    w_o3, chi_o3 = whitney_and_charpoly(cached_geometry(odd_weight_atoms(3)))
    checks.append(
        _check("c03:odd-weight-charpoly(3)", chi_o3.coeffs, UniPolyQ([-3, 6, -4, 1]).coeffs, t0)
    )
    for n in range(1, 6):
        t0 = time.monotonic()
        w_brute, _ = whitney_and_charpoly(cached_geometry(odd_weight_atoms(n)))
        w_closed = [hwdl.odd_weight_whitney(n, i) for i in range(n + 1)]
        checks.append(_check(f"c03:odd-weight-whitney({n})", w_closed, w_brute, t0))

    # w_2(q,t,3) table rows against enumeration brute force
    for t in range(2, 6):
        for q in (2, 3, 4):
            t0 = time.monotonic()
            table_val = int(hwdl.W2_D3_SMALL[t].evaluate(q))
            brute = brute_w_alpha(q, t, 3, 2)[2]
            checks.append(_check(f"c04:w2({q},{t},3)-table-vs-brute", table_val, brute, t0))

    # w_3(2,t,3) table: closure brute force for t <= 6, enumeration for t = 7, 8
    for t in range(3, 7):
        t0 = time.monotonic()
        brute = brute_whitney(2, t, 3)[3]
        checks.append(_check(f"c04:w3(2,{t},3)-table-vs-brute", -hwdl.W3_2_D3_TABLE[t], brute, t0))
    for t in (7, 8):
        t0 = time.monotonic()
        brute = brute_w_alpha(2, t, 3, 3)[3]
        checks.append(_check(f"c04:w3(2,{t},3)-table-vs-brute", -hwdl.W3_2_D3_TABLE[t], brute, t0))
    return checks


# ---------------------------------------------------------------------------
# closed-forms suite (criteria 6, 7, 9 and cross-branch checks)
# ---------------------------------------------------------------------------


def _w2_grid() -> list[tuple[int, int, int]]:
    cells = [(q, n, d) for q in (2, 3) for n in range(2, 7) for d in range(2, n + 1)]
    cells += [(4, n, d) for n in range(2, 6) for d in range(2, n + 1)]
    return cells


def suite_closed_forms() -> list[Check]:
    checks: list[Check] = []

    for q, n, d in _w2_grid():
        t0 = time.monotonic()
        closed = hwdl.w2_general(q, n, d)
        brute = brute_w_alpha(q, n, d, 2)[2]
        checks.append(_check(f"c06:w2-general({q},{n},{d})", closed, brute, t0))

    for q, n, d in _w2_grid():
        t0 = time.monotonic()
        closed = hwdl.beta2_closed(q, n, d)
        brute = dist.beta_hwdl(q, n, d, 2, method="enum")
        checks.append(_check(f"c07:beta2-census({q},{n},{d})", closed, brute, t0))

    for q, n in [(2, 6), (3, 6), (2, 7)]:
        t0 = time.monotonic()
        lower = {t: hwdl.whitney_closed(hwdl.HwdlParams(q, t, 3), 2) for t in range(2, 6)}
        red = hwdl.reduction_formula(q, n, 3, 2, lower)
        brute = brute_w_alpha(q, n, 3, 2)[2]
        checks.append(_check(f"c09:reduction-w2({q},{n},3)", red, brute, t0))

    t0 = time.monotonic()
    agree = all(
        hwdl._w2_d3_reduction(q, n) == int(hwdl.w2_d3_explicit_poly(n).evaluate(q))
        for q in (2, 3, 4, 5, 7)
        for n in range(6, 13)
    )
    checks.append(_check("c09:w2(q,n,3)-two-forms-agree", agree, True, t0))

    # the printed large-n w_3(2,n,3) expansion differs from the reduction
    # formula in one binomial index; assert the mismatch is real and the
    # reduction value is the one matching brute force (n = 9 via enumeration)
    t0 = time.monotonic()
    flagged = all(hwdl.w3_binary_d3_displayed_term_mismatch(n) for n in range(9, 13))
    checks.append(_check("c09:w3(2,n,3)-displayed-form-flagged", flagged, True, t0))
    t0 = time.monotonic()
    red9 = hwdl.whitney_closed(hwdl.HwdlParams(2, 9, 3), 3)
    brute9 = brute_w_alpha(2, 9, 3, 3)[3]
    checks.append(_check("c09:w3(2,9,3)-reduction-vs-brute", red9, brute9, t0))

    # whitney_closed evaluates all overlapping branches and asserts equality
    # internally; sweep a grid so those asserts actually run
    t0 = time.monotonic()
    swept = 0
    for q in (2, 3, 4, 5):
        for n in range(1, 7):
            for d in range(1, n + 2):
                for i in range(0, n + 1):
                    hwdl.whitney_closed(hwdl.HwdlParams(q, n, d), i)
                    swept += 1
    checks.append(_check("c06:closed-branch-overlaps-consistent", swept > 0, True, t0))

    # support-size counts against geometry filtering
    for q, n, d, i in [(2, 4, 2, 2), (3, 4, 2, 2), (2, 6, 3, 2), (3, 6, 2, 2), (2, 6, 2, 3), (2, 5, 2, 2)]:
        t0 = time.monotonic()
        if n < i * d:
            continue
        g = hwdl_geometry(q, n, d)
        filtered = sum(
            1
            for r, _, sub in g.elements()
            if r == i and len(subspace_support(sub)) == i * d
        )
        mob_ok = all(
            mobius_of(g, sub) == (-1) ** i
            for r, _, sub in g.elements()
            if r == i and len(subspace_support(sub)) == i * d
        )
        closed = hwdl.support_id_count(q, n, d, i)
        checks.append(_check(f"c09:support-count({q},{n},{d},i={i})", (closed, True), (filtered, mob_ok), t0))

    t0 = time.monotonic()
    ident = all(hwdl.binom_identity_check(n, d) for d in range(1, 6) for n in range(2 * d, 26))
    checks.append(_check("c09:binomial-identity-grid", ident, True, t0))
    return checks


# ---------------------------------------------------------------------------
# duality suite (criterion 8)
# ---------------------------------------------------------------------------


def suite_duality() -> list[Check]:
    checks: list[Check] = []

    def brute_fn(q: int, n: int, d: int, i: int) -> int:
        return brute_whitney(q, n, d)[i]

    for q in (2, 3):
        for n in range(2, 6):
            for d in range(1, n):
                t0 = time.monotonic()
                lhs, rhs = hwdl.duality_residual(q, n, d, brute_fn)
                checks.append(_check(f"c08:duality({q},{n},{d})", lhs, rhs, t0))

    # two-spaces Whitney formula against closure brute force
    for q, n, r1, r2, rm in [(2, 4, 2, 2, 1), (2, 5, 3, 2, 1), (3, 4, 2, 2, 0), (2, 5, 2, 2, 2)]:
        t0 = time.monotonic()
        spec = field_new(q)
        basis1 = [tuple(1 if j == i else 0 for j in range(n)) for i in range(r1)]
        start2 = r1 - rm
        basis2 = [tuple(1 if j == start2 + i else 0 for j in range(n)) for i in range(r2)]
        s1 = canonicalize(spec, n, basis1)
        s2 = canonicalize(spec, n, basis2)
        from .subspaces import intersect, subspace_union_atoms

        assert intersect(s1, s2).k == rm
        g = cached_geometry(subspace_union_atoms([s1, s2]))
        w_brute, _ = whitney_and_charpoly(g)
        w_closed = [hwdl.whitney_two_spaces(q, n, r1, r2, rm, i) for i in range(len(w_brute))]
        checks.append(_check(f"c08:two-spaces({q},{n},{r1},{r2},{rm})", w_closed, w_brute, t0))
    return checks


# ---------------------------------------------------------------------------
# identities suite (criteria 10 and 11)
# ---------------------------------------------------------------------------

_ALL_POINTS_24 = tuple(hwdl_atoms(field_new(2), 4, 4).vectors)


def _random_geometry(rng: random.Random) -> RestrictionGeometry:
    m = rng.randint(3, len(_ALL_POINTS_24))
    vectors = rng.sample(_ALL_POINTS_24, m)
    return build_geometry(explicit_atoms(field_new(2), 4, vectors))


def _random_cover(rng: random.Random, count: int, parts: int) -> list[list[int]]:
    """Random cover of range(count) by `parts` nonempty lists, overlaps allowed."""
    while True:
        cover = [[] for _ in range(parts)]
        for i in range(count):
            cover[rng.randrange(parts)].append(i)
            if rng.random() < 0.2:
                cover[rng.randrange(parts)].append(i)
        if all(cover):
            return cover


def suite_identities(seed: int = 0) -> list[Check]:
    checks: list[Check] = []
    rng = random.Random(seed)

    t0 = time.monotonic()
    failures = []
    for trial in range(100):
        g = _random_geometry(rng)
        m = len(g.atoms)
        b_count = rng.randint(1, m)
        b_idx = sorted(rng.sample(range(m), b_count))
        a_idx = sorted(rng.sample(b_idx, rng.randint(1, b_count)))
        from .lattice import _subgeometry

        ga = _subgeometry(g, a_idx)
        gb = _subgeometry(g, b_idx)
        ga_elems = [sub for _, _, sub in ga.elements()]
        gb_elems = [sub for _, _, sub in gb.elements()]
        x = rng.choice(ga_elems)
        s = rng.sample(gb_elems, rng.randint(0, min(len(gb_elems), 8)))
        rep = verify_nested(g, a_idx, b_idx, x, s)
        if not rep.holds:
            failures.append(("nested", trial, rep.lhs, rep.rhs))
    checks.append(_check("c10:nested-identity-100-random", failures, [], t0))

    t0 = time.monotonic()
    failures = []
    for trial in range(100):
        g = _random_geometry(rng)
        cover = _random_cover(rng, len(g.atoms), rng.randint(2, 3))
        rep = verify_decomposition(g, cover)
        if not rep.holds:
            failures.append(("decomposition", trial))
    checks.append(_check("c10:decomposition-identity-100-random", failures, [], t0))

    t0 = time.monotonic()
    failures = []
    for trial in range(100):
        g = _random_geometry(rng)
        cover = _random_cover(rng, len(g.atoms), 2)
        rep = verify_two_part(g, cover[0], cover[1])
        if not rep.holds:
            failures.append(("two_part", trial))
    checks.append(_check("c10:two-part-identity-100-random", failures, [], t0))

    t0 = time.monotonic()
    failures = []
    for trial in range(100):
        d = rng.choice((1, 2, 3))
        g = hwdl_geometry(2, 4, d)
        size = rng.randint(1, min(d, 3))
        coords = rng.sample(range(4), size)
        spec = field_new(2)
        t_sub = canonicalize(
            spec, 4, [tuple(1 if j == c else 0 for j in range(4)) for c in coords]
        )
        t_bits = g.bits_of(t_sub)
        b_idx = [i for i in range(len(g.atoms)) if not (t_bits >> i) & 1]
        extra = [i for i in range(len(g.atoms)) if (t_bits >> i) & 1]
        b_idx += rng.sample(extra, rng.randint(0, len(extra)))
        rep = verify_modular_factor(g, t_sub, sorted(b_idx))
        if not rep.holds:
            failures.append(("modular", trial, rep.lhs, rep.rhs))
    checks.append(_check("c10:modular-factor-100-random", failures, [], t0))

    # the hyperplane instance behind the d = n-1 closed form
    for q, n in [(2, 4), (3, 4), (2, 5)]:
        t0 = time.monotonic()
        g = hwdl_geometry(q, n, n - 1)
        spec = field_new(q)
        t_sub = canonicalize(
            spec, n, [tuple(1 if j == i else 0 for j in range(n)) for i in range(n - 1)]
        )
        t_bits = g.bits_of(t_sub)
        b_idx = [i for i in range(len(g.atoms)) if not (t_bits >> i) & 1]
        rep = verify_modular_factor(g, t_sub, b_idx)
        checks.append(_check(f"c10:modular-factor-hyperplane({q},{n},{n-1})", rep.lhs, rep.rhs, t0))

    checks.extend(_transform_checks())

    # Moebius via distribution and critical exponents on desk-scale lattices
    t0 = time.monotonic()
    bad = []
    for q, n, d in [(2, 3, 2), (2, 4, 2), (2, 4, 3), (3, 3, 2)]:
        g = hwdl_geometry(q, n, d)
        for _, _, sub in g.elements():
            if mobius_via_distribution(sub, g.atoms) != mobius_of(g, sub):
                bad.append((q, n, d, sub))
    checks.append(_check("c10:mobius-via-distribution", bad, [], t0))

    t0 = time.monotonic()
    # note (2,4,2): chi = (x-1)(x-2)(x-3)(x-4) also vanishes at q^2 = 4, so the
    # critical exponent exceeds the Singleton floor d = 2 there
    crits = {
        (2, 3, 2): 2,
        (2, 3, 3): 3,
        (2, 4, 4): 4,
        (3, 3, 2): 2,
        (2, 4, 2): 3,
        (2, 4, 3): 3,
    }
    got = {k: critical_exponent(hwdl_atoms(field_new(k[0]), k[1], k[2])) for k in crits}
    checks.append(_check("c10:critical-exponents", got, crits, t0))
    return checks


def _transform_checks() -> list[Check]:
    """Criterion 11: transform identities on every geometry built so far."""
    checks: list[Check] = []
    t0 = time.monotonic()
    bad = []
    count = 0
    for g in registered_geometries():
        q, n = g.atoms.spec.q, g.atoms.n
        w, chi = whitney_and_charpoly(g)
        w_full = w + [0] * (n - len(w) + 1)
        alphas = [dist.alpha_enum(g.atoms, k) for k in range(n + 1)]
        betas = [qbinom(n, k, q) - alphas[k] for k in range(n + 1)]
        count += 1
        if dist.whitney_from_alpha(alphas, n, q) != w_full:
            bad.append((q, n, "alpha->w"))
        if dist.alpha_from_whitney(w_full, n, q) != alphas:
            bad.append((q, n, "w->alpha"))
        if dist.whitney_from_beta(betas, n, q) != w_full:
            bad.append((q, n, "beta->w"))
        if chi.evaluate(1) != 0 and g.rank >= 1:
            bad.append((q, n, "chi(1)"))
        try:
            assert_sign_alternation(w)
        except AssertionError:
            bad.append((q, n, "signs"))
    checks.append(
        Check(
            name=f"c11:transforms-on-{count}-built-geometries",
            passed=(not bad),
            lhs=repr(bad),
            rhs="[]",
            seconds=time.monotonic() - t0,
        )
    )
    return checks


# ---------------------------------------------------------------------------
# agreement suite (criterion 5)
# ---------------------------------------------------------------------------


def suite_agreement() -> list[Check]:
    checks: list[Check] = []

    t0 = time.monotonic()
    mismatches = []
    corner = []
    for a in range(1, 6):
        for b in range(1, 8):
            for c in range(0, b + 1):
                for nu in range(0, b + 1):
                    g = gamma(a, b, c, nu)
                    o = gamma_enum_oracle(a, b, c, nu)
                    if a == 1 and c == 0 and nu == 0:
                        # the recursion pins gamma_1 = 0; the array count is 1
                        # (all-sentinel array); assert the documented pair
                        if (g, o) != (0, 1):
                            corner.append((a, b, c, nu, g, o))
                    elif g != o:
                        mismatches.append((a, b, c, nu, g, o))
    checks.append(_check("c05:gamma-vs-oracle-grid", (mismatches, corner), ([], []), t0))

    t0 = time.monotonic()
    bad = []
    deg_bad = []
    for b in range(1, 7):
        for c in range(0, b + 1):
            for nu in range(0, b + 1):
                p = gamma_poly(b, c, nu)
                if p and p.degree != gamma_poly_degree_observed(b, c, nu):
                    deg_bad.append((b, c, nu, p.degree))
                for a in range(1, 21):
                    v = p.evaluate(a)
                    if v.denominator != 1:
                        bad.append((b, c, nu, a, "non-integer"))
                        continue
                    if gamma_poly_matches_at(b, c, nu, a):
                        if int(v) != gamma(a, b, c, nu):
                            bad.append((b, c, nu, a, int(v), gamma(a, b, c, nu)))
                    elif (int(v), gamma(a, b, c, nu)) != (1, 0):
                        bad.append((b, c, nu, a, "corner", int(v)))
    checks.append(_check("c05:gamma-poly-evaluation-grid", (bad, deg_bad), ([], []), t0))

    t0 = time.monotonic()
    mono_bad = []
    for b in range(1, 8):
        for c in range(1, b + 1):
            for nu in range(c, b + 1):
                vals = [gamma(a, b, c, nu) for a in range(1, 9)]
                if any(x > y for x, y in zip(vals, vals[1:])):
                    mono_bad.append((b, c, nu))
    checks.append(_check("c05:gamma-monotone-in-a", mono_bad, [], t0))

    t0 = time.monotonic()
    bad = []
    for q in (2, 3, 4):
        spec = field_new(q)
        for n in range(1, 4):
            for d in range(1, n + 1):
                w_ref = tuple(1 for _ in range(n))
                for nu in range(0, n + 1):
                    expected = line_count(spec, n, d, nu, w_ref)
                    if line_count_enum(spec, n, d, nu, w_ref) != expected:
                        bad.append((q, n, d, nu, "all-ones"))
                    w_alt = tuple(1 + (i % (q - 1)) for i in range(n)) if q > 2 else w_ref
                    if line_count_enum(spec, n, d, nu, w_alt) != expected:
                        bad.append((q, n, d, nu, "alt-w"))
    checks.append(_check("c05:line-count-vs-enumeration", bad, [], t0))
    return checks


# ---------------------------------------------------------------------------
# asymptotics suite (criteria 12, 13, 14)
# ---------------------------------------------------------------------------


def suite_asymptotics() -> list[Check]:
    checks: list[Check] = []

    for n in range(4, 6):
        for d in range(2, n - 1):
            t0 = time.monotonic()
            rep = polyfit.check_beta_asymptotics(2, n, d)
            checks.append(_check(f"c12:beta2-degree-leading({n},{d})", rep.holds, True, t0))
    t0 = time.monotonic()
    rep = polyfit.check_delta_asymptotics(2, 5)
    checks.append(_check("c12:density-delta2(5)", rep.holds, True, t0))

    for n in (4, 5, 6):
        t0 = time.monotonic()
        rep = polyfit.check_w_asymptotics(2, n, n - 2)
        checks.append(_check(f"c13:w2-sharpness({n},{n-2})", rep.holds, True, t0))
    for n in range(6, 13):
        t0 = time.monotonic()
        rep = polyfit.check_w_asymptotics(2, n, 3)
        checks.append(_check(f"c13:w2(q,{n},3)-leading", rep.holds, True, t0))

    t0 = time.monotonic()
    rep = polyfit.check_w2_polynomiality(5, 3, q_samples=[2, 3, 4, 5, 7], q_validate=[8, 9])
    expected = UniPolyQ([10, -35, 60, -55, 30])
    checks.append(
        _check(
            "c14:w2(q,5,3)-interpolation",
            (rep.poly.coeffs if rep.poly else None, rep.verdict),
            (expected.coeffs, "polynomial-fit-validated"),
            t0,
        )
    )

    t0 = time.monotonic()
    bad = []
    for b in range(1, 7):
        for c in range(0, b + 1):
            for nu in range(0, b + 1):
                rep = polyfit.check_gamma_polynomiality(b, c, nu)
                if rep.verdict != "polynomial-fit-validated":
                    bad.append((b, c, nu))
    checks.append(_check("c14:gamma-poly-vs-interpolation-grid", bad, [], t0))

    # beta2 polynomiality fits with held-out validation (proven-polynomial family)
    for n, d in [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3)]:
        t0 = time.monotonic()
        rep = polyfit.check_beta2_polynomiality(n, d)
        checks.append(_check(f"c14:beta2(q,{n},{d})-fit-validated", rep.verdict, "polynomial-fit-validated", t0))

    # growth table for the other solved families (exact evidence)
    for i, n, d in [(1, 4, 1), (2, 4, 1), (1, 4, 4), (2, 4, 4), (3, 4, 4), (1, 5, 4), (2, 5, 4), (3, 5, 4)]:
        t0 = time.monotonic()
        rep = polyfit.check_w_asymptotics(i, n, d)
        checks.append(_check(f"c13:w-growth(i={i},{n},{d})", rep.holds, True, t0))
    for i, n, d in [(2, 5, 2), (3, 5, 2), (4, 5, 2), (2, 6, 2)]:
        t0 = time.monotonic()
        rep = polyfit.check_w_asymptotics(i, n, d)
        checks.append(_check(f"c13:w-growth-d2(i={i},{n},{d})", rep.holds, True, t0))
    for i, n, d in [(2, 5, 3), (2, 6, 3), (2, 6, 4), (3, 6, 4)]:
        t0 = time.monotonic()
        rep = polyfit.check_w_upper_bound(i, n, d)
        checks.append(_check(f"c13:w-upper-bound(i={i},{n},{d})", rep.holds, True, t0))
    return checks


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., list[Check]]] = {
    "paper-tables": suite_paper_tables,
    "closed-forms": suite_closed_forms,
    "duality": suite_duality,
    "agreement": suite_agreement,
    "identities": suite_identities,
    "asymptotics": suite_asymptotics,
}

SUITE_ORDER = ["paper-tables", "closed-forms", "duality", "agreement", "identities", "asymptotics"]


def run_suites(
    names: Sequence[str],
    seed: int = 0,
    budget_sec: float | None = None,
) -> list[Check]:
    """Run the named suites in canonical order; 'all' expands to every suite."""
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITE_ORDER)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise KeyError(name)
    start = time.monotonic()
    out: list[Check] = []
    for name in expanded:
        if budget_sec is not None and time.monotonic() - start > budget_sec:
            raise BudgetExceeded(budget_sec, time.monotonic() - start)
        fn = SUITES[name]
        out.extend(fn(seed) if name == "identities" else fn())
    return out
