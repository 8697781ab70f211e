"""Restriction geometries: closure, Moebius function, Whitney numbers.

A restriction geometry L(A) consists of every subspace of F_q^n spanned by a
subset of the atom set A, plus the zero space.  Elements are atom-closures,
so the order relation reduces to containment of atom-incidence bitsets:
y <= x exactly when atoms(y) is a subset of atoms(x).  That subset test on
packed ints is what makes the layer-by-layer Moebius recursion affordable on
lattices with 10^4..10^5 elements.

The identity checkers at the bottom evaluate both sides of the structural
Moebius identities (nested lattices, decomposition over an atom cover, the
two-part decomposition, and the modular-element factorization) exactly, and
report lhs/rhs; they are reusable test oracles, not proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded
from .exactmath import UniPolyQ, binom, qbinom
from .distributions import alpha_enum, whitney_from_alpha
from .subspaces import (
    AtomSet,
    DEFAULT_ENUM_CAP,
    Subspace,
    canonicalize,
    contains,
    extend_subspace,
    explicit_atoms,
    projective_points,
    subspace_sum,
    zero_subspace,
)

DEFAULT_CLOSURE_CAP = 200_000


@dataclass
class RestrictionGeometry:
    """The lattice L(A): elements grouped by rank, with atom-incidence bitsets.

    layers[r] lists the rank-r elements; atom_bits[r][i] is the packed set of
    atom indices contained in layers[r][i].  Immutable once built; the
    Moebius layers are filled in lazily by mobius_table().
    """

    atoms: AtomSet
    layers: tuple[tuple[Subspace, ...], ...]
    atom_bits: tuple[tuple[int, ...], ...]
    _index: dict[tuple, tuple[int, int]] = field(repr=False)
    _mobius: list[list[int]] | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.layers) - 1

    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def elements(self) -> Iterator[tuple[int, int, Subspace]]:
        for r, layer in enumerate(self.layers):
            for i, sub in enumerate(layer):
                yield r, i, sub

    def find(self, sub: Subspace) -> tuple[int, int]:
        """(rank, index) of an element; KeyError if not in the geometry."""
        return self._index[sub.basis]

    def __contains__(self, sub: Subspace) -> bool:
        return sub.basis in self._index

    def bits_of(self, sub: Subspace) -> int:
        r, i = self.find(sub)
        return self.atom_bits[r][i]

    def top(self) -> Subspace:
        return self.layers[-1][0]


def build_geometry(atoms: AtomSet, cap: int = DEFAULT_CLOSURE_CAP) -> RestrictionGeometry:
    """Closure of the atom set under joins, grouped by rank.

    Breadth-first by rank: every rank r+1 element is the join of a rank-r
    element with an atom outside it, so the sweep is complete.  Aborts with
    the partial element count when the cap is hit.
    """
    spec, n = atoms.spec, atoms.n
    zero = zero_subspace(spec, n)
    layers: list[tuple[Subspace, ...]] = [(zero,)]
    total = 1
    current = [zero]
    while True:
        nxt: dict[tuple, Subspace] = {}
        for x in current:
            for v in atoms.vectors:
                cand = extend_subspace(x, v)
                if cand is not x:
                    nxt.setdefault(cand.basis, cand)
        if not nxt:
            break
        layer = tuple(sorted(nxt.values(), key=lambda s: s.basis))
        total += len(layer)
        if total > cap:
            raise CapExceeded("geometry-closure", cap, total)
        layers.append(layer)
        current = list(layer)

    atom_pos = {v: i for i, v in enumerate(atoms.vectors)}
    atom_bits: list[tuple[int, ...]] = []
    for r, layer in enumerate(layers):
        bits_layer = []
        for sub in layer:
            bits = 0
            for pt in projective_points(sub):
                j = atom_pos.get(pt)
                if j is not None:
                    bits |= 1 << j
            bits_layer.append(bits)
        atom_bits.append(tuple(bits_layer))

    index = {
        sub.basis: (r, i)
        for r, layer in enumerate(layers)
        for i, sub in enumerate(layer)
    }
    return RestrictionGeometry(
        atoms=atoms,
        layers=tuple(layers),
        atom_bits=tuple(atom_bits),
        _index=index,
    )


def mobius_table(g: RestrictionGeometry) -> dict[tuple, int]:
    """mu(0, x) for every element, computed rank layer by rank layer.

    mu(0) = 1 and mu(x) = -sum_{y < x} mu(y), where y < x is the bitset
    subset test on atom incidences.  Returns a map keyed by basis tuples;
    the per-layer lists are cached on the geometry.
    """
    if g._mobius is None:
        flat: list[tuple[int, int]] = []  # (bits, mu) of all lower-rank elements
        layers_mu: list[list[int]] = []
        for r, layer in enumerate(g.layers):
            bits_layer = g.atom_bits[r]
            if r == 0:
                mus = [1]
            else:
                mus = []
                for bits in bits_layer:
                    acc = 0
                    for b, m in flat:
                        if b & bits == b:
                            acc += m
                    mus.append(-acc)
            layers_mu.append(mus)
            flat.extend(zip(bits_layer, mus))
        g._mobius = layers_mu
    return {
        sub.basis: g._mobius[r][i]
        for r, layer in enumerate(g.layers)
        for i, sub in enumerate(layer)
    }


def mobius_of(g: RestrictionGeometry, sub: Subspace) -> int:
    mobius_table(g)
    r, i = g.find(sub)
    assert g._mobius is not None
    return g._mobius[r][i]


def whitney_and_charpoly(g: RestrictionGeometry) -> tuple[list[int], UniPolyQ]:
    """Whitney numbers by rank and the characteristic polynomial in lambda."""
    mobius_table(g)
    assert g._mobius is not None
    w = [sum(layer) for layer in g._mobius]
    rk = g.rank
    chi = UniPolyQ([Fraction(w[rk - e]) for e in range(rk + 1)])
    return w, chi


def assert_sign_alternation(w: Sequence[int]) -> None:
    """Geometric-lattice sanity check: (-1)^i w_i >= 0 with w_0 = 1."""
    if not w or w[0] != 1:
        raise AssertionError(f"w_0 = {w[0] if w else None}, expected 1")
    for i, wi in enumerate(w):
        if (-1) ** i * wi < 0:
            raise AssertionError(f"sign alternation fails at index {i}: {wi}")


# ---------------------------------------------------------------------------
# Moebius via the subspace distribution
# ---------------------------------------------------------------------------


def _atoms_below_in_coords(u: Subspace, atoms: AtomSet) -> AtomSet:
    """Atoms contained in u, rewritten in coordinates of u's RREF basis.

    For a vector a in the row space, the basis coordinates are just the
    entries of a at u's pivot columns, and normalized vectors stay
    normalized.
    """
    coords = []
    for a in atoms.vectors:
        if contains(u, a):
            coords.append(tuple(a[p] for p in u.pivots))
    return explicit_atoms(atoms.spec, u.k, coords)


def mobius_via_distribution(
    u: Subspace, atoms: AtomSet, cap: int = DEFAULT_ENUM_CAP
) -> int:
    """mu(0, u) from the distribution of u's own subspaces over the atom set.

    Valid when u is the span of the atoms it contains (i.e. u is an element
    of the geometry); then mu(u) = sum_j (-1)^{i-j} q^C(i-j,2) alpha_j(u, A)
    with i = rk(u).
    """
    sub_atoms = _atoms_below_in_coords(u, atoms)
    span = canonicalize(atoms.spec, u.n, [a for a in atoms.vectors if contains(u, a)])
    if span.basis != u.basis:
        raise ValueError("u is not the span of the atoms it contains")
    q = atoms.spec.q
    i = u.k
    total = 0
    for j in range(i + 1):
        aj = alpha_enum(sub_atoms, j, cap)
        total += (-1) ** (i - j) * q ** binom(i - j, 2) * aj
    return total


def critical_exponent(
    atoms: AtomSet,
    geometry: RestrictionGeometry | None = None,
    cap: int = DEFAULT_CLOSURE_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """Smallest r with chi(q^r) != 0, cross-checked against the distribution form.

    The second route computes rk(A) - max{k : alpha_k(<A>, A) != 0} inside the
    span of the atoms; the two values are asserted equal before returning.
    """
    if geometry is None:
        geometry = build_geometry(atoms, cap)
    _, chi = whitney_and_charpoly(geometry)
    q = atoms.spec.q
    crit_chi = None
    for r in range(geometry.rank + 1):
        if chi.evaluate(q**r) != 0:
            crit_chi = r
            break
    assert crit_chi is not None, "characteristic polynomial vanished at all q^r"

    span = canonicalize(atoms.spec, atoms.n, atoms.vectors)
    coords = _atoms_below_in_coords(span, atoms)
    rk = span.k
    max_k = 0
    for k in range(rk + 1):
        if alpha_enum(coords, k, enum_cap) != 0:
            max_k = k
    crit_alpha = rk - max_k
    assert crit_chi == crit_alpha, (
        f"critical exponent mismatch: chi route {crit_chi}, distribution route {crit_alpha}"
    )
    return crit_chi


# ---------------------------------------------------------------------------
# interval Moebius (needed by the identity checkers)
# ---------------------------------------------------------------------------


def interval_mobius(g: RestrictionGeometry, lo: Subspace, hi: Subspace) -> int:
    """mu(lo, hi) inside the geometry; 0 when lo is not below hi."""
    mobius_table(g)
    lo_r, lo_i = g.find(lo)
    hi_r, hi_i = g.find(hi)
    lo_bits = g.atom_bits[lo_r][lo_i]
    memo: dict[tuple[int, int], int] = {}

    def rec(r: int, i: int) -> int:
        bits = g.atom_bits[r][i]
        if bits == lo_bits:
            return 1
        key = (r, i)
        if key in memo:
            return memo[key]
        acc = 0
        for rr in range(lo_r, r):
            for ii, b in enumerate(g.atom_bits[rr]):
                if b & lo_bits == lo_bits and b & bits == b:
                    acc += rec(rr, ii)
        memo[key] = -acc
        return -acc

    hi_bits = g.atom_bits[hi_r][hi_i]
    if hi_bits & lo_bits != lo_bits:
        return 0
    return rec(hi_r, hi_i)


# ---------------------------------------------------------------------------
# identity checkers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    kind: str
    holds: bool
    lhs: object
    rhs: object

    def __bool__(self) -> bool:
        return self.holds


def _subgeometry(g: RestrictionGeometry, atom_indices: Sequence[int]) -> RestrictionGeometry:
    vectors = [g.atoms.vectors[i] for i in atom_indices]
    return build_geometry(explicit_atoms(g.atoms.spec, g.atoms.n, vectors))


def _span_of_atoms(g: RestrictionGeometry, atom_indices: Iterable[int]) -> Subspace:
    vecs = [g.atoms.vectors[i] for i in atom_indices]
    return canonicalize(g.atoms.spec, g.atoms.n, vecs)


def verify_nested(
    g: RestrictionGeometry,
    a_indices: Sequence[int],
    b_indices: Sequence[int],
    x: Subspace,
    s_elems: Sequence[Subspace],
) -> IdentityReport:
    """Nested-lattice identity for A subset of B subset of the atoms.

    lhs: sum over z in L(A) and in S of mu_A(x, z).
    rhs: sum over t in L(B) with t^A = x of sum_{y in S, y >= t} mu_B(t, y).
    """
    a_set = set(a_indices)
    if not a_set <= set(b_indices):
        raise ValueError("need A subset of B")
    ga = _subgeometry(g, sorted(a_set))
    gb = _subgeometry(g, sorted(set(b_indices)))
    if x not in ga:
        raise ValueError("x must be an element of L(A)")
    for s in s_elems:
        if s not in gb:
            raise ValueError("every element of S must lie in L(B)")

    s_keys = {s.basis for s in s_elems}
    lhs = 0
    for _, _, z in ga.elements():
        if z.basis in s_keys:
            lhs += interval_mobius(ga, x, z)

    a_vectors = [g.atoms.vectors[i] for i in sorted(a_set)]
    rhs = 0
    for _, _, t in gb.elements():
        t_a = canonicalize(g.atoms.spec, g.atoms.n, [v for v in a_vectors if contains(t, v)])
        if t_a.basis != x.basis:
            continue
        t_bits = gb.bits_of(t)
        for y in s_elems:
            if gb.bits_of(y) & t_bits == t_bits:
                rhs += interval_mobius(gb, t, y)
    return IdentityReport("nested", lhs == rhs, lhs, rhs)


def _accumulate_products(
    g: RestrictionGeometry,
    part_geoms: Sequence[RestrictionGeometry],
) -> dict[tuple, int]:
    """acc[x] = sum of products of part Moebius values over tuples joining to x."""
    mobius_table(g)
    part_elems: list[list[tuple[Subspace, int]]] = []
    for pg in part_geoms:
        mt = mobius_table(pg)
        part_elems.append([(sub, mt[sub.basis]) for _, _, sub in pg.elements()])

    acc: dict[tuple, int] = {}
    join_memo: dict[tuple[tuple, tuple], Subspace] = {}

    def join(a: Subspace, b: Subspace) -> Subspace:
        if not b.basis:
            return a
        if not a.basis:
            return b
        key = (a.basis, b.basis)
        j = join_memo.get(key)
        if j is None:
            j = subspace_sum(a, b)
            join_memo[key] = j
        return j

    zero = g.layers[0][0]

    def rec(level: int, cur: Subspace, prod: int) -> None:
        if level == len(part_elems):
            acc[cur.basis] = acc.get(cur.basis, 0) + prod
            return
        for sub, mu in part_elems[level]:
            rec(level + 1, join(cur, sub), prod * mu)

    rec(0, zero, 1)
    return acc


def verify_decomposition(
    g: RestrictionGeometry, parts: Sequence[Sequence[int]]
) -> IdentityReport:
    """Decomposition of mu over an atom cover A_1 u ... u A_L = At(L).

    For every element x, mu(x) must equal the sum over tuples
    (x_1,...,x_L) in L(A_1) x ... x L(A_L) with join x of the product of the
    part Moebius values.
    """
    covered = set()
    for p in parts:
        covered.update(p)
    if covered != set(range(len(g.atoms))):
        raise ValueError("parts must cover the whole atom set")
    part_geoms = [_subgeometry(g, sorted(set(p))) for p in parts]
    acc = _accumulate_products(g, part_geoms)
    mt = mobius_table(g)
    lhs = []
    rhs = []
    for _, _, sub in g.elements():
        lhs.append(mt[sub.basis])
        rhs.append(acc.get(sub.basis, 0))
    return IdentityReport("decomposition", lhs == rhs, lhs, rhs)


def verify_two_part(
    g: RestrictionGeometry, a_indices: Sequence[int], b_indices: Sequence[int]
) -> IdentityReport:
    """Two-part decomposition with A u B = At(L).

    mu(x) = sum over pairs (x_A, x_B) with x_B containing no atom of A and
    x_A v x_B = x of mu_A(x_A) mu_B(x_B).
    """
    if set(a_indices) | set(b_indices) != set(range(len(g.atoms))):
        raise ValueError("A and B must cover the atom set")
    ga = _subgeometry(g, sorted(set(a_indices)))
    gb = _subgeometry(g, sorted(set(b_indices)))
    mt_a = mobius_table(ga)
    mt_b = mobius_table(gb)
    a_mask = 0
    for i in set(a_indices):
        a_mask |= 1 << i
    mt = mobius_table(g)

    acc: dict[tuple, int] = {}
    for _, _, xb in gb.elements():
        rg, ig = g.find(xb)
        if g.atom_bits[rg][ig] & a_mask:
            continue
        mu_b = mt_b[xb.basis]
        for _, _, xa in ga.elements():
            joined = subspace_sum(xa, xb)
            acc[joined.basis] = acc.get(joined.basis, 0) + mt_a[xa.basis] * mu_b

    lhs = []
    rhs = []
    for _, _, sub in g.elements():
        lhs.append(mt[sub.basis])
        rhs.append(acc.get(sub.basis, 0))
    return IdentityReport("two_part", lhs == rhs, lhs, rhs)


def verify_modular_factor(
    g: RestrictionGeometry, t: Subspace, b_indices: Sequence[int]
) -> IdentityReport:
    """Modular-element factorization of the Whitney numbers.

    For modular t and B with B u {atoms <= t} = At(L):
    w_i(L) = sum_j w_j([0, t]) * sum over x in L(B) of rank i-j with
    x meet t = 0 of mu_B(x).  Modularity of t is the caller's responsibility.
    """
    mt = mobius_table(g)
    t_r, t_i = g.find(t)
    t_bits = g.atom_bits[t_r][t_i]
    b_mask = 0
    for i in set(b_indices):
        b_mask |= 1 << i
    full = (1 << len(g.atoms)) - 1
    if t_bits | b_mask != full:
        raise ValueError("B plus the atoms below t must cover the atom set")

    # Whitney numbers of the interval [0, t]
    w_t = [0] * (t.k + 1)
    for r, layer in enumerate(g.layers):
        for i, sub in enumerate(layer):
            if g.atom_bits[r][i] & t_bits == g.atom_bits[r][i]:
                w_t[r] += mt[sub.basis]

    gb = _subgeometry(g, sorted(set(b_indices)))
    mt_b = mobius_table(gb)
    rank = g.rank
    # part[m] = sum of mu_B(x) over x in L(B) of rank m with no common atom with t
    part = [0] * (rank + 1)
    for _, _, x in gb.elements():
        rg, ig = g.find(x)
        if g.atom_bits[rg][ig] & t_bits:
            continue
        part[x.k] += mt_b[x.basis]

    lhs, _ = whitney_and_charpoly(g)
    rhs = []
    for i in range(rank + 1):
        rhs.append(
            sum(w_t[j] * part[i - j] for j in range(min(i, t.k) + 1) if 0 <= i - j <= rank)
        )
    return IdentityReport("modular_factor", lhs == rhs, lhs, rhs)
