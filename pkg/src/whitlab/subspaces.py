"""Vectors and canonical subspaces of F_q^n.

A vector is a tuple of field element indices.  A subspace is stored as its
unique reduced row-echelon basis (tuple of row tuples) together with the
pivot columns, so equality and hashing are structural: two Subspace values
are equal exactly when their row spaces are equal.

Enumeration streams follow one fixed order everywhere: pivot patterns in
lexicographic order, then free entries in odometer order (last free cell
fastest).  This makes runs reproducible and lets workers partition a stream
by pivot pattern without changing the merged order.

Projective points and atom-set vectors are always normalized so the first
nonzero entry is 1, one representative per 1-dimensional subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded
from .exactmath import binom, qbinom
from .gfq import FieldSpec, field_new

Vector = tuple[int, ...]

DEFAULT_ENUM_CAP = 10_000_000


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------


def reduce_vector(spec: FieldSpec, pivrows: Sequence[tuple[int, Vector]], v: Vector) -> list[int]:
    """Reduce v against rows already in echelon form; returns a mutable list."""
    add = spec.add_table
    mul = spec.mul_table
    neg = spec.neg_table
    out = list(v)
    for p, row in pivrows:
        c = out[p]
        if c:
            cn = neg[c]
            for j in range(p, len(out)):
                rj = row[j]
                if rj:
                    out[j] = add[out[j]][mul[cn][rj]]
    return out


def _echelon_insert(spec: FieldSpec, pivrows: list[tuple[int, list[int]]], v: Vector) -> bool:
    """Insert v into a pivot-sorted echelon basis; True if the rank grew."""
    add = spec.add_table
    mul = spec.mul_table
    neg = spec.neg_table
    inv = spec.inv_table
    w = list(v)
    n = len(w)
    for p, row in pivrows:
        c = w[p]
        if c:
            cn = neg[c]
            for j in range(p, n):
                rj = row[j]
                if rj:
                    w[j] = add[w[j]][mul[cn][rj]]
    lead = next((j for j in range(n) if w[j]), None)
    if lead is None:
        return False
    c = w[lead]
    if c != 1:
        ci = inv[c]
        w = [mul[ci][x] for x in w]
    # eliminate the new pivot column from existing rows
    for idx, (p, row) in enumerate(pivrows):
        c = row[lead]
        if c:
            cn = neg[c]
            for j in range(lead, n):
                wj = w[j]
                if wj:
                    row[j] = add[row[j]][mul[cn][wj]]
    pivrows.append((lead, w))
    pivrows.sort(key=lambda pr: pr[0])
    return True


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n in canonical reduced row-echelon form.

    basis rows have pivot entries 1 with zeros above and below each pivot;
    pivots is the strictly increasing tuple of pivot columns.  The zero
    subspace has an empty basis.
    """

    spec: FieldSpec
    n: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    def key(self) -> tuple:
        return (self.spec.q, self.n, self.basis)

    def __repr__(self) -> str:
        rows = ",".join("".join(map(str, r)) for r in self.basis) or "0"
        return f"Subspace(q={self.spec.q},n={self.n},[{rows}])"


def canonicalize(spec: FieldSpec, n: int, rows: Iterable[Sequence[int]]) -> Subspace:
    """Unique RREF of the row space of the given rows."""
    pivrows: list[tuple[int, list[int]]] = []
    for r in rows:
        r = tuple(r)
        if len(r) != n:
            raise ValueError(f"row length {len(r)} != ambient dimension {n}")
        _echelon_insert(spec, pivrows, r)
    return Subspace(
        spec=spec,
        n=n,
        basis=tuple(tuple(row) for _, row in pivrows),
        pivots=tuple(p for p, _ in pivrows),
    )


def zero_subspace(spec: FieldSpec, n: int) -> Subspace:
    return Subspace(spec=spec, n=n, basis=(), pivots=())


def extend_subspace(sub: Subspace, v: Vector) -> Subspace:
    """Canonical join of sub with one additional vector."""
    pivrows = [(p, list(r)) for p, r in zip(sub.pivots, sub.basis)]
    if not _echelon_insert(sub.spec, pivrows, v):
        return sub
    return Subspace(
        spec=sub.spec,
        n=sub.n,
        basis=tuple(tuple(row) for _, row in pivrows),
        pivots=tuple(p for p, _ in pivrows),
    )


# ---------------------------------------------------------------------------
# membership and algebra
# ---------------------------------------------------------------------------


def contains(sub: Subspace, v: Vector) -> bool:
    """Membership test by reduction against the RREF basis."""
    spec = sub.spec
    add = spec.add_table
    mul = spec.mul_table
    neg = spec.neg_table
    w = list(v)
    n = sub.n
    for p, row in zip(sub.pivots, sub.basis):
        c = w[p]
        if c:
            cn = neg[c]
            for j in range(p, n):
                rj = row[j]
                if rj:
                    w[j] = add[w[j]][mul[cn][rj]]
    return not any(w)


def leq(u: Subspace, v: Subspace) -> bool:
    """u <= v as subspaces (every basis row of u lies in v)."""
    _check_compatible(u, v)
    return all(contains(v, row) for row in u.basis)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_compatible(u, v)
    return canonicalize(u.spec, u.n, list(u.basis) + list(v.basis))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection basis via the Zassenhaus block construction.

    Also asserts the rank identity rk(U) + rk(V) = rk(U+V) + rk(U∩V).
    """
    _check_compatible(u, v)
    spec, n = u.spec, u.n
    block_rows: list[tuple[int, ...]] = []
    for row in u.basis:
        block_rows.append(row + row)
    zero = (0,) * n
    for row in v.basis:
        block_rows.append(row + zero)
    pivrows: list[tuple[int, list[int]]] = []
    for r in block_rows:
        _echelon_insert(spec, pivrows, r)
    inter_rows = [tuple(row[n:]) for p, row in pivrows if p >= n]
    result = canonicalize(spec, n, inter_rows)
    total = canonicalize(spec, n, list(u.basis) + list(v.basis))
    assert u.k + v.k == total.k + result.k, "rank identity violated"
    return result


def orthogonal(u: Subspace) -> Subspace:
    """Orthogonal complement under the standard dot product; rank n - rk(U)."""
    spec, n = u.spec, u.n
    if u.k == 0:
        rows = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        return canonicalize(spec, n, rows)
    neg = spec.neg_table
    pivset = set(u.pivots)
    free_cols = [j for j in range(n) if j not in pivset]
    rows = []
    for f in free_cols:
        x = [0] * n
        x[f] = 1
        for i, p in enumerate(u.pivots):
            x[p] = neg[u.basis[i][f]]
        rows.append(tuple(x))
    result = canonicalize(spec, n, rows)
    assert result.k == n - u.k
    return result


def _check_compatible(u: Subspace, v: Subspace) -> None:
    if u.spec.q != v.spec.q or u.n != v.n:
        raise ValueError("subspaces live in different ambient spaces")


# ---------------------------------------------------------------------------
# weight and support
# ---------------------------------------------------------------------------


def weight(v: Vector) -> int:
    """Hamming weight: number of nonzero coordinates."""
    return sum(1 for x in v if x)


def support(v: Vector) -> frozenset[int]:
    """Hamming support as 1-based coordinate indices."""
    return frozenset(i + 1 for i, x in enumerate(v) if x)


def subspace_support(u: Subspace) -> frozenset[int]:
    """Union of basis-row supports, which equals the support of the row space."""
    out: set[int] = set()
    for row in u.basis:
        out.update(i + 1 for i, x in enumerate(row) if x)
    return frozenset(out)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def enumerate_subspaces(
    spec: FieldSpec, n: int, k: int, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[Subspace]:
    """All k-dimensional subspaces of F_q^n, each exactly once.

    Order: pivot patterns lexicographically, then free entries in odometer
    order.  The count always equals the Gaussian binomial [n k]_q; streams
    larger than the cap are rejected up front with the estimate.
    """
    if not 0 <= k <= n:
        return
    total = qbinom(n, k, spec.q)
    if total > cap:
        raise CapExceeded("subspace-enumeration", cap, total)
    q = spec.q
    for pattern in combinations(range(n), k):
        pivset = set(pattern)
        free_cells = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j not in pivset and j > pattern[i]
        ]
        template = [[0] * n for _ in range(k)]
        for i, p in enumerate(pattern):
            template[i][p] = 1
        if not free_cells:
            yield Subspace(
                spec=spec,
                n=n,
                basis=tuple(tuple(r) for r in template),
                pivots=pattern,
            )
            continue
        for values in product(range(q), repeat=len(free_cells)):
            for (i, j), val in zip(free_cells, values):
                template[i][j] = val
            yield Subspace(
                spec=spec,
                n=n,
                basis=tuple(tuple(r) for r in template),
                pivots=pattern,
            )


def projective_points(sub: Subspace) -> Iterator[Vector]:
    """Normalized representatives (first nonzero entry 1) of the 1-spaces in sub.

    Yields (q^k - 1)/(q - 1) distinct vectors; the RREF structure guarantees
    each comes out already normalized.
    """
    spec = sub.spec
    q = spec.q
    k = sub.k
    n = sub.n
    if k == 0:
        return
    add = spec.add_table
    mul = spec.mul_table
    rows = sub.basis
    for lead in range(k):
        base = rows[lead]
        tail = rows[lead + 1 :]
        if not tail:
            yield base
            continue
        for combo in product(range(q), repeat=len(tail)):
            v = list(base)
            for c, row in zip(combo, tail):
                if c:
                    mc = mul[c]
                    for j in range(n):
                        rj = row[j]
                        if rj:
                            v[j] = add[v[j]][mc[rj]]
            yield tuple(v)


def meets_any(sub: Subspace, rep_set: frozenset[Vector]) -> bool:
    """True when the subspace contains some vector of the normalized rep set.

    Picks between scanning the subspace's projective points against the set
    and reducing each representative against the basis, whichever is smaller.
    """
    q = sub.spec.q
    k = sub.k
    if k == 0:
        return False
    npoints = (q**k - 1) // (q - 1)
    if npoints <= len(rep_set):
        return any(pt in rep_set for pt in projective_points(sub))
    return any(contains(sub, r) for r in rep_set)


# ---------------------------------------------------------------------------
# atom sets
# ---------------------------------------------------------------------------


def normalize_projective(spec: FieldSpec, v: Vector) -> Vector:
    """Scale v so its first nonzero entry is 1; rejects the zero vector."""
    lead = next((j for j in range(len(v)) if v[j]), None)
    if lead is None:
        raise ValueError("cannot normalize the zero vector")
    c = v[lead]
    if c == 1:
        return tuple(v)
    ci = spec.inv(c)
    mul = spec.mul_table
    return tuple(mul[ci][x] for x in v)


@dataclass(frozen=True)
class AtomSet:
    """A finite set of projective-point representatives spanning a geometry.

    vectors are nonzero, pairwise non-proportional, each normalized with
    leading entry 1, so the cardinality equals the number of projective
    points represented (a minimal set of representatives).
    """

    spec: FieldSpec
    n: int
    vectors: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def rep_set(self) -> frozenset[Vector]:
        return frozenset(self.vectors)


def explicit_atoms(spec: FieldSpec, n: int, vectors: Iterable[Sequence[int]]) -> AtomSet:
    """Atom set from raw vectors: drop zeros, normalize, deduplicate."""
    seen: dict[Vector, None] = {}
    for v in vectors:
        v = tuple(v)
        if len(v) != n:
            raise ValueError(f"vector length {len(v)} != ambient dimension {n}")
        if not any(v):
            continue
        seen.setdefault(normalize_projective(spec, v), None)
    return AtomSet(spec=spec, n=n, vectors=tuple(seen))


def hwdl_atoms(spec: FieldSpec, n: int, d: int) -> AtomSet:
    """One representative per projective point of Hamming weight 1..min(d, n).

    These generate the higher-weight Dowling lattice for (q, n, d).  For each
    support of size j the representatives are the (q-1)^{j-1} vectors whose
    leading entry is 1.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    q = spec.q
    out: list[Vector] = []
    dmax = min(d, n)
    nonzero = range(1, q)
    for j in range(1, dmax + 1):
        for supp in combinations(range(n), j):
            for tail in product(nonzero, repeat=j - 1):
                v = [0] * n
                v[supp[0]] = 1
                for pos, val in zip(supp[1:], tail):
                    v[pos] = val
                out.append(tuple(v))
    atoms = AtomSet(spec=spec, n=n, vectors=tuple(out))
    expected = sum(binom(n, j) * (q - 1) ** (j - 1) for j in range(1, dmax + 1))
    assert len(atoms) == expected
    return atoms


def odd_weight_atoms(n: int) -> AtomSet:
    """All odd-weight vectors of F_2^n (each is its own projective point)."""
    spec = field_new(2)
    out = [v for v in product((0, 1), repeat=n) if weight(v) % 2 == 1]
    return AtomSet(spec=spec, n=n, vectors=tuple(out))


def subspace_union_atoms(subs: Sequence[Subspace]) -> AtomSet:
    """All projective points of the given subspaces, deduplicated."""
    if not subs:
        raise ValueError("need at least one subspace")
    spec, n = subs[0].spec, subs[0].n
    seen: dict[Vector, None] = {}
    for s in subs:
        _check_compatible(subs[0], s)
        for pt in projective_points(s):
            seen.setdefault(pt, None)
    return AtomSet(spec=spec, n=n, vectors=tuple(seen))


# ---------------------------------------------------------------------------
# atoms file format
# ---------------------------------------------------------------------------


def parse_atoms_file(text: str) -> AtomSet:
    """Parse the CLI atom-set format.

    First non-comment line is 'q n'; every following line is one vector of n
    space-separated element indices.  Lines starting with '#' are comments.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty atoms file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'q n'")
    q, n = int(head[0]), int(head[1])
    spec = field_new(q)
    vectors = []
    for ln in lines[1:]:
        entries = [int(tok) for tok in ln.split()]
        if len(entries) != n:
            raise ValueError(f"vector '{ln}' has {len(entries)} entries, expected {n}")
        if not all(0 <= x < q for x in entries):
            raise ValueError(f"vector '{ln}' has entries outside 0..{q - 1}")
        vectors.append(tuple(entries))
    return explicit_atoms(spec, n, vectors)


def format_atoms_file(atoms: AtomSet) -> str:
    lines = [f"{atoms.spec.q} {atoms.n}"]
    lines.extend(" ".join(map(str, v)) for v in atoms.vectors)
    return "\n".join(lines) + "\n"
