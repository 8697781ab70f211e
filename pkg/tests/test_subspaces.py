import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whitlab.errors import CapExceeded
from whitlab.exactmath import binom, qbinom
from whitlab.gfq import field_new
from whitlab.subspaces import (
    canonicalize,
    contains,
    enumerate_subspaces,
    explicit_atoms,
    format_atoms_file,
    hwdl_atoms,
    intersect,
    leq,
    meets_any,
    normalize_projective,
    odd_weight_atoms,
    orthogonal,
    parse_atoms_file,
    projective_points,
    subspace_sum,
    subspace_support,
    support,
    weight,
    zero_subspace,
)

F2 = field_new(2)
F3 = field_new(3)


class TestCanonicalize:
    def test_identity_pair(self):
        s = canonicalize(F2, 2, [(1, 1), (0, 1)])
        assert s.basis == ((1, 0), (0, 1))
        assert s.pivots == (0, 1)

    def test_zero_row(self):
        s = canonicalize(F2, 3, [(0, 0, 0)])
        assert s.k == 0 and s.basis == ()

    def test_duplicate_rows(self):
        s = canonicalize(F2, 3, [(1, 1, 0), (1, 1, 0)])
        assert s.k == 1 and s.basis == ((1, 1, 0),)

    def test_column_mismatch(self):
        with pytest.raises(ValueError):
            canonicalize(F2, 3, [(1, 0)])

    def test_idempotent_under_row_ops(self):
        rnd = random.Random(7)
        for q in (2, 3):
            spec = field_new(q)
            for _ in range(250):
                n = rnd.randint(1, 5)
                rows = [
                    tuple(rnd.randrange(q) for _ in range(n))
                    for _ in range(rnd.randint(1, 4))
                ]
                base = canonicalize(spec, n, rows)
                # apply random invertible row operations
                mixed = [list(r) for r in rows]
                for _ in range(6):
                    i = rnd.randrange(len(mixed))
                    j = rnd.randrange(len(mixed))
                    c = rnd.randrange(1, q)
                    if i == j:
                        mixed[i] = [spec.mul(c, x) for x in mixed[i]]
                    else:
                        mixed[i] = [
                            spec.add(x, spec.mul(c, y))
                            for x, y in zip(mixed[i], mixed[j])
                        ]
                assert canonicalize(spec, n, mixed).basis == base.basis


class TestEnumeration:
    @pytest.mark.parametrize("q", [2, 3])
    def test_counts_match_qbinom(self, q):
        spec = field_new(q)
        for n in range(0, 6 if q == 2 else 5):
            for k in range(n + 1):
                subs = list(enumerate_subspaces(spec, n, k))
                assert len(subs) == qbinom(n, k, q)
                assert len({s.basis for s in subs}) == len(subs)

    def test_k_zero(self):
        assert [s.k for s in enumerate_subspaces(F3, 4, 0)] == [0]

    def test_deterministic_order(self):
        a = [s.basis for s in enumerate_subspaces(F2, 4, 2)]
        b = [s.basis for s in enumerate_subspaces(F2, 4, 2)]
        assert a == b

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_subspaces(F2, 30, 15, cap=1000))

    def test_projective_points_count(self):
        for sub in enumerate_subspaces(F3, 4, 2):
            pts = list(projective_points(sub))
            assert len(pts) == (3**2 - 1) // 2
            assert len(set(pts)) == len(pts)
            assert all(pt[next(i for i in range(4) if pt[i])] == 1 for pt in pts)


class TestAlgebra:
    def test_orthogonal_involution(self):
        u = canonicalize(F2, 3, [(1, 1, 0)])
        assert orthogonal(orthogonal(u)) == u

    def test_sum_with_zero(self):
        u = canonicalize(F2, 3, [(1, 1, 0)])
        assert subspace_sum(u, zero_subspace(F2, 3)) == u

    def test_intersect_coordinate_planes(self):
        e = lambda i: tuple(1 if j == i else 0 for j in range(3))
        u = canonicalize(F2, 3, [e(0), e(1)])
        v = canonicalize(F2, 3, [e(1), e(2)])
        assert intersect(u, v) == canonicalize(F2, 3, [e(1)])

    def test_rank_identity_random_pairs(self):
        rnd = random.Random(3)
        for q, n in [(2, 4), (3, 3)]:
            spec = field_new(q)
            for _ in range(200):
                u = canonicalize(
                    spec,
                    n,
                    [
                        tuple(rnd.randrange(q) for _ in range(n))
                        for _ in range(rnd.randint(0, n))
                    ],
                )
                v = canonicalize(
                    spec,
                    n,
                    [
                        tuple(rnd.randrange(q) for _ in range(n))
                        for _ in range(rnd.randint(0, n))
                    ],
                )
                lhs = intersect(u, v).k
                rhs = u.k - n + v.k + intersect(orthogonal(u), orthogonal(v)).k
                assert lhs == rhs

    def test_leq_and_contains(self):
        u = canonicalize(F2, 3, [(1, 1, 0)])
        v = canonicalize(F2, 3, [(1, 1, 0), (0, 0, 1)])
        assert leq(u, v) and not leq(v, u)
        assert contains(v, (1, 1, 1))
        assert not contains(u, (1, 0, 0))


class TestWeightSupport:
    def test_vector(self):
        assert weight((1, 0, 1, 1)) == 3
        assert support((1, 0, 1, 1)) == {1, 3, 4}

    def test_zero_subspace_support(self):
        assert subspace_support(zero_subspace(F2, 4)) == frozenset()

    def test_subspace_support_equals_union_over_elements(self):
        u = canonicalize(F2, 3, [(1, 1, 0), (0, 0, 1)])
        from_points = set()
        for pt in projective_points(u):
            from_points |= support(pt)
        assert subspace_support(u) == from_points == {1, 2, 3}


class TestAtomSets:
    def test_hwdl_count_formula(self):
        for q in (2, 3, 4):
            spec = field_new(q)
            for n in range(1, 9):
                for d in range(1, n + 1):
                    atoms = hwdl_atoms(spec, n, d)
                    assert len(atoms) == sum(
                        binom(n, j) * (q - 1) ** (j - 1) for j in range(1, d + 1)
                    )

    def test_hwdl_examples(self):
        assert len(hwdl_atoms(F2, 5, 3)) == 25
        assert len(hwdl_atoms(F3, 4, 6)) == (3**4 - 1) // 2  # d >= n: all points

    def test_odd_weight(self):
        atoms = odd_weight_atoms(3)
        assert sorted(atoms.vectors) == [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]

    def test_explicit_normalizes_and_dedupes(self):
        atoms = explicit_atoms(F3, 2, [(2, 1), (1, 2), (0, 0), (2, 4 % 3)])
        # (2,1) ~ (1,2) projectively over F_3; zero dropped
        assert atoms.vectors == ((1, 2), (1, 1))

    def test_normalize_projective(self):
        assert normalize_projective(F3, (0, 2, 1)) == (0, 1, 2)
        with pytest.raises(ValueError):
            normalize_projective(F3, (0, 0, 0))

    def test_meets_any_both_paths_agree(self):
        atoms = hwdl_atoms(F3, 4, 2)
        reps = atoms.rep_set()
        for sub in enumerate_subspaces(F3, 4, 2):
            by_points = any(pt in reps for pt in projective_points(sub))
            by_reduction = any(contains(sub, r) for r in atoms.vectors)
            assert meets_any(sub, reps) == by_points == by_reduction


class TestAtomsFile:
    def test_round_trip(self):
        atoms = hwdl_atoms(F3, 3, 2)
        text = format_atoms_file(atoms)
        back = parse_atoms_file(text)
        assert back.vectors == atoms.vectors
        assert back.spec.q == 3 and back.n == 3

    def test_comments_and_validation(self):
        text = "# example\n2 3\n1 0 0\n# mid comment\n0 1 1\n"
        atoms = parse_atoms_file(text)
        assert atoms.vectors == ((1, 0, 0), (0, 1, 1))
        with pytest.raises(ValueError):
            parse_atoms_file("2 3\n1 0\n")
        with pytest.raises(ValueError):
            parse_atoms_file("2 3\n1 0 5\n")
        with pytest.raises(ValueError):
            parse_atoms_file("")


@given(st.integers(2, 3), st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_enumerated_subspaces_are_canonical(q, n, data):
    spec = field_new(q)
    k = data.draw(st.integers(0, n))
    for sub in enumerate_subspaces(spec, n, k):
        again = canonicalize(spec, n, sub.basis)
        assert again == sub
