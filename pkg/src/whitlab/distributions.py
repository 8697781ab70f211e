"""Subspace distributions, code counts, and their Whitney transforms.

alpha_k counts the k-dimensional subspaces meeting a given atom set only in
zero; beta_k = [n k]_q - alpha_k counts the k-dimensional codes whose minimum
Hamming distance is at most d when the atom set is the weight <= d one.  The
two invertible transforms below tie either sequence to the Whitney numbers of
the restriction geometry generated by the atoms:

    w_i   = sum_{k<=i} alpha_k [n-k i-k]_q (-1)^{i-k} q^C(i-k,2)
    alpha_k = sum_{i<=k} w_i [n-i k-i]_q

so partial knowledge of one side is partial knowledge of the other.  All
enumeration checks a candidate subspace against the minimal projective
representatives only, which leaves every count unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CapExceeded
from .exactmath import binom, qbinom, UniPolyQ
from .subspaces import (
    AtomSet,
    DEFAULT_ENUM_CAP,
    enumerate_subspaces,
    hwdl_atoms,
    meets_any,
)


# ---------------------------------------------------------------------------
# enumeration-backed counts
# ---------------------------------------------------------------------------


def alpha_enum(atoms: AtomSet, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of k-dimensional subspaces avoiding the atom set, by enumeration."""
    if k == 0:
        return 1
    reps = atoms.rep_set()
    count = 0
    for sub in enumerate_subspaces(atoms.spec, atoms.n, k, cap):
        if not meets_any(sub, reps):
            count += 1
    return count


def beta_enum(atoms: AtomSet, k: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of k-dimensional subspaces meeting the atom set, by enumeration."""
    if k == 0:
        return 0
    reps = atoms.rep_set()
    count = 0
    for sub in enumerate_subspaces(atoms.spec, atoms.n, k, cap):
        if meets_any(sub, reps):
            count += 1
    return count


def alpha_subspace_closed(q: int, n: int, a: int, k: int) -> int:
    """Count of k-dimensional subspaces avoiding one fixed a-dimensional subspace.

    Closed form: sum_i (-1)^i q^C(i,2) [a i]_q [n-i k-i]_q.
    """
    return sum(
        (-1) ** i * q ** binom(i, 2) * qbinom(a, i, q) * qbinom(n - i, k - i, q)
        for i in range(0, min(a, k) + 1)
    )


def alpha_hwdl(
    q: int, n: int, d: int, k: int, cap: int = DEFAULT_ENUM_CAP, shortcut: bool = True
) -> int:
    """alpha_k for the weight <= d atom set in F_q^n (enumeration).

    With shortcut=True (default) the range k > n - d returns 0 outright,
    since a k-dimensional code has minimum distance <= n - k + 1; pass
    shortcut=False to force the full enumeration there as well.
    """
    from .gfq import field_new

    if shortcut and k > n - min(d, n):
        return 0
    return alpha_enum(hwdl_atoms(field_new(q), n, d), k, cap)


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------


def whitney_from_alpha(alpha: Sequence[int], n: int, q: int) -> list[int]:
    """Whitney numbers w_0..w_{len(alpha)-1} from a subspace distribution prefix."""
    out = []
    for i in range(len(alpha)):
        out.append(
            sum(
                alpha[k]
                * qbinom(n - k, i - k, q)
                * (-1) ** (i - k)
                * q ** binom(i - k, 2)
                for k in range(i + 1)
            )
        )
    return out


def alpha_from_whitney(w: Sequence[int], n: int, q: int) -> list[int]:
    """Inverse transform: alpha_0..alpha_{len(w)-1} from Whitney numbers."""
    return [
        sum(w[i] * qbinom(n - i, k - i, q) for i in range(k + 1))
        for k in range(len(w))
    ]


def whitney_from_beta(beta: Sequence[int], n: int, q: int) -> list[int]:
    """Whitney numbers from code counts: beta[0] is ignored (w_0 = 1 by convention)."""
    out = [1]
    for i in range(1, len(beta)):
        signed = sum(
            beta[k]
            * qbinom(n - k, i - k, q)
            * (-1) ** (k - 1)
            * q ** binom(i - k, 2)
            for k in range(1, i + 1)
        )
        out.append((-1) ** i * signed)
    return out


def whitney_tail(prefix: Sequence[int], rk: int, crit: int, q: int) -> list[int]:
    """Extend a Whitney prefix w_0..w_{rk-crit} to the full sequence w_0..w_rk.

    Uses w_i = -sum_{j<i} w_j [rk-j i-j]_q for rk-crit < i <= rk, then asserts
    the assembled characteristic polynomial vanishes at q^r for 0 <= r < crit;
    a failure flags inconsistent inputs.
    """
    need = rk - crit
    if len(prefix) < need + 1:
        raise ValueError(f"prefix must cover indices 0..{need}")
    w = list(prefix[: need + 1])
    for i in range(need + 1, rk + 1):
        w.append(-sum(w[j] * qbinom(rk - j, i - j, q) for j in range(i)))
    chi = UniPolyQ([Fraction(w[rk - e]) for e in range(rk + 1)])
    for r in range(crit):
        val = chi.evaluate(q**r)
        if val != 0:
            raise AssertionError(
                f"characteristic polynomial does not vanish at q^{r} (got {val}); "
                "prefix and critical exponent are inconsistent"
            )
    return w


# ---------------------------------------------------------------------------
# beta and density
# ---------------------------------------------------------------------------


def beta_hwdl(
    q: int,
    n: int,
    d: int,
    k: int,
    method: str = "complement",
    cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """Number of k-dimensional codes of length n over F_q with min distance <= d.

    method 'complement' computes [n k]_q - alpha_k by avoid-enumeration,
    'enum' counts the meeting subspaces directly, and 'closed2' uses the
    closed 2-dimensional census.  Every method short-circuits k > n - d to
    the full Gaussian binomial (Singleton bound).
    """
    if k == 0:
        return 0
    if k > n - d:
        return qbinom(n, k, q)
    if method == "closed2":
        if k != 2:
            raise ValueError("closed2 applies only to k = 2")
        from .hwdl import beta2_closed

        return beta2_closed(q, n, d)
    from .gfq import field_new

    atoms = hwdl_atoms(field_new(q), n, d)
    if method == "complement":
        return qbinom(n, k, q) - alpha_enum(atoms, k, cap)
    if method == "enum":
        return beta_enum(atoms, k, cap)
    raise ValueError(f"unknown beta method {method!r}")


def beta1_closed(q: int, n: int, d: int) -> int:
    """beta_1: the number of projective points of weight <= d."""
    return sum(binom(n, j) * (q - 1) ** (j - 1) for j in range(1, min(d, n) + 1))


def density_delta(q: int, n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> Fraction:
    """Exact density of k-dimensional non-MDS codes: beta_k(q,n,n-k) / [n k]_q."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    d = n - k
    if d == 0:
        return Fraction(0)
    if k == 1:
        bk = beta1_closed(q, n, d)
    elif k == 2 and d >= 2:
        from .hwdl import beta2_closed

        bk = beta2_closed(q, n, d)
    else:
        bk = beta_hwdl(q, n, d, k, method="complement", cap=cap)
    return Fraction(bk, qbinom(n, k, q))


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def alpha_lower_bound(q: int, n: int, k: int, atom_count: int) -> int:
    """[n k]_q - |A| [n-1 k-1]_q; tight for some small geometries."""
    return qbinom(n, k, q) - atom_count * qbinom(n - 1, k - 1, q)


def meet_two_coordinate_upper(
    q: int, n: int, k: int, s1: frozenset[int] | set[int], s2: frozenset[int] | set[int]
) -> int:
    """Upper bound on k-dim subspaces meeting both coordinate subspaces F^n(S1), F^n(S2).

    Requires two distinct supports of equal size d; the bound is
    (q^{d-1}-1)/(q-1) [n-1 k-1]_q + ((q^d-1)/(q-1))^2 [n-2 k-2]_q.
    """
    d = len(s1)
    if len(s2) != d:
        raise ValueError("the two coordinate supports must have equal size")
    if set(s1) == set(s2):
        raise ValueError("the two coordinate supports must be distinct")
    term1 = (q ** (d - 1) - 1) // (q - 1) * qbinom(n - 1, k - 1, q)
    term2 = ((q**d - 1) // (q - 1)) ** 2 * qbinom(n - 2, k - 2, q)
    return term1 + term2


# ---------------------------------------------------------------------------
# sequence carriers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlphaSequence:
    """alpha_0..alpha_n for one context; alpha_0 = 1 and 0 <= alpha_k <= [n k]_q."""

    q: int
    n: int
    values: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("alpha_0 must be 1")
        for k, v in enumerate(self.values):
            if not 0 <= v <= qbinom(self.n, k, self.q):
                raise ValueError(f"alpha_{k} = {v} outside [0, [n k]_q]")


@dataclass(frozen=True)
class BetaSequence:
    """beta_0..beta_n for one (q, n, d) context; beta_0 = 0."""

    q: int
    n: int
    d: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 0:
            raise ValueError("beta_0 must be 0")


def hwdl_alpha_sequence(
    q: int, n: int, d: int, upto: int | None = None, cap: int = DEFAULT_ENUM_CAP
) -> AlphaSequence:
    """alpha_0..alpha_upto for the weight <= d atom set, by enumeration."""
    upto = n if upto is None else upto
    vals = [alpha_hwdl(q, n, d, k, cap) for k in range(upto + 1)]
    return AlphaSequence(q=q, n=n, values=tuple(vals), label=f"hwdl(d={d})")
