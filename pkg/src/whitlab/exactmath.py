"""Exact arithmetic kernel: binomials, Gaussian binomials, Bernoulli numbers,
Faulhaber power sums, and dense univariate polynomials over Q.

Everything here is exact.  Integers are arbitrary-precision Python ints,
rationals are fractions.Fraction, and no code path touches floating point.
Two conventions are fixed once and used everywhere:

* C(m, t) = 0 whenever t < 0, t > m, or m < 0, so that transform sums may
  run over loose index ranges and out-of-range terms vanish.
* The Gaussian binomial [r s]_q is 0 outside 0 <= s <= r, for the same
  reason.

Bernoulli numbers follow the first-kind convention (B_1 = -1/2), i.e. the
exponential generating function x/(e^x - 1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


def binom(m: int, t: int) -> int:
    """C(m, t) with the vanishing convention for out-of-range arguments."""
    if t < 0 or m < 0 or t > m:
        return 0
    return math.comb(m, t)


@lru_cache(maxsize=None)
def qbinom(r: int, s: int, q: int) -> int:
    """Gaussian binomial [r s]_q: the number of s-dimensional subspaces of F_q^r.

    q enters only as an integer >= 2; it need not be a prime power here.
    Returns 0 when s < 0, s > r, or r < 0.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if s < 0 or r < 0 or s > r:
        return 0
    s = min(s, r - s)
    num = 1
    den = 1
    for i in range(s):
        num *= q ** (r - i) - 1
        den *= q ** (s - i) - 1
    assert num % den == 0
    return num // den


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(i: int) -> Fraction:
    """Bernoulli number B_i of the first kind (B_1 = -1/2).

    Computed from the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 (m >= 1),
    which is equivalent to expanding x/(e^x - 1).  Values are memoized.
    """
    if i < 0:
        raise ValueError("Bernoulli index must be >= 0")
    while len(_BERNOULLI) <= i:
        m = len(_BERNOULLI)
        acc = sum(
            (Fraction(math.comb(m + 1, j)) * _BERNOULLI[j] for j in range(m)),
            Fraction(0),
        )
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[i]


def power_sum(j: int, a: int) -> int:
    """Sum of i^j for i = 1..a, via the Bernoulli closed form.

    Uses (1/(j+1)) sum_{i=0}^{j} (-1)^i C(j+1, i) B_i a^{j+1-i} and asserts
    the result is an integer; a non-integer would mean the Bernoulli table
    itself is wrong.
    """
    if j < 0 or a < 0:
        raise ValueError("power_sum requires j >= 0 and a >= 0")
    total = Fraction(0)
    for i in range(j + 1):
        total += (-1) ** i * math.comb(j + 1, i) * bernoulli(i) * Fraction(a) ** (j + 1 - i)
    total /= j + 1
    if total.denominator != 1:
        raise AssertionError(f"power_sum({j}, {a}) evaluated to non-integer {total}")
    return int(total)


class UniPolyQ:
    """Dense univariate polynomial with exact rational coefficients.

    coeffs[i] is the coefficient of x^i.  Trailing zero coefficients are
    trimmed on construction, so equality is structural.  The zero polynomial
    has empty coeffs and the sentinel degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPolyQ":
        return cls(())

    @classmethod
    def constant(cls, c: Fraction | int) -> "UniPolyQ":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "UniPolyQ":
        return cls((Fraction(0), Fraction(1)))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPolyQ):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPolyQ({list(self.coeffs)!r})"

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self!r}")
        return tuple(int(c) for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UniPolyQ | int | Fraction") -> "UniPolyQ":
        if not isinstance(other, UniPolyQ):
            other = UniPolyQ.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPolyQ(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPolyQ":
        return UniPolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPolyQ | int | Fraction") -> "UniPolyQ":
        return self + (-other if isinstance(other, UniPolyQ) else UniPolyQ.constant(-Fraction(other)))

    def __mul__(self, other: "UniPolyQ | int | Fraction") -> "UniPolyQ":
        if not isinstance(other, UniPolyQ):
            c = Fraction(other)
            return UniPolyQ(tuple(c * a for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPolyQ.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPolyQ":
        if k < 0:
            raise ValueError("negative power")
        result = UniPolyQ.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, delta: Fraction | int) -> "UniPolyQ":
        """Substitute x -> x + delta, expanded exactly via binomials."""
        d = Fraction(delta)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for k in range(i + 1):
                out[k] += c * math.comb(i, k) * d ** (i - k)
        return UniPolyQ(out)

    def format(self, var: str = "x") -> str:
        """Human-readable form with descending powers, e.g. 'x^2 - 3*x + 2'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = f"{mag}"
            else:
                xterm = var if i == 1 else f"{var}^{i}"
                body = xterm if mag == 1 else f"{mag}*{xterm}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (f"-{first_body}" if first_sign == "-" else first_body)
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def expand_linear_factors(roots: Sequence[Fraction | int]) -> UniPolyQ:
    """Product of (x - r) over the supplied roots, with exact coefficients."""
    poly = UniPolyQ.constant(1)
    for r in roots:
        poly = poly * UniPolyQ((-Fraction(r), Fraction(1)))
    return poly


def deflate_roots(poly: UniPolyQ, roots: Sequence[Fraction | int]) -> UniPolyQ:
    """Divide out the linear factor (x - r) for each supplied root.

    Synthetic division; a nonzero remainder means the value is not a root,
    and the call is rejected with the remainder reported.
    """
    current = poly
    for r in roots:
        r = Fraction(r)
        if not current.coeffs:
            raise ValueError("cannot deflate the zero polynomial")
        rem = current.evaluate(r)
        if rem != 0:
            raise ValueError(f"{r} is not a root: remainder {rem}")
        cs = current.coeffs
        d = len(cs) - 1
        quotient = [Fraction(0)] * d
        acc = cs[d]
        for i in range(d - 1, -1, -1):
            quotient[i] = acc
            acc = cs[i] + r * acc
        current = UniPolyQ(quotient)
    return current


def lagrange_interpolate(points: Sequence[tuple[Fraction | int, Fraction | int]]) -> UniPolyQ:
    """Unique polynomial of degree < len(points) through the given points.

    Abscissas must be pairwise distinct; all arithmetic is exact.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissas in interpolation input")
    if not points:
        return UniPolyQ.zero()
    # Newton form: exact divided differences, then expand.
    coef = list(ys)
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = UniPolyQ.zero()
    basis = UniPolyQ.constant(1)
    for i, c in enumerate(coef):
        poly = poly + basis * c
        basis = basis * UniPolyQ((-xs[i], Fraction(1)))
    return poly
