"""Deterministic construction of the finite field F_q for prime powers q.

Elements are dense indices 0..q-1.  For q = p^e with e >= 2 the index
i = c_0 + c_1*p + ... + c_{e-1}*p^{e-1} encodes the residue polynomial
c_0 + c_1*x + ... modulo a fixed monic irreducible of degree e over F_p.
The modulus is the lexicographically smallest monic irreducible, comparing
coefficient vectors ordered from the constant term upward, so two
constructions of the same q are identical and every enumeration built on a
field is reproducible bit for bit.  Index 0 is the additive identity and
index 1 the multiplicative identity.

Small fields (q <= 512, which covers all enumeration workloads here) carry
full add/mul/neg/inv lookup tables; mid-size fields use digitwise addition
plus log/antilog tables; anything larger computes per operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

DEFAULT_Q_CAP = 1 << 20
_FULL_TABLE_MAX = 512
_LOG_TABLE_MAX = 1 << 16


def factor_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p^e and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    n = q
    p = None
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            break
        d += 1
    if p is None:
        p = n
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        return None
    return p, e


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Multiply residue polynomials (coefficient tuples, constant first) mod the modulus."""
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce: modulus is monic, so x^e = -(modulus[:-1])
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(e):
                prod[i - e + j] = (prod[i - e + j] - c * modulus[j]) % p
    out = prod[:e]
    out += [0] * (e - len(out))
    return tuple(out)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg/2 over F_p."""
    e = len(poly) - 1
    for deg in range(1, e // 2 + 1):
        for idx in range(p ** deg):
            div = []
            v = idx
            for _ in range(deg):
                div.append(v % p)
                v //= p
            div.append(1)
            if _poly_divides(div, poly, p):
                return False
    return True


def _poly_divides(div: list[int], poly: tuple[int, ...], p: int) -> bool:
    rem = list(poly)
    dd = len(div) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - c * div[j]) % p
    return all(c == 0 for c in rem[:dd])


class _Tables:
    __slots__ = ("add", "mul", "neg", "inv", "log", "exp")

    def __init__(self) -> None:
        self.add = self.mul = self.neg = self.inv = None
        self.log = self.exp = None


_TABLE_REGISTRY: dict[tuple[int, int, tuple[int, ...]], _Tables] = {}


@dataclass(frozen=True)
class FieldSpec:
    """Immutable description of F_q; shareable across workers, all ops pure."""

    p: int
    e: int
    q: int
    modulus: tuple[int, ...]  # length e+1, constant term first, monic; () for e == 1

    # -- index <-> digit vector ------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(a % p)
            a //= p
        return tuple(out)

    def index(self, digits: tuple[int, ...]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    # -- raw operations (no tables) ---------------------------------------

    def _raw_add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        return self.index(tuple((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))))

    def _raw_neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self.index(tuple((-x) % self.p for x in self.digits(a)))

    def _raw_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        return self.index(_poly_mul_mod(self.digits(a), self.digits(b), self.modulus, self.p))

    def _raw_inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._raw_pow(a, self.q - 2)

    def _raw_pow(self, a: int, k: int) -> int:
        result = 1
        base = a
        while k:
            if k & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            k >>= 1
        return result

    # -- table management ---------------------------------------------------

    def _tables(self) -> _Tables:
        key = (self.p, self.e, self.modulus)
        t = _TABLE_REGISTRY.get(key)
        if t is None:
            t = _Tables()
            _TABLE_REGISTRY[key] = t
        return t

    @property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        t = self._tables()
        if t.add is None:
            if self.q > _FULL_TABLE_MAX:
                raise ValueError(f"full tables unavailable for q = {self.q}")
            t.add = tuple(
                tuple(self._raw_add(a, b) for b in range(self.q)) for a in range(self.q)
            )
        return t.add

    @property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        t = self._tables()
        if t.mul is None:
            if self.q > _FULL_TABLE_MAX:
                raise ValueError(f"full tables unavailable for q = {self.q}")
            t.mul = tuple(
                tuple(self._raw_mul(a, b) for b in range(self.q)) for a in range(self.q)
            )
        return t.mul

    @property
    def neg_table(self) -> tuple[int, ...]:
        t = self._tables()
        if t.neg is None:
            t.neg = tuple(self._raw_neg(a) for a in range(self.q))
        return t.neg

    @property
    def inv_table(self) -> tuple[int, ...]:
        """inv_table[0] is 0 as a placeholder; inversion of zero is rejected in inv()."""
        t = self._tables()
        if t.inv is None:
            t.inv = (0,) + tuple(self._raw_inv(a) for a in range(1, self.q))
        return t.inv

    def _log_tables(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        t = self._tables()
        if t.log is None:
            if self.q > _LOG_TABLE_MAX:
                raise ValueError(f"log tables unavailable for q = {self.q}")
            # deterministic: smallest index that generates the unit group
            for g in range(2, self.q):
                seen = [0] * self.q
                x = 1
                order = 0
                while not seen[x]:
                    seen[x] = 1
                    x = self._raw_mul(x, g)
                    order += 1
                if order == self.q - 1:
                    exp = [1] * (self.q - 1)
                    x = 1
                    for i in range(self.q - 1):
                        exp[i] = x
                        x = self._raw_mul(x, g)
                    log = [0] * self.q
                    for i, v in enumerate(exp):
                        log[v] = i
                    t.exp = tuple(exp)
                    t.log = tuple(log)
                    break
            else:  # pragma: no cover - the unit group is always cyclic
                raise AssertionError("no generator found")
        return t.log, t.exp

    # -- public operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q <= _FULL_TABLE_MAX:
            return self.add_table[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        return self.neg_table[a] if self.q <= _FULL_TABLE_MAX else self._raw_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.q <= _FULL_TABLE_MAX:
            return self.mul_table[a][b]
        if a == 0 or b == 0:
            return 0
        if self.q <= _LOG_TABLE_MAX:
            log, exp = self._log_tables()
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.q <= _FULL_TABLE_MAX:
            return self.inv_table[a]
        if self.q <= _LOG_TABLE_MAX:
            log, exp = self._log_tables()
            return exp[(-log[a]) % (self.q - 1)]
        return self._raw_inv(a)

    def elements(self) -> Iterator[int]:
        """All element indices 0..q-1 in order."""
        return iter(range(self.q))


@lru_cache(maxsize=None)
def field_new(q: int, cap: int = DEFAULT_Q_CAP) -> FieldSpec:
    """Construct F_q deterministically.

    Rejects q that is not a prime power and q above the cap.  For e >= 2 the
    modulus is the lexicographically smallest monic irreducible of degree e,
    scanning coefficient vectors from the constant term upward.
    """
    pe = factor_prime_power(q)
    if pe is None:
        raise ValueError(f"q = {q} is not a prime power")
    if q > cap:
        raise ValueError(f"q = {q} exceeds the field-size cap {cap}")
    p, e = pe
    if e == 1:
        return FieldSpec(p=p, e=1, q=q, modulus=())
    # lexicographic scan over (c_0, c_1, ..., c_{e-1}), constant term compared first
    for digits in product(range(p), repeat=e):
        candidate = digits + (1,)
        if _is_irreducible(candidate, p):
            return FieldSpec(p=p, e=e, q=q, modulus=candidate)
    raise AssertionError("no irreducible modulus found")  # pragma: no cover
