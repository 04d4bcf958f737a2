"""Closed-form normalised point counts for B0, C0, Bk and Ck.

The normalised deficit of a curve X/F_p at level n is

    D_n = -p^{-n/2} (#X(F_{p^n}) - p^n - 1) = sum_i zeta_i^n,

the power sum of its normalised Weil numbers.  For these families D_n is
always either an integer or an integer multiple of sqrt(p); it is stored as
the pair (u, v) meaning u + v sqrt(p).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping

from .curves import CurveSpec, genus
from .finite_field import check_odd_prime, legendre


@dataclass(frozen=True)
class Deficit:
    u: int
    v: int
    p: int

    def __post_init__(self):
        if self.u and self.v:
            raise ValueError(f"deficit {self.u} + {self.v}*sqrt({self.p}) mixes both parts")

    @classmethod
    def integer(cls, u: int, p: int) -> "Deficit":
        return cls(u, 0, p)

    @classmethod
    def sqrt_multiple(cls, v: int, p: int) -> "Deficit":
        return cls(0, v, p)

    def scaled(self, c: int) -> "Deficit":
        return Deficit(c * self.u, c * self.v, self.p)

    def square_abs(self) -> int:
        """|u + v sqrt p|^2, exact because one part is zero."""
        return self.u * self.u + self.v * self.v * self.p

    def within_bound(self, g: int) -> bool:
        return self.square_abs() <= 4 * g * g

    def __str__(self):
        if self.v:
            return f"{self.v}*sqrt({self.p})"
        return str(self.u)


def _pow_sign(e: int) -> int:
    return -1 if e % 2 else 1


def _twisted_symbol(n: int, p: int) -> int:
    """((-1)^{(n-1)/2} n / p) for odd n."""
    return legendre(_pow_sign((n - 1) // 2) * n, p)


@dataclass(frozen=True)
class DeficitCase:
    n: int
    d: int
    case: str
    deficit: Deficit


def _b0_case(p: int, n: int) -> DeficitCase:
    if p % 4 == 1:
        d = gcd(n, 2)
        if n % 2:
            return DeficitCase(n, d, "n odd", Deficit.integer(0, p))
        return DeficitCase(n, d, "n even", Deficit.integer(p - 1, p))
    d = gcd(n, 4)
    if d == 1:
        return DeficitCase(n, d, "(4,n)=1", Deficit.integer(0, p))
    if d == 2:
        return DeficitCase(n, d, "(4,n)=2", Deficit.integer(-(p - 1), p))
    return DeficitCase(n, d, "(4,n)=4", Deficit.integer(p - 1, p))


def _c0_case(p: int, n: int) -> DeficitCase:
    if p % 4 == 1:
        d = gcd(n, 2 * p)
        table = {
            2: ("(n,2p)=2", Deficit.integer(-1, p)),
            p: ("(n,2p)=p", Deficit.integer(0, p)),
            2 * p: ("(n,2p)=2p", Deficit.integer(p - 1, p)),
        }
        if d == 1:
            return DeficitCase(n, d, "(n,2p)=1", Deficit.sqrt_multiple(-legendre(n, p), p))
        label, val = table[d]
        return DeficitCase(n, d, label, val)
    d = gcd(n, 4 * p)
    table = {
        2: ("(n,4p)=2", Deficit.integer(1, p)),
        4: ("(n,4p)=4", Deficit.integer(-1, p)),
        p: ("(n,4p)=p", Deficit.integer(0, p)),
        2 * p: ("(n,4p)=2p", Deficit.integer(-(p - 1), p)),
        4 * p: ("(n,4p)=4p", Deficit.integer(p - 1, p)),
    }
    if d == 1:
        return DeficitCase(n, d, "(n,4p)=1", Deficit.sqrt_multiple(-_twisted_symbol(n, p), p))
    label, val = table[d]
    return DeficitCase(n, d, label, val)


def _bk_case(p: int, k: int, n: int) -> DeficitCase:
    d = gcd(n, 4 * k)
    if k % d == 0:
        if d % 2:
            return DeficitCase(n, d, "d|k, d odd", Deficit.integer(0, p))
        sign = _pow_sign(n * (p - 1) // 4)
        return DeficitCase(n, d, "d|k, d even", Deficit.integer(sign * (p - 1), p))
    if k % (d // 2) == 0:
        # +(p-1): agrees with the count over F_{p^{2d}} and with enumeration.
        return DeficitCase(n, d, "d∤k, d/2|k", Deficit.integer(p - 1, p))
    return DeficitCase(n, d, "d∤2k, d|4k", Deficit.integer((p - 1) * p ** gcd(k, n), p))


def ck_level(p: int, k: int) -> int:
    """l = k if p | k else k p."""
    return k if k % p == 0 else k * p


def _ck_case(p: int, k: int, n: int) -> DeficitCase:
    l = ck_level(p, k)
    d = gcd(n, 4 * l)
    pn = n % p == 0
    tag = "p|n" if pn else "p∤n"
    if l % d == 0:
        if n % 2:
            if pn:
                return DeficitCase(n, d, "d|l, n odd, p|n", Deficit.integer(0, p))
            val = Deficit.sqrt_multiple(-_twisted_symbol(n, p), p)
            return DeficitCase(n, d, "d|l, n odd, p∤n", val)
        sign = _pow_sign(n * (p - 1) // 4)
        if pn:
            return DeficitCase(n, d, "d|l, n even, p|n", Deficit.integer(sign * (p - 1), p))
        return DeficitCase(n, d, "d|l, n even, p∤n", Deficit.integer(-sign, p))
    if l % (d // 2) == 0:
        val = p - 1 if pn else -1
        return DeficitCase(n, d, f"d∤l, d/2|l, {tag}", Deficit.integer(val, p))
    val = (p - 1) * p ** gcd(k, n) if pn else -(p ** gcd(k, n))
    return DeficitCase(n, d, f"d∤2l, d|4l, {tag}", Deficit.integer(val, p))


def _check_n(n: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def deficit_B0(p: int, n: int) -> Deficit:
    _check_n(n)
    return _b0_case(check_odd_prime(p), n).deficit


def deficit_C0(p: int, n: int) -> Deficit:
    _check_n(n)
    return _c0_case(check_odd_prime(p), n).deficit


def deficit_Bk(p: int, k: int, n: int) -> Deficit:
    _check_n(n)
    if k < 1:
        raise ValueError("k must be >= 1")
    return _bk_case(check_odd_prime(p), k, n).deficit


def deficit_Ck(p: int, k: int, n: int) -> Deficit:
    _check_n(n)
    if k < 1:
        raise ValueError("k must be >= 1")
    return _ck_case(check_odd_prime(p), k, n).deficit


def deficit_case(spec: CurveSpec, n: int) -> DeficitCase:
    """Deficit at level n together with the gcd d and the case that fired."""
    _check_n(n)
    if spec.family == "B0":
        return _b0_case(spec.p, n)
    if spec.family == "C0":
        return _c0_case(spec.p, n)
    if spec.family == "Bk":
        return _bk_case(spec.p, spec.k, n)
    return _ck_case(spec.p, spec.k, n)


def deficit(spec: CurveSpec, n: int) -> Deficit:
    return deficit_case(spec, n).deficit


def period_bound(spec: CurveSpec) -> int:
    """A multiple of the period: every normalised Weil number is a root of unity of this order."""
    p, k = spec.p, spec.k
    if spec.family == "B0":
        return 4
    if spec.family == "C0":
        return 4 * p
    if spec.family == "Bk":
        return 4 * k
    return 4 * ck_level(p, k)


def count_from_deficit(d: Deficit, p: int, n: int) -> int:
    """#X(F_{p^n}) = p^n + 1 - p^{n/2} D_n."""
    _check_n(n)
    if n % 2 == 0:
        if d.v:
            raise ValueError(f"even level n={n} with a sqrt(p) part: {d}")
        return p**n + 1 - p ** (n // 2) * d.u
    if d.u:
        raise ValueError(f"odd level n={n} with an integer part: {d}")
    return p**n + 1 - p ** ((n + 1) // 2) * d.v


def deficit_from_count(count: int, p: int, n: int) -> Deficit:
    """Inverse of :func:`count_from_deficit`; raises if the count is not of that shape."""
    diff = p**n + 1 - count
    if n % 2 == 0:
        q, r = divmod(diff, p ** (n // 2))
        if r:
            raise ValueError(f"count {count} is not p^n + 1 - p^(n/2) u")
        return Deficit.integer(q, p)
    q, r = divmod(diff, p ** ((n + 1) // 2))
    if r:
        raise ValueError(f"count {count} is not p^n + 1 - p^((n+1)/2) v")
    return Deficit.sqrt_multiple(q, p)


def count_formula(spec: CurveSpec, n: int) -> int:
    return count_from_deficit(deficit(spec, n), spec.p, n)


def reduce_supersingular(base: Mapping[int, Deficit], s: int, n: int, p: int) -> Deficit:
    """Deficit at level n from the deficits at the divisors of s.

    With m = gcd(n, s) and n = m t the value is copied from level m, except for
    odd m with p not dividing t, where it is twisted by ((-1)^{(t-1)/2} t / p).
    """
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if s % 2:
        raise ValueError("s must be even")
    m = gcd(n, s)
    t = n // m
    try:
        dm = base[m]
    except KeyError:
        raise ValueError(f"base values are missing the divisor {m} of s={s}") from None
    if m % 2 == 0 or t % p == 0:
        return dm
    return dm.scaled(_twisted_symbol(t, p))


def divisors(s: int) -> list[int]:
    return [d for d in range(1, s + 1) if s % d == 0]


def is_minimal(p: int, n: int, g: int, d: Deficit) -> bool:
    return n % 2 == 0 and d.v == 0 and d.u == 2 * g


def is_maximal(p: int, n: int, g: int, d: Deficit) -> bool:
    return n % 2 == 0 and d.v == 0 and d.u == -2 * g


def curve_is_minimal(spec: CurveSpec, n: int) -> bool:
    return is_minimal(spec.p, n, genus(spec), deficit(spec, n))


def curve_is_maximal(spec: CurveSpec, n: int) -> bool:
    return is_maximal(spec.p, n, genus(spec), deficit(spec, n))
