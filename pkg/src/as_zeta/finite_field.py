"""Prime fields F_p and explicit extensions F_{p^n} with Frobenius and traces.

Elements of F_{p^n} are dense coefficient tuples over the polynomial basis
``1, x, ..., x^{n-1}`` of ``F_p[x]/(m)``.  Linear maps (Frobenius, trace,
multiplication by ``x``) are also exposed as integer matrices so that the
point counters can work on whole blocks of elements with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np


class FieldError(ValueError):
    """Raised for invalid field parameters or mismatched towers."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_odd_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
        raise FieldError(f"p must be an integer, got {p!r}")
    p = int(p)
    if not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if p == 2:
        raise FieldError("p must be odd")
    return p


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# --- dense polynomials over F_p, coefficient lists with constant term first ---


def poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim([c % p for c in out])


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim([c % p for c in a])
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        poly_trim(r)
    return poly_trim(q), r


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return poly_divmod(a, b, p)[1]


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = poly_trim([c % p for c in a]), poly_trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = poly_mod(poly_mul(base, base, p), mod, p)
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Distinct-degree test: gcd(x^{p^i} - x, m) = 1 for 1 <= i <= n/2."""
    m = poly_trim([c % p for c in modulus])
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    xpi = [0, 1]
    for _ in range(1, n // 2 + 1):
        xpi = poly_powmod(xpi, p, m, p)
        diff = list(xpi) + [0] * max(0, 2 - len(xpi))
        diff[1] = (diff[1] - 1) % p
        if len(poly_gcd(diff, m, p)) > 1:
            return False
    return True


def monic_irreducibles(p: int, n: int) -> Iterator[tuple[int, ...]]:
    """Monic irreducibles of degree n in increasing order.

    The order compares the coefficient tuple ``(c_0, ..., c_{n-1})``
    lexicographically, constant term first.  The leading 1 is included in
    the yielded tuple.
    """
    # For n >= 2 a zero constant term means x divides m.
    first = range(p) if n == 1 else range(1, p)
    for c0 in first:
        for rest in product(range(p), repeat=n - 1):
            m = (c0,) + rest + (1,)
            if is_irreducible(m, p):
                yield m


# --- the tower ---


@lru_cache(maxsize=None)
def _default_modulus(p: int, n: int) -> tuple[int, ...]:
    return next(monic_irreducibles(p, n))


def build_tower(p: int, n: int, modulus: Sequence[int] | None = None) -> "FieldTower":
    """Model of F_{p^n}; the default modulus is the smallest monic irreducible."""
    return _build_tower(p, n, None if modulus is None else tuple(modulus))


@lru_cache(maxsize=256)
def _build_tower(p: int, n: int, modulus: tuple[int, ...] | None) -> "FieldTower":
    p = check_odd_prime(p)
    if n < 1:
        raise FieldError(f"extension degree must be >= 1, got {n}")
    if modulus is None:
        modulus = _default_modulus(p, n)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree n")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
    return FieldTower(p, n, tuple(modulus))


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


@dataclass(frozen=True)
class FieldTower:
    p: int
    n: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.n

    def element(self, coeffs: Sequence[int] | int) -> "FieldElement":
        if isinstance(coeffs, (int, np.integer)):
            coeffs = [int(coeffs)]
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.n:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        coeffs = list(coeffs) + [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.n)

    def one(self) -> "FieldElement":
        return self.element(1)

    def gen(self) -> "FieldElement":
        """The class of x in F_p[x]/(m)."""
        return self.element([0, 1])

    def from_index(self, i: int) -> "FieldElement":
        """Element whose base-p digits (least significant first) are its coefficients."""
        digits = []
        for _ in range(self.n):
            i, r = divmod(i, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in odometer order (coefficient 0 varies fastest)."""
        for i in range(self.order):
            yield self.from_index(i)

    def random_element(self, rng: np.random.Generator) -> "FieldElement":
        return FieldElement(self, tuple(int(c) for c in rng.integers(0, self.p, self.n)))

    # Matrices act on column coefficient vectors: new = M @ old.

    @cached_property
    def reduction_matrix(self) -> np.ndarray:
        """(n, 2n-1) matrix sending a product's coefficients to the reduced element."""
        n, p = self.n, self.p
        r = np.zeros((n, 2 * n - 1), dtype=np.int64)
        for j in range(2 * n - 1):
            col = poly_mod([0] * j + [1], self.modulus, p)
            r[: len(col), j] = col
        r.setflags(write=False)
        return r

    @cached_property
    def frobenius_matrix(self) -> np.ndarray:
        n, p = self.n, self.p
        xp = poly_powmod([0, 1], p, self.modulus, p)
        f = np.zeros((n, n), dtype=np.int64)
        col = [1]
        for u in range(n):
            f[: len(col), u] = col
            col = poly_mod(poly_mul(col, xp, p), self.modulus, p)
        f.setflags(write=False)
        return f

    def frobenius_power_matrix(self, k: int) -> np.ndarray:
        """Matrix of e -> e^{p^k}."""
        k %= self.n
        f = np.eye(self.n, dtype=np.int64)
        base = self.frobenius_matrix
        while k:
            if k & 1:
                f = _matmul_mod(base, f, self.p)
            k >>= 1
            if k:
                base = _matmul_mod(base, base, self.p)
        return f

    @cached_property
    def trace_vector(self) -> np.ndarray:
        """Row t with abs_trace(e) = t . coeffs(e) mod p."""
        f = self.frobenius_matrix
        acc = np.zeros((self.n, self.n), dtype=np.int64)
        power = np.eye(self.n, dtype=np.int64)
        for _ in range(self.n):
            acc = (acc + power) % self.p
            power = _matmul_mod(f, power, self.p)
        # The trace lies in F_p, so only the constant row is non-zero.
        t = acc[0].copy()
        t.setflags(write=False)
        return t

    @cached_property
    def trace_hankel(self) -> np.ndarray:
        """H[u, v] = Tr(x^{u+v}); Tr(a*b) = a^T H b."""
        tpow = (self.trace_vector @ self.reduction_matrix) % self.p
        n = self.n
        idx = np.add.outer(np.arange(n), np.arange(n))
        h = tpow[idx]
        h.setflags(write=False)
        return h


@dataclass(frozen=True)
class FieldElement:
    tower: FieldTower = field(repr=False)
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.tower != self.tower:
                raise FieldError("elements live in different towers")
            return other
        if isinstance(other, (int, np.integer)):
            return self.tower.element(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.tower.p
        return FieldElement(self.tower, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.tower.p
        return FieldElement(self.tower, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = self.tower
        prod = poly_mul(self.coeffs, other.coeffs, t.p)
        return t.element(poly_mod(prod, t.modulus, t.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        t = self.tower
        if e < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero has no inverse")
            e %= t.order - 1
        return t.element(poly_powmod(self.coeffs, e, t.modulus, t.p))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def frobenius(self, k: int = 1) -> "FieldElement":
        """e^{p^k}."""
        t = self.tower
        m = t.frobenius_power_matrix(k)
        v = (m @ np.array(self.coeffs, dtype=np.int64)) % t.p
        return FieldElement(t, tuple(int(c) for c in v))

    def in_subfield(self, d: int) -> bool:
        return self.frobenius(d) == self

    def __int__(self):
        if any(self.coeffs[1:]):
            raise FieldError("element is not in the prime field")
        return self.coeffs[0]

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} mod p={self.tower.p})"


def abs_trace(e: FieldElement) -> int:
    """Tr_{F_{p^n}/F_p}(e) as a residue in [0, p)."""
    t = e.tower
    return int(np.dot(t.trace_vector, np.array(e.coeffs, dtype=np.int64)) % t.p)


def abs_trace_by_frobenius(e: FieldElement) -> int:
    """Same value as :func:`abs_trace`, summing the Frobenius orbit directly."""
    acc = e.tower.zero()
    x = e
    for _ in range(e.tower.n):
        acc = acc + x
        x = x.frobenius()
    return int(acc)


def rel_trace(e: FieldElement, d: int) -> FieldElement:
    """Tr_{F_{p^n}/F_{p^d}}(e) = sum_{i < n/d} e^{p^{d i}}, as an element of the tower."""
    n = e.tower.n
    if d < 1 or n % d:
        raise FieldError(f"{d} does not divide the extension degree {n}")
    acc = e.tower.zero()
    x = e
    for _ in range(n // d):
        acc = acc + x
        x = x.frobenius(d)
    return acc


def subfield_trace(e: FieldElement, d: int) -> int:
    """Absolute trace of an element known to lie in F_{p^d} ⊂ F_{p^n}."""
    if not e.in_subfield(d):
        raise FieldError(f"element is not in the degree-{d} subfield")
    acc = e.tower.zero()
    x = e
    for _ in range(d):
        acc = acc + x
        x = x.frobenius()
    return int(acc)
