"""Exact arithmetic in Z[zeta_m] = Z[x]/Phi_m(x), with sqrt(p) as a Gauss sum.

The root of unity zeta_m is identified with exp(2 pi i / m).  With that
orientation the quadratic Gauss sum  G = sum_t (t/p) zeta_p^t  equals sqrt(p)
for p = 1 mod 4 and i sqrt(p) for p = 3 mod 4, which pins down sqrt(p) as an
element of Z[zeta_m] whenever 4p | m.

Elements are plain tuples of Python ints of length phi(m).  Intermediate
sums are often kept unreduced in Z[x]/(x^m - 1), where multiplying by a root of
unity is a cyclic shift, and reduced mod Phi_m once at the end.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .finite_field import legendre


def _int_poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """a / b over Z for monic b, raising if the division is not exact."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, constant term first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def euler_phi(m: int) -> int:
    return sum(1 for a in range(1, m + 1) if gcd(a, m) == 1)


@lru_cache(maxsize=None)
def _reduction_matrix(m: int) -> np.ndarray:
    """Integer (m, phi(m)) matrix R with (vector in Z[x]/(x^m - 1)) @ R = its reduction mod Phi_m."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = [[int(i == e) for i in range(deg)] for e in range(deg)]
    for _ in range(deg, m):
        # x times the previous row, then eliminate x^deg with the monic Phi_m
        prev = rows[-1]
        top = prev[-1]
        row = [0] + prev[:-1]
        rows.append([r - top * c for r, c in zip(row, phi[:-1])])
    return np.array(rows, dtype=object)


def reduce(vec, m: int) -> tuple[int, ...]:
    """Reduce a length-m coefficient vector of Z[x]/(x^m - 1) modulo Phi_m."""
    v = np.asarray(vec, dtype=object)
    if v.shape != (m,):
        raise ValueError(f"expected a length-{m} vector, got shape {v.shape}")
    return tuple(int(c) for c in v @ _reduction_matrix(m))


def reduce_rows(mat, m: int) -> np.ndarray:
    return np.asarray(mat, dtype=object) @ _reduction_matrix(m)


def is_rational(elt) -> bool:
    return not any(elt[1:])


@lru_cache(maxsize=None)
def sqrt_p_lift(p: int, m: int) -> tuple[int, ...]:
    """sqrt(p) as a length-m vector in Z[x]/(x^m - 1), x = exp(2 pi i / m).

    Requires p | m, and also 4 | m when p = 3 mod 4.
    """
    if m % p:
        raise ValueError(f"sqrt({p}) needs p | m, got m={m}")
    vec = [0] * m
    step = m // p
    for t in range(1, p):
        vec[(t * step) % m] += legendre(t, p)
    if p % 4 == 1:
        return tuple(vec)
    if m % 4:
        raise ValueError(f"sqrt({p}) with p = 3 mod 4 needs 4p | m, got m={m}")
    # sqrt(p) = -i G, multiplication by x^{3m/4}
    return tuple(int(c) for c in np.roll(np.array(vec, dtype=object), 3 * m // 4))


def sqrt_p_modulus(s: int, p: int) -> int:
    """Smallest ring Z[zeta_M] containing both zeta_s and sqrt(p): M = lcm(s, 4p)."""
    four_p = 4 * p
    return s * four_p // gcd(s, four_p)


def to_complex(elt, m: int) -> complex:
    """Numerical value under x -> exp(2 pi i / m); for tests and diagnostics only."""
    z = np.exp(2j * np.pi / m)
    return complex(sum(complex(c) * z**e for e, c in enumerate(elt)))
