"""Weil spectra, periods and (non-)divisibility of L-polynomials.

A supersingular curve over F_p has reciprocal roots sqrt(p) * omega_s^j with
omega_s = exp(2 pi i / s).  The multiplicities u_j are recovered from the
deficits D_1..D_s by an inverse DFT,

    u_j = (1/s) sum_{n=1}^{s} D_n omega_s^{-j n},

carried out exactly in a cyclotomic ring that also contains sqrt(p).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

import numpy as np

from . import cyclotomic as cy
from .curves import CurveSpec, genus
from .formulas import Deficit, deficit, divisors, period_bound
from .zeta import LPolynomial


class SpectrumError(ArithmeticError):
    """The deficits are not those of a supersingular curve with the given period."""


@dataclass(frozen=True)
class WeilSpectrum:
    p: int
    s: int
    u: tuple[int, ...]

    @property
    def genus(self) -> int:
        return sum(self.u) // 2

    def lift(self, s_new: int) -> "WeilSpectrum":
        """Same multiset of roots, indexed by s_new-th roots of unity (j -> j s_new/s)."""
        if s_new % self.s:
            raise ValueError(f"cannot lift period {self.s} to {s_new}")
        step = s_new // self.s
        u = [0] * s_new
        for j, mult in enumerate(self.u):
            u[j * step] = mult
        return WeilSpectrum(self.p, s_new, tuple(u))

    def is_conjugation_symmetric(self) -> bool:
        return all(self.u[j] == self.u[(-j) % self.s] for j in range(self.s))

    def to_json(self) -> str:
        return json.dumps({"p": str(self.p), "s": str(self.s), "u": [str(x) for x in self.u]})

    @classmethod
    def from_json(cls, text: str) -> "WeilSpectrum":
        obj = json.loads(text)
        return cls(int(obj["p"]), int(obj["s"]), tuple(int(x) for x in obj["u"]))


def _deficit_lift(d: Deficit, m: int) -> np.ndarray:
    """u + v sqrt(p) as a length-m vector of Z[x]/(x^m - 1)."""
    vec = np.zeros(m, dtype=object)
    vec[0] = d.u
    if d.v:
        vec = vec + d.v * np.array(cy.sqrt_p_lift(d.p, m), dtype=object)
    return vec


def spectrum_from_deficits(deficits: Sequence[Deficit], s: int, p: int, g: int | None = None) -> WeilSpectrum:
    """Exact inverse DFT of D_1..D_s, followed by the mandatory re-synthesis check."""
    if len(deficits) != s:
        raise ValueError(f"need {s} deficits, got {len(deficits)}")
    m = cy.sqrt_p_modulus(s, p)
    step = m // s
    lifted = [_deficit_lift(d, m) for d in deficits]
    u = []
    for j in range(s):
        acc = np.zeros(m, dtype=object)
        for n, vec in enumerate(lifted, start=1):
            acc = acc + np.roll(vec, (-j * n * step) % m)
        red = cy.reduce(acc, m)
        if not cy.is_rational(red):
            raise SpectrumError(f"u_{j} is not rational")
        q, rem = divmod(red[0], s)
        if rem:
            raise SpectrumError(f"u_{j} = {Fraction(red[0], s)} is not an integer")
        if q < 0:
            raise SpectrumError(f"u_{j} = {q} is negative")
        u.append(q)
    spec = WeilSpectrum(p, s, tuple(u))
    if g is not None and sum(u) != 2 * g:
        raise SpectrumError(f"multiplicities sum to {sum(u)}, expected 2g = {2 * g}")
    if not spec.is_conjugation_symmetric():
        raise SpectrumError("spectrum is not closed under complex conjugation")
    for n, vec in enumerate(lifted, start=1):
        syn = np.zeros(m, dtype=object)
        for j, mult in enumerate(u):
            if mult:
                syn[(j * n * step) % m] += mult
        if cy.reduce(syn - vec, m) != (0,) * cy.euler_phi(m):
            raise SpectrumError(f"re-synthesis fails at n={n}")
    return spec


def period(spec: CurveSpec) -> int:
    """Smallest s with deficit(s) = 2g, searched over divisors of a known multiple."""
    two_g = 2 * genus(spec)
    for d in divisors(period_bound(spec)):
        dd = deficit(spec, d)
        if dd.v == 0 and dd.u == two_g:
            return d
    raise SpectrumError(f"{spec} is never minimal below level {period_bound(spec)}")


def weil_spectrum(spec: CurveSpec) -> WeilSpectrum:
    s = period(spec)
    ds = [deficit(spec, n) for n in range(1, s + 1)]
    return spectrum_from_deficits(ds, s, spec.p, genus(spec))


def expand_spectrum(spec: WeilSpectrum) -> LPolynomial:
    """prod_j (1 - sqrt(p) omega^j T)^{u_j} as an integer polynomial, computed exactly.

    The product U(X) = prod_j (1 - omega^j X)^{u_j} is formed in Z[x]/(x^s - 1)[X]
    and L(T) = U(sqrt(p) T); every coefficient is checked to be a rational
    integer after the sqrt(p) factor is absorbed.
    """
    s, p = spec.s, spec.p
    deg = 0
    poly = np.zeros((1, s), dtype=object)
    poly[0, 0] = 1
    for j, mult in enumerate(spec.u):
        if not mult:
            continue
        new = np.zeros((deg + mult + 1, s), dtype=object)
        for i in range(mult + 1):
            c = comb(mult, i) * (-1) ** i
            new[i : i + deg + 1] += c * np.roll(poly, (j * i) % s, axis=1)
        poly, deg = new, deg + mult
    reduced = cy.reduce_rows(poly, s)
    m = cy.sqrt_p_modulus(s, p)
    root = np.array(cy.sqrt_p_lift(p, m), dtype=object)
    coeffs = []
    for i, row in enumerate(reduced):
        if i % 2 == 0:
            if not cy.is_rational(row):
                raise SpectrumError(f"coefficient of T^{i} is irrational")
            coeffs.append(int(row[0]) * p ** (i // 2))
            continue
        # embed Z[zeta_s] into Z[zeta_m] and multiply by sqrt(p)
        up = np.zeros(m, dtype=object)
        for e, c in enumerate(row):
            up[e * (m // s)] = c
        prod = np.zeros(m, dtype=object)
        for e in np.nonzero(root)[0]:
            prod = prod + root[e] * np.roll(up, int(e))
        red = cy.reduce(prod, m)
        if not cy.is_rational(red):
            raise SpectrumError(f"coefficient of T^{i} is not an integer multiple of sqrt(p)^{i}")
        coeffs.append(red[0] * p ** ((i - 1) // 2))
    return LPolynomial(p, 1, deg // 2, tuple(coeffs))


def spectrum_difference_nonneg(inner: CurveSpec, outer: CurveSpec) -> bool:
    """True iff every root multiplicity of the inner curve is at most the outer one."""
    if inner.p != outer.p:
        raise ValueError("curves over different primes")
    a, b = weil_spectrum(inner), weil_spectrum(outer)
    s = a.s * b.s // gcd(a.s, b.s)
    a, b = a.lift(s), b.lift(s)
    return all(y >= x for x, y in zip(a.u, b.u))


def divide_polynomials(num: Sequence[int], den: Sequence[int]) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q; coefficient lists with constant term first."""
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(c) for c in num]
    while r and r[-1] == 0:
        r.pop()
    q = [Fraction(0)] * max(len(r) - len(den) + 1, 0)
    lead = Fraction(den[-1])
    while len(r) >= len(den):
        shift = len(r) - len(den)
        c = r[-1] / lead
        q[shift] = c
        for i, d in enumerate(den):
            r[shift + i] -= c * d
        while r and r[-1] == 0:
            r.pop()
    return q, r


def lpoly_divides(inner: LPolynomial, outer: LPolynomial) -> bool:
    if (inner.p, inner.r) != (outer.p, outer.r):
        raise ValueError("L-polynomials over different base fields")
    q, r = divide_polynomials(outer.coeffs, inner.coeffs)
    if r:
        return False
    if q[0] != 1 or any(c.denominator != 1 for c in q):
        raise ArithmeticError("exact quotient of L-polynomials is not an integer polynomial with constant term 1")
    return True


def period_divides(inner: CurveSpec, outer: CurveSpec) -> bool:
    """Necessary condition for L(inner) | L(outer); False certifies non-divisibility."""
    return period(outer) % period(inner) == 0


def sqrtp_multiplicity(spec: CurveSpec) -> int:
    """Multiplicity of the reciprocal root +sqrt(p), i.e. u_0."""
    return weil_spectrum(spec).u[0]


def nondivisibility_certificate(inner: CurveSpec, outer: CurveSpec) -> str | None:
    """A reason why L(inner) cannot divide L(outer), or None if neither test applies.

    First the period test; failing that, a +sqrt(p) root of the inner curve
    that the outer curve lacks.
    """
    if not period_divides(inner, outer):
        return f"period {period(inner)} does not divide {period(outer)}"
    a, b = sqrtp_multiplicity(inner), sqrtp_multiplicity(outer)
    if a > b:
        return f"+sqrt(p) has multiplicity {a} in the inner curve, {b} in the outer"
    return None
