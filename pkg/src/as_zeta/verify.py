"""Verification suites: count oracles, reduction rule, divisibility verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .curves import B0, C0, Bk, Ck, CurveSpec, PointCount, count_zeros_bruteforce
from .formulas import count_formula, deficit, divisors, period_bound, reduce_supersingular
from .quadratic_form import count_points_rank
from .spectrum import (
    expand_spectrum,
    lpoly_divides,
    nondivisibility_certificate,
    spectrum_difference_nonneg,
    weil_spectrum,
)
from .zeta import lpoly, validate


@dataclass
class OracleGrid:
    primes: tuple[int, ...] = (3, 5, 7)
    ks: tuple[int, ...] = (1, 2)
    brute_limit: int = 10**6
    rank_n_max: int = 40
    jobs: int = 1


@dataclass(frozen=True)
class Mismatch:
    what: str
    spec: CurveSpec
    n: int
    values: dict = field(hash=False)

    def __str__(self):
        vals = ", ".join(f"{k}={v}" for k, v in self.values.items())
        return f"{self.what}: {self.spec} at n={self.n}: {vals}"


def family_specs(p: int, ks=(1, 2)) -> list[CurveSpec]:
    return [B0(p), C0(p)] + [f(p, k) for k in ks for f in (Bk, Ck)]


def brute_levels(p: int, limit: int) -> list[int]:
    n = 1
    out = []
    while p**n <= limit:
        out.append(n)
        n += 1
    return out


def brute_counts(p: int, k: int, n: int, jobs: int = 1) -> dict[int, int]:
    """Point counts of y^p - y = x^{p^k+1} + c x for every c in F_p, one enumeration pass."""
    zeros = count_zeros_bruteforce(p, n, k, list(range(p)), jobs=jobs)
    return {c: p * z + 1 for c, z in enumerate(zeros)}


def oracle_mismatches(grid: OracleGrid) -> Iterator[Mismatch]:
    """Brute force vs rank method vs closed form, plus a-invariance of C_{k,a}.

    Brute force covers p^n <= brute_limit; rank and formula go up to rank_n_max.
    """
    for p in grid.primes:
        for kk in (0,) + tuple(grid.ks):
            b_spec = B0(p) if kk == 0 else Bk(p, kk)
            c_spec = C0(p) if kk == 0 else Ck(p, kk)
            for n in brute_levels(p, grid.brute_limit):
                counts = brute_counts(p, kk, n, grid.jobs)
                for spec, brute in ((b_spec, counts[0]), (c_spec, counts[1])):
                    bad = PointCount(spec, n, brute).violations()
                    if bad:
                        yield Mismatch("point-count invariant", spec, n, {"brute": brute, "why": bad[0]})
                    rank, formula = count_points_rank(spec, n), count_formula(spec, n)
                    if not brute == rank == formula:
                        yield Mismatch("three-way", spec, n, {"brute": brute, "rank": rank, "formula": formula})
                if kk and len({counts[a] for a in range(1, p)}) != 1:
                    yield Mismatch("a-invariance", c_spec, n, {f"a={a}": counts[a] for a in range(1, p)})
            for spec in (b_spec, c_spec):
                for n in range(1, grid.rank_n_max + 1):
                    rank, formula = count_points_rank(spec, n), count_formula(spec, n)
                    if rank != formula:
                        yield Mismatch("rank-vs-formula", spec, n, {"rank": rank, "formula": formula})


def reduction_mismatches(primes=(3, 5, 7), ks=(1, 2)) -> Iterator[Mismatch]:
    """Closed-form deficits against the reduction rule applied to the divisor levels of s."""
    for p in primes:
        for spec in family_specs(p, ks):
            s = period_bound(spec)
            base = {m: deficit(spec, m) for m in divisors(s)}
            for n in range(1, 3 * s + 1):
                direct, reduced = deficit(spec, n), reduce_supersingular(base, s, n, p)
                if direct != reduced:
                    yield Mismatch("reduction", spec, n, {"closed_form": direct, "reduced": reduced})


@dataclass(frozen=True)
class DivisibilityReport:
    inner: CurveSpec
    outer: CurveSpec
    divides: bool
    spectral: bool
    certificate: str | None

    def symbol(self) -> str:
        return "|" if self.divides else "∤"

    def headline(self) -> str:
        return f"L({_short(self.inner)}) {self.symbol()} L({_short(self.outer)})"


def _short(spec: CurveSpec) -> str:
    return spec.family if spec.family in ("B0", "C0") else f"{spec.family[0]}_{spec.k}"


def check_divisibility(inner: CurveSpec, outer: CurveSpec) -> DivisibilityReport:
    """Both witnesses: exact long division, and comparison of Weil spectra."""
    divides = lpoly_divides(lpoly(inner), lpoly(outer))
    spectral = spectrum_difference_nonneg(inner, outer)
    cert = None if divides else nondivisibility_certificate(inner, outer)
    return DivisibilityReport(inner, outer, divides, spectral, cert)


def spectrum_violations(spec: CurveSpec) -> list[str]:
    """Spectrum integrity and the two-witness L-polynomial check for one curve."""
    out = []
    try:
        sp = weil_spectrum(spec)
    except ArithmeticError as exc:
        return [f"{spec}: {exc}"]
    L = lpoly(spec)
    out += [f"{spec}: {v}" for v in validate(L)]
    if expand_spectrum(sp) != L:
        out.append(f"{spec}: expanded spectrum differs from the L-polynomial built from counts")
    return out
