"""The four Artin-Schreier families and brute-force point counting.

    B0 : y^p - y = x^2
    C0 : y^p - y = x^2 + x
    Bk : y^p - y = x^{p^k+1}
    Ck : y^p - y = x^{p^k+1} + a x

Every affine x with Tr(f(x)) = 0 lifts to exactly p points, and there is a
single point at infinity, so #X(F_{p^n}) = p N + 1.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .finite_field import FieldElement, FieldError, abs_trace, build_tower, check_odd_prime

FAMILIES = ("B0", "C0", "Bk", "Ck")
DEFAULT_BUDGET = 10**8
CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


@dataclass(frozen=True)
class CurveSpec:
    family: str
    p: int
    k: int = 0
    a: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        object.__setattr__(self, "p", check_odd_prime(self.p))
        if self.family in ("B0", "C0"):
            if self.k != 0:
                raise ValueError(f"{self.family} takes no k")
            if self.a != 1:
                raise ValueError(f"{self.family} takes no a")
        else:
            if not isinstance(self.k, int) or self.k < 1:
                raise ValueError(f"{self.family} needs k >= 1, got {self.k!r}")
            if self.family == "Bk" and self.a != 1:
                raise ValueError("Bk takes no a")
            if self.family == "Ck" and not 1 <= self.a < self.p:
                raise ValueError(f"a must lie in 1..p-1, got {self.a}")

    @property
    def has_linear_term(self) -> bool:
        return self.family in ("C0", "Ck")

    @property
    def frobenius_shift(self) -> int:
        """The k with f(x) = x^{p^k+1} (+ a x); B0/C0 are the k = 0 case."""
        return self.k

    def key(self, r: int = 1) -> str:
        return f"{self.family}:{self.p}:{self.k}:{self.a}:{r}"

    def label(self) -> str:
        if self.family in ("B0", "C0"):
            return f"{self.family}^({self.p})"
        name = f"{self.family[0]}_{self.k}^({self.p})"
        if self.family == "Ck" and self.a != 1:
            name += f"[a={self.a}]"
        return name

    def __str__(self):
        return self.label()


def B0(p: int) -> CurveSpec:
    return CurveSpec("B0", p)


def C0(p: int) -> CurveSpec:
    return CurveSpec("C0", p)


def Bk(p: int, k: int) -> CurveSpec:
    return CurveSpec("Bk", p, k)


def Ck(p: int, k: int, a: int = 1) -> CurveSpec:
    return CurveSpec("Ck", p, k, a)


def genus(spec: CurveSpec) -> int:
    return spec.p**spec.k * (spec.p - 1) // 2


@dataclass(frozen=True)
class PointCount:
    spec: CurveSpec
    n: int
    count: int

    def violations(self) -> list[str]:
        p, n, c = self.spec.p, self.n, self.count
        out = []
        if c % p != 1 % p:
            out.append(f"count {c} is not 1 mod {p}")
        g = genus(self.spec)
        if (c - p**n - 1) ** 2 > 4 * g * g * p**n:
            out.append(f"count {c} violates the Hasse-Weil bound at n={n}")
        return out


def rhs_eval(spec: CurveSpec, x: FieldElement) -> FieldElement:
    """f(x) for the family; x^{p^k+1} is x^{p^k} (k Frobenius steps) times x."""
    if x.tower.p != spec.p:
        raise FieldError(f"element lives over F_{x.tower.p}, curve over F_{spec.p}")
    val = x.frobenius(spec.frobenius_shift) * x
    if spec.has_linear_term:
        val = val + spec.a * x
    return val


def count_points_scalar(spec: CurveSpec, n: int) -> int:
    """Element-by-element count.  Slow; kept as a cross-check for tiny fields."""
    tower = build_tower(spec.p, n)
    zeros = sum(1 for x in tower.elements() if abs_trace(rhs_eval(spec, x)) == 0)
    return spec.p * zeros + 1


def _digits(start: int, stop: int, p: int, n: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(n, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def trace_chunk(p: int, n: int, modulus: tuple[int, ...], k: int, start: int, stop: int):
    """Tr(x^{p^k+1}) and Tr(x) for the elements with odometer index in [start, stop)."""
    tower = build_tower(p, n, modulus)
    x = _digits(start, stop, p, n)
    xq = (x @ tower.frobenius_power_matrix(k).T) % p
    # Tr(a b) = a^T H b with H[u, v] = Tr(x^{u+v})
    quad = ((xq @ tower.trace_hankel) % p * x).sum(axis=1) % p
    lin = (x @ tower.trace_vector) % p
    return quad, lin


def _zero_counts(p, n, modulus, k, start, stop, coeffs):
    quad, lin = trace_chunk(p, n, modulus, k, start, stop)
    return [int(np.count_nonzero((quad + c * lin) % p == 0)) for c in coeffs]


def _ranges(total: int, chunk: int):
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]


def count_zeros_bruteforce(
    p: int,
    n: int,
    k: int,
    linear_coeffs: list[int],
    *,
    modulus: tuple[int, ...] | None = None,
    jobs: int = 1,
    chunk: int = CHUNK,
) -> list[int]:
    """#{x in F_{p^n} : Tr(x^{p^k+1} + c x) = 0} for every c in linear_coeffs.

    The index range is split into disjoint chunks whose partial counts are
    summed, so the result does not depend on ``jobs``.
    """
    tower = build_tower(p, n, modulus)
    ranges = _ranges(tower.order, chunk)
    totals = [0] * len(linear_coeffs)
    args = [(p, n, tower.modulus, k, s, e, list(linear_coeffs)) for s, e in ranges]
    if jobs > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_zero_counts, *zip(*args)))
    else:
        parts = [_zero_counts(*a) for a in args]
    for part in parts:
        totals = [t + c for t, c in zip(totals, part)]
    return totals


def _check_budget(p: int, n: int, budget: int):
    if p**n > budget:
        raise BudgetExceeded(
            f"enumerating F_{p}^{n} needs {p**n} trace evaluations, budget is {budget}"
        )


def count_points_bruteforce(
    spec: CurveSpec,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    modulus: tuple[int, ...] | None = None,
) -> PointCount:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_budget(spec.p, n, budget)
    c = spec.a if spec.has_linear_term else 0
    (zeros,) = count_zeros_bruteforce(
        spec.p, n, spec.frobenius_shift, [c], modulus=modulus, jobs=jobs
    )
    return PointCount(spec, n, spec.p * zeros + 1)


def verify_a_invariance(p: int, k: int, n: int, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> bool:
    """True iff #C_{k,a}(F_{p^n}) is the same for every a in F_p^*."""
    _check_budget(p, n, budget)
    counts = count_zeros_bruteforce(p, n, k, list(range(1, p)), jobs=jobs)
    return len(set(counts)) == 1
