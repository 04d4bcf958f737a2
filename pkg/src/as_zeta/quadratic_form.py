"""Counting solutions of Tr(f(x)) = b through the rank and radical of a trace form.

For f(x) = sum c_ij x^{p^i + p^j} the map Q(x) = Tr(f(x)) is an F_p-quadratic
form on F_{p^n}.  Writing Q(x) = x^T A x in the polynomial basis, the number of
zeros only depends on the rank r of A, the radical dimension w = n - r and the
square class of the discriminant of A on a complement of the radical.  This
gives exact counts in time polynomial in n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .curves import CurveSpec
from .finite_field import build_tower, check_odd_prime, legendre


@dataclass(frozen=True)
class TraceFormSpec:
    """Count x in F_{p^n} with Tr(sum c x^{p^i+p^j}) + Tr(sum c x^{p^i}) = b."""

    p: int
    n: int
    quadratic: tuple[tuple[int, int, int], ...]
    linear: tuple[tuple[int, int], ...] = ()
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "p", check_odd_prime(self.p))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        object.__setattr__(self, "quadratic", tuple((int(i), int(j), int(c) % self.p) for i, j, c in self.quadratic))
        object.__setattr__(self, "linear", tuple((int(i), int(c) % self.p) for i, c in self.linear))
        object.__setattr__(self, "b", int(self.b) % self.p)


def monomial_form(p: int, n: int, k: int, b: int = 0) -> TraceFormSpec:
    """Tr(x^{p^k+1}) = b."""
    return TraceFormSpec(p, n, ((k, 0, 1),), (), b)


@dataclass(frozen=True)
class GramData:
    matrix: np.ndarray = field(repr=False)
    rank: int
    radical_dim: int
    discriminant: int
    sign: int | None


def diagonalize(a: np.ndarray, p: int) -> list[int]:
    """Diagonal of a symmetric matrix after congruence reduction mod p.

    Returns the non-zero diagonal entries; their count is the rank and their
    product is the discriminant of the form on a complement of the radical.
    """
    m = [[int(v) % p for v in row] for row in np.asarray(a)]
    n = len(m)
    active = list(range(n))
    diag = []
    while active:
        piv = next((i for i in active if m[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j makes the diagonal entry 2 m[i][j] != 0
            for r in range(n):
                m[r][i] = (m[r][i] + m[r][j]) % p
            for c in range(n):
                m[i][c] = (m[i][c] + m[j][c]) % p
            piv = i
        d = m[piv][piv]
        dinv = pow(d, -1, p)
        active.remove(piv)
        for r in active:
            f = m[r][piv] * dinv % p
            if f:
                for c in range(n):
                    m[r][c] = (m[r][c] - f * m[piv][c]) % p
                for c in range(n):
                    m[c][r] = (m[c][r] - f * m[c][piv]) % p
        diag.append(d)
    return diag


def _form_matrix(spec: TraceFormSpec) -> np.ndarray:
    """M with Q(x) = x^T M x (not symmetrised)."""
    tower = build_tower(spec.p, spec.n)
    p = spec.p
    h = tower.trace_hankel
    m = np.zeros((spec.n, spec.n), dtype=np.int64)
    for i, j, c in spec.quadratic:
        fi = tower.frobenius_power_matrix(i)
        fj = tower.frobenius_power_matrix(j)
        m = (m + c * ((fi.T @ h) % p @ fj)) % p
    return m


def gram(spec: TraceFormSpec) -> GramData:
    """Gram matrix of the polarisation B(x, y) = Q(x+y) - Q(x) - Q(y)."""
    p = spec.p
    m = _form_matrix(spec)
    bmat = (m + m.T) % p
    return gram_from_matrix(bmat, p)


def gram_from_matrix(bmat: np.ndarray, p: int) -> GramData:
    inv2 = pow(2, -1, p)
    diag = diagonalize((bmat * inv2) % p, p)
    rank = len(diag)
    disc = 1
    for d in diag:
        disc = disc * d % p
    sign = legendre((-1) ** (rank // 2) * disc, p) if rank % 2 == 0 else None
    bmat = np.array(bmat, dtype=np.int64)
    bmat.setflags(write=False)
    return GramData(bmat, rank, bmat.shape[0] - rank, disc, sign)


def _solve_mod_p(a: np.ndarray, y: np.ndarray, p: int) -> np.ndarray | None:
    """Some z with a z = y mod p, or None if inconsistent."""
    n = a.shape[0]
    aug = [[int(v) % p for v in row] + [int(t) % p] for row, t in zip(a, y)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][n] for i in range(r, n)):
        return None
    z = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        z[c] = aug[i][n]
    return z


def _count_pure(p: int, n: int, g: GramData, b: int) -> int:
    r, w = g.rank, g.radical_dim
    if r % 2:
        if b == 0:
            return p ** (n - 1)
        eta = legendre((-1) ** ((r - 1) // 2) * b * g.discriminant, p)
        return p ** (n - 1) + eta * p ** ((n - 1 + w) // 2)
    if b == 0:
        return p ** (n - 1) + g.sign * (p - 1) * p ** ((n - 2 + w) // 2)
    return p ** (n - 1) - g.sign * p ** ((n - 2 + w) // 2)


def count_zeros(spec: TraceFormSpec) -> int:
    """#{x : Q(x) = 0} for a purely quadratic form."""
    if spec.linear or spec.b:
        raise ValueError("count_zeros takes a purely quadratic form with target 0")
    return _count_pure(spec.p, spec.n, gram(spec), 0)


def count_value(spec: TraceFormSpec) -> int:
    """#{x : Q(x) = b} for b != 0 and a purely quadratic form."""
    if spec.linear:
        raise ValueError("count_value takes a purely quadratic form")
    if spec.b == 0:
        raise ValueError("target 0: use count_zeros")
    p, n = spec.p, spec.n
    g = gram(spec)
    nb = _count_pure(p, n, g, spec.b)
    if g.rank % 2 == 0:
        n0 = _count_pure(p, n, g, 0)
        q, r = divmod(p**n - n0, p - 1)
        if r or q != nb:
            raise ArithmeticError("non-zero values of an even-rank form are not evenly spread")
    return nb


def count_solutions(spec: TraceFormSpec) -> int:
    """#{x : Q(x) + L(x) = b} for arbitrary linear part L."""
    p, n = spec.p, spec.n
    g = gram(spec)
    if not spec.linear:
        return _count_pure(p, n, g, spec.b)
    tower = build_tower(p, n)
    # Tr(c x^{p^i}) = c Tr(x)
    lsum = sum(c for _, c in spec.linear) % p
    lvec = (lsum * tower.trace_vector) % p
    # Complete the square: B z = l with B = 2A, x = y - z gives Q(y) - A(z, z).
    z = _solve_mod_p(g.matrix, lvec, p)
    if z is None:
        # L is non-zero on the radical, so Q + L takes every value equally often.
        return p ** (n - 1)
    a_zz = int(z @ _form_matrix(spec) @ z) % p
    return _count_pure(p, n, g, (spec.b + a_zz) % p)


def affine_reduce(spec: CurveSpec, n: int) -> tuple[TraceFormSpec, int]:
    """Translate x -> x - a/2 to remove the linear term of C0 / Ck.

    Tr((x - a/2)^{p^k+1} + a (x - a/2)) = Tr(x^{p^k+1}) - n a^2 / 4, so the
    curve has p N_b + 1 points with N_b = #{Tr(x^{p^k+1}) = n a^2 / 4}.
    """
    if spec.family not in ("C0", "Ck"):
        raise ValueError("affine_reduce applies to C0 and Ck")
    p = spec.p
    b = n * spec.a * spec.a * pow(4, -1, p) % p
    return monomial_form(p, n, spec.k, b), b


def curve_form(spec: CurveSpec, n: int) -> TraceFormSpec:
    """The form Tr(f(x)) = 0 attached to the curve, linear term included."""
    lin = ((0, spec.a),) if spec.has_linear_term else ()
    return TraceFormSpec(spec.p, n, ((spec.k, 0, 1),), lin, 0)


def count_points_rank(spec: CurveSpec, n: int) -> int:
    """#X(F_{p^n}) from the rank method."""
    if spec.has_linear_term:
        form, _ = affine_reduce(spec, n)
        zeros = count_solutions(form)
    else:
        zeros = count_zeros(monomial_form(spec.p, n, spec.k))
    return spec.p * zeros + 1
