"""L-polynomials: synthesis from point counts, validation and base change.

For a curve over F_q (q = p^r) with counts a_n = #X(F_{q^n}), the numbers
t_n = a_n - q^n - 1 are minus the power sums of the reciprocal roots, and
the L-polynomial coefficients follow from Newton's identities

    m c_m = sum_{i=1}^{m} t_i c_{m-i},   c_0 = 1.

All arithmetic is over Python integers; every division must be exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .curves import CurveSpec, genus
from .finite_field import check_odd_prime
from .formulas import count_formula


class InconsistentCounts(ValueError):
    """The point counts do not come from an L-polynomial with integer coefficients."""


@dataclass(frozen=True)
class LPolynomial:
    p: int
    r: int
    g: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.g + 1:
            raise ValueError(f"genus {self.g} needs {2 * self.g + 1} coefficients, got {len(self.coeffs)}")

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def degree(self) -> int:
        return 2 * self.g

    def evaluate(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def reflected(self) -> "LPolynomial":
        """L(-T)."""
        return LPolynomial(self.p, self.r, self.g, tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def __str__(self):
        return render(self)


def lpoly_from_counts(counts: Sequence[int], p: int, r: int = 1, g: int | None = None) -> LPolynomial:
    """L-polynomial over F_{p^r} from a_1..a_{2g}, a_n = #X(F_{p^{r n}})."""
    p = check_odd_prime(p)
    if g is None:
        if len(counts) % 2:
            raise ValueError("need an even number of counts")
        g = len(counts) // 2
    if len(counts) != 2 * g:
        raise ValueError(f"genus {g} needs exactly {2 * g} counts, got {len(counts)}")
    q = p**r
    t = [None] + [a - q**n - 1 for n, a in enumerate(counts, start=1)]
    for n in range(1, 2 * g + 1):
        if t[n] * t[n] > 4 * g * g * q**n:
            raise InconsistentCounts(f"count a_{n} = {counts[n - 1]} violates the Hasse-Weil bound")
    c = [1]
    for m in range(1, 2 * g + 1):
        acc = sum(t[i] * c[m - i] for i in range(1, m + 1))
        cm, rem = divmod(acc, m)
        if rem:
            raise InconsistentCounts(f"coefficient c_{m} = {acc}/{m} is not an integer")
        c.append(cm)
    return LPolynomial(p, r, g, tuple(c))


def power_sums(L: LPolynomial, count: int) -> list[int]:
    """t_1..t_count with t_n = -(sum of n-th powers of the reciprocal roots)."""
    c = L.coeffs
    t = [0]
    for m in range(1, count + 1):
        cm = c[m] if m < len(c) else 0
        acc = m * cm - sum(t[i] * (c[m - i] if m - i < len(c) else 0) for i in range(1, m))
        t.append(acc)
    return t[1:]


def counts_from_lpoly(L: LPolynomial, n: int) -> int:
    """#X(F_{q^n}) recovered from L."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return L.q**n + 1 + power_sums(L, n)[-1]


def base_change(L: LPolynomial, m: int) -> LPolynomial:
    """L-polynomial over F_{q^m}: reciprocal roots raised to the m-th power."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return L
    t = power_sums(L, 2 * L.g * m)
    qm = L.q**m
    counts = [qm**j + 1 + t[j * m - 1] for j in range(1, 2 * L.g + 1)]
    return lpoly_from_counts(counts, L.p, L.r * m, L.g)


def _ord_p(c: int, p: int) -> int:
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


def validate(L: LPolynomial) -> list[str]:
    """Violated structural invariants of a supersingular L-polynomial (empty list = pass)."""
    c, g, q = L.coeffs, L.g, L.q
    out = []
    if c[0] != 1:
        out.append(f"c_0 = {c[0]}, expected 1")
    if c[2 * g] != q**g:
        out.append(f"c_{2 * g} = {c[2 * g]}, expected q^g = {q**g}")
    for i in range(g + 1):
        if c[2 * g - i] != q ** (g - i) * c[i]:
            out.append(f"functional equation fails at i={i}: c_{2 * g - i} != q^{g - i} c_{i}")
    for i in range(1, 2 * g + 1):
        need = -(-i * L.r // 2)
        if c[i] and _ord_p(c[i], L.p) < need:
            out.append(f"ord_p(c_{i}) < {i * L.r}/2")
    return out


def lpoly(spec: CurveSpec, r: int = 1) -> LPolynomial:
    """L-polynomial of the curve over F_{p^r}, from closed-form counts."""
    g = genus(spec)
    counts = [count_formula(spec, n * r) for n in range(1, 2 * g + 1)]
    return lpoly_from_counts(counts, spec.p, r, g)


# --- canonical text ---


def render(L: LPolynomial) -> str:
    """Ascending powers with explicit signs, e.g. '1 + 3*T^2 - 162*T^8'."""
    parts = []
    for i, c in enumerate(L.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("*T" if i == 1 else f"*T^{i}")
        body = f"{abs(c)}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"^(\d+)(?:\*T(?:\^(\d+))?)?$")


def parse(text: str, p: int, r: int = 1) -> LPolynomial:
    """Inverse of :func:`render`."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty polynomial text")
    terms = {}
    sign = 1
    expect_term = True
    for tok in tokens:
        if tok in "+-" and not expect_term:
            sign = 1 if tok == "+" else -1
            expect_term = True
            continue
        if not expect_term:
            raise ValueError(f"malformed polynomial text near {tok!r}")
        if tok.startswith("-"):
            sign, tok = -sign, tok[1:]
        mt = _TERM.match(tok)
        if not mt:
            raise ValueError(f"malformed term {tok!r}")
        coef = int(mt.group(1))
        if "*T" in tok:
            deg = int(mt.group(2)) if mt.group(2) else 1
        else:
            deg = 0
        if deg in terms:
            raise ValueError(f"repeated degree {deg}")
        terms[deg] = sign * coef
        sign = 1
        expect_term = False
    top = max(terms)
    if top % 2:
        raise ValueError("L-polynomial must have even degree")
    coeffs = tuple(terms.get(i, 0) for i in range(top + 1))
    return LPolynomial(p, r, top // 2, coeffs)


# --- published reference polynomials ---

# Keyed by CurveSpec.key(r); published values, converted to canonical text.
REFERENCE = {
    "Bk:3:2:1:1": "1 + 3*T^2 - 162*T^8 - 486*T^10 + 6561*T^16 + 19683*T^18",
    "Ck:3:2:1:1": "1 - 3*T + 3*T^2 + 81*T^8 - 243*T^9 + 243*T^10 + 6561*T^16 - 19683*T^17 + 19683*T^18",
    "Bk:3:2:1:3": "1 + 27*T^2 - 1062882*T^8 - 28697814*T^10 + 282429536481*T^16 + 7625597484987*T^18",
    "Ck:3:2:1:3": "1 + 27*T^2 - 1062882*T^8 - 28697814*T^10 + 282429536481*T^16 + 7625597484987*T^18",
}


def compare_reference(L: LPolynomial, reference: LPolynomial) -> str:
    """'match', 'odd-sign' (reference is L(-T)), or 'mismatch'."""
    if L.coeffs == reference.coeffs:
        return "match"
    if L.reflected().coeffs == reference.coeffs:
        return "odd-sign"
    return "mismatch"


def reference_note(key: str, L: LPolynomial) -> str | None:
    """Human-readable note when a published polynomial for this key disagrees with L."""
    text = REFERENCE.get(key)
    if text is None:
        return None
    verdict = compare_reference(L, parse(text, L.p, L.r))
    if verdict == "match":
        return None
    if verdict == "odd-sign":
        return "note: published polynomial differs in the sign of every odd coefficient (it equals L(-T)); even coefficients agree"
    return f"note: published polynomial {text} disagrees with the computed one"
