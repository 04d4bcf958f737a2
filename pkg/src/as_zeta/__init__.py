"""Exact zeta functions of the Artin-Schreier curves y^p - y = x^{p^k+1} (+ a x)."""

__version__ = "0.1.0"

from .curves import B0, C0, Bk, Ck, CurveSpec, count_points_bruteforce, genus
from .formulas import Deficit, count_formula, deficit
from .spectrum import WeilSpectrum, lpoly_divides, period, weil_spectrum
from .zeta import LPolynomial, base_change, lpoly, lpoly_from_counts, validate

__all__ = [
    "B0",
    "C0",
    "Bk",
    "Ck",
    "CurveSpec",
    "Deficit",
    "LPolynomial",
    "WeilSpectrum",
    "base_change",
    "count_formula",
    "count_points_bruteforce",
    "deficit",
    "genus",
    "lpoly",
    "lpoly_divides",
    "lpoly_from_counts",
    "period",
    "validate",
    "weil_spectrum",
]
