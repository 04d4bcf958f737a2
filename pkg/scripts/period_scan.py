"""Periods, +sqrt(p) multiplicities and extremal levels for every family at small p.

    python3 scripts/period_scan.py --primes 3 5 7 11 13 --ks 1 2 3
"""

import argparse
from dataclasses import dataclass

from as_zeta import B0, C0, Bk, Ck, genus
from as_zeta.formulas import curve_is_maximal, period_bound
from as_zeta.spectrum import period, weil_spectrum


@dataclass
class ScanConfig:
    primes: tuple[int, ...] = (3, 5, 7, 11, 13)
    ks: tuple[int, ...] = (1, 2, 3)


def rows(cfg: ScanConfig):
    for p in cfg.primes:
        specs = [B0(p), C0(p)] + [f(p, k) for k in cfg.ks for f in (Bk, Ck)]
        for spec in specs:
            s = period(spec)
            maximal = [n for n in range(1, s + 1) if curve_is_maximal(spec, n)]
            u0 = weil_spectrum(spec).u[0] if genus(spec) <= 2000 else None
            yield spec.label(), p, genus(spec), period_bound(spec), s, maximal[:1], u0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11, 13])
    ap.add_argument("--ks", type=int, nargs="+", default=[1, 2, 3])
    a = ap.parse_args()
    print(f"{'curve':<10} {'p':>3} {'g':>7} {'bound':>6} {'period':>7} {'first maximal':>14} {'u_0':>5}")
    for label, p, g, bound, s, mx, u0 in rows(ScanConfig(tuple(a.primes), tuple(a.ks))):
        print(f"{label:<10} {p:>3} {g:>7} {bound:>6} {s:>7} {str(mx[0]) if mx else '-':>14} {str(u0):>5}")


if __name__ == "__main__":
    main()
