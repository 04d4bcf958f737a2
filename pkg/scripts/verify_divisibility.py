"""Check L(X_k) | L(X_km) for both families over a grid, with both witnesses.

    python3 scripts/verify_divisibility.py --primes 3 5 --ks 1 2 --ms 2 3 --max-genus 2000
"""

import argparse
import time
from dataclasses import dataclass

from as_zeta import Bk, Ck, genus
from as_zeta.verify import check_divisibility


@dataclass
class DivisibilityConfig:
    primes: tuple[int, ...] = (3, 5)
    ks: tuple[int, ...] = (1, 2)
    ms: tuple[int, ...] = (2, 3)
    max_genus: int = 2000


def run(cfg: DivisibilityConfig) -> int:
    failures = 0
    print(f"{'pair':<22} {'p':>3} {'g_outer':>8} {'division':>9} {'spectral':>9} {'secs':>6}")
    for p in cfg.primes:
        for k in cfg.ks:
            for m in cfg.ms:
                for fam in (Bk, Ck):
                    inner, outer = fam(p, k), fam(p, k * m)
                    if genus(outer) > cfg.max_genus:
                        continue
                    t0 = time.perf_counter()
                    rep = check_divisibility(inner, outer)
                    ok = rep.divides and rep.spectral
                    failures += not ok
                    print(f"{rep.headline():<22} {p:>3} {genus(outer):>8} {str(rep.divides):>9} {str(rep.spectral):>9} {time.perf_counter() - t0:>6.2f}")
    print("all pairs divide" if not failures else f"{failures} pairs FAILED")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--ks", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--ms", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-genus", type=int, default=2000)
    a = ap.parse_args()
    raise SystemExit(1 if run(DivisibilityConfig(tuple(a.primes), tuple(a.ks), tuple(a.ms), a.max_genus)) else 0)


if __name__ == "__main__":
    main()
