"""Print L(B_2), L(C_2) over F_3 and their cubes, and compare with the published versions."""

from as_zeta import Bk, Ck, base_change, lpoly
from as_zeta.zeta import REFERENCE, compare_reference, parse, render


def main():
    for spec in (Bk(3, 2), Ck(3, 2)):
        base = lpoly(spec)
        for r, L in ((1, base), (3, base_change(base, 3))):
            key = spec.key(r)
            verdict = compare_reference(L, parse(REFERENCE[key], 3, r)) if key in REFERENCE else "no reference"
            print(f"{spec.label()} over F_3^{r}: {render(L)}")
            print(f"    published: {verdict}")


if __name__ == "__main__":
    main()
