from as_zeta.curves import B0, C0, Bk, Ck
from as_zeta.verify import (
    OracleGrid,
    brute_counts,
    brute_levels,
    check_divisibility,
    family_specs,
    oracle_mismatches,
    reduction_mismatches,
    spectrum_violations,
)


def test_brute_levels():
    assert brute_levels(3, 10**6) == list(range(1, 13))
    assert brute_levels(7, 10**6) == list(range(1, 8))


def test_brute_counts_single_pass():
    counts = brute_counts(3, 2, 1)
    assert counts[0] == 4  # B_2 over F_3
    assert counts[1] == counts[2] == 7


def test_small_oracle_grid_is_clean():
    grid = OracleGrid(primes=(3, 5), ks=(1,), brute_limit=3**6, rank_n_max=12)
    assert list(oracle_mismatches(grid)) == []


def test_reduction_is_clean():
    assert list(reduction_mismatches((3, 5), (1, 2))) == []


def test_divisibility_report():
    rep = check_divisibility(Ck(3, 1), Ck(3, 2))
    assert rep.divides and rep.spectral and rep.certificate is None
    assert rep.headline() == "L(C_1) | L(C_2)"
    rep = check_divisibility(Bk(3, 2), Bk(3, 3))
    assert not rep.divides and not rep.spectral
    assert rep.certificate == "period 8 does not divide 12"


def test_spectrum_violations_empty():
    for spec in family_specs(5, (1,)) + [B0(7), C0(7)]:
        assert spectrum_violations(spec) == []
