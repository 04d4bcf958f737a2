import pytest
from hypothesis import given, settings, strategies as st

from as_zeta.curves import B0, C0, Bk, Ck, count_points_bruteforce, genus
from as_zeta.finite_field import legendre
from as_zeta.formulas import (
    Deficit,
    ck_level,
    count_formula,
    count_from_deficit,
    curve_is_maximal,
    curve_is_minimal,
    deficit,
    deficit_B0,
    deficit_Bk,
    deficit_C0,
    deficit_Ck,
    deficit_from_count,
    divisors,
    is_maximal,
    is_minimal,
    period_bound,
    reduce_supersingular,
)

I = Deficit.integer
R = Deficit.sqrt_multiple


def all_specs(p, ks=(1, 2)):
    return [B0(p), C0(p)] + [f(p, k) for k in ks for f in (Bk, Ck)]


def test_deficit_b0_examples():
    assert deficit_B0(5, 3) == I(0, 5)
    assert deficit_B0(5, 2) == I(4, 5)
    assert deficit_B0(3, 2) == I(-2, 3)
    assert deficit_B0(3, 4) == I(2, 3)


def test_deficit_c0_examples():
    assert deficit_C0(5, 1) == R(-1, 5)
    assert count_from_deficit(deficit_C0(5, 1), 5, 1) == 11
    assert deficit_C0(3, 1) == R(-1, 3)
    assert count_from_deficit(deficit_C0(3, 1), 3, 1) == 7
    assert deficit_C0(3, 6) == I(-2, 3)


def test_deficit_bk_examples():
    assert deficit_Bk(3, 2, 2) == I(-2, 3)
    assert count_from_deficit(deficit_Bk(3, 2, 2), 3, 2) == 16
    assert deficit_Bk(3, 2, 8) == I(18, 3)
    # (n, 4k) | k with n odd
    for p in (3, 5, 7):
        for k, n in ((1, 1), (3, 3), (3, 9), (5, 5)):
            assert deficit_Bk(p, k, n) == I(0, p)


def test_deficit_ck_examples():
    assert deficit_Ck(3, 2, 1) == R(-1, 3)
    assert count_from_deficit(deficit_Ck(3, 2, 1), 3, 1) == 7
    assert deficit_Ck(3, 2, 2) == I(1, 3)
    assert count_from_deficit(deficit_Ck(3, 2, 2), 3, 2) == 7
    assert deficit_Ck(3, 2, 3) == I(0, 3)


def test_ck_level():
    assert ck_level(3, 1) == 3
    assert ck_level(3, 3) == 3
    assert ck_level(5, 2) == 10


def test_count_from_deficit_examples():
    for p in (3, 5):
        for n in (1, 2, 5):
            assert count_from_deficit(I(0, p), p, n) == p**n + 1
    assert count_from_deficit(I(4, 5), 5, 2) == 6


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_small_field_counts(p):
    assert count_formula(B0(p), 1) == p + 1
    assert count_formula(C0(p), 1) == 2 * p + 1
    sign = -1 if p % 4 == 1 else 1
    assert count_formula(B0(p), 2) == p * p + 1 + sign * (p - 1) * p


@pytest.mark.parametrize("p,n_max", [(3, 9), (5, 6), (7, 5)])
def test_formula_matches_bruteforce(p, n_max):
    for n in range(1, n_max + 1):
        for spec in all_specs(p) + [Ck(p, 1, a=p - 1), Ck(p, 3)]:
            assert count_formula(spec, n) == count_points_bruteforce(spec, n).count, (spec, n)


def test_deficit_rejects_mixed_parts():
    with pytest.raises(ValueError):
        Deficit(1, 1, 3)


def test_deficit_from_count_round_trip():
    for p in (3, 5):
        for spec in all_specs(p):
            for n in range(1, 13):
                d = deficit(spec, n)
                assert deficit_from_count(count_from_deficit(d, p, n), p, n) == d


def test_reduction_examples():
    # n a multiple of s reuses the base value
    spec = C0(5)
    s = period_bound(spec)
    base = {m: deficit(spec, m) for m in divisors(s)}
    assert reduce_supersingular(base, s, 3 * s, 5) == base[s]
    # B0 with p = 1 mod 4: odd n gives 0
    base = {m: deficit(B0(5), m) for m in divisors(2)}
    assert reduce_supersingular(base, 2, 7, 5) == I(0, 5)
    # C0 at p = 5, n = 3: -sqrt5 times legendre(-3, 5) = -1
    base = {m: deficit(C0(5), m) for m in divisors(10)}
    assert legendre(-3, 5) == -1
    assert reduce_supersingular(base, 10, 3, 5) == R(1, 5) == deficit(C0(5), 3)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_reduction_consistency(p):
    for spec in all_specs(p):
        s = period_bound(spec)
        base = {m: deficit(spec, m) for m in divisors(s)}
        for n in range(1, 3 * s + 1):
            assert deficit(spec, n) == reduce_supersingular(base, s, n, p), (spec, n)


def test_minimal_and_maximal_examples():
    for p in (3, 5, 7):
        for k in (1, 2):
            assert curve_is_minimal(Bk(p, k), 4 * k)
    for p in (3, 7, 11):
        assert curve_is_maximal(C0(p), 2 * p)
    for spec in all_specs(5):
        for n in (1, 3, 5):
            assert not curve_is_minimal(spec, n) and not curve_is_maximal(spec, n)
    assert is_minimal(5, 2, 2, I(4, 5))
    assert is_maximal(3, 2, 1, I(-2, 3))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_extremal_levels_propagate(p):
    for spec in all_specs(p):
        g = genus(spec)
        for n0 in range(1, 25):
            if curve_is_minimal(spec, n0):
                assert all(curve_is_minimal(spec, j * n0) for j in range(1, 6))
            if curve_is_maximal(spec, n0):
                for j in range(1, 6):
                    assert deficit(spec, j * n0) == I(2 * g if j % 2 == 0 else -2 * g, p)
                if n0 % 2 == 0:
                    assert count_formula(spec, n0 // 2) == p ** (n0 // 2) + 1


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([3, 5, 7, 11, 13]),
    st.sampled_from(["B0", "C0", "Bk", "Ck"]),
    st.integers(1, 4),
    st.integers(1, 200),
)
def test_deficit_bound_and_parity(p, family, k, n):
    spec = {"B0": B0(p), "C0": C0(p), "Bk": Bk(p, k), "Ck": Ck(p, k)}[family]
    d = deficit(spec, n)
    assert d.within_bound(genus(spec))
    if n % 2:
        assert d.u == 0
    else:
        assert d.v == 0
    c = count_formula(spec, n)
    assert c % p == 1
