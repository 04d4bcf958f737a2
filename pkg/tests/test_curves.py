import pytest
from hypothesis import given, settings, strategies as st

from as_zeta.curves import (
    B0,
    C0,
    BudgetExceeded,
    Bk,
    Ck,
    CurveSpec,
    PointCount,
    count_points_bruteforce,
    count_points_scalar,
    count_zeros_bruteforce,
    genus,
    rhs_eval,
    verify_a_invariance,
)
from as_zeta.finite_field import FieldError, build_tower, monic_irreducibles


def prime_field_count(spec):
    """Direct count over F_p: the trace is the identity there."""
    p = spec.p
    e = 2 if spec.family in ("B0", "C0") else p**spec.k + 1
    lin = {"B0": 0, "C0": 1, "Bk": 0, "Ck": spec.a}[spec.family]
    zeros = sum(1 for x in range(p) if (pow(x, e, p) + lin * x) % p == 0)
    return p * zeros + 1


def test_genus():
    assert genus(B0(3)) == 1
    assert genus(Ck(3, 2)) == 9
    assert genus(Bk(5, 1)) == 10
    assert genus(C0(7)) == 3


def test_spec_validation():
    with pytest.raises(ValueError):
        CurveSpec("Bk", 3, 0)
    with pytest.raises(ValueError):
        Ck(5, 1, a=0)
    with pytest.raises(ValueError):
        CurveSpec("Dk", 3, 1)
    with pytest.raises(FieldError):
        B0(9)


def test_key_format():
    assert Ck(3, 2).key() == "Ck:3:2:1:1"
    assert Bk(5, 1).key(3) == "Bk:5:1:1:3"


def test_rhs_eval_examples():
    t = build_tower(3, 1)
    assert rhs_eval(B0(3), t.zero()).is_zero()
    assert rhs_eval(Ck(3, 2), t.element(2)).is_zero()
    for p in (3, 5, 7):
        tp = build_tower(p, 1)
        assert rhs_eval(C0(p), tp.element(p - 1)).is_zero()


@pytest.mark.parametrize(
    "spec,n,expected",
    [
        (B0(3), 1, 4),
        (C0(3), 1, 7),
        (B0(5), 2, 6),
        (B0(3), 2, 16),
        (Ck(3, 2), 1, 7),
    ],
)
def test_bruteforce_examples(spec, n, expected):
    assert count_points_bruteforce(spec, n).count == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_prime_field_counts_match_direct_arithmetic(p):
    for spec in (B0(p), C0(p), Bk(p, 1), Ck(p, 1), Bk(p, 2), Ck(p, 2, a=p - 1)):
        assert count_points_bruteforce(spec, 1).count == prime_field_count(spec)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 2)])
def test_vectorized_matches_scalar(p, n):
    for spec in (B0(p), C0(p), Bk(p, 1), Ck(p, 1), Ck(p, 2, a=2)):
        assert count_points_bruteforce(spec, n).count == count_points_scalar(spec, n)


@pytest.mark.parametrize("p,n", [(3, 4), (5, 3), (7, 2)])
def test_count_independent_of_modulus(p, n):
    mods = monic_irreducibles(p, n)
    first, second = next(mods), next(mods)
    assert first != second
    for spec in (C0(p), Bk(p, 1), Ck(p, 2)):
        a = count_points_bruteforce(spec, n, modulus=first).count
        b = count_points_bruteforce(spec, n, modulus=second).count
        assert a == b


def test_jobs_partition_same_count():
    one = count_zeros_bruteforce(3, 7, 1, [0, 1, 2], jobs=1, chunk=100)
    many = count_zeros_bruteforce(3, 7, 1, [0, 1, 2], jobs=3, chunk=100)
    assert one == many
    assert count_zeros_bruteforce(3, 7, 1, [0, 1, 2]) == one


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        count_points_bruteforce(Bk(3, 1), 10, budget=1000)


@pytest.mark.parametrize("p,n_max", [(3, 6), (5, 4), (7, 3)])
def test_a_invariance(p, n_max):
    for n in range(1, n_max + 1):
        assert verify_a_invariance(p, 1, n)


def test_point_count_violations():
    assert PointCount(B0(3), 1, 4).violations() == []
    assert PointCount(B0(3), 1, 5)  # constructible
    assert any("1 mod" in v for v in PointCount(B0(3), 1, 5).violations())
    assert any("Hasse" in v for v in PointCount(B0(3), 1, 10).violations())


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([3, 5, 7]),
    st.sampled_from(["B0", "C0", "Bk", "Ck"]),
    st.integers(1, 2),
    st.integers(1, 4),
)
def test_counts_satisfy_structural_invariants(p, family, k, n):
    if p**n > 3**8:
        n = 1
    spec = CurveSpec(family, p, 0 if family in ("B0", "C0") else k)
    pc = count_points_bruteforce(spec, n)
    assert pc.violations() == []
