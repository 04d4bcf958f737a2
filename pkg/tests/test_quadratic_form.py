import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from as_zeta.curves import B0, C0, Bk, Ck, count_points_bruteforce
from as_zeta.finite_field import abs_trace, build_tower, legendre
from as_zeta.quadratic_form import (
    TraceFormSpec,
    affine_reduce,
    count_points_rank,
    count_solutions,
    count_value,
    count_zeros,
    diagonalize,
    gram,
    gram_from_matrix,
    monomial_form,
)


def enumerate_form(spec):
    """Element-by-element count of Tr(sum c x^{p^i+p^j}) + Tr(sum c x^{p^i}) = b."""
    t = build_tower(spec.p, spec.n)
    hits = 0
    for x in t.elements():
        val = t.zero()
        for i, j, c in spec.quadratic:
            val = val + c * x.frobenius(i) * x.frobenius(j)
        for i, c in spec.linear:
            val = val + c * x.frobenius(i)
        hits += abs_trace(val) == spec.b
    return hits


def square_form(p, n, b=0):
    return TraceFormSpec(p, n, ((0, 0, 1),), (), b)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 4), (5, 3), (7, 6), (11, 5)])
def test_square_form_is_nondegenerate(p, n):
    g = gram(square_form(p, n))
    assert (g.rank, g.radical_dim) == (n, 0)


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1)])
def test_radical_of_monomial_form(p, k):
    g4 = gram(monomial_form(p, 4 * k, k))
    assert (g4.radical_dim, g4.rank) == (2 * k, 2 * k)
    assert gram(monomial_form(p, 2 * k, k)).radical_dim == 0


def test_count_zeros_examples():
    assert count_zeros(square_form(5, 2)) == 1
    assert count_zeros(square_form(3, 2)) == 5
    for p in (3, 5, 7):
        for n in (1, 3, 5):
            assert count_zeros(square_form(p, n)) == p ** (n - 1)


def test_count_value_examples():
    assert count_value(square_form(3, 2, b=1)) == 2
    assert count_zeros(monomial_form(3, 2, 2)) == 5
    assert count_value(monomial_form(3, 2, 2, b=1)) == 2
    with pytest.raises(ValueError):
        count_value(square_form(3, 2, b=0))
    with pytest.raises(ValueError):
        count_zeros(square_form(3, 2, b=1))


def test_affine_reduce_examples():
    form, b = affine_reduce(Ck(3, 2), 1)
    assert b == 1
    assert count_value(form) == 2
    assert 3 * count_value(form) + 1 == 7
    _, b = affine_reduce(Ck(5, 1, a=2), 1)
    assert b == 1
    for p in (3, 5, 7):
        _, b = affine_reduce(Ck(p, 1, a=2), p)
        assert b == 0
        assert count_points_rank(Ck(p, 1, a=2), p) == count_points_rank(Bk(p, 1), p)
    with pytest.raises(ValueError):
        affine_reduce(Bk(3, 1), 1)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("k", [1, 2])
def test_rank_parity_and_spread_identity(p, k):
    for n in range(1, 17):
        g = gram(monomial_form(p, n, k))
        assert g.rank + g.radical_dim == n
        assert (g.sign is None) == (g.rank % 2 == 1)
        n0 = count_zeros(monomial_form(p, n, k))
        nb = [count_value(monomial_form(p, n, k, b)) for b in range(1, p)]
        assert n0 + sum(nb) == p**n
        if g.rank % 2 == 0:
            assert n0 + (p - 1) * nb[0] == p**n


@pytest.mark.parametrize("p,n_max", [(3, 8), (5, 5), (7, 4)])
def test_rank_method_matches_bruteforce(p, n_max):
    for n in range(1, n_max + 1):
        for spec in (B0(p), C0(p), Bk(p, 1), Ck(p, 1), Bk(p, 2), Ck(p, 2, a=p - 1)):
            assert count_points_rank(spec, n) == count_points_bruteforce(spec, n).count


@st.composite
def small_forms(draw):
    p = draw(st.sampled_from([3, 5, 7]))
    n = draw(st.integers(1, {3: 5, 5: 3, 7: 3}[p]))
    quad = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, p - 1)), min_size=1, max_size=3))
    lin = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, p - 1)), max_size=2))
    b = draw(st.integers(0, p - 1))
    return TraceFormSpec(p, n, tuple(quad), tuple(lin), b)


@settings(max_examples=60, deadline=None)
@given(small_forms())
def test_count_solutions_matches_enumeration(spec):
    assert count_solutions(spec) == enumerate_form(spec)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 8), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_rank_and_sign_are_basis_invariant(p, n, k, seed):
    g = gram(monomial_form(p, n, k))
    rng = np.random.default_rng(seed)
    change = rng.integers(0, p, size=(n, n))
    while _rank_mod_p(change, p) < n:
        change = rng.integers(0, p, size=(n, n))
    moved = gram_from_matrix(change.T @ g.matrix @ change % p, p)
    assert (moved.rank, moved.radical_dim, moved.sign) == (g.rank, g.radical_dim, g.sign)
    if g.sign is None:
        # odd rank: the discriminant moves by a square
        assert legendre(moved.discriminant * g.discriminant, p) == 1


def _rank_mod_p(m, p):
    a = [[int(v) % p for v in row] for row in m]
    r = 0
    for c in range(len(a)):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] * inv
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def test_diagonalize_handles_zero_diagonal():
    # hyperbolic plane: x y
    diag = diagonalize(np.array([[0, 1], [1, 0]]), 5)
    assert len(diag) == 2
    # discriminant of xy is -1/4 up to squares
    assert legendre(diag[0] * diag[1] * -4, 5) == 1
