import pytest
from hypothesis import given, strategies as st

from bpengine.modular import adem_coeff, adem_coeff_beta, binom_mod_p, check_prime

from oracles import binom_oracle, coeff_a_oracle, coeff_b_oracle


@pytest.mark.parametrize("p", [3, 5, 7, 11, 101])
def test_accepts_odd_primes(p):
    assert check_prime(p) == p


@pytest.mark.parametrize("p", [2, 1, 0, -3, 9, 15, 4, 3.5])
def test_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        check_prime(p)


@pytest.mark.parametrize(
    "p,n,k,expected",
    [(3, 4, 2, 0), (5, 1, 1, 1), (3, 3, -1, 0), (3, 2, 5, 0), (3, -1, 0, 0)],
)
def test_binom_examples(p, n, k, expected):
    assert binom_mod_p(p, n, k) == expected


@pytest.mark.parametrize("p", [3, 5])
def test_binom_matches_factorials_below_p_cubed(p):
    top = p**3
    for n in range(top):
        for k in range(n + 2):
            assert binom_mod_p(p, n, k) == binom_oracle(n, k, p), (n, k)


@given(st.sampled_from([3, 5, 7, 13]), st.integers(0, 10**6))
def test_binom_edges(p, n):
    assert binom_mod_p(p, n, 0) == 1
    assert binom_mod_p(p, n, n) == 1


@pytest.mark.parametrize(
    "args,expected", [((3, 1, 1, 0), 2), ((3, 2, 1, 0), 0), ((5, 1, 0, 0), 1)]
)
def test_adem_coeff_examples(args, expected):
    assert adem_coeff(*args) == expected


@pytest.mark.parametrize(
    "args,expected", [((3, 0, 0, 0), 1), ((3, 1, 1, 0), 1), ((3, 1, 4, 0), 0)]
)
def test_adem_coeff_beta_examples(args, expected):
    assert adem_coeff_beta(*args) == expected


@pytest.mark.parametrize("p", [3, 5])
def test_coefficients_match_closed_forms(p):
    for k in range(31):
        for r in range(31):
            for j in range(31):
                assert adem_coeff(p, k, r, j) == coeff_a_oracle(p, k, r, j)
                assert adem_coeff_beta(p, k, r, j) == coeff_b_oracle(p, k, r, j)
