import pytest
from hypothesis import given, settings, strategies as st

from wrlat import numtheory as nt


def test_factorize_examples():
    assert nt.factorize(91).as_dict() == {7: 1, 13: 1}
    assert nt.factorize(1).pairs == ()
    assert nt.factorize(2000).as_dict() == {2: 4, 5: 3}


def test_factorize_rejects_bad_input():
    with pytest.raises(ValueError):
        nt.factorize(0)
    with pytest.raises(ValueError):
        nt.factorize(2 ** 64 + 1)


def test_factorize_product_and_primality_small_range():
    sieve_primes = set(nt.primes_upto(3000))
    for n in range(1, 3000):
        fact = nt.factorize(n)
        assert fact.value() == n
        for p, e in fact:
            assert p in sieve_primes
            assert e >= 1


@settings(max_examples=200, derandomize=True)
@given(st.integers(min_value=1, max_value=10 ** 6))
def test_factorize_roundtrip_up_to_million(n):
    fact = nt.factorize(n)
    assert fact.value() == n
    assert all(nt.is_prime(p) for p in fact.primes)
    assert list(fact.primes) == sorted(set(fact.primes))


def test_is_prime_against_sieve():
    marks = set(nt.primes_upto(10 ** 4))
    for n in range(2, 10 ** 4):
        assert nt.is_prime(n) == (n in marks)


def test_quadratic_residue_examples():
    assert nt.is_quadratic_residue(5, 3) is False
    for p in (3, 7, 11, 101):
        assert nt.is_quadratic_residue(1, p) is True
    assert nt.is_quadratic_residue(5, 13) is False


def test_quadratic_residue_matches_brute_force():
    for p in nt.primes_upto(200):
        if p == 2:
            continue
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert nt.is_quadratic_residue(a, p) == (a in squares)


def test_quadratic_residue_rejects_divisible():
    with pytest.raises(ValueError):
        nt.is_quadratic_residue(26, 13)
    with pytest.raises(ValueError):
        nt.is_quadratic_residue(3, 9)


def test_sqrt_mod_examples():
    assert nt.sqrt_mod(4, 7) == 2
    assert nt.sqrt_mod(2, 7) == 3
    with pytest.raises(ValueError):
        nt.sqrt_mod(5, 13)


@settings(max_examples=150, derandomize=True)
@given(st.sampled_from([p for p in nt.primes_upto(500) if p > 2]),
       st.integers(min_value=1, max_value=10 ** 6))
def test_sqrt_mod_roundtrip(p, x):
    a = x * x % p
    if a == 0:
        return
    r = nt.sqrt_mod(a, p)
    assert 0 < r <= p - r
    assert r * r % p == a


def test_conductor_params_examples():
    assert nt.conductor_params(7) == (-1, 3)
    assert nt.conductor_params(9) == (-3, 3)
    with pytest.raises(ValueError):
        nt.conductor_params(12)


def test_conductor_validity_examples():
    assert nt.is_valid_conductor(63) is True
    assert nt.is_valid_conductor(21) is False
    assert nt.enumerate_conductors(40) == [7, 9, 13, 19, 31, 37]


def test_conductor_params_identity_and_congruences():
    for m in nt.enumerate_conductors(500):
        a, b = nt.conductor_params(m)
        assert a * a + 3 * b * b == 4 * m
        assert b > 0
        if m % 3 == 0:
            assert a % 9 == 6 and b % 9 in (3, 6)
        else:
            assert a % 3 == 2 and b % 3 == 0


def test_eisenstein_rep_examples():
    rep = nt.eisenstein_rep(7)
    assert rep.x ** 2 - rep.x * rep.y + rep.y ** 2 == 7
    assert (rep.x + rep.y + 1) % 3 == 0
    rep1 = nt.eisenstein_rep(1)
    assert rep1.x ** 2 - rep1.x * rep1.y + rep1.y ** 2 == 1
    rep13 = nt.eisenstein_rep(13)
    assert rep13.x ** 2 - rep13.x * rep13.y + rep13.y ** 2 == 13
    # determinism
    assert nt.eisenstein_rep(91) == nt.eisenstein_rep(91)


def test_eisenstein_rep_rejects_unrepresentable():
    with pytest.raises(ValueError):
        nt.eisenstein_rep(5)  # 5 = 2 mod 3
    with pytest.raises(ValueError):
        nt.eisenstein_rep(49)  # not squarefree


def test_adapted_rep_prime_divisor():
    # N = 91 = 7 * 13 with a base representation
    base = nt.eisenstein_rep(91)
    for p in (7, 13, 91):
        x, y = nt.eisenstein_rep_adapted(91, base.x, base.y, p)
        assert x * x - x * y + y * y == p
        assert (x + y + 1) % 3 == 0
        assert (base.x * x + base.y * y - base.x * y) % p == 0
        assert (base.y * x - base.x * y) % p == 0


def test_adapted_rep_degenerate_full_divisor():
    base = nt.eisenstein_rep(13)
    x, y = nt.eisenstein_rep_adapted(13, base.x, base.y, 13)
    # (x, y) = (base.x, base.y) always satisfies the divisibility conditions
    assert (base.x * base.x + base.y * base.y - base.x * base.y) % 13 == 0
    assert x * x - x * y + y * y == 13


def test_adapted_rep_validates_input():
    with pytest.raises(ValueError):
        nt.eisenstein_rep_adapted(91, 1, 1, 7)  # 1 - 1 + 1 != 91
