import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqcert import ntkernel as nt


def test_padic_valuation_examples():
    assert nt.padic_valuation(48, 2) == 4
    assert nt.padic_valuation(18, 3) == 2
    assert nt.padic_valuation(7, 5) == 0


def test_padic_valuation_rejects_bad_input():
    with pytest.raises(ValueError):
        nt.padic_valuation(48, 4)  # not prime
    with pytest.raises(ValueError):
        nt.padic_valuation(0, 2)


def test_padic_valuation_extended_sentinel():
    inf = nt.padic_valuation_extended(0, 7)
    assert inf is nt.INFINITE_VALUATION
    assert inf != 0 and inf != 10**9
    with pytest.raises(TypeError):
        inf + 1
    assert nt.padic_valuation_extended(12, 2) == 2


def test_valuation_divides_exhaustive():
    for m in range(1, 10001):
        for p in (2, 3, 5, 7, 11, 97):
            v = nt.padic_valuation(m, p)
            assert m % p**v == 0
            assert m % p ** (v + 1) != 0


def test_legendre_examples():
    assert nt.legendre_symbol(2, 7) == 1
    assert nt.legendre_symbol(3, 7) == -1
    for p in (3, 5, 7, 11, 101):
        assert nt.legendre_symbol(1, p) == 1
    assert nt.legendre_symbol(14, 7) == 0
    with pytest.raises(ValueError):
        nt.legendre_symbol(3, 2)
    with pytest.raises(ValueError):
        nt.legendre_symbol(3, 15)


def test_legendre_matches_euler_criterion():
    for p in nt._sieve(200):
        if p == 2:
            continue
        for a in range(p):
            e = pow(a, (p - 1) // 2, p)
            expected = 0 if e == 0 else (-1 if e == p - 1 else 1)
            assert nt.legendre_symbol(a, p) == expected


def test_legendre_matches_square_sets():
    for p in (3, 5, 7, 11, 13, 17, 19, 23):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert (nt.legendre_symbol(a, p) == 1) == (a in squares)


def test_multiplicative_order_examples():
    assert nt.multiplicative_order(2, 7) == 3
    assert nt.multiplicative_order(2, 5) == 4
    assert nt.multiplicative_order(3, 7) == 6
    with pytest.raises(ValueError):
        nt.multiplicative_order(6, 9)


def test_multiplicative_order_brute_force():
    for e in range(2, 200):
        for a in range(1, e):
            if math.gcd(a, e) != 1:
                continue
            x, l = a % e, 1
            while x != 1:
                x = x * a % e
                l += 1
            assert nt.multiplicative_order(a, e) == l


def test_semiprimitivity_examples():
    assert nt.semiprimitivity_exponent(2, 5) == 2
    assert nt.semiprimitivity_exponent(2, 7) is None
    assert nt.semiprimitivity_exponent(3, 1216801) == 20235
    assert pow(3, 20235, 1216801) == 1216801 - 1


def test_semiprimitivity_agrees_with_brute_force():
    for b in range(2, 501):
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            l = nt.multiplicative_order(a, b)
            brute = None
            x = 1
            for c in range(1, l + 1):
                x = x * a % b
                if x == b - 1 or (b <= 2 and x == (b - 1) % b):
                    brute = c
                    break
            got = nt.semiprimitivity_exponent(a, b)
            assert (got is not None) == (brute is not None), (a, b)
            if got is not None:
                assert pow(a, got, b) == (b - 1) % b


def test_semiprimitive_iff_even_order_for_primes():
    # prime moduli: the unit group is cyclic, so -1 lies in <a> iff ord(a) even
    for e in nt._sieve(1000):
        if e % 4 != 1:
            continue
        for a in (2, 3, 5, 7, 10, e - 2):
            if a % e == 0 or math.gcd(a, e) != 1:
                continue
            even = nt.multiplicative_order(a, e) % 2 == 0
            assert nt.is_semiprimitive(a, e) == even


def test_sqrt_mod_examples():
    assert nt.sqrt_mod(-3, 7) == 2
    assert nt.sqrt_mod(-1, 5) == 2
    assert nt.sqrt_mod(2, 5) is None
    assert nt.sqrt_mod(0, 11) == 0
    with pytest.raises(ValueError):
        nt.sqrt_mod(4, 2)


def test_sqrt_mod_all_small_primes():
    for e in nt._sieve(120):
        if e == 2:
            continue
        for a in range(e):
            s = nt.sqrt_mod(a, e)
            if s is None:
                assert nt.legendre_symbol(a, e) == -1
            else:
                assert 0 <= s <= (e - 1) // 2
                assert s * s % e == a % e


def test_isqrt_examples():
    assert nt.isqrt(3136) == 56
    assert nt.is_perfect_square(43681)
    assert nt.isqrt(2) == 1
    with pytest.raises(ValueError):
        nt.isqrt(-1)


@given(st.integers(min_value=0, max_value=1 << 256))
def test_isqrt_bracketing(m):
    r = nt.isqrt(m)
    assert r * r <= m < (r + 1) * (r + 1)
    assert r == math.isqrt(m)


def test_factorize_examples():
    f = nt.factorize(3136)
    assert f.factors == ((2, 6), (7, 2)) and f.complete
    f = nt.factorize(12546)
    assert f.factors == ((2, 1), (3, 2), (17, 1), (41, 1)) and f.complete
    f = nt.factorize(4)
    assert f.factors == ((2, 2),) and f.complete
    with pytest.raises(ValueError):
        nt.factorize(1)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10**9))
def test_factorize_reconstructs(m):
    f = nt.factorize(m)
    assert f.complete
    prod = 1
    for p, e in f.factors:
        assert nt.is_prime(p)
        prod *= p**e
    assert prod == m


def test_factorize_deterministic_and_budgeted():
    n = (10**9 + 7) * (10**9 + 9)
    a = nt.factorize(n, trial_bound=10**4, rho_budget=10**6, seed=1)
    b = nt.factorize(n, trial_bound=10**4, rho_budget=10**6, seed=1)
    assert a == b
    starved = nt.factorize(n, trial_bound=10**4, rho_budget=1, seed=1)
    if not starved.complete:
        assert starved.cofactor == n
        prod = starved.cofactor
        for p, e in starved.factors:
            prod *= p**e
        assert prod == n


def test_is_prime_known_values():
    assert nt.is_prime(2) and nt.is_prime(571) and nt.is_prime(2131)
    assert not nt.is_prime(1216801)  # 571 * 2131
    assert nt.is_prime(5649281) is False  # 11 * 241 * 2131
    assert nt.is_prime(2**61 - 1)
    assert not nt.is_prime(1) and not nt.is_prime(0)


def test_divisors():
    f = nt.factorize(12)
    assert nt.divisors(f) == (1, 2, 3, 4, 6, 12)


def test_find_witness_prime_nonresidue_mode():
    assert nt.find_witness_prime(7, 5, "nonresidue_mod_e") == (7, 1)
    # 45 = 6 (mod 13) is a nonresidue; 5 is its smallest odd-valuation
    # nonresidue prime
    assert nt.find_witness_prime(45, 13, "nonresidue_mod_e") == (5, 1)
    # 35 = 9 (mod 13) is a quadratic residue: premises fail, no witness
    assert nt.find_witness_prime(35, 13, "nonresidue_mod_e") is None
    with pytest.raises(ValueError):
        nt.find_witness_prime(7, 7, "nonresidue_mod_e")  # e = 3 (mod 4)


def test_find_witness_prime_two_mod_three_mode():
    assert nt.find_witness_prime(5, 5, "two_mod_three") == (5, 1)
    assert nt.find_witness_prime(2, 5, "two_mod_three") == (2, 1)
    assert nt.find_witness_prime(4, 5, "two_mod_three") is None  # 4 = 1 (mod 3)


def test_find_witness_prime_witness_is_semiprimitive():
    p, v = nt.find_witness_prime(7, 5, "nonresidue_mod_e")
    assert v % 2 == 1
    assert nt.is_semiprimitive(p, 5)


def test_squarefree_part():
    assert nt.squarefree_part(nt.factorize(12)) == 3
    assert nt.squarefree_part(nt.factorize(3136)) == 1
    assert nt.squarefree_part(nt.factorize(30)) == 30
