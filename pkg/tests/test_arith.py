import math
import random

import pytest

from coverscope import arith
from oracles import (
    factorize_naive,
    jacobi_naive,
    mod_pow_naive,
    offset_naive,
    order_naive,
    trial_division_prime,
)


class TestModPow:
    def test_exponent_zero(self):
        assert arith.mod_pow(2, 0, 7) == 1

    def test_known_values(self):
        assert arith.mod_pow(2, 9, 73) == 1  # 512 = 7*73 + 1
        assert arith.mod_pow(2, 4, 5) == 1  # 16 mod 5

    def test_matches_repeated_multiplication(self):
        for base in range(50):
            for exp in range(50):
                for modulus in range(2, 50):
                    assert arith.mod_pow(base, exp, modulus) == mod_pow_naive(
                        base, exp, modulus
                    )

    def test_bignum_operands(self):
        base = 3**200
        modulus = 10**50 + 151
        assert arith.mod_pow(base, 10**30, modulus) == pow(base, 10**30, modulus)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            arith.mod_pow(2, 3, 1)
        with pytest.raises(ValueError):
            arith.mod_pow(2, 3, 0)

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            arith.mod_pow(2, -1, 7)


class TestMultiplicativeOrder:
    def test_known_values(self):
        assert arith.multiplicative_order(2, 3) == 2
        assert arith.multiplicative_order(2, 73) == 9
        assert arith.multiplicative_order(2, 241) == 24

    def test_no_order_when_not_coprime(self):
        with pytest.raises(ValueError):
            arith.multiplicative_order(6, 9)

    def test_rejects_even_or_small_d(self):
        with pytest.raises(ValueError):
            arith.multiplicative_order(2, 8)
        with pytest.raises(ValueError):
            arith.multiplicative_order(2, 1)

    def test_divides_d_minus_1_for_primes(self):
        # Fermat: 2^(d-1) == 1 (mod d), so the order divides d-1.
        for d in range(3, 1000, 2):
            if trial_division_prime(d):
                assert (d - 1) % arith.multiplicative_order(2, d) == 0

    def test_minimality_exhaustive(self):
        for d in range(3, 1000, 2):
            b = arith.multiplicative_order(2, d)
            assert b == order_naive(2, d)
            assert pow(2, b, d) == 1
            for j in range(1, b):
                assert pow(2, j, d) != 1

    def test_factoring_path_matches_scan(self):
        # Primes beyond the linear-scan threshold take the divisors-of-(d-1)
        # route; same minimal order.
        for d in (1000003, 6700417, 2147483647):
            assert trial_division_prime(d)
            got = arith.multiplicative_order(2, d)
            assert pow(2, got, d) == 1
            # minimality via the divisor lattice of the order itself
            for p in factorize_naive(got):
                assert pow(2, got // p, d) != 1
        assert arith.multiplicative_order(2, 6700417) == 64


class TestFindOffset:
    def test_known_values(self):
        assert arith.find_offset(78557, 1, 5, 4) == 1
        assert arith.find_offset(78557, 1, 73, 9) == 3
        assert arith.find_offset(509203, -1, 3, 2) == 0

    def test_absent(self):
        assert arith.multiplicative_order(2, 23) == 11
        assert arith.find_offset(78557, 1, 23, 11) is None

    def test_divisor_of_k_has_no_offset(self):
        # 17 | 78557, so every term is 1 mod 17
        assert arith.find_offset(78557, 1, 17, 8) is None

    def test_minimality_and_validity(self):
        rng = random.Random(123)
        for _ in range(300):
            d = rng.randrange(3, 2000) | 1
            k = rng.randrange(1, 10**12) | 1
            sign = rng.choice((1, -1))
            b = order_naive(2, d) or (d - 1)
            c = arith.find_offset(k, sign, d, b)
            assert c == offset_naive(k, sign, d, b)
            if c is not None:
                assert (k * 2**c + sign) % d == 0

    def test_bignum_k(self):
        a = 3896845303873881175159314620808887046066972469809
        b = arith.multiplicative_order(2, 7)
        c = arith.find_offset(a * a, -1, 7, b)
        assert c is not None and (a * a * 2**c - 1) % 7 == 0

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            arith.find_offset(5, 2, 7, 3)
        with pytest.raises(ValueError):
            arith.find_offset(5, 1, 4, 2)


class TestLcmAll:
    def test_witness_moduli(self):
        assert arith.lcm_all([2, 4, 3, 12, 18, 36, 9]) == 36

    def test_single(self):
        assert arith.lcm_all([1]) == 1

    def test_riesel_cover_periods(self):
        assert arith.lcm_all([2, 4, 3, 12, 8, 24]) == 24

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            arith.lcm_all([])

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            arith.lcm_all([2, 0])


class TestJacobi:
    def test_matches_factorization_oracle(self):
        rng = random.Random(7)
        for _ in range(1500):
            n = rng.randrange(3, 10**6) | 1
            a = rng.randrange(0, 10**7)
            assert arith.jacobi(a, n) == jacobi_naive(a, n), (a, n)

    def test_even_n_rejected(self):
        with pytest.raises(ValueError):
            arith.jacobi(3, 10)


class TestIsPrime:
    def test_small_prime(self):
        result = arith.is_prime(7)
        assert result.is_prime and result.method == arith.METHOD_MR_DETERMINISTIC
        assert result.rounds == 0

    def test_known_large_prime(self):
        result = arith.is_prime(143 * 2**53 + 1)
        assert result.is_prime

    def test_known_composite(self):
        result = arith.is_prime(78557)
        assert not result.is_prime
        assert 78557 == 17 * 4621

    def test_agrees_with_trial_division(self):
        for n in range(20000):
            assert arith.is_prime(n).is_prime == trial_division_prime(n), n

    def test_above_word_limit_deterministic(self):
        n = 2**67 - 1  # composite: 193707721 * 761838257287
        result = arith.is_prime(n)
        assert not result.is_prime
        assert result.method == arith.METHOD_MR_DETERMINISTIC
        assert arith.is_prime(2**89 - 1).is_prime  # Mersenne prime, Proth-free path

    def test_probabilistic_flagged(self):
        # 2^89 - 1 exceeds the deterministic bound and is not Proth-form
        result = arith.is_prime(2**89 - 1)
        assert result.method == arith.METHOD_MR_PROBABILISTIC
        assert result.rounds >= 40
        composite = arith.is_prime(2**91 - 1)
        assert not composite.is_prime
        assert composite.rounds >= 40

    def test_proth_dispatch_above_bound(self):
        # 5*2^100 + 1 is above the deterministic bound and Proth-form
        result = arith.is_prime(5 * 2**100 + 1)
        assert result.method == arith.METHOD_PROTH
        assert not result.is_prime

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            arith.is_prime(-1)


class TestProth:
    def test_prime_with_recheckable_witness(self):
        for k, m in ((143, 53), (47, 583)):
            result = arith.proth_test(k, m)
            n = k * 2**m + 1
            assert result.is_prime and result.method == arith.METHOD_PROTH
            assert result.n == n
            # the whole claim re-verifies from the result alone
            assert arith.jacobi(result.witness, n) == -1
            assert pow(result.witness, (n - 1) // 2, n) == n - 1

    def test_composite(self):
        result = arith.proth_test(7, 5)  # 225 = 15^2
        assert not result.is_prime

    def test_perfect_square_falls_back(self):
        # N = 3*2^3 + 1 = 25: no base has Jacobi -1, gcd branch catches 5
        result = arith.proth_test(3, 3)
        assert not result.is_prime

    def test_small_fermat_numbers(self):
        for m, expected in ((1, True), (2, True), (4, True), (5, False)):
            n = 2**(2**m) + 1
            assert arith.proth_test(1, 2**m).is_prime == expected, n

    def test_agrees_with_trial_division(self):
        for k in range(1, 40, 2):
            for m in range(k.bit_length() + 1, 14):
                result = arith.proth_test(k, m)
                assert result.is_prime == trial_division_prime(k * 2**m + 1), (k, m)

    def test_form_violations_rejected(self):
        with pytest.raises(ValueError):
            arith.proth_test(4, 10)
        with pytest.raises(ValueError):
            arith.proth_test(17, 4)  # 2^4 = 16 <= 17


def test_order_exists_iff_coprime_property():
    rng = random.Random(42)
    for _ in range(200):
        d = rng.randrange(3, 3000) | 1
        base = rng.randrange(2, 10**6)
        if math.gcd(base, d) == 1:
            b = arith.multiplicative_order(base, d)
            assert pow(base, b, d) == 1
        else:
            with pytest.raises(ValueError):
                arith.multiplicative_order(base, d)
