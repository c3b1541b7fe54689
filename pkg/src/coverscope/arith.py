"""Exact integer arithmetic for the verification engine.

Modular exponentiation, multiplicative order, offset (discrete-log style)
search, lcm, and primality testing with checkable evidence.  Everything is
pure, exact, and float-free; word-sized work is routed through the kernel
backend, bignums stay on Python ints.
"""

import math
import random
from dataclasses import dataclass

from coverscope._backend import WORD_LIMIT, kernels

METHOD_PROTH = "proth"
METHOD_MR_DETERMINISTIC = "miller-rabin-deterministic"
METHOD_MR_PROBABILISTIC = "miller-rabin-probabilistic"

# Deterministic Miller-Rabin witness table (first 13 primes), valid for
# every n < 3317044064679887385961981 ~ 3.3e24.  Below 2**64 the backend
# kernel uses the first twelve.
MR_DETERMINISTIC_BOUND = 3317044064679887385961981
MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

MR_PROBABILISTIC_ROUNDS = 40

# Above this, the order search for prime d switches from a linear scan to
# testing divisors of d-1; an optimization only, same minimal result.
ORDER_LINEAR_SCAN_LIMIT = 10**6

# How many candidate bases the Proth test examines while hunting for a
# quadratic non-residue before giving up and falling back to Miller-Rabin.
PROTH_CANDIDATE_LIMIT = 1000


@dataclass(frozen=True)
class PrimalityResult:
    """Outcome of one primality test, with enough data to re-check it.

    n is the integer that was tested.  For the Proth method, witness is the
    base a with jacobi(a, n) = -1; n is prime iff a**((n-1)/2) == -1 (mod n),
    so the claim re-verifies from this record alone.  For Miller-Rabin,
    witness is the base that certified compositeness (0 when none is
    singled out); deterministic results re-verify by re-running the fixed
    base table.  rounds is nonzero only for the probabilistic method.
    """

    n: int
    method: str
    is_prime: bool
    witness: int = 0
    rounds: int = 0


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by square-and-multiply (O(log exp) products)."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    if modulus < WORD_LIMIT and exp < WORD_LIMIT:
        return kernels.mod_pow_u64(base % modulus, exp, modulus)
    return pow(base, exp, modulus)


def lcm_all(values) -> int:
    """Exact lcm of a nonempty sequence of positive integers."""
    vals = list(values)
    if not vals:
        raise ValueError("lcm_all needs at least one value")
    for v in vals:
        if v < 1:
            raise ValueError(f"lcm_all requires values >= 1, got {v}")
    return math.lcm(*vals)


def multiplicative_order(base: int, d: int) -> int:
    """Least b >= 1 with base**b == 1 (mod d), for odd d >= 3 coprime to base.

    Linear scan over b = 1..d-1 (the order always lands in that range);
    for primes past ORDER_LINEAR_SCAN_LIMIT the scan is replaced by
    stripping prime factors from d-1, which the order must divide.
    """
    if d < 3 or d % 2 == 0:
        raise ValueError(f"d must be odd and >= 3, got {d}")
    if math.gcd(base, d) != 1:
        raise ValueError(f"no multiplicative order: gcd({base}, {d}) != 1")
    if d > ORDER_LINEAR_SCAN_LIMIT and is_prime(d).is_prime:
        return _order_by_factoring(base, d)
    if d < WORD_LIMIT:
        b = kernels.order_scan_u64(base % d, d, d - 1)
    else:
        b = _order_scan_big(base, d)
    assert b > 0, "order must exist when gcd(base, d) == 1"
    return b


def _order_scan_big(base, d):
    x = base % d
    for b in range(1, d):
        if x == 1:
            return b
        x = x * base % d
    return 0


def _order_by_factoring(base, d):
    # Order divides d-1 for prime d; strip each prime factor while the
    # power still fixes 1.
    order = d - 1
    for p in _trial_factorize(d - 1):
        while order % p == 0 and mod_pow(base, order // p, d) == 1:
            order //= p
    return order


def _trial_factorize(n):
    """Distinct prime factors of n by trial division (desk-scale n only)."""
    factors = []
    for p in (2, 3):
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                factors.append(p)
                while n % p == 0:
                    n //= p
        f += 6
    if n > 1:
        factors.append(n)
    return factors


def find_offset(k: int, sign: int, d: int, b: int) -> int | None:
    """Least c in 0..b-1 with d | k*2**c + sign, or None when no such c.

    b is expected to be multiplicative_order(2, d): any c that works is then
    already congruent to one in 0..b-1.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if d < 3 or d % 2 == 0:
        raise ValueError(f"d must be odd and >= 3, got {d}")
    if b < 1:
        raise ValueError(f"period must be >= 1, got {b}")
    if d < WORD_LIMIT and b < WORD_LIMIT:
        c = kernels.offset_scan_u64(k % d, sign, d, b)
        return None if c < 0 else c
    x = k % d
    target = d - 1 if sign > 0 else 1
    for c in range(b):
        if x == target:
            return c
        x = 2 * x % d
    return None


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd n >= 1, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _mr_decompose(n):
    # n - 1 = d * 2**s with d odd
    d = n - 1
    s = 0
    while d % 2 == 0:
        d >>= 1
        s += 1
    return d, s


def _mr_composite(n, a, d, s):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def proth_test(k: int, m: int) -> PrimalityResult:
    """Decisive primality test for N = k*2**m + 1 with 2**m > k, k odd.

    Scans a = 3, 5, 7, ... for a base with jacobi(a, N) = -1.  For prime N
    Euler's criterion forces a**((N-1)/2) == -1 at such a base, and with
    2**m > k the converse holds too, so the first non-residue decides N
    either way with one exponentiation.  When no non-residue turns up
    within PROTH_CANDIDATE_LIMIT candidates (N a perfect square, say),
    falls back to Miller-Rabin.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be odd and positive, got {k}")
    if m < 1 or (1 << m) <= k:
        raise ValueError(f"Proth form needs 2**m > k, got k={k}, m={m}")
    n = k * (1 << m) + 1
    half = (n - 1) // 2
    a = 3
    for _ in range(PROTH_CANDIDATE_LIMIT):
        j = jacobi(a, n)
        if j == 0:
            g = math.gcd(a, n)
            if 1 < g < n:
                # a supplies a proper factor
                return PrimalityResult(n, METHOD_PROTH, False, witness=a)
        elif j == -1:
            if pow(a, half, n) == n - 1:
                return PrimalityResult(n, METHOD_PROTH, True, witness=a)
            return PrimalityResult(n, METHOD_PROTH, False, witness=a)
        a += 2
    # No non-residue among the candidates (n a perfect square, say).
    return _nonproth_dispatch(n)


def is_prime(n: int) -> PrimalityResult:
    """Primality of n with the method recorded in the result.

    Deterministic (fixed Miller-Rabin base table) below
    MR_DETERMINISTIC_BOUND; a decisive Proth test for n = k*2**m + 1 with
    2**m > k; otherwise MR_PROBABILISTIC_ROUNDS rounds of Miller-Rabin,
    flagged probabilistic.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n < 2:
        return PrimalityResult(n, METHOD_MR_DETERMINISTIC, False)
    if n == 2:
        return PrimalityResult(n, METHOD_MR_DETERMINISTIC, True)
    if n % 2 == 0:
        return PrimalityResult(n, METHOD_MR_DETERMINISTIC, False, witness=2)
    if n < WORD_LIMIT:
        return PrimalityResult(n, METHOD_MR_DETERMINISTIC, kernels.is_prime_u64(n))
    if n < MR_DETERMINISTIC_BOUND:
        d, s = _mr_decompose(n)
        for a in MR_DETERMINISTIC_BASES:
            if n == a:
                return PrimalityResult(n, METHOD_MR_DETERMINISTIC, True)
            if n % a == 0:
                return PrimalityResult(n, METHOD_MR_DETERMINISTIC, False, witness=a)
            if _mr_composite(n, a, d, s):
                return PrimalityResult(n, METHOD_MR_DETERMINISTIC, False, witness=a)
        return PrimalityResult(n, METHOD_MR_DETERMINISTIC, True)
    m = ((n - 1) & (1 - n)).bit_length() - 1  # 2-adic valuation of n - 1
    k = (n - 1) >> m
    if (1 << m) > k:
        return proth_test(k, m)
    return _mr_fallback(n)


def _nonproth_dispatch(n):
    # Deterministic answer when n is small enough, else probabilistic.
    if n < MR_DETERMINISTIC_BOUND:
        if n < WORD_LIMIT:
            return PrimalityResult(n, METHOD_MR_DETERMINISTIC, kernels.is_prime_u64(n))
        d, s = _mr_decompose(n)
        for a in MR_DETERMINISTIC_BASES:
            if _mr_composite(n, a, d, s):
                return PrimalityResult(n, METHOD_MR_DETERMINISTIC, False, witness=a)
        return PrimalityResult(n, METHOD_MR_DETERMINISTIC, True)
    return _mr_fallback(n)


def _mr_fallback(n):
    """Probabilistic Miller-Rabin; bases drawn from an n-seeded generator so
    repeated runs report identically."""
    d, s = _mr_decompose(n)
    rng = random.Random(n)
    for _ in range(MR_PROBABILISTIC_ROUNDS):
        a = rng.randrange(2, n - 1)
        if _mr_composite(n, a, d, s):
            return PrimalityResult(
                n, METHOD_MR_PROBABILISTIC, False, witness=a, rounds=MR_PROBABILISTIC_ROUNDS
            )
    return PrimalityResult(n, METHOD_MR_PROBABILISTIC, True, rounds=MR_PROBABILISTIC_ROUNDS)
