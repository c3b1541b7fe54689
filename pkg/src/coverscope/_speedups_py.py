"""Pure-Python twins of the compiled kernels in _speedups.pyx.

Same names, same semantics, word-sized operands only (callers guard with
_backend.WORD_LIMIT).  tests/test_backends.py holds the two implementations
in lockstep.
"""

# First 12 primes: deterministic Miller-Rabin witnesses for every
# n < 318665857834031151167461, which covers all of 0 <= n < 2**64.
MR_BASES_U64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def mod_pow_u64(base, exp, modulus):
    return pow(base, exp, modulus)


def is_prime_u64(n):
    """Deterministic Miller-Rabin for 0 <= n < 2**64."""
    if n < 2:
        return False
    for a in MR_BASES_U64:
        if n == a:
            return True
        if n % a == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d >>= 1
        s += 1
    for a in MR_BASES_U64:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def order_scan_u64(base, d, limit):
    """Least b in 1..limit with base**b == 1 (mod d); 0 when none exists."""
    x = base % d
    for b in range(1, limit + 1):
        if x == 1:
            return b
        x = x * base % d
    return 0


def offset_scan_u64(k_mod_d, sign, d, b):
    """Least c in 0..b-1 with k*2**c + sign == 0 (mod d); -1 when none."""
    x = k_mod_d % d
    target = d - 1 if sign > 0 else 1
    for c in range(b):
        if x == target:
            return c
        x = 2 * x % d
    return -1
