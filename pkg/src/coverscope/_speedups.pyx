# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Machine-word kernels for the hot loops: deterministic Miller-Rabin below
2**64 and the multiplicative-order / offset scans.

Pure-Python twins live in _speedups_py; both implementations must agree
bit-for-bit (tests/test_backends.py).  Callers guard operand ranges with
_backend.WORD_LIMIT, so every argument here fits an unsigned 64-bit word.
"""

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

# First 12 primes: deterministic witnesses for every n < 2**64.
cdef u64[12] MR_BASES
MR_BASES[0], MR_BASES[1], MR_BASES[2], MR_BASES[3] = 2, 3, 5, 7
MR_BASES[4], MR_BASES[5], MR_BASES[6], MR_BASES[7] = 11, 13, 17, 19
MR_BASES[8], MR_BASES[9], MR_BASES[10], MR_BASES[11] = 23, 29, 31, 37


cdef inline u64 mulmod(u64 a, u64 b, u64 m) noexcept nogil:
    return <u64>((<u128>a * b) % m)


cdef u64 powmod(u64 base, u64 exp, u64 mod) noexcept nogil:
    cdef u64 r = 1 % mod
    base = base % mod
    while exp:
        if exp & 1:
            r = mulmod(r, base, mod)
        base = mulmod(base, base, mod)
        exp >>= 1
    return r


cdef bint mr_composite(u64 n, u64 a, u64 d, int s) noexcept nogil:
    # True when base a certifies n composite.
    cdef u64 x = powmod(a, d, n)
    cdef int i
    if x == 1 or x == n - 1:
        return False
    for i in range(s - 1):
        x = mulmod(x, x, n)
        if x == n - 1:
            return False
    return True


def mod_pow_u64(u64 base, u64 exp, u64 modulus):
    return powmod(base, exp, modulus)


def is_prime_u64(u64 n):
    """Deterministic Miller-Rabin for 0 <= n < 2**64."""
    cdef u64 d
    cdef int s, j
    if n < 2:
        return False
    for j in range(12):
        if n == MR_BASES[j]:
            return True
        if n % MR_BASES[j] == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d >>= 1
        s += 1
    for j in range(12):
        if mr_composite(n, MR_BASES[j], d, s):
            return False
    return True


def order_scan_u64(u64 base, u64 d, u64 limit):
    """Least b in 1..limit with base**b == 1 (mod d); 0 when none exists."""
    cdef u64 x = base % d
    cdef u64 b
    for b in range(1, limit + 1):
        if x == 1:
            return b
        x = mulmod(x, base, d)
    return 0


def offset_scan_u64(u64 k_mod_d, long long sign, u64 d, u64 b):
    """Least c in 0..b-1 with k*2**c + sign == 0 (mod d); -1 when none."""
    cdef u64 x = k_mod_d % d
    cdef u64 target = d - 1 if sign > 0 else 1
    cdef u64 c
    for c in range(b):
        if x == target:
            return c
        x = mulmod(x, 2, d)
    return -1
