"""Covering-set construction and verification.

A cover for k (sign +1: the sequence k*2^n + 1, sign -1: k*2^n - 1) is a
list of odd divisors d, each pinned to an arithmetic progression of
exponents: d divides every term with n == c (mod b), where b is the
multiplicative order of 2 mod d and c the least offset with d | k*2^c + sign.
The certificate closes the argument with a residue table over 0..L-1
(L = lcm of the periods) proving every exponent class is claimed.
"""

import json
from dataclasses import dataclass

from coverscope import arith

TOOL_VERSION = "0.1.0"

SIGN_SIERPINSKI = 1
SIGN_RIESEL = -1

_SIGN_NAMES = {SIGN_SIERPINSKI: "sierpinski", SIGN_RIESEL: "riesel"}


class VerificationError(Exception):
    """A claim failed to verify; subclasses carry the failure data."""


class NoOffsetError(VerificationError):
    """No exponent class works for this divisor: it cannot join the cover."""

    def __init__(self, divisor, k, sign):
        self.divisor = divisor
        super().__init__(
            f"no offset: {divisor} divides no term of the "
            f"{_SIGN_NAMES[sign]} sequence for k={k}"
        )


class UncoveredResidueError(VerificationError):
    """Some exponent class mod L is claimed by no divisor."""

    def __init__(self, residue, lcm):
        self.residue = residue
        self.lcm = lcm
        super().__init__(f"uncovered residue {residue} (mod {lcm})")


class CertificateFormatError(ValueError):
    """A serialized certificate does not match the schema."""


@dataclass(frozen=True)
class Candidate:
    """An odd k with the sequence sign: +1 Sierpinski, -1 Riesel."""

    k: int
    sign: int

    def __post_init__(self):
        if self.sign not in (SIGN_SIERPINSKI, SIGN_RIESEL):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.k < 1 or self.k % 2 == 0:
            raise ValueError(f"k must be odd and positive, got {self.k}")

    def term(self, n: int) -> int:
        """k * 2**n + sign."""
        return self.k * (1 << n) + self.sign

    @property
    def sign_name(self) -> str:
        return _SIGN_NAMES[self.sign]


@dataclass(frozen=True)
class CoverEntry:
    """One divisor with its period b and offset c: d | k*2^n + sign
    whenever n == c (mod b)."""

    d: int
    b: int
    c: int


@dataclass(frozen=True)
class CoverCertificate:
    """Verified cover: entries, L = lcm of periods, and the residue table
    mapping each r in 0..L-1 to the first entry (in cover order) with
    r == c (mod b).  divisor_primality flags composite divisors - legal
    in a cover, but worth a warning."""

    candidate: Candidate
    entries: tuple[CoverEntry, ...]
    lcm: int
    table: tuple[int, ...]
    witness_counts: tuple[int, ...]
    divisor_primality: tuple[bool, ...]


def _require_cover_k(candidate):
    # k = 1 is fine for prime hunting but not for covers: the first Riesel
    # term would be 1, which has no proper factor.
    if candidate.k < 3:
        raise ValueError(f"covers require k >= 3, got k={candidate.k}")


def build_entry(candidate: Candidate, d: int) -> CoverEntry:
    """Period and minimal offset for one divisor.

    Raises NoOffsetError when d divides no term (in particular whenever
    d | k, since then every term is sign mod d).
    """
    _require_cover_k(candidate)
    if d < 3 or d % 2 == 0:
        raise ValueError(f"cover divisors must be odd and >= 3, got {d}")
    b = arith.multiplicative_order(2, d)
    c = arith.find_offset(candidate.k, candidate.sign, d, b)
    if c is None:
        raise NoOffsetError(d, candidate.k, candidate.sign)
    return CoverEntry(d, b, c)


def check_induction_identity(candidate: Candidate, entry: CoverEntry, j_max: int) -> bool:
    """Exact check of the telescoping step behind the progression claim.

    For j = 0..j_max, k*2^(b(j+1)+c) + sign must equal
    [k*2^(bj+c) * (2^b - 1)] + [k*2^(bj+c) + sign] as integers, with d
    dividing both bracketed summands (the first because d | 2^b - 1, the
    second being the previous term).
    """
    k, sign, d = candidate.k, candidate.sign, entry.d
    step = (1 << entry.b) - 1
    for j in range(j_max + 1):
        scaled = k << (entry.b * j + entry.c)  # k * 2^(bj+c)
        left = scaled * step
        right = scaled + sign
        if (scaled << entry.b) + sign != left + right:
            return False
        if left % d != 0 or right % d != 0:
            return False
    return True


def _first_match(entries, r):
    for idx, e in enumerate(entries):
        if r % e.b == e.c:
            return idx
    return None


def verify_cover(candidate: Candidate, divisors) -> CoverCertificate:
    """Build entries for every divisor, then prove residue exhaustiveness.

    Raises NoOffsetError (naming the divisor) or UncoveredResidueError
    (naming the smallest unclaimed residue mod L).  Deterministic: the
    table always picks the first matching entry in cover order.
    """
    divisors = [int(d) for d in divisors]
    if not divisors:
        raise ValueError("cover must contain at least one divisor")
    entries = tuple(build_entry(candidate, d) for d in divisors)
    lcm = arith.lcm_all([e.b for e in entries])
    table = []
    for r in range(lcm):
        idx = _first_match(entries, r)
        if idx is None:
            raise UncoveredResidueError(r, lcm)
        table.append(idx)
    counts = [0] * len(entries)
    for idx in table:
        counts[idx] += 1
    primality = tuple(arith.is_prime(e.d).is_prime for e in entries)
    return CoverCertificate(
        candidate, entries, lcm, tuple(table), tuple(counts), primality
    )


def witness(certificate: CoverCertificate, n: int) -> int:
    """The covering divisor for exponent n >= 1 (first match in cover order)."""
    if n < 1:
        raise ValueError("the sequence starts at n = 1")
    entry = certificate.entries[certificate.table[n % certificate.lcm]]
    return entry.d


def first_audit_failure(certificate: CoverCertificate, n_max: int) -> int | None:
    """Smallest n in 1..n_max where the witness is not a proper divisor of
    k*2^n + sign, or None when every n passes.  Exact bignum arithmetic."""
    for n in range(1, n_max + 1):
        d = certificate.entries[certificate.table[n % certificate.lcm]].d
        term = certificate.candidate.term(n)
        if term % d != 0 or not 1 < d < term:
            return n
    return None


def audit_certificate(certificate: CoverCertificate, n_max: int) -> bool:
    """Recompute every term for n = 1..n_max and confirm its witness
    properly divides it."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return first_audit_failure(certificate, n_max) is None


def cover_product(certificate: CoverCertificate) -> int:
    p = 1
    for e in certificate.entries:
        p *= e.d
    return p


def generate_family(candidate: Candidate, divisors, i: int) -> Candidate:
    """The i-th sibling k + 2*i*P (P = product of the cover divisors) keeps
    the same cover; each divisor's period and offset are unchanged since
    k + 2*i*P == k (mod d).  Verified by rebuilding the certificate and
    requiring an identical entry table."""
    if i < 1:
        raise ValueError(f"family index must be >= 1, got {i}")
    base = verify_cover(candidate, divisors)
    sibling = Candidate(candidate.k + 2 * i * cover_product(base), candidate.sign)
    derived = verify_cover(sibling, divisors)
    if derived.entries != base.entries or derived.table != base.table:
        raise VerificationError(
            f"family member k={sibling.k} does not reproduce the base cover table"
        )
    return sibling


# --- serialization -----------------------------------------------------------
# Schema: {k, sign, entries: [{d, b, c}], lcm, table, divisor_primality_flags,
# tool_version}.  All unbounded integers travel as decimal strings; table
# holds small entry indexes.  Serialization is canonical, so identical
# certificates give identical bytes.


def certificate_to_dict(cert: CoverCertificate) -> dict:
    return {
        "k": str(cert.candidate.k),
        "sign": cert.candidate.sign,
        "entries": [
            {"d": str(e.d), "b": str(e.b), "c": str(e.c)} for e in cert.entries
        ],
        "lcm": str(cert.lcm),
        "table": list(cert.table),
        "divisor_primality_flags": list(cert.divisor_primality),
        "tool_version": TOOL_VERSION,
    }


def certificate_to_json(cert: CoverCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2) + "\n"


def _parse_decimal(doc, key):
    try:
        value = doc[key]
    except (KeyError, TypeError):
        raise CertificateFormatError(f"missing field {key!r}") from None
    if isinstance(value, str) and value.isdigit():
        return int(value)
    raise CertificateFormatError(f"field {key!r} must be a decimal string")


def certificate_from_dict(doc: dict) -> CoverCertificate:
    """Rebuild a certificate from its JSON document.

    Structural validation only: entry progressions and the table are
    taken as stated.  Run audit functions afterwards to re-check the
    mathematics (that split keeps proof checking independent of proof
    generation).
    """
    try:
        candidate = Candidate(_parse_decimal(doc, "k"), doc.get("sign", 0))
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from None
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list) or not raw_entries:
        raise CertificateFormatError("entries must be a nonempty list")
    entries = tuple(
        CoverEntry(_parse_decimal(e, "d"), _parse_decimal(e, "b"), _parse_decimal(e, "c"))
        for e in raw_entries
    )
    lcm = _parse_decimal(doc, "lcm")
    table = doc.get("table")
    if (
        not isinstance(table, list)
        or len(table) != lcm
        or not all(isinstance(t, int) and 0 <= t < len(entries) for t in table)
    ):
        raise CertificateFormatError("table must list a valid entry index per residue")
    flags = doc.get("divisor_primality_flags")
    if not isinstance(flags, list) or len(flags) != len(entries):
        raise CertificateFormatError("divisor_primality_flags must match entries")
    counts = [0] * len(entries)
    for idx in table:
        counts[idx] += 1
    return CoverCertificate(
        candidate, entries, lcm, tuple(table), tuple(counts), tuple(bool(f) for f in flags)
    )


def check_certificate_facts(cert: CoverCertificate) -> str | None:
    """Re-check a stated certificate's divisibility facts without searching:
    d | 2^b - 1, d | k*2^c + sign, c < b, L = lcm of the periods, and the
    table's congruences.  Returns a description of the first problem, or
    None when everything holds."""
    for e in cert.entries:
        if e.d < 3 or e.d % 2 == 0:
            return f"divisor {e.d} is not odd and >= 3"
        if not 0 <= e.c < e.b:
            return f"offset {e.c} out of range for period {e.b} (d={e.d})"
        if arith.mod_pow(2, e.b, e.d) != 1:
            return f"{e.d} does not divide 2^{e.b} - 1"
        if (cert.candidate.k * arith.mod_pow(2, e.c, e.d) + cert.candidate.sign) % e.d != 0:
            return f"{e.d} does not divide k*2^{e.c} {cert.candidate.sign:+d}"
    if cert.lcm != arith.lcm_all([e.b for e in cert.entries]):
        return "stated lcm does not match the entry periods"
    for r, idx in enumerate(cert.table):
        e = cert.entries[idx]
        if r % e.b != e.c:
            return f"table assigns residue {r} to d={e.d} but {r} != {e.c} (mod {e.b})"
    return None
