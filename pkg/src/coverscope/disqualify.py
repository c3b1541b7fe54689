"""Disqualification engine: prove k is NOT Sierpinski/Riesel by finding a
prime in its sequence.

The scan is ordered, so a hit is the first prime exponent.  On the +1 side,
once 2^n outgrows k every term is Proth-form and one exponentiation decides
it (leaving a re-checkable witness); elsewhere the generic test applies.
"""

from dataclasses import dataclass

from coverscope import arith
from coverscope.cover import Candidate

DEFAULT_SINGLE_N_MAX = 600
DEFAULT_SURVEY_N_MAX = 16


@dataclass(frozen=True)
class DisqualificationRecord:
    """Result of scanning one candidate.

    n_found is the first exponent whose term is prime (None when the whole
    range came up composite), primality the evidence for that term, and
    n_searched how far the scan went.  trail keeps every per-exponent
    result when the scan ran verbose, so minimality can be re-checked.
    """

    candidate: Candidate
    n_found: int | None
    primality: arith.PrimalityResult | None
    n_searched: int
    trail: tuple[arith.PrimalityResult, ...] | None = None

    @property
    def disqualified(self) -> bool:
        return self.n_found is not None


def _test_term(candidate: Candidate, n: int) -> arith.PrimalityResult:
    if candidate.sign == 1 and (1 << n) > candidate.k:
        return arith.proth_test(candidate.k, n)
    return arith.is_prime(candidate.term(n))


def first_prime_exponent(
    candidate: Candidate, n_max: int, verbose: bool = False
) -> DisqualificationRecord:
    """Scan n = 1..n_max in order for the first prime k*2^n + sign."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    trail = [] if verbose else None
    for n in range(1, n_max + 1):
        result = _test_term(candidate, n)
        if trail is not None:
            trail.append(result)
        if result.is_prime:
            return DisqualificationRecord(
                candidate, n, result, n, tuple(trail) if trail is not None else None
            )
    return DisqualificationRecord(
        candidate, None, None, n_max, tuple(trail) if trail is not None else None
    )


def survey_range(
    k_min: int, k_max: int, sign: int, n_max: int, verbose: bool = False
) -> list[DisqualificationRecord]:
    """One record per odd k in k_min..k_max, in order."""
    if k_min % 2 == 0 or k_max % 2 == 0:
        raise ValueError("survey bounds must be odd")
    if not 1 <= k_min <= k_max:
        raise ValueError(f"need 1 <= k_min <= k_max, got {k_min}..{k_max}")
    return [
        first_prime_exponent(Candidate(k, sign), n_max, verbose)
        for k in range(k_min, k_max + 1, 2)
    ]


def primality_to_dict(result: arith.PrimalityResult) -> dict:
    return {
        "n": str(result.n),
        "method": result.method,
        "is_prime": result.is_prime,
        "witness": str(result.witness),
        "rounds": result.rounds,
    }


def record_to_dict(record: DisqualificationRecord) -> dict:
    doc = {
        "k": str(record.candidate.k),
        "sign": record.candidate.sign,
        "n_found": record.n_found,
        "n_searched": record.n_searched,
        "method": record.primality.method if record.primality else None,
    }
    if record.primality is not None:
        doc["primality"] = primality_to_dict(record.primality)
    if record.trail is not None:
        doc["trail"] = [primality_to_dict(r) for r in record.trail]
    return doc


def records_to_text(records) -> str:
    """Aligned (k, n, method) table; 'none <= n_max' rows for survivors."""
    rows = []
    for rec in records:
        if rec.disqualified:
            rows.append((str(rec.candidate.k), str(rec.n_found), rec.primality.method))
        else:
            rows.append((str(rec.candidate.k), f"none <= {rec.n_searched}", "-"))
    k_width = max(len("k"), max(len(r[0]) for r in rows))
    n_width = max(len("n"), max(len(r[1]) for r in rows))
    lines = [f"{'k':>{k_width}}  {'n':<{n_width}}  method"]
    for k_str, n_str, method in rows:
        lines.append(f"{k_str:>{k_width}}  {n_str:<{n_width}}  {method}")
    return "\n".join(lines) + "\n"
