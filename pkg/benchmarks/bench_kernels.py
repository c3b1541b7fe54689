#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

Kernel rows time both implementations in-process (the two modules are
importable side by side).  End-to-end rows rerun library workloads in
subprocesses, once per backend, using COVERSCOPE_PURE_PYTHON=1 to force
the fallback; only the workload is timed, not interpreter startup.
"""

import argparse
import os
import subprocess
import sys
import time

from coverscope import _speedups_py

try:
    from coverscope import _speedups
except ImportError:
    _speedups = None


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def primes_below(limit):
    return [n for n in range(3, limit, 2) if _speedups_py.is_prime_u64(n)]


def kernel_workloads(args):
    small_primes = primes_below(args.order_limit)
    orders = [_speedups_py.order_scan_u64(2, d, d - 1) for d in small_primes]
    big_start = 2**62 + 1

    def primality(mod):
        return sum(
            1 for n in range(args.prime_start, args.prime_start + args.prime_count)
            if mod.is_prime_u64(n)
        )

    def primality_big(mod):
        return sum(1 for n in range(big_start, big_start + 600, 2) if mod.is_prime_u64(n))

    def order_scans(mod):
        total = 0
        for d in small_primes:
            total += mod.order_scan_u64(2, d, d - 1)
        return total

    def offset_scans(mod):
        found = 0
        for d, b in zip(small_primes, orders):
            if mod.offset_scan_u64(78557 % d, 1, d, b) >= 0:
                found += 1
        return found

    def mod_pows(mod):
        acc = 0
        for e in range(1, 20000):
            acc ^= mod.mod_pow_u64(2, e, 1000003)
        return acc

    return [
        (f"is_prime_u64 x {args.prime_count} (around 10^6)", primality),
        ("is_prime_u64 x 300 (62-bit words)", primality_big),
        (f"order_scan_u64, primes < {args.order_limit}", order_scans),
        (f"offset_scan_u64, primes < {args.order_limit}", offset_scans),
        ("mod_pow_u64 x 20000", mod_pows),
    ]


END_TO_END = {
    "verify-dataset (full corpus)": (
        "import time\n"
        "from coverscope import dataset\n"
        "records = dataset.load_corpus(dataset.default_corpus_path())\n"
        "t0 = time.perf_counter()\n"
        "report = dataset.verify_corpus(records)\n"
        "assert report.ok\n"
        "print(time.perf_counter() - t0)\n"
    ),
    "survey k=1..999, n<=16": (
        "import time\n"
        "from coverscope import disqualify\n"
        "t0 = time.perf_counter()\n"
        "records = disqualify.survey_range(1, 999, 1, 16)\n"
        "assert len(records) == 500\n"
        "print(time.perf_counter() - t0)\n"
    ),
}


def run_child(code, pure):
    env = dict(os.environ)
    env.pop("COVERSCOPE_PURE_PYTHON", None)
    if pure:
        env["COVERSCOPE_PURE_PYTHON"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prime-start", type=int, default=10**6)
    parser.add_argument("--prime-count", type=int, default=100_000)
    parser.add_argument("--order-limit", type=int, default=20_000)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not built; nothing to compare against")
        return 1

    width = 44
    print(f"{'workload':<{width}} {'python':>9} {'compiled':>9} {'speedup':>8}")
    for name, fn in kernel_workloads(args):
        assert fn(_speedups_py) == fn(_speedups), f"backends disagree on {name}"
        t_py = timed(lambda: fn(_speedups_py))
        t_c = timed(lambda: fn(_speedups))
        print(f"{name:<{width}} {t_py * 1e3:8.1f}ms {t_c * 1e3:8.1f}ms {t_py / t_c:7.1f}x")

    if not args.skip_end_to_end:
        for name, code in END_TO_END.items():
            t_py = run_child(code, pure=True)
            t_c = run_child(code, pure=False)
            print(f"{name:<{width}} {t_py * 1e3:8.1f}ms {t_c * 1e3:8.1f}ms {t_py / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
