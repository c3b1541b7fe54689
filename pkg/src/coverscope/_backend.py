"""Kernel selection: the compiled extension when it built, else the
pure-Python twins.  COVERSCOPE_PURE_PYTHON=1 forces the fallback (used by
the benchmark for apples-to-apples runs)."""

import os

# Operands below this fit the compiled kernels' unsigned 64-bit words.
WORD_LIMIT = 2**64

if os.environ.get("COVERSCOPE_PURE_PYTHON"):
    from coverscope import _speedups_py as kernels

    BACKEND = "python"
else:
    try:
        from coverscope import _speedups as kernels  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from coverscope import _speedups_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
