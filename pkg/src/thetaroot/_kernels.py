"""Exact integer convolution kernels used by the series classes.

Two interchangeable paths compute the same truncated products:

* ``schoolbook``: the plain double loop over Python ints.
* ``kronecker``: Kronecker substitution.  A coefficient vector is packed into a
  single big integer (one fixed-width slot per coefficient), the two integers
  are multiplied with CPython's Karatsuba multiply, and the slots are read
  back.  Signed coefficients are handled by an offset on unpacking.

``auto`` (the default) picks by operand size.  The environment variable
``THETA_ROOT_KERNEL`` forces a path, which the benchmark and the tests use to
compare both.
"""

from __future__ import annotations

import os
from typing import Sequence

KERNEL_ENV = "THETA_ROOT_KERNEL"
KERNELS = ("auto", "schoolbook", "kronecker")

# Shorter operand length below which the double loop beats packing overhead.
# Raw products favour a larger cut-off, but whole solvers ran fastest near 4
# (see benchmarks/bench_kernels.py).
AUTO_THRESHOLD = 4


def default_kernel() -> str:
    kernel = os.environ.get(KERNEL_ENV, "auto").strip().lower() or "auto"
    if kernel not in KERNELS:
        raise ValueError(f"{KERNEL_ENV} must be one of {KERNELS}, got {kernel!r}")
    return kernel


def _max_bits(values: Sequence[int]) -> int:
    return max((abs(v).bit_length() for v in values), default=0)


def pack(coeffs: Sequence[int], nbytes: int) -> int:
    """Return sum(c_k * 256**(k*nbytes)); every |c_k| must be < 2**(8*nbytes-1)."""
    if not coeffs:
        return 0
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    value = int.from_bytes(pos, "little")
    if any(c < 0 for c in coeffs):
        neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
        value -= int.from_bytes(neg, "little")
    return value


def unpack(value: int, count: int, nbytes: int) -> list[int]:
    """Inverse of :func:`pack` for the lowest ``count`` signed slots."""
    if count <= 0:
        return []
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * count, "little")
    width = nbytes * count
    raw = ((value + offset) & ((1 << (8 * width)) - 1)).to_bytes(width, "little")
    return [
        int.from_bytes(raw[i : i + nbytes], "little") - half
        for i in range(0, width, nbytes)
    ]


def _slot_bytes(bits_a: int, bits_b: int, terms: int) -> int:
    # |c| <= terms * 2**bits_a * 2**bits_b, plus one sign bit
    return (bits_a + bits_b + terms.bit_length() + 1 + 7) // 8


def _convolve_schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += ai * b[j]
    return out


def _convolve_kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    bits_a, bits_b = _max_bits(a), _max_bits(b)
    if not bits_a or not bits_b:
        return [0] * n
    nbytes = _slot_bytes(bits_a, bits_b, min(len(a), len(b)))
    return unpack(pack(a, nbytes) * pack(b, nbytes), n, nbytes)


def convolve(a: Sequence[int], b: Sequence[int], n: int, kernel: str | None = None) -> list[int]:
    """First ``n`` coefficients of the product of two integer coefficient vectors."""
    a, b = a[:n], b[:n]
    if n <= 0:
        return []
    if not a or not b:
        return [0] * n
    kernel = kernel or default_kernel()
    if kernel == "auto":
        kernel = "schoolbook" if min(len(a), len(b)) < AUTO_THRESHOLD else "kronecker"
    if kernel == "schoolbook":
        return _convolve_schoolbook(a, b, n)
    return _convolve_kronecker(a, b, n)


def convolve2d(
    a: Sequence[Sequence[int]],
    b: Sequence[Sequence[int]],
    n: int,
    kernel: str | None = None,
) -> list[list[int]]:
    """First ``n`` rows of the product of two bivariate integer arrays.

    Rows index the outer variable and may be ragged; each output row has
    ``max_len(a) + max_len(b) - 1`` entries (or none when an operand is empty).
    """
    a, b = a[:n], b[:n]
    inner_a = max((len(r) for r in a), default=0)
    inner_b = max((len(r) for r in b), default=0)
    if n <= 0:
        return []
    if not inner_a or not inner_b:
        return [[] for _ in range(n)]
    width = inner_a + inner_b - 1
    kernel = kernel or default_kernel()
    if kernel == "auto":
        size = min(len(a) * inner_a, len(b) * inner_b)
        kernel = "schoolbook" if size < AUTO_THRESHOLD else "kronecker"

    if kernel == "schoolbook":
        out = [[0] * width for _ in range(n)]
        for i, ra in enumerate(a):
            if not any(ra):
                continue
            for j in range(min(len(b), n - i)):
                rb = b[j]
                if not rb:
                    continue
                row = out[i + j]
                for d, c in enumerate(_convolve_schoolbook(ra, rb, len(ra) + len(rb) - 1)):
                    row[d] += c
        return out

    bits_a = max(_max_bits(r) for r in a)
    bits_b = max(_max_bits(r) for r in b)
    if not bits_a or not bits_b:
        return [[0] * width for _ in range(n)]
    terms = min(len(a), len(b)) * min(inner_a, inner_b)
    nbytes = _slot_bytes(bits_a, bits_b, terms)
    packed = _convolve_kronecker([pack(r, nbytes) for r in a], [pack(r, nbytes) for r in b], n)
    return [unpack(v, width, nbytes) for v in packed]
