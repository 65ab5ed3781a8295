"""Schoolbook vs Kronecker-substitution convolution on big-integer coefficients.

    python benchmarks/bench_kernels.py [--quick]

The first table times raw truncated products for a grid of lengths and
coefficient sizes; the second times whole solvers with the kernel forced
through THETA_ROOT_KERNEL.  Use it to re-tune ``AUTO_THRESHOLD``.
"""

import argparse
import os
import random
import timeit

from thetaroot import _kernels, theta


def bench_products(lengths, bit_sizes, repeat):
    rng = random.Random(12345)
    print(f"{'length':>7} {'bits':>6} {'schoolbook ms':>14} {'kronecker ms':>13} {'speedup':>8}")
    for n in lengths:
        for bits in bit_sizes:
            a = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]
            b = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]
            times = {}
            for kernel in ("schoolbook", "kronecker"):
                t = min(timeit.repeat(lambda: _kernels.convolve(a, b, n, kernel), number=1, repeat=repeat))
                times[kernel] = t * 1e3
            speedup = times["schoolbook"] / times["kronecker"]
            print(f"{n:7d} {bits:6d} {times['schoolbook']:14.3f} {times['kronecker']:13.3f} {speedup:8.2f}")


def bench_solvers(order):
    print(f"\nsolvers at order {order}")
    for kernel in ("schoolbook", "kronecker", "auto"):
        os.environ[_kernels.KERNEL_ENV] = kernel
        row = []
        for name, fn in (("xi_fix1", theta.xi_fix1), ("xi_fix2", theta.xi_fix2), ("A_refined", theta.A_refined)):
            size = order if name != "A_refined" else order // 3
            t = min(timeit.repeat(lambda: fn(size), number=1, repeat=1))
            row.append(f"{name}({size}) {t:6.2f}s")
        print(f"  {kernel:>10}: " + "  ".join(row))
    os.environ.pop(_kernels.KERNEL_ENV, None)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="small grid, low solver order")
    args = parser.parse_args()
    if args.quick:
        bench_products([4, 16, 64], [64, 512], repeat=3)
        bench_solvers(60)
    else:
        bench_products([4, 8, 16, 32, 64, 128, 256], [32, 128, 512, 2048], repeat=5)
        bench_solvers(150)


if __name__ == "__main__":
    main()
