#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python one.

Runs full locally-maximal product-free set enumeration on a spread of
groups and reports wall time per kernel plus the speedup.  The compiled
kernel is optional; when it is missing only the pure timings print.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from lmpfs import (make_cyclic, make_dihedral, make_elementary_abelian_2,
                   make_generalized_quaternion, direct_product)
from lmpfs._kernel import pure
from lmpfs.enumeration import _flat_table

try:
    from lmpfs._kernel import _ckernel as compiled
except ImportError:
    compiled = None

CASES = [
    make_dihedral(10),
    make_dihedral(14),
    make_dihedral(17),
    make_dihedral(20),
    make_cyclic(31),
    make_generalized_quaternion(7),
    make_elementary_abelian_2(4),
    direct_product(make_dihedral(4), make_cyclic(2)),
]


def run(kernel, group, repeat: int) -> tuple[float, int]:
    flat = _flat_table(group)
    best = float("inf")
    masks = []
    for _ in range(repeat):
        start = time.perf_counter()
        masks = kernel.enumerate_masks(group.order, flat)
        best = min(best, time.perf_counter() - start)
    return best, len(masks)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per case (best is kept)")
    args = parser.parse_args()

    header = f"{'group':>10s} {'order':>5s} {'sets':>7s} {'pure':>10s}"
    if compiled is not None:
        header += f" {'compiled':>10s} {'speedup':>8s}"
    print(header)
    for group in CASES:
        pure_time, count = run(pure, group, args.repeat)
        line = (f"{group.name:>10s} {group.order:>5d} {count:>7d} "
                f"{pure_time:>9.4f}s")
        if compiled is not None:
            c_time, c_count = run(compiled, group, args.repeat)
            assert c_count == count, "kernels disagree"
            line += f" {c_time:>9.4f}s {pure_time / c_time:>7.1f}x"
        print(line)
    if compiled is None:
        print("\ncompiled kernel not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
