#!/usr/bin/env python3
"""Benchmark: compiled enumeration kernel vs the pure-Python fallback.

Runs the same integer systems (dilated facet data of representative
bodies) through both kernels and reports wall times and the speedup.
Counts are asserted equal, so this doubles as a parity check.

Usage: python benchmarks/bench_kernels.py
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ehrhart import _enum_py
from ehrhart import constructions as C
from ehrhart.counting import _dilated_system

try:
    from ehrhart import _enum_cy
except ImportError:
    _enum_cy = None

CASES = [
    ("pentagon(3), k=2000", C.pentagon(3), 2000),
    ("heptagon(2), k=1200", C.heptagon(2), 1200),
    ("hull(3, 2), k=60", C.hull(3, 2), 60),
    ("hull(4, 2), k=16", C.hull(4, 2), 16),
    ("hull(4, 3), k=12", C.hull(4, 3), 12),
]


def time_kernel(kernel, system, repeat=3):
    best = None
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = kernel.count_box(*system)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return value, best


def main():
    if _enum_cy is None:
        print("compiled kernel not built; run `python setup.py build_ext --inplace`")
        print("timing the pure kernel only\n")
    header = f"{'case':24} {'count':>12} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, body, k in CASES:
        system = _dilated_system(body, k)
        py_value, py_time = time_kernel(_enum_py, system)
        if _enum_cy is not None:
            cy_value, cy_time = time_kernel(_enum_cy, system)
            assert cy_value == py_value, (label, cy_value, py_value)
            print(
                f"{label:24} {py_value:>12} {py_time:>9.3f}s {cy_time:>9.3f}s "
                f"{py_time / cy_time:>7.1f}x"
            )
        else:
            print(f"{label:24} {py_value:>12} {py_time:>9.3f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
