"""Compare the pure-Python and compiled search kernels.

Times the avoider-count DFS (the dominant workload) on both backends and
prints counts, wall times, and the speedup. Run from the repo root:

    python benchmarks/bench_kernels.py [--nmax 9]
"""

from __future__ import annotations

import argparse
import time

from permcodec import _pure
from permcodec.perms import staircase_pattern

try:
    from permcodec import _ext
except ImportError:
    _ext = None


def timed(fn, *args) -> tuple[int, float]:
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=9, help="largest length timed")
    args = parser.parse_args()

    if _ext is None:
        print("compiled backend unavailable; timing the pure backend only")
    print(f"{'pattern':>8} {'n':>3} {'count':>10} {'pure (s)':>10} "
          f"{'compiled (s)':>13} {'speedup':>8}")
    for k in (3, 4):
        q = staircase_pattern(k)
        for n in range(args.nmax - 2, args.nmax + 1):
            count, pure_t = timed(_pure.count_avoiders_dfs, q, n)
            if _ext is None:
                print(f"{''.join(map(str, q)):>8} {n:>3} {count:>10} {pure_t:>10.3f}")
                continue
            ext_count, ext_t = timed(_ext.count_avoiders_dfs, q, n)
            assert count == ext_count, "backends disagree"
            print(f"{''.join(map(str, q)):>8} {n:>3} {count:>10} {pure_t:>10.3f} "
                  f"{ext_t:>13.3f} {pure_t / ext_t:>7.1f}x")


if __name__ == "__main__":
    main()
