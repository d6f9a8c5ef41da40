"""Compare the compiled and the NumPy exhaustive intersection kernels.

Run with ``python benchmarks/bench_kernels.py``; the input is the layout of
an XQ quadrangulation for a few rim sizes.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from onevis import _naive_py, gen_XQ, one_visibility

try:
    from onevis import _naive
except ImportError:
    _naive = None


def arrays(rim: int):
    layout, _ = one_visibility(gen_XQ(rim))
    bars = np.array([(b.y, b.x_lo, b.x_hi) for b in layout.vertices], dtype=np.int64)
    segs = np.array([(e.x, e.y_lo, e.y_hi) for e in layout.edges], dtype=np.int64)
    return (bars[:, 0].copy(), bars[:, 1].copy(), bars[:, 2].copy(), segs[:, 0].copy(), segs[:, 1].copy(), segs[:, 2].copy())


def best_of(fn, args, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rims", type=int, nargs="+", default=[32, 128, 512, 1024])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'rim':>6} {'segments':>9} {'numpy s':>10} {'cython s':>10} {'speedup':>8}")
    for rim in args.rims:
        data = arrays(rim)
        nseg = len(data[0]) + len(data[3])
        t_py = best_of(_naive_py.naive_pairs, data, args.repeat)
        if _naive is None:
            print(f"{rim:>6} {nseg:>9} {t_py:>10.4f} {'n/a':>10} {'':>8}")
            continue
        ref = _naive_py.naive_pairs(*data)
        got = _naive.naive_pairs(*data)
        assert all(np.array_equal(np.sort(a, axis=0), np.sort(b, axis=0)) for a, b in zip(ref, got))
        t_cy = best_of(_naive.naive_pairs, data, args.repeat)
        print(f"{rim:>6} {nseg:>9} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>8.1f}")


if __name__ == "__main__":
    main()
