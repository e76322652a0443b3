"""Time the compiled shift scan against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--n-max 12] [--repeat 5]

Tables come from random Simon instances, so each has a nonzero hidden shift
and the full scan cannot stop early.
"""

import argparse
import statistics
import time

import numpy as np

from xorsym import _fallback
from xorsym.gadgets import simon_instance
from xorsym.gf2 import BitVec

try:
    from xorsym import _kernels
except ImportError:
    _kernels = None


def timed(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples) * 1e3, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; showing the fallback only")
    print("%3s %12s %12s %8s" % ("n", "numpy ms", "cython ms", "speedup"))
    for n in range(args.n_min, args.n_max + 1):
        inst = simon_instance(n, BitVec(n, (1 << n) - 1), seed=n)
        codes = np.asarray(inst.table.rows, dtype=np.uint64)
        slow, ref = timed(lambda: _fallback.invariant_shifts(codes), args.repeat)
        if _kernels is None:
            print("%3d %12.2f %12s %8s" % (n, slow, "-", "-"))
            continue
        fast, got = timed(lambda: _kernels.invariant_shifts(codes), args.repeat)
        assert list(got) == list(ref)
        print("%3d %12.2f %12.2f %7.1fx" % (n, slow, fast, slow / fast))


if __name__ == "__main__":
    main()
