"""Time M on the bundled fixtures with each available polynomial kernel.

    python3 benchmarks/bench_kernel.py [--repeat N] [fixture ...]

Representation matrices are cached after the first call, so one warm-up run
is done first and the timings measure the tensor contraction only.
"""

import argparse
import statistics
import time

from sl21inv.diagram import load_fixture
from sl21inv.evaluate import m_invariant
from sl21inv.ring import _backend


def bench(braid, kernel, repeat):
    prev = _backend.use_kernel(kernel)
    try:
        m_invariant(braid)
        times = []
        for _ in range(repeat):
            t = time.perf_counter()
            m_invariant(braid)
            times.append(time.perf_counter() - t)
    finally:
        _backend.use_kernel(prev)
    return statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("fixtures", nargs="*", default=["trefoil", "borromean", "l9n27"])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    kernels = sorted(_backend.AVAILABLE)
    print(f"{'fixture':<12}" + "".join(f"{k:>12}" for k in kernels) + f"{'speedup':>10}")
    for name in args.fixtures:
        braid = load_fixture(name).braid
        t = {k: bench(braid, k, args.repeat) for k in kernels}
        speed = f"{t['python'] / t['compiled']:.2f}x" if "compiled" in t else "n/a"
        print(f"{name:<12}" + "".join(f"{t[k] * 1e3:>10.1f}ms" for k in kernels) + f"{speed:>10}")


if __name__ == "__main__":
    main()
