"""Compare the compiled and pure-Python multiplication kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-end-to-end]

The first table times ``truncated_mul`` alone on dense random operands. The
second runs ``chowmot verify all`` once per backend in a subprocess, toggled
with ``CHOWMOT_PURE_PYTHON``.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from chowmot import _kernels_py
from chowmot.graded import monomial_basis

try:
    from chowmot import _kernels
except ImportError:
    _kernels = None

PROFILES = [(1, 1), (2, 2, 2), (3, 3, 3), (4, 4, 4, 2), (2, 2, 2, 2, 2)]


def operands(caps, rng, bits):
    exps = monomial_basis(caps)
    nums = [rng.randint(-(1 << bits), 1 << bits) or 1 for _ in exps]
    return exps, nums


def bench_kernel(repeat):
    rng = random.Random(0)
    print(f"{'profile':<16}{'bits':>6}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for caps in PROFILES:
        for bits in (8, 80):
            ae, an = operands(caps, rng, bits)
            be, bn = operands(caps, rng, bits)
            args = (caps, ae, an, be, bn)
            t_py = min(timeit.repeat(lambda: _kernels_py.truncated_mul(*args), number=1, repeat=repeat))
            if _kernels is None:
                print(f"{str(caps):<16}{bits:>6}{t_py * 1e3:>14.3f}{'n/a':>14}{'':>10}")
                continue
            assert _kernels.truncated_mul(*args) == _kernels_py.truncated_mul(*args)
            t_c = min(timeit.repeat(lambda: _kernels.truncated_mul(*args), number=1, repeat=repeat))
            print(f"{str(caps):<16}{bits:>6}{t_py * 1e3:>14.3f}{t_c * 1e3:>14.3f}{t_py / t_c:>9.1f}x")


def bench_end_to_end():
    print("\nend to end: chowmot verify all --seed 0")
    for label, pure in (("python", "1"), ("cython", "")):
        env = dict(os.environ, CHOWMOT_PURE_PYTHON=pure)
        code = ("import time, io; from chowmot.cli import run; t = time.perf_counter(); "
                "c, _ = run(['verify', 'all', '--seed', '0'], out=io.StringIO()); "
                "from chowmot.kernels import BACKEND; "
                "print(BACKEND, c, round(time.perf_counter() - t, 3))")
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True).stdout.split()
        print(f"  requested {label:<7} backend={out[0]:<7} exit={out[1]}  {out[2]} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    bench_kernel(args.repeat)
    if not args.skip_end_to_end:
        bench_end_to_end()


if __name__ == "__main__":
    main()
