"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Also times one end-to-end rank computation (A2, p = 5, n = 6) under each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

import numpy as np

from iwasawa import _pykernels

try:
    from iwasawa import _kernels
except ImportError:
    _kernels = None

END_TO_END = (
    "import time; from iwasawa.straighten import Rewriter, graded_dim_upper_bound;"
    "rw = Rewriter.for_type('A2', 5); t = time.perf_counter();"
    "[graded_dim_upper_bound(rw, n) for n in range(7)]; print(time.perf_counter() - t)"
)


def bench(mod, words, mats, repeat):
    out = {}
    for name in ("inversions", "first_descent", "descents"):
        f = getattr(mod, name)
        out[name] = min(timeit.repeat(lambda: [f(w) for w in words], number=1, repeat=repeat))
    out["rank_mod_p"] = min(timeit.repeat(lambda: [mod.rank_mod_p(m, 7) for m in mats], number=1, repeat=repeat))
    return out


def end_to_end(pure):
    env = dict(os.environ, IWASAWA_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(res.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(0)
    words = [tuple(rng.randrange(20) for _ in range(rng.randrange(2, 16))) for _ in range(20000)]
    mats = [np.array([[rng.randrange(7) for _ in range(60)] for _ in range(120)]) for _ in range(5)]
    py = bench(_pykernels, words, mats, args.repeat)
    cy = bench(_kernels, words, mats, args.repeat) if _kernels else None
    print(f"{'kernel':14} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for k, t in py.items():
        if cy:
            print(f"{k:14} {t:11.4f} {cy[k]:11.4f} {t / cy[k]:8.1f}")
        else:
            print(f"{k:14} {t:11.4f} {'n/a':>11}")
    tp = end_to_end(True)
    line = f"{'A2 dims n<=6':14} {tp:11.4f}"
    if cy:
        tc = end_to_end(False)
        line += f" {tc:11.4f} {tp / tc:8.1f}"
    print(line)


if __name__ == "__main__":
    main()
