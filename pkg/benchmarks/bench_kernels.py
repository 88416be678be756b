"""Compare the numba and numpy paths of the risk kernel.

    python benchmarks/bench_kernels.py [--n 100] [--classes 10] [--repeat 200]

Both paths are called directly, so the FEDPU_DISABLE_NUMBA flag does not
matter here.  Prints one line per surrogate with the median time per call and
the largest absolute difference between the two results.
"""

import argparse
import time

import numpy as np

from fedpu import kernels


def make_inputs(n, C, seed=0):
    rng = np.random.default_rng(seed)
    z = rng.normal(size=(n, C))
    probs = np.exp(z) / np.exp(z).sum(axis=1, keepdims=True)
    # half labeled (two positive classes), half unlabeled
    row_type = np.where(np.arange(n) < n // 2, rng.integers(0, 2, n), C)
    row_scale = np.full(n, 1.0 / n)
    coef = rng.random((4, C + 1, C))
    return probs, row_type.astype(np.int64), row_scale, coef


def timed(fn, repeat):
    fn()  # warm-up (includes numba compilation)
    ts = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t)
    return float(np.median(ts))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100, help="examples per batch")
    ap.add_argument("--classes", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    probs, rt, rs, coef = make_inputs(args.n, args.classes)
    print(f"n={args.n} C={args.classes} terms={coef.shape[0]}")
    for name, kind in (("linear", kernels.LINEAR), ("log_complement", kernels.LOG_COMPLEMENT), ("neg_log", kernels.NEG_LOG)):
        a = kernels.risk_terms_numba(probs, rt, rs, coef, kind, 1e-12)
        b = kernels.risk_terms_numpy(probs, rt, rs, coef, kind, 1e-12)
        diff = max(np.abs(a[0] - b[0]).max(), np.abs(a[1] - b[1]).max())
        t_nb = timed(lambda: kernels.risk_terms_numba(probs, rt, rs, coef, kind, 1e-12), args.repeat)
        t_np = timed(lambda: kernels.risk_terms_numpy(probs, rt, rs, coef, kind, 1e-12), args.repeat)
        print(f"{name:>15}  numba {t_nb * 1e6:8.1f} us  numpy {t_np * 1e6:8.1f} us  "
              f"speedup {t_np / t_nb:5.2f}x  max|diff| {diff:.1e}")


if __name__ == "__main__":
    main()
