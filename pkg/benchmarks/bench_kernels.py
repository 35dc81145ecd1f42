"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs under both backends; the table shows the best wall time
of N repeats and the speedup of the compiled path.
"""
import argparse
import time

import numpy as np

from hyperconic import _backend, _pykernels
from hyperconic.datasets import DatasetSpec, generate_dataset
from hyperconic.fit import fit_exact
from hyperconic.ga import Multivector, Signature, geometric_product
from hyperconic.perceptron import TrainConfig, train

try:
    from hyperconic import _kernels
except ImportError:
    _kernels = None


def dense_products(dim, n):
    rng = np.random.default_rng(0)
    sig = Signature(dim)
    masks = np.arange(1 << dim)
    pairs = []
    for _ in range(n):
        a = rng.choice(masks, size=min(32, masks.size), replace=False)
        b = rng.choice(masks, size=min(32, masks.size), replace=False)
        pairs.append((Multivector(dict(zip(a.tolist(), rng.normal(size=a.size))), sig),
                      Multivector(dict(zip(b.tolist(), rng.normal(size=b.size))), sig)))
    return lambda: [geometric_product(a, b) for a, b in pairs]


def exact_fits(m, n):
    rng = np.random.default_rng(1)
    sets = [rng.normal(size=((m + 1) * (m + 2) // 2 - 1, m)) for _ in range(n)]
    return lambda: [fit_exact(P) for P in sets]


def training(epochs):
    data = generate_dataset(DatasetSpec.from_preset("ellipse", per_class=100, margin=0.0, noise=0.3, seed=1))
    # noisy points straddle the boundary, so accuracy stays below 1 and every epoch runs
    cfg = TrainConfig(max_epochs=epochs, seed=1)
    return lambda: train(data, cfg)


WORKLOADS = [
    ("geometric product, (6,0), 200 pairs", lambda: dense_products(6, 200)),
    ("geometric product, (10,0), 50 pairs", lambda: dense_products(10, 50)),
    ("exact fit, 5 points in R^2, x200", lambda: exact_fits(2, 200)),
    ("exact fit, 9 points in R^3, x20", lambda: exact_fits(3, 20)),
    ("train elliptical, 200 noisy points, 200 epochs", lambda: training(200)),
]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'workload':<46}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, make in WORKLOADS:
        fn = make()
        times = {}
        for label, mod in (("python", _pykernels), ("cython", _kernels)):
            _backend.kernels, _backend.BACKEND = mod, label
            times[label] = best_time(fn, args.repeat)
        print(f"{name:<46}{times['python']:>10.4f}{times['cython']:>10.4f}"
              f"{times['python'] / times['cython']:>8.1f}x")


if __name__ == "__main__":
    main()
