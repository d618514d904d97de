"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row runs the same workload through both backends and checks that the
outputs agree before reporting the speedup.
"""
import argparse
import itertools
import time

from skeletal import _pykernels, cyclic, labeled
from skeletal.enumeration import enumerate_skf
from skeletal.paths import Params

try:
    from skeletal import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    n, m, c = 7, 2, 3
    yield (f"enumerate skv n={n} m={m} c={c}, all k",
           lambda mod: [list(map(tuple, mod.enumerate_skv(n, m, c, k))) for k in range(n)])

    n, m, c = 4, 2, 2
    top = m * (n - 1) + c - 1
    configs = list(itertools.product(range(top + 1), repeat=n))
    yield (f"naive chip scan n={n} ({len(configs)} configs x {n} k)",
           lambda mod: [mod.skeletal_chip_naive(D, k, m, c) for D in configs for k in range(n)])

    p = Params(6, 3, 3)
    fam = [tuple(g) for g in _pykernels.enumerate_skv(6, 3, 3, 2)]
    py_map = lambda g: cyclic._map_python(g, 2, 4, p)
    c_map = None if _ckernels is None else (lambda g: _ckernels.map_skeletal(g, 2, 4, 3, 3))
    yield (f"class-walk map n=6 m=3 c=3 ({len(fam)} vectors)",
           lambda mod: [(py_map if mod is _pykernels else c_map)(g) for g in fam])

    p = Params(5, 1, 2)
    fns = enumerate_skf(1, p)
    py_fn = lambda f: labeled._map_fn_python(f, 1, 3, p)
    c_fn = None if _ckernels is None else (lambda f: _ckernels.map_fn_skeletal(f, 1, 3, 1, 2))
    yield (f"function map n=5 m=1 c=2 ({len(fns)} functions)",
           lambda mod: [(py_fn if mod is _pykernels else c_fn)(f) for f in fns])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':<52} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, run in workloads():
        t_py, out_py = best_of(lambda: run(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<52} {t_py:>10.3f} {'-':>10} {'-':>8}")
            continue
        t_c, out_c = best_of(lambda: run(_ckernels), args.repeat)
        assert out_py == out_c, f"backends disagree on {name}"
        print(f"{name:<52} {t_py:>10.3f} {t_c:>10.3f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
