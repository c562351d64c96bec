"""Benchmark the compiled kernels against the pure-numpy fallback.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from gridword._kernels import available_backends
from gridword.domination import _terminal_vector
from gridword.oracle import OracleTables


def _time(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_oracle_row(backends, d=2, w=7, rows=200):
    tab = OracleTables(d, w)
    results = {}
    for name, impl in backends.items():
        dp = tab.initial_dp()

        def run(dp=dp, impl=impl):
            cur = dp
            for _ in range(rows):
                cur = impl.oracle_row_step(cur, tab)
            return cur

        results[name] = _time(run, repeat=3) / rows
    return results


def bench_dom_row(backends, w=12, rows=20):
    vec0 = _terminal_vector(w)
    results = {}
    for name, impl in backends.items():

        def run(impl=impl):
            vec = vec0
            for _ in range(rows):
                vec = impl.dom_backward_row(vec, w)
            return vec

        results[name] = _time(run, repeat=3) / rows
    return results


def bench_end_to_end():
    from gridword import exact_max

    t0 = time.perf_counter()
    value, _ = exact_max(2, 2000, 7)
    return value, time.perf_counter() - t0


def main():
    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    print()
    print(f"{'kernel':<34}" + "".join(f"{name:>14}" for name in backends) + "   speedup")
    for label, bench, kwargs in [
        ("oracle row step (d=2, w=7)", bench_oracle_row, {"w": 7, "rows": 400}),
        ("oracle row step (d=2, w=8)", bench_oracle_row, {"w": 8, "rows": 100}),
        ("domination row step (w=10)", bench_dom_row, {"w": 10, "rows": 40}),
        ("domination row step (w=12)", bench_dom_row, {"w": 12, "rows": 12}),
    ]:
        results = bench(backends, **kwargs)
        row = f"{label:<34}"
        for name in backends:
            row += f"{results[name] * 1e3:>11.3f} ms"
        if "compiled" in results and "python" in results:
            row += f"{results['python'] / results['compiled']:>9.1f}x"
        print(row)
    value, elapsed = bench_end_to_end()
    print()
    print(f"end to end exact_max(2, 2000, 7) = {value} in {elapsed:.2f}s "
          f"(selected backend)")


if __name__ == "__main__":
    main()
