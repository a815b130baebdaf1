"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py            # orders 3 and 4
    python3 benchmarks/bench_kernels.py --order-5  # adds order 5 (pure backend takes minutes)

Both backends must produce byte-identical output; the script aborts otherwise.
"""
import argparse
import random
import time

from semiprob import kernels


def best_of(repeat, fn, *args):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def bench_enumeration(backends, orders, repeat):
    for n in orders:
        results = {}
        for name, mod in backends.items():
            reps = 1 if n >= 5 else repeat
            results[name] = best_of(reps, mod.enumerate_tables, n)
        outputs = {out for _, out in results.values()}
        assert len(outputs) == 1, f"backends disagree at order {n}"
        count = len(next(iter(outputs))) // (n * n)
        line = "  ".join(f"{name} {t:8.3f}s" for name, (t, _) in results.items())
        print(f"enumerate n={n}  count={count:<7} {line}{speedup(results)}")


def bench_scan(backends, repeat, samples=2000):
    # Random tables are mostly non-associative and fail fast; mix in
    # associative ones so the full triple scan is exercised too.
    rng = random.Random(0)
    n = 4
    assoc = kernels.pure.enumerate_tables(n)
    tables = []
    for i in range(samples):
        if i % 2:
            k = rng.randrange(len(assoc) // (n * n))
            tables.append(assoc[k * n * n:(k + 1) * n * n])
        else:
            tables.append(bytes(rng.randrange(n) for _ in range(n * n)))

    def scan(mod):
        return [mod.first_nonassociative(t, n) for t in tables]

    results = {name: best_of(repeat, scan, mod) for name, mod in backends.items()}
    assert len({tuple(out) for _, out in results.values()}) == 1, "backends disagree on scans"
    line = "  ".join(f"{name} {t:8.3f}s" for name, (t, _) in results.items())
    print(f"assoc scan n={n}  tables={samples:<6} {line}{speedup(results)}")


def speedup(results):
    if "cython" in results and "python" in results:
        return f"  speedup {results['python'][0] / results['cython'][0]:.1f}x"
    return ""


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order-5", action="store_true", help="include order 5 enumeration")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (active: {kernels.BACKEND})")
    bench_enumeration(backends, [3, 4, 5] if args.order_5 else [3, 4], args.repeat)
    bench_scan(backends, args.repeat)


if __name__ == "__main__":
    main()
