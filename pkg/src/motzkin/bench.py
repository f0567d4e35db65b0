"""Timing comparison between the compiled kernels and the pure fallback.

Run as ``python -m motzkin.bench``.  Each operation is timed under both
backends (best of ``--repeat`` runs); the series pipeline caches are cleared
before every run so the polynomial arithmetic is actually exercised.
"""

from __future__ import annotations

import argparse
from time import perf_counter
from typing import Callable, Optional, Sequence

from . import _speedups, series
from .paths import Variant


def _clear_series_caches() -> None:
    series._kernel_parts.cache_clear()
    series.boundary_values.cache_clear()
    series.closed_form.cache_clear()


def _best_of(fn: Callable[[], object], repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = perf_counter()
        fn()
        best = min(best, perf_counter() - start)
    return best


def run_benchmarks(n: int, order: int, repeat: int) -> list[tuple[str, dict[str, float]]]:
    operations: list[tuple[str, Callable[[], object]]] = [
        (f"count_paths plain n={n}", lambda: _speedups.count_paths(n, False)),
        (f"count_paths skew n={n}", lambda: _speedups.count_paths(n, True)),
    ]

    def closed_forms():
        _clear_series_caches()
        series.closed_form(Variant.PLAIN, order)
        series.closed_form(Variant.SKEW, order)

    operations.append((f"closed forms order={order}", closed_forms))

    rows = []
    for label, fn in operations:
        timings = {}
        for backend in _speedups.available_backends():
            with _speedups.forced_backend(backend):
                timings[backend] = _best_of(fn, repeat)
        rows.append((label, timings))
    return rows


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="motzkin.bench",
        description="compare the compiled and pure kernel backends",
    )
    parser.add_argument("--n", type=int, default=12, help="walk length to count")
    parser.add_argument("--order", type=int, default=20,
                        help="series truncation order")
    parser.add_argument("--repeat", type=int, default=3, help="runs per timing")
    args = parser.parse_args(argv)

    backends = _speedups.available_backends()
    if "compiled" not in backends:
        print("note: compiled kernels unavailable, timing pure backend only")
    rows = run_benchmarks(args.n, args.order, args.repeat)

    width = max(len(label) for label, _ in rows)
    header = f"{'operation':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(f"best of {args.repeat}")
    print(header)
    for label, timings in rows:
        line = f"{label:<{width}}  " + "".join(
            f"{timings[b]:>11.4f}s" for b in backends
        )
        if len(backends) == 2 and timings["compiled"] > 0:
            line += f"{timings['pure'] / timings['compiled']:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
