"""Time the compiled series kernels against the pure-Python twin.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import math
import timeit

from logsine import _kernels_py

try:
    from logsine import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

CASES = {
    "Li_2(e^{i}) to 1e-10": (
        "li_series",
        (math.cos(1.0), math.sin(1.0), 1.0, 2, True, 1e-10, 0.0, 20_000_000, 0),
    ),
    "Li_2(-1) to 1e-12": ("li_series", (-1.0, 0.0, -math.pi, 2, False, 1e-12, 0.0, 20_000_000, 0)),
    "Li_3(1/2) to 1e-15": ("li_series", (0.5, 0.0, 0.0, 3, False, 1e-15, 0.0, 20_000_000, 0)),
    "sum H_n^2/n^2 to rel 1e-5": ("harmonic_sq_series", (0.0, 1e-5, 10_000_000)),
}


def _time(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _compiled is None:
        print("compiled extension not available; only the Python twin is timed")
    print(f"{'case':<28} {'terms':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, (func, call_args) in CASES.items():
        py_fn = getattr(_kernels_py, func)
        terms = py_fn(*call_args)[-3] if func == "li_series" else py_fn(*call_args)[1]
        t_py = _time(py_fn, call_args, args.repeat)
        if _compiled is None:
            print(f"{name:<28} {terms:>10} {t_py:>10.3f} {'-':>11} {'-':>8}")
            continue
        t_c = _time(getattr(_compiled, func), call_args, args.repeat)
        print(f"{name:<28} {terms:>10} {t_py:>10.3f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
