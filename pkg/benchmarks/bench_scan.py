"""Compare the compiled arc-scan kernel against the numpy fallback.

    python benchmarks/bench_scan.py [--repeat N]

Both kernels must return identical scan results; the script exits non-zero
if they disagree.
"""

import argparse
import time

from locbound import _scan_py, scan
from locbound.constructions import gallery, segment_function

CASES = [
    ("x^2/(x^2+y^2) at origin", gallery()["F1"], (0, 0)),
    ("(x^2+y^4)/(x^2+y^2) at origin", gallery()["F5"], (0, 0)),
    ("algebraic fibers at origin", gallery()["F8"], (0, 0)),
    ("segment at (0,0,2)", segment_function(), (0, 0, 2)),
]


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if scan._scan_ext is None:
        print("compiled kernel not built; only the numpy kernel is available")
    print(f"{'case':<34}{'arcs':>10}{'numpy s':>10}{'compiled s':>12}{'speedup':>9}")
    ok = True
    for name, f, pt in CASES:
        t_py, r_py = _best(lambda: scan.arc_family_scan(f, pt, kernel=_scan_py.lowest_terms),
                           args.repeat)
        if scan._scan_ext is None:
            print(f"{name:<34}{r_py.total:>10}{t_py:>10.3f}{'-':>12}{'-':>9}")
            continue
        t_c, r_c = _best(lambda: scan.arc_family_scan(f, pt), args.repeat)
        same = (r_c.limits, r_c.unbounded, r_c.skipped, r_c.total) == \
            (r_py.limits, r_py.unbounded, r_py.skipped, r_py.total)
        ok &= same
        print(f"{name:<34}{r_c.total:>10}{t_py:>10.3f}{t_c:>12.3f}{t_py / t_c:>8.1f}x"
              + ("" if same else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
