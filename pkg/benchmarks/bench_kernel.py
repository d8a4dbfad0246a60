"""Compare the compiled and pure-Python elimination kernels.

    python3 benchmarks/bench_kernel.py [--repeat 3]

Times both kernels on the same random integer systems, then times a full
operator-space solve in two subprocesses (one with COLORGDER_PURE=1).
"""
import argparse
import os
import random
import subprocess
import sys
import time

from colorgder import _kernel_py

try:
    from colorgder import _kernel
except ImportError:
    _kernel = None


def systems(seed=0):
    rng = random.Random(seed)
    out = []
    for m, n, dens in ((40, 40, 0.3), (120, 80, 0.1), (300, 81, 0.05), (60, 60, 0.9)):
        rows = [[rng.choice((-3, -2, -1, 1, 2, 3)) if rng.random() < dens else 0
                 for _ in range(n)] for _ in range(m)]
        out.append((f"{m}x{n} density {dens}", rows, n))
    return out


def best(fn, repeat):
    ts = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t)
    return min(ts)


SOLVE = ("from colorgder import make_D, make_A, operator_space, projected;"
         "import time; t = time.perf_counter();"
         "operator_space(make_D(3), 'gder'); operator_space(make_D(4), 'der');"
         "operator_space(make_A(4), 'qder');"
         "print(time.perf_counter() - t)")


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["COLORGDER_PURE"] = "1"
    else:
        env.pop("COLORGDER_PURE", None)
    r = subprocess.run([sys.executable, "-c", SOLVE], env=env, capture_output=True,
                       text=True, check=True)
    return float(r.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; only the pure-Python timings are shown")
    print(f"{'system':28} {'kernel':8} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, rows, n in systems():
        for kind in ("int", "mod"):
            if kind == "int":
                py = lambda: _kernel_py.rref_int(rows, n)
                cc = (lambda: _kernel.rref_int(rows, n)) if _kernel else None
            else:
                py = lambda: _kernel_py.rref_mod(rows, n, 1000003)
                cc = (lambda: _kernel.rref_mod(rows, n, 1000003)) if _kernel else None
            tp = best(py, args.repeat)
            if cc is None:
                print(f"{name:28} {kind:8} {tp:10.4f}")
                continue
            assert py() == cc(), "kernels disagree"
            tc = best(cc, args.repeat)
            print(f"{name:28} {kind:8} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
    tp = end_to_end(True)
    line = f"{'operator-space solves':28} {'full':8} {tp:10.4f}"
    if _kernel is not None:
        tc = end_to_end(False)
        line += f" {tc:11.4f} {tp / tc:7.1f}x"
    print(line)


if __name__ == "__main__":
    main()
