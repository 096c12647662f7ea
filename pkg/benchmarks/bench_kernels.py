"""Backend benchmark: times the hot kernels under numba and under the
pure-numpy fallback (MAJORITYCC_NO_NUMBA=1) and prints both with the
speedup.

Usage:  python3 benchmarks/bench_kernels.py [--full]

--full adds the 7-vertex exhaustive sweep (2^21 graphs), where the gap
is largest; without it the benchmark finishes in well under a minute on
either backend.  Timings exclude jit compilation (one warmup call per
kernel).
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time

TASKS = ("mc_batch", "cut_oracle", "sweep6", "sweep7")


def _graphs_for_mc(count=5000):
    from majoritycc import Graph
    rng = random.Random(7)
    graphs = []
    for _ in range(count):
        n = rng.randint(4, 7)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        rng.shuffle(pairs)
        graphs.append(Graph(n, sorted(pairs[:rng.randint(0, len(pairs))])))
    return graphs


def _graphs_for_oracle(count=60):
    from majoritycc import Graph
    rng = random.Random(11)
    graphs = []
    for _ in range(count):
        n = rng.randint(5, 10)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        rng.shuffle(pairs)
        m = rng.randint(4, min(18, len(pairs)))
        graphs.append(Graph(n, sorted(pairs[:m])))
    return graphs


def run_task(task):
    from majoritycc import _kernels
    if task == "mc_batch":
        graphs = _graphs_for_mc()
        _kernels.mc_value_small(graphs[0])  # warmup
        t0 = time.perf_counter()
        acc = 0
        for g in graphs:
            acc += _kernels.mc_value_small(g)
        return time.perf_counter() - t0, acc
    if task == "cut_oracle":
        graphs = _graphs_for_oracle()
        _kernels.cut_oracle_scan(graphs[0])
        t0 = time.perf_counter()
        acc = 0
        for g in graphs:
            best, _ = _kernels.cut_oracle_scan(g)
            acc += best
        return time.perf_counter() - t0, acc
    if task in ("sweep6", "sweep7"):
        n = 6 if task == "sweep6" else 7
        _kernels.extremal_sweep(3)
        t0 = time.perf_counter()
        mx, mn = _kernels.extremal_sweep(n)
        return time.perf_counter() - t0, int(mx[1] + mn[1])
    raise SystemExit("unknown task %r" % task)


def worker(task):
    from majoritycc import _kernels
    elapsed, checksum = run_task(task)
    print(json.dumps({"backend": _kernels.backend(),
                      "seconds": elapsed, "checksum": checksum}))


def orchestrate(full):
    tasks = ["mc_batch", "cut_oracle", "sweep6"] + (["sweep7"] if full else [])
    rows = []
    for task in tasks:
        per_backend = {}
        for no_numba in ("0", "1"):
            env = dict(os.environ, MAJORITYCC_NO_NUMBA=no_numba)
            out = subprocess.run(
                [sys.executable, os.path.abspath(__file__), "--task", task],
                env=env, capture_output=True, text=True, check=True)
            per_backend[no_numba] = json.loads(out.stdout)
        jit, plain = per_backend["0"], per_backend["1"]
        if jit["checksum"] != plain["checksum"]:
            raise SystemExit("backends disagree on %s: %r vs %r"
                             % (task, jit["checksum"], plain["checksum"]))
        rows.append((task, jit, plain))
    width = max(len(t) for t, _, _ in rows)
    print("%-*s  %12s  %12s  %8s" % (width, "task", jit_label(rows),
                                     "numpy", "speedup"))
    for task, jit, plain in rows:
        print("%-*s  %11.3fs  %11.3fs  %7.1fx"
              % (width, task, jit["seconds"], plain["seconds"],
                 plain["seconds"] / max(jit["seconds"], 1e-9)))
    print("checksums agree on every task")


def jit_label(rows):
    backends = {jit["backend"] for _, jit, _ in rows}
    return backends.pop() if len(backends) == 1 else "jit"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true",
                        help="include the 7-vertex exhaustive sweep")
    parser.add_argument("--task", choices=TASKS, default=None,
                        help=argparse.SUPPRESS)  # subprocess mode
    args = parser.parse_args()
    if args.task:
        worker(args.task)
    else:
        orchestrate(args.full)


if __name__ == "__main__":
    main()
