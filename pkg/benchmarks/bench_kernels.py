"""Compiled versus pure-Python kernels on the workloads the sweeps generate.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from kummer import kernels
from kummer.sweeps import spec_grid


def residue_workload():
    return [(list(s.mults), s.m) for s in spec_grid(9, 6)]


def gap_workload():
    jobs = []
    for spec in spec_grid(9, 6):
        table = kernels.pure.residue_table(list(spec.mults), spec.m)
        for u in spec.totally_ramified():
            eta = spec.places[u].eta % spec.m
            jobs.append((table, spec.m, eta, max(2 * spec.genus - 1, 0)))
    return jobs


def ell_workload():
    jobs = []
    for spec in spec_grid(7, 5):
        steps = [b.eta for b in spec.places]
        ramif = [b.e for b in spec.places]
        for u in range(spec.r + 2):
            for s in range(0, 2 * spec.genus + spec.m + 1):
                coeffs = [0] * (spec.r + 2)
                coeffs[u] = s
                jobs.append((coeffs, steps, ramif, spec.m))
    return jobs


def timed(fn, jobs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for job in jobs:
            fn(*job)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled kernels unavailable; build the extension first")

    workloads = [
        ("residue_table", residue_workload()),
        ("gap_scan", gap_workload()),
        ("invariant_ell", ell_workload()),
    ]
    print(f"{'kernel':<14} {'calls':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, jobs in workloads:
        py = timed(getattr(kernels.pure, name), jobs, args.repeat)
        cy = timed(getattr(kernels.compiled, name), jobs, args.repeat)
        print(f"{name:<14} {len(jobs):>8} {py:>10.3f} {cy:>10.3f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
