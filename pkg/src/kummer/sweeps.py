"""Parameter sweeps: the Towse table and the oracle-equivalence grid.

Work is spread over processes when ``KUMMER_THREADS`` allows it (``0`` or
unset means one worker per CPU).  Output order never depends on scheduling.
"""
import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement

from .curve import CurveSpec
from .errors import ValidationError
from .gaps import gap_set, towse_row
from .oracle import oracle_gap_set, oracle_genus

__all__ = [
    "TOWSE_HEADER",
    "worker_count",
    "spec_grid",
    "towse_sweep",
    "format_towse_row",
    "write_towse_csv",
    "towse_csv_text",
    "verify_spec",
    "verify_grid",
]

TOWSE_HEADER = ("m", "r", "g", "BW", "g3_minus_g", "ratio", "limit", "abs_error")


def worker_count():
    raw = os.environ.get("KUMMER_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"KUMMER_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"KUMMER_THREADS must be >= 0, got {n}")
    return n or (os.cpu_count() or 1)


def _map(fn, items):
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def spec_grid(m_max, r_max, m_min=2, r_min=1, p=0):
    """Every valid spec with ``m_min <= m <= m_max`` and ``r_min <= r <= r_max``.

    Multiplicities run over multisets (sorted tuples): every quantity computed
    here is invariant under relabelling the roots.
    """
    for m in range(m_min, m_max + 1):
        if p and m % p == 0:
            continue
        for r in range(r_min, r_max + 1):
            for mults in combinations_with_replacement(range(1, m), r):
                try:
                    yield CurveSpec(m, mults, p)
                except ValidationError:
                    continue


def _towse_job(args):
    return towse_row(*args)


def towse_sweep(m, r_min, r_max, step=1):
    """One :func:`~kummer.gaps.towse_row` per ``r`` in ``range(r_min, r_max+1, step)``."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if r_min < m or r_max < r_min or step < 1:
        raise ValueError(f"invalid sweep bounds r={r_min}..{r_max} step {step} (need r_min >= m)")
    return _map(_towse_job, [(m, r) for r in range(r_min, r_max + 1, step)])


def format_towse_row(row):
    """CSV cells: integers verbatim, ``ratio`` and ``abs_error`` as decimals, ``limit`` exact."""
    err = abs(row["ratio"] - row["limit"])
    return (
        str(row["m"]),
        str(row["r"]),
        str(row["g"]),
        str(row["BW"]),
        str(row["g3_minus_g"]),
        f"{float(row['ratio']):.12g}",
        f"{row['limit'].numerator}/{row['limit'].denominator}",
        f"{float(err):.12f}",
    )


def write_towse_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(TOWSE_HEADER)
    for row in rows:
        writer.writerow(format_towse_row(row))


def towse_csv_text(rows):
    buf = io.StringIO()
    write_towse_csv(rows, buf)
    return buf.getvalue()


def verify_spec(spec):
    """Compare the oracle with the gap machinery on one spec.

    Returns a list of mismatch descriptions (empty when everything agrees).
    """
    problems = []
    g = spec.genus
    og = oracle_genus(spec)
    if og != g:
        problems.append(f"{spec.m} {spec.mults}: sum of eigenspace dimensions {og} != g = {g}")
    if g < 1:
        return problems
    for u in spec.totally_ramified():
        try:
            a = gap_set(spec, u).gaps
            b = oracle_gap_set(spec, u).gaps
        except AssertionError as exc:
            problems.append(f"{spec.m} {spec.mults} u={u}: {exc}")
            continue
        if a != b:
            problems.append(f"{spec.m} {spec.mults} u={u}: gaps {a} vs oracle {b}")
    return problems


def _verify_m(args):
    m, r_max = args
    count = 0
    problems = []
    for spec in spec_grid(m, r_max, m_min=m):
        count += 1
        problems.extend(verify_spec(spec))
    return count, problems


def verify_grid(m_max=10, r_max=6):
    """Run :func:`verify_spec` over :func:`spec_grid`; returns ``(count, problems)``."""
    results = _map(_verify_m, [(m, r_max) for m in range(2, m_max + 1)])
    count = sum(c for c, _ in results)
    problems = [p for _, ps in results for p in ps]
    return count, problems

