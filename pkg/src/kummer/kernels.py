"""Backend selection for the hot loops.

The compiled extension ``kummer._ckernels`` is used when it was built and
``KUMMER_PURE_PYTHON`` is not set to a true value.  Calls whose magnitudes
could exceed 63 bits are routed to the exact pure-Python code instead of
risking wrap-around in the compiled path.
"""
import os

from . import _pykernels

__all__ = ["BACKEND", "residue_table", "gap_scan", "invariant_ell", "compiled", "pure"]

_LIMIT = 1 << 62

pure = _pykernels

if os.environ.get("KUMMER_PURE_PYTHON", "").lower() in ("1", "true", "yes"):
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

BACKEND = "cython" if compiled is not None else "python"


def residue_table(mults, m):
    mults = [lam % m for lam in mults]
    if compiled is not None and m * m * (len(mults) + 1) < _LIMIT:
        return compiled.residue_table(mults, m)
    return pure.residue_table(mults, m)


def gap_scan(table, m, eta, smax):
    if compiled is not None and (smax + 1) * m < _LIMIT and max(table, default=0) < _LIMIT:
        return compiled.gap_scan(table, m, eta % m, smax)
    return pure.gap_scan(table, m, eta, smax)


def invariant_ell(coeffs, steps, ramif, m):
    if compiled is not None:
        bound = max((abs(n) + m * abs(s) for n, s in zip(coeffs, steps)), default=0)
        if (bound + 1) * (len(coeffs) + 1) * (m + 1) < _LIMIT:
            return compiled.invariant_ell(coeffs, steps, ramif, m)
    return pure.invariant_ell(coeffs, steps, ramif, m)
