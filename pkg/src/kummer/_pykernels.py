"""Pure-Python versions of the hot loops.  Signatures match ``_ckernels``."""


def residue_table(mults, m):
    """``table[t] = sum_i (t * mults[i] mod m)`` for ``t = 0, ..., m-1``."""
    return [sum((t * lam) % m for lam in mults) for t in range(m)]


def gap_scan(table, m, eta, smax):
    """Gaps ``s <= smax`` at a totally ramified place with step ``eta``.

    ``s`` is a gap iff ``table[t_s] > m * (1 + (s-1)//m)`` where ``t_s`` solves
    ``s + eta*t_s == 0 (mod m)``.  ``eta`` must be a unit mod ``m``.
    """
    inv = pow(eta, -1, m)
    gaps = []
    for s in range(1, smax + 1):
        t = (-s * inv) % m
        if table[t] > m * (1 + (s - 1) // m):
            gaps.append(s)
    return gaps


def invariant_ell(coeffs, steps, ramif, m):
    """``sum_t max(0, 1 + sum_u floor((coeffs[u] + t*steps[u]) / ramif[u])))``."""
    total = 0
    for t in range(m):
        deg = 1
        for n, step, e in zip(coeffs, steps, ramif):
            deg += (n + t * step) // e
        if deg > 0:
            total += deg
    return total
