r"""Independent gap computation from regular differentials.

The regular differentials split into eigenspaces spanned by
``h(x) * y^{-t} dx`` for ``t = 1, ..., m-1``.  With ``W_t`` the divisor of
``y^{-t} dx``, the admissible ``h`` form ``L(E_t)`` where ``E_t`` is the
restriction of ``W_t`` to K(x).  At a totally ramified place ``Q`` the
differentials in eigenspace ``t`` vanish to the orders

    ord_Q(W_t) + m * v,    v in orders_at(E_t),

and the gaps at ``Q`` are exactly these orders plus one.  Nothing here uses
the residue-sum inequality of :mod:`kummer.gaps`, which makes agreement
between the two modules a meaningful check.
"""
from dataclasses import dataclass

from .errors import UnsupportedError, UnsupportedPlaceError
from .gaps import GapSet
from .riemann_roch import InvariantDivisor, RationalDivisor, ell_rational, restrict

__all__ = [
    "EigenspaceData",
    "differential_divisor",
    "eigenspaces",
    "oracle_genus",
    "vanishing_orders",
    "oracle_gap_set",
]


@dataclass(frozen=True)
class EigenspaceData:
    t: int
    W: InvariantDivisor
    E: RationalDivisor
    dim: int


def differential_divisor(spec, t):
    """Divisor of ``y^{-t} dx`` as an invariant divisor.

    ``dx`` has order ``e_u - 1`` above each root and ``-e_u - 1`` above
    infinity (the cover is tame because ``p`` does not divide ``m``).
    """
    if not 1 <= t <= spec.m - 1:
        raise ValueError(f"t must lie in 1..{spec.m - 1}, got {t}")
    coeffs = {}
    for b in spec.places[1:]:
        dx = -b.e - 1 if b.u == spec.infinity else b.e - 1
        coeffs[b.u] = dx - t * b.eta
    return InvariantDivisor(coeffs)


def eigenspaces(spec):
    out = []
    for t in range(1, spec.m):
        W = differential_divisor(spec, t)
        E = restrict(spec, W)
        out.append(EigenspaceData(t=t, W=W, E=E, dim=ell_rational(E)))
    return out


def oracle_genus(spec):
    """Dimension of the space of regular differentials."""
    return sum(es.dim for es in eigenspaces(spec))


def vanishing_orders(spec, u):
    """``{t: orders}`` of regular differentials at the place above ``P_u``."""
    spec.check_index(u)
    b = spec.places[u]
    if u == 0 or not b.totally_ramified:
        raise UnsupportedPlaceError(f"place u={u} is not totally ramified")
    m = spec.m
    return {
        es.t: [es.W[u] + m * v for v in es.E.orders_at(u)]
        for es in eigenspaces(spec)
        if es.dim
    }


def oracle_gap_set(spec, u):
    """Gap set at a totally ramified place, from vanishing orders plus one."""
    g = spec.genus
    if g < 1:
        raise UnsupportedError("oracle gap set needs genus >= 1")
    per_t = vanishing_orders(spec, u)
    orders = [o for os in per_t.values() for o in os]
    if len(set(orders)) != len(orders):
        raise AssertionError(f"vanishing orders collide at u={u}: {per_t}")
    if len(orders) != g:
        raise AssertionError(f"{len(orders)} regular differentials found, genus is {g}")
    if orders and (min(orders) < 0 or max(orders) > 2 * g - 2):
        raise AssertionError(f"vanishing orders outside 0..2g-2: {sorted(orders)}")
    return GapSet(u, tuple(sorted(o + 1 for o in orders)), g)
