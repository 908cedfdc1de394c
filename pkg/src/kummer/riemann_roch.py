"""Galois-invariant divisors and their Riemann-Roch dimensions.

An invariant divisor is stored as one integer per branch index ``u``: the
common coefficient of every place above ``P_u``.  By Maharaj's decomposition

    L(D) = sum_{t=0}^{m-1} L([D + (y^t)] restricted to K(x)) * y^t,

so ``l(D)`` is a sum of ``m`` Riemann-Roch dimensions on the rational
function field, each equal to ``max(0, deg + 1)``.
"""
from . import kernels

__all__ = [
    "InvariantDivisor",
    "RationalDivisor",
    "divisor_of_y_power",
    "restrict",
    "ell_invariant",
    "ell_rational",
]


class _FormalSum:
    """Finitely supported integer combination of branch indices."""

    __slots__ = ("_c",)
    _symbol = "?"

    def __init__(self, coeffs=None):
        coeffs = dict(coeffs or {})
        self._c = {int(u): int(n) for u, n in sorted(coeffs.items()) if n}

    @classmethod
    def place(cls, u, n=1):
        return cls({u: n})

    def __getitem__(self, u):
        return self._c.get(u, 0)

    def items(self):
        return self._c.items()

    def support(self):
        return tuple(self._c)

    def is_zero(self):
        return not self._c

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._c)
        for u, n in other._c.items():
            out[u] = out.get(u, 0) + sign * n
        return type(self)(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({u: -n for u, n in self._c.items()})

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return type(self)({u: k * n for u, n in self._c.items()})

    __rmul__ = __mul__

    def __le__(self, other):
        """Coefficientwise comparison (a partial order)."""
        keys = set(self._c) | set(other._c)
        return all(self[u] <= other[u] for u in keys)

    def __eq__(self, other):
        return type(other) is type(self) and self._c == other._c

    def __hash__(self):
        return hash((type(self).__name__, tuple(self._c.items())))

    def __repr__(self):
        if not self._c:
            return f"{type(self).__name__}(0)"
        terms = " + ".join(f"{n}*{self._symbol}{u}" for u, n in self._c.items())
        return f"{type(self).__name__}({terms.replace('+ -', '- ')})"


class InvariantDivisor(_FormalSum):
    """``sum_u n_u D_u`` where ``D_u`` is the sum of all places above ``P_u``."""

    __slots__ = ()
    _symbol = "D"

    def degree(self, spec):
        return sum(n * spec.places[u].d for u, n in self._c.items())


class RationalDivisor(_FormalSum):
    """Divisor on K(x) supported on the points ``P_0, ..., P_{r+1}``."""

    __slots__ = ()
    _symbol = "P"

    def degree(self):
        return sum(self._c.values())

    def orders_at(self, u):
        """Valuations at ``P_u`` attained by nonzero elements of ``L(self)``.

        On the projective line ``L(E)`` realises exactly ``deg(E) + 1``
        consecutive valuations at any point, starting at ``-n_u(E)``.
        """
        deg = self.degree()
        if deg < 0:
            return range(0)
        return range(-self[u], -self[u] + deg + 1)


def divisor_of_y_power(spec, t):
    """Divisor of ``y**t``: coefficient ``t * lambda_u / d_u`` above ``P_u``."""
    return InvariantDivisor({b.u: t * b.eta for b in spec.places})


def restrict(spec, D):
    """Restriction to K(x): ``floor(n_u / e_u)`` at each ``P_u``."""
    places = spec.places
    return RationalDivisor({u: n // places[u].e for u, n in D.items()})


def ell_rational(E):
    """``l(E)`` on the rational function field."""
    return max(0, E.degree() + 1)


def ell_invariant(spec, D):
    """Dimension of ``L(D)`` for an invariant divisor ``D``."""
    for u in D.support():
        spec.check_index(u)
    places = spec.places
    coeffs = [D[b.u] for b in places]
    steps = [b.eta for b in places]
    ramif = [b.e for b in places]
    return kernels.invariant_ell(coeffs, steps, ramif, spec.m)
