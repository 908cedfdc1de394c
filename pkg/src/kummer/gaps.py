r"""Weierstrass gaps at the places above the branch points.

Everything here reduces to one table.  For ``t`` in ``0..m-1`` let

    N(t) = sum_{i=1}^{r} (t * lambda_i mod m),

so that :math:`\sum_{i=0}^{r} \{t\lambda_i/m\} = N(t)/m`.  The jump
``l(s D_u) - l((s-1) D_u)`` is the number of ``j`` in ``0..d_u-1`` with

    N(t_u + j*e_u) <= m * (1 + floor((s-1)/e_u)),

where ``t_u`` is the unique residue mod ``e_u`` with
``s + (lambda_u/d_u) * t_u == 0``.  At a totally ramified place only
``j = 0`` exists and ``s`` is a gap iff the inequality fails.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import kernels
from .arith import solve_t
from .curve import CurveSpec
from .errors import UnsupportedError, UnsupportedPlaceError

__all__ = [
    "GapSet",
    "residue_sums",
    "dimension_jump",
    "is_gap_totally_ramified",
    "gap_set",
    "certified_generic_gap",
    "certified_generic_gaps",
    "gap_set_closed_form",
    "weierstrass_weight",
    "hasse_weight_formula",
    "closed_form_gap_sum",
    "towse_ratio",
    "towse_row",
    "limit_value",
]


@dataclass(frozen=True)
class GapSet:
    """Gap numbers at the place(s) above ``P_u``.

    Construction checks that the gaps are strictly increasing positive
    integers bounded by ``2g - 1``.
    """

    place: int
    gaps: tuple
    genus: int

    def __post_init__(self):
        gaps = tuple(self.gaps)
        object.__setattr__(self, "gaps", gaps)
        if any(a >= b for a, b in zip(gaps, gaps[1:])):
            raise ValueError(f"gaps not strictly increasing: {gaps}")
        if gaps and (gaps[0] < 1 or gaps[-1] > 2 * self.genus - 1):
            raise ValueError(f"gaps {gaps} outside 1..2g-1 for g = {self.genus}")

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self):
        return len(self.gaps)

    def __contains__(self, s):
        return s in self.gaps

    def nongaps(self, bound=None):
        """Non-gaps ``0 <= s <= bound`` (default ``2g``)."""
        bound = 2 * self.genus if bound is None else bound
        gaps = set(self.gaps)
        return tuple(s for s in range(bound + 1) if s not in gaps)

    def is_semigroup(self):
        """True iff the complement of the gaps is closed under addition."""
        gaps = set(self.gaps)
        top = max(gaps, default=0)
        holes = [s for s in range(1, top + 1) if s not in gaps]
        return all(a + b not in gaps for a in holes for b in holes if a <= b)

    @property
    def weight(self):
        g = self.genus
        return sum(self.gaps) - g * (g + 1) // 2


@lru_cache(maxsize=4096)
def _table(m, mults):
    return tuple(kernels.residue_table(list(mults), m))


def residue_sums(spec):
    """``N(t) = sum_i (t * lambda_i mod m)`` for ``t = 0, ..., m-1``."""
    return _table(spec.m, tuple(sorted(spec.mults)))


def dimension_jump(spec, u, s):
    """``l(s D_u) - l((s-1) D_u)``, an integer in ``0..d_u``."""
    spec.check_index(u)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    b = spec.places[u]
    table = residue_sums(spec)
    m, e = spec.m, b.e
    t_u = solve_t(s, b.eta, e)
    bound = m * (1 + (s - 1) // e)
    return sum(1 for j in range(b.d) if table[t_u + j * e] <= bound)


def _require_total(spec, u):
    spec.check_index(u)
    b = spec.places[u]
    if u == 0 or not b.totally_ramified:
        raise UnsupportedPlaceError(
            f"place u={u} is not totally ramified (d_u = {b.d})"
        )
    return b


def is_gap_totally_ramified(spec, u, s):
    """Decide whether ``s`` is a gap at the single place above ``P_u``."""
    b = _require_total(spec, u)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    m = spec.m
    t_u = solve_t(s, b.eta, m)
    return residue_sums(spec)[t_u] > m * (1 + (s - 1) // m)


def gap_set(spec, u):
    """All gaps at the totally ramified place above ``P_u``.

    Scans ``s = 1, ..., 2g-1`` and checks that exactly ``g`` gaps were found.
    """
    b = _require_total(spec, u)
    g = spec.genus
    if g == 0:
        return GapSet(u, (), 0)
    gaps = kernels.gap_scan(list(residue_sums(spec)), spec.m, b.eta % spec.m, 2 * g - 1)
    if len(gaps) != g:
        raise AssertionError(f"found {len(gaps)} gaps at u={u}, expected g = {g}")
    return GapSet(u, tuple(gaps), g)


def certified_generic_gap(spec, s):
    """True if ``s`` is provably a gap at every generic place.

    The certificate is a ``j`` with ``s < sum_i {j lambda_i / m}``.  A false
    result is inconclusive.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return s * spec.m < max(residue_sums(spec))


def certified_generic_gaps(spec):
    """Every ``s`` with a generic-gap certificate (always ``1..k`` for some k)."""
    top = max(residue_sums(spec))
    return tuple(range(1, -(-top // spec.m)))


def _closed_form_ranges(m, r):
    for i in range(m - 1 - m // r):
        jmax = r - 2 - (r * (i + 1)) // m
        if jmax >= 0:
            yield i, jmax


def gap_set_closed_form(spec, u):
    """Gaps at a root place of ``y^m = f(x)`` with ``f`` separable.

    ``G = {1 + i + m j : 0 <= i <= m-2-floor(m/r), 0 <= j <= r-2-floor(r(i+1)/m)}``.
    Only valid when every multiplicity is 1 and ``P_u`` is not at infinity.
    """
    if any(lam != 1 for lam in spec.mults):
        raise UnsupportedError("closed form needs every multiplicity equal to 1")
    spec.check_index(u)
    if not 1 <= u <= spec.r:
        raise UnsupportedPlaceError("closed form applies to root places u = 1..r only")
    g = spec.genus
    if g < 1:
        raise UnsupportedError("closed form needs genus >= 1")
    m, r = spec.m, spec.r
    gaps = sorted(1 + i + m * j for i, jmax in _closed_form_ranges(m, r) for j in range(jmax + 1))
    return GapSet(u, tuple(gaps), g)


def closed_form_gap_sum(m, r):
    """``(count, sum)`` of the closed-form gap set, in ``O(m)`` operations."""
    count = total = 0
    for i, jmax in _closed_form_ranges(m, r):
        n = jmax + 1
        count += n
        total += n * (1 + i) + m * jmax * n // 2
    return count, total


def weierstrass_weight(spec, u):
    """``sum(gaps) - g(g+1)/2`` at a totally ramified place."""
    if spec.genus < 1:
        raise UnsupportedError("Weierstrass weight needs genus >= 1")
    return gap_set(spec, u).weight


def hasse_weight_formula(r):
    """``(r-3)(r-2)(r-1)(r+4)/24``."""
    if r < 3:
        raise ValueError(f"formula needs r >= 3, got {r}")
    num = (r - 3) * (r - 2) * (r - 1) * (r + 4)
    q, rem = divmod(num, 24)
    assert rem == 0, num
    return q


def limit_value(m):
    """``(1/3) (m+1)/(m-1)^2``."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return Fraction(m + 1, 3 * (m - 1) ** 2)


def towse_row(m, r):
    """Total branch-point weight data for ``y^m = f(x)``, ``f`` separable of degree ``r``.

    Returns a dict with keys ``m, r, g, BW, g3_minus_g, ratio, limit`` where
    ``ratio = BW / (g^3 - g)`` is an exact :class:`~fractions.Fraction`.
    Root places use the closed form; the place at infinity contributes only
    when it is totally ramified (``gcd(m, r) = 1``), by enumeration.
    """
    spec = CurveSpec(m, (1,) * r, labels=[str(i) for i in range(1, r + 1)])
    g = spec.genus
    if g < 2:
        raise UnsupportedError(f"need genus >= 2 (g^3 - g > 0), got g = {g}")
    count, total = closed_form_gap_sum(m, r)
    assert count == g, (count, g)
    bw = r * (total - g * (g + 1) // 2)
    if gcd(m, r) == 1:
        bw += weierstrass_weight(spec, spec.infinity)
    denom = g**3 - g
    return {
        "m": m,
        "r": r,
        "g": g,
        "BW": bw,
        "g3_minus_g": denom,
        "ratio": Fraction(bw, denom),
        "limit": limit_value(m),
    }


def towse_ratio(m, r):
    """``BW / (g^3 - g)`` as an exact fraction."""
    return towse_row(m, r)["ratio"]
