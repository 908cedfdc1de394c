"""Sufficient conditions for Weierstrass points and a maximality obstruction.

All verdicts are computed from ``m`` and the multiplicities alone.
"""
import enum
from collections import Counter
from dataclasses import dataclass, field

from .arith import euler_phi, is_prime_power, units_mod
from .errors import UnsupportedError, UnsupportedPlaceError
from .gaps import certified_generic_gaps, gap_set, is_gap_totally_ramified

__all__ = [
    "CriteriaReport",
    "is_weierstrass_by_m_plus_1",
    "ugly_conditions",
    "half_m_gaps",
    "Verdict",
    "maximality_obstruction",
    "HyperellipticReport",
    "hyperelliptic_classify",
]


def is_weierstrass_by_m_plus_1(spec, u):
    """True certifies that the totally ramified place above ``P_u`` is Weierstrass.

    ``m`` is a non-gap there, so if ``m + 1`` is a gap the place cannot carry
    the generic gap sequence (which is closed under the p-adic rule).
    """
    return is_gap_totally_ramified(spec, u, spec.m + 1)


@dataclass(frozen=True)
class CriteriaReport:
    """Verdicts of the four sufficient conditions.

    ``k`` counts totally ramified root places and ``gamma`` holds their
    multiplicities.  ``ugly_ii_literal`` is the condition exactly as usually
    printed; ``ugly_ii`` is the sound reading used for certification.
    """

    k: int
    gamma: frozenset
    ugly_i: bool
    ugly_ii: bool
    ugly_ii_literal: bool
    ugly_iii: bool
    ugly_iv: bool
    m_plus_1_gap: dict
    conclusion: frozenset
    notes: tuple = field(default=())

    @property
    def any(self):
        return self.ugly_i or self.ugly_ii or self.ugly_iii or self.ugly_iv


def ugly_conditions(spec):
    m, r = spec.m, spec.r
    roots = [u for u in range(1, r + 1) if spec.places[u].totally_ramified]
    k = len(roots)
    mults = [spec.lambdas[u] for u in roots]
    gamma = frozenset(mults)
    counts = Counter(mults)

    ugly_i = r >= m + 3
    one_value = k >= 3 and len(gamma) == 1
    literal_ii = (one_value and r <= 4) or (one_value and m >= 4)
    # three equal multiplicities give a sum >= 3(m-1)/m, plus 1/m per extra root
    ugly_ii = one_value and m >= 3 and (m >= 4 or r >= 4)
    ugly_iii = r >= 5 and k >= 1 and all(counts[v] >= 2 for v in mults)
    ugly_iv = r == euler_phi(m) > 4 and gamma == units_mod(m)

    tr = spec.totally_ramified() if spec.genus >= 1 else ()
    # the verdict depends on the place only through its multiplicity
    by_lam = {}
    m1 = {}
    for u in tr:
        lam = spec.lambdas[u]
        if lam not in by_lam:
            by_lam[lam] = is_weierstrass_by_m_plus_1(spec, u)
        m1[u] = by_lam[lam]

    conclusion = set()
    if ugly_i:
        conclusion.update(tr)
    if ugly_ii or ugly_iii or ugly_iv:
        conclusion.update(roots)
    notes = []
    if literal_ii and not ugly_ii:
        notes.append("condition (ii) holds only in its literal reading, which is unsound here")
    elif ugly_ii and not (ugly_i or ugly_iii or ugly_iv):
        notes.append("only condition (ii) applies; its printed form is ambiguous")
    inf = spec.infinity
    if inf in tr and inf not in conclusion and (ugly_ii or ugly_iii or ugly_iv):
        notes.append("conditions (ii)-(iv) certify root places only, not infinity")
    return CriteriaReport(
        k=k,
        gamma=gamma,
        ugly_i=ugly_i,
        ugly_ii=ugly_ii,
        ugly_ii_literal=literal_ii,
        ugly_iii=ugly_iii,
        ugly_iv=ugly_iv,
        m_plus_1_gap=m1,
        conclusion=frozenset(conclusion),
        notes=tuple(notes),
    )


def _coprime_roots(spec):
    return [u for u in range(1, spec.r + 1) if spec.places[u].totally_ramified]


def _partner(spec, u, candidates):
    lam = spec.lambdas[u]
    for v in candidates:
        if v != u and spec.lambdas[v] == lam:
            return v
    return None


def _third_odd(spec, pair):
    return any(spec.lambdas[i] % 2 for i in range(1, spec.r + 1) if i not in pair)


def half_m_gaps(spec, u):
    """Gaps ``1, ..., floor(m/2) - 1`` (or up to ``floor(m/2)``) at a root place.

    Needs a second root with the same multiplicity, coprime to ``m``.  The
    bound extends to ``floor(m/2)`` when ``m`` is odd or some further root
    has odd multiplicity.  Returns ``(gaps, strengthened)``.
    """
    spec.check_index(u)
    if not 1 <= u <= spec.r or not spec.places[u].totally_ramified:
        raise UnsupportedPlaceError(f"u={u} is not a totally ramified root place")
    v = _partner(spec, u, _coprime_roots(spec))
    if v is None:
        raise UnsupportedError(
            f"no second root with multiplicity {spec.lambdas[u]} coprime to m = {spec.m}"
        )
    m = spec.m
    strengthened = m % 2 == 1 or _third_odd(spec, (u, v))
    top = m // 2 if strengthened else m // 2 - 1
    gaps = frozenset(range(1, top + 1))
    bad = [s for s in gaps if not is_gap_totally_ramified(spec, u, s)]
    if bad:
        raise AssertionError(f"claimed gaps {bad} at u={u} are not gaps")
    return gaps, strengthened


class Verdict(enum.Enum):
    NO_OBSTRUCTION = "NoObstruction"
    NOT_MAXIMAL_2Q1 = "NotMaximal_2q1"
    NOT_MAXIMAL_Q1 = "NotMaximal_q1"

    def __str__(self):
        return self.value


def _find_pair(spec):
    roots = _coprime_roots(spec)
    pairs = [(u, v) for i, u in enumerate(roots) for v in roots[i + 1:]
             if spec.lambdas[u] == spec.lambdas[v]]
    if not pairs:
        return None
    # prefer a pair leaving an odd multiplicity outside it
    for pair in pairs:
        if _third_odd(spec, pair):
            return pair
    return pairs[0]


def maximality_obstruction(spec, q, rational=True, pair=None):
    """Divisibility obstruction to F_{q^2}-maximality.

    ``pair`` names two root places, totally ramified with equal
    multiplicity, that the caller asserts lie over F_{q^2}-rational points
    (``rational``; the model cannot check this).  A maximal curve would need
    ``m | 2(q+1)``, and ``m | q+1`` whenever ``m`` or a third multiplicity
    is odd.
    """
    if not is_prime_power(q):
        raise ValueError(f"q must be a prime power, got {q}")
    if pair is None:
        pair = _find_pair(spec)
        if pair is None:
            raise UnsupportedError(
                "need two totally ramified roots with equal multiplicity coprime to m"
            )
    else:
        u, v = pair
        for w in pair:
            spec.check_index(w)
            if not 1 <= w <= spec.r or not spec.places[w].totally_ramified:
                raise UnsupportedPlaceError(f"u={w} is not a totally ramified root place")
        if u == v or spec.lambdas[u] != spec.lambdas[v]:
            raise UnsupportedError("pair must be two distinct roots of equal multiplicity")
    if not rational:
        return Verdict.NO_OBSTRUCTION
    m = spec.m
    if (2 * (q + 1)) % m:
        return Verdict.NOT_MAXIMAL_2Q1
    if (m % 2 == 1 or _third_odd(spec, pair)) and (q + 1) % m:
        return Verdict.NOT_MAXIMAL_Q1
    return Verdict.NO_OBSTRUCTION


@dataclass(frozen=True)
class HyperellipticReport:
    genus: int
    branch_places: tuple
    branch_gaps: tuple
    generic_certified: tuple
    classical: bool

    @property
    def weierstrass_places(self):
        return self.branch_places


def hyperelliptic_classify(spec):
    """Gaps at branch points and at generic points of ``y^2 = f(x)``.

    The branch points carry the odd gaps ``s < r - 1``; generic points have
    ``1, ..., g`` certified, so the curve is classical and its Weierstrass
    points are exactly the branch points.
    """
    if spec.m != 2:
        raise UnsupportedError(f"hyperelliptic classification needs m = 2, got {spec.m}")
    g = spec.genus
    if g < 2:
        raise UnsupportedError(f"hyperelliptic classification needs g >= 2, got {g}")
    branch = spec.totally_ramified()
    sets = {gap_set(spec, u).gaps for u in branch}
    assert len(sets) == 1, sets
    generic = certified_generic_gaps(spec)
    return HyperellipticReport(
        genus=g,
        branch_places=branch,
        branch_gaps=sets.pop(),
        generic_certified=generic,
        classical=generic[:g] == tuple(range(1, g + 1)),
    )
