r"""Combinatorial model of a Kummer extension :math:`y^m = \prod (x-\alpha_i)^{\lambda_i}`.

Roots are opaque labels.  Every quantity computed by the package depends only
on the degree ``m``, the characteristic ``p`` and the multiset of
multiplicities, so no field arithmetic is ever performed.

Branch indices follow the usual convention:

* ``u = 0`` is an auxiliary point :math:`\alpha_0` that is not a root
  (multiplicity 0, unramified; the places above it are the *generic* places),
* ``u = 1, ..., r`` are the roots,
* ``u = r + 1`` is the place at infinity, with multiplicity
  :math:`-\sum_i \lambda_i`.
"""
import json
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

from .arith import is_prime
from .errors import (
    CharacteristicError,
    CurveSyntaxError,
    DegreeError,
    DuplicateLabelError,
    EmptyCurveError,
    KummerError,
    MultiplicityRangeError,
    PlaceIndexError,
    PowerError,
)

__all__ = [
    "CurveSpec",
    "BranchPlace",
    "validate",
    "ramification",
    "genus",
    "parse_curve",
    "render",
    "load_spec",
    "spec_from_mapping",
]


@dataclass(frozen=True)
class CurveSpec:
    """Degree ``m``, characteristic ``p`` and root multiplicities of the curve.

    The specification is validated on construction and is immutable
    afterwards.  ``labels`` defaults to ``a1, ..., ar``.
    """

    m: int
    mults: tuple
    p: int = 0
    labels: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(v) for v in self.mults))
        if self.labels is None:
            labels = tuple(f"a{i}" for i in range(1, len(self.mults) + 1))
        else:
            labels = tuple(str(v) for v in self.labels)
        object.__setattr__(self, "labels", labels)
        validate(self)

    @property
    def r(self):
        return len(self.mults)

    @property
    def infinity(self):
        """Branch index of the place at infinity."""
        return self.r + 1

    @cached_property
    def lambdas(self):
        """``(lambda_0, ..., lambda_{r+1})`` with ``lambda_0 = 0``."""
        return (0,) + self.mults + (-sum(self.mults),)

    def lam(self, u):
        self.check_index(u)
        return self.lambdas[u]

    def check_index(self, u):
        if not isinstance(u, int) or not 0 <= u <= self.r + 1:
            raise PlaceIndexError(f"branch index {u!r} outside 0..{self.r + 1}")

    @cached_property
    def places(self):
        return tuple(_branch_place(u, self.m, lam) for u, lam in enumerate(self.lambdas))

    @cached_property
    def genus(self):
        return genus(self)

    def totally_ramified(self):
        """Branch indices ``u >= 1`` whose fibre is a single place."""
        return tuple(b.u for b in self.places[1:] if b.totally_ramified)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class BranchPlace:
    """Ramification data over ``P_u``: ``d`` places, each with index ``e``."""

    u: int
    d: int
    e: int
    eta: int

    @property
    def totally_ramified(self):
        return self.d == 1


def validate(spec):
    """Check every invariant of ``spec`` and return it unchanged.

    Each violated invariant raises its own subclass of
    :class:`~kummer.errors.ValidationError`.
    """
    m, p = spec.m, spec.p
    if not isinstance(m, int) or m < 2:
        raise DegreeError(f"degree m must be an integer >= 2, got {m!r}")
    if p != 0 and not is_prime(p):
        raise CharacteristicError(f"characteristic must be 0 or a prime, got {p}")
    if p and m % p == 0:
        raise CharacteristicError(f"characteristic {p} divides m = {m}")
    if not spec.mults:
        raise EmptyCurveError("f(x) must have at least one root")
    for i, lam in enumerate(spec.mults, start=1):
        if not 0 < lam < m:
            raise MultiplicityRangeError(
                f"multiplicity of root {i} is {lam}, expected 0 < lambda < {m}"
            )
    if len(spec.labels) != len(spec.mults):
        raise DuplicateLabelError(
            f"{len(spec.labels)} labels given for {len(spec.mults)} roots"
        )
    seen = set()
    for label in spec.labels:
        if label in seen:
            raise DuplicateLabelError(f"root label {label!r} appears twice")
        seen.add(label)
    d = m
    for lam in spec.mults:
        d = gcd(d, lam)
    if d != 1:
        raise PowerError(f"f(x) is a {d}-th power (gcd of m and multiplicities is {d})")
    return spec


@lru_cache(maxsize=65536)
def _branch_place(u, m, lam):
    d = gcd(m, lam)
    return BranchPlace(u=u, d=d, e=m // d, eta=lam // d)


def ramification(spec, u):
    """Number of places ``d_u`` over ``P_u`` and their ramification index ``e_u``."""
    spec.check_index(u)
    return spec.places[u]


def genus(spec):
    """Genus from Riemann-Hurwitz for the tame cyclic cover of the line."""
    total = sum(b.d * (b.e - 1) for b in spec.places[1:])
    two_g_minus_2 = -2 * spec.m + total
    assert two_g_minus_2 % 2 == 0
    return two_g_minus_2 // 2 + 1


# -- equation parser ---------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<op>[-+*^=();]))"
)
_LABEL = re.compile(r"[A-Za-z0-9_.]+\Z")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        mo = _TOKEN.match(text, pos)
        if mo is None or mo.end() == pos:
            raise CurveSyntaxError("unexpected character", text, pos)
        kind = mo.lastgroup
        start = mo.start(kind)
        tokens.append((kind, mo.group(kind), start))
        pos = mo.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.p = 0

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise CurveSyntaxError(message, self.text, tok[2])

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            self.error(f"expected {want!r}, found {got!r}", tok)
        self.i += 1
        return tok

    def accept(self, kind, value):
        tok = self.peek()
        if tok[0] == kind and tok[1] == value:
            self.i += 1
            return True
        return False

    def integer(self):
        return int(self.take("int")[1])

    def parse(self):
        if self.peek()[0] == "name" and self.peek()[1] == "char":
            self.i += 1
            self.take("op", "=")
            self.p = self.integer()
            self.take("op", ";")
        self.take("name", "y")
        self.take("op", "^")
        m = self.integer()
        self.take("op", "=")
        roots = self.rhs()
        self.take("end")
        return m, self.p, roots

    def rhs(self):
        # a bare "x - a" or "x^n - c" is allowed as the whole right-hand side
        tok = self.peek()
        if tok[0] == "name" and tok[1] == "x":
            j = 2 if self.peek(1)[1] == "^" else 0
            after = self.peek(1 + j) if j else self.peek(1)
            if after[0] == "op" and after[1] in "+-":
                return self.inner(1)
        roots = self.factor()
        while self.accept("op", "*"):
            roots += self.factor()
        return roots

    def exponent(self):
        if self.accept("op", "^"):
            tok = self.peek()
            e = self.integer()
            if e < 1:
                self.error("exponent must be positive", tok)
            return e
        return 1

    def factor(self):
        tok = self.peek()
        if tok[0] == "name" and tok[1] == "x":
            self.i += 1
            return [("0", self.exponent())]
        if self.accept("op", "("):
            roots = self.inner(1)
            self.take("op", ")")
            e = self.exponent()
            return [(label, lam * e) for label, lam in roots]
        self.error(f"expected a factor, found {tok[1] or 'end of input'!r}")

    def inner(self, power):
        self.take("name", "x")
        degree = self.exponent()
        tok = self.peek()
        if not (tok[0] == "op" and tok[1] in "+-"):
            if degree == 1:
                return [("0", power)]
            self.error("expected '+' or '-' after x^n inside parentheses", tok)
        self.i += 1
        sign = tok[1]
        ltok = self.peek()
        if ltok[0] not in ("int", "name"):
            self.error("expected a root label", ltok)
        self.i += 1
        raw = ltok[1]
        if degree == 1:
            return [(_linear_label(sign, raw), power)]
        return self.binomial(degree, sign, raw, ltok, power)

    def binomial(self, n, sign, raw, tok, power):
        if tok[0] != "int" or int(raw) == 0:
            self.error("x^n +/- c needs a nonzero integer constant c", tok)
        c = int(raw)
        if self.p:
            if n % self.p == 0:
                self.error(f"x^{n} {sign} {c} is inseparable in characteristic {self.p}", tok)
            if c % self.p == 0:
                self.error(f"constant {c} vanishes in characteristic {self.p}", tok)
        tag = f"x{n}{'m' if sign == '-' else 'p'}{c}"
        return [(f"{tag}_{k}", power) for k in range(n)]


def _linear_label(sign, raw):
    # the root of (x - a) is a, of (x + a) is -a
    if raw.isdigit():
        value = int(raw)
        return str(value if sign == "-" else -value)
    return raw if sign == "-" else "-" + raw


def parse_curve(text):
    """Parse an equation such as ``"char=3; y^4 = x*(x-1)^2*(x+a)"``.

    Grammar (whitespace is ignored)::

        curve    := ["char" "=" INT ";"] "y" "^" INT "=" rhs
        rhs      := inner | factor ("*" factor)*
        factor   := "x" ["^" INT] | "(" inner ")" ["^" INT]
        inner    := "x" [("-" | "+") LABEL] | "x" "^" INT ("-" | "+") INT

    ``(x - a)`` contributes the root labelled ``a`` and ``(x + a)`` the root
    ``-a``; numeric labels are normalised (``(x-0)`` and ``x`` are both
    ``"0"``).  A binomial ``x^n - c`` contributes ``n`` distinct roots
    labelled ``x<n>m<c>_k``.  Labels are opaque: two labels that name the same
    field element (``(x-1)`` next to ``x^2-1``) are not detected.
    """
    m, p, roots = _Parser(text).parse()
    labels = tuple(label for label, _ in roots)
    mults = tuple(lam for _, lam in roots)
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabelError(f"root label {label!r} appears twice")
        seen.add(label)
    return CurveSpec(m=m, mults=mults, p=p, labels=labels)


def _render_factor(label, lam):
    if label == "0":
        base = "x"
    elif label.startswith("-"):
        base = f"(x+{label[1:]})"
    else:
        base = f"(x-{label})"
    return base if lam == 1 else f"{base}^{lam}"


def render(spec):
    """Inverse of :func:`parse_curve` for specifications it can express."""
    for label in spec.labels:
        if not _LABEL.match(label.lstrip("-")) or label.startswith("--"):
            raise KummerError(f"label {label!r} cannot be written in equation syntax")
    head = f"char={spec.p}; " if spec.p else ""
    body = "*".join(_render_factor(lb, lam) for lb, lam in zip(spec.labels, spec.mults))
    return f"{head}y^{spec.m} = {body}"


# -- spec files ----------------------------------------------------------------


def spec_from_mapping(data):
    """Build a spec from the key-value form used by spec files.

    Accepted keys: ``m``, ``char`` (default 0), ``multiplicities`` and
    optional ``labels``; or ``equation`` (with an optional ``char`` that must
    agree with any ``char=`` prefix).
    """
    if not isinstance(data, dict):
        raise KummerError("spec document must be a key-value mapping")
    if "equation" in data:
        spec = parse_curve(str(data["equation"]))
        if "char" in data and int(data["char"]) != spec.p:
            if spec.p:
                raise KummerError("'char' disagrees with the equation's char= prefix")
            spec = CurveSpec(spec.m, spec.mults, int(data["char"]), spec.labels)
        if "m" in data and int(data["m"]) != spec.m:
            raise KummerError("'m' disagrees with the equation")
        return spec
    try:
        m = int(data["m"])
        mults = [int(v) for v in data["multiplicities"]]
    except KeyError as exc:
        raise KummerError(f"spec document is missing {exc.args[0]!r}") from None
    except (TypeError, ValueError):
        raise KummerError("'m' and 'multiplicities' must be integers") from None
    return CurveSpec(m=m, mults=mults, p=int(data.get("char", 0)), labels=data.get("labels"))


def load_spec(path):
    """Read a JSON spec file.  ``OSError`` propagates for unreadable paths."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise KummerError(f"{path}: not valid JSON ({exc.msg}, line {exc.lineno})") from None
    return spec_from_mapping(data)


def spec_to_mapping(spec):
    return {
        "m": spec.m,
        "char": spec.p,
        "multiplicities": list(spec.mults),
        "labels": list(spec.labels),
    }
