"""Exact integer and rational primitives.

Fractional parts are returned as :class:`fractions.Fraction`, always reduced
and always in ``[0, 1)``.  Python integers never overflow, so no width checks
are needed here; the compiled kernels guard their own inputs (see
:mod:`kummer.kernels`).
"""
from fractions import Fraction
from math import gcd

from .errors import InvalidModulusError, InvalidPrimeError, NoUniqueSolutionError

__all__ = [
    "frac_part",
    "solve_t",
    "p_adic_leq",
    "base_digits",
    "is_prime",
    "is_prime_power",
    "euler_phi",
    "units_mod",
]


def frac_part(a, m):
    """Return ``{a/m}`` as a reduced fraction in ``[0, 1)``.

    Negative ``a`` is mapped to its Euclidean residue, so
    ``frac_part(-1, 4) == Fraction(3, 4)``.
    """
    if m < 1:
        raise InvalidModulusError(f"modulus must be positive, got {m}")
    return Fraction(a % m, m)


def solve_t(s, eta, m):
    """Unique ``t`` in ``{0, ..., m-1}`` with ``s + eta*t == 0 (mod m)``."""
    if m < 1:
        raise InvalidModulusError(f"modulus must be positive, got {m}")
    if gcd(eta, m) != 1:
        raise NoUniqueSolutionError(f"gcd({eta}, {m}) != 1")
    if m == 1:
        return 0
    return (-s * pow(eta, -1, m)) % m


def base_digits(n, p):
    """Base-``p`` digits of ``n >= 0``, least significant first."""
    if p < 2:
        raise InvalidPrimeError(f"base must be >= 2, got {p}")
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def p_adic_leq(mu, lam, p):
    """True iff every base-``p`` digit of ``mu`` is at most that of ``lam``."""
    if p < 2:
        raise InvalidPrimeError(f"p must be >= 2, got {p}")
    while mu or lam:
        mu, a = divmod(mu, p)
        lam, b = divmod(lam, p)
        if a > b:
            return False
    return True


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime_power(q):
    """True iff ``q = p**k`` for a prime ``p`` and ``k >= 1``."""
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            while q % f == 0:
                q //= f
            return q == 1
        f += 1
    return True


def units_mod(m):
    """The residues in ``{1, ..., m-1}`` coprime to ``m``."""
    return frozenset(a for a in range(1, m) if gcd(a, m) == 1)


def euler_phi(m):
    if m < 1:
        raise InvalidModulusError(f"modulus must be positive, got {m}")
    return 1 if m == 1 else len(units_mod(m))
