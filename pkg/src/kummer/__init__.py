"""Weierstrass gaps and weights for Kummer extensions ``y^m = f(x)``."""
from .curve import CurveSpec, genus, parse_curve, ramification, render
from .gaps import (
    GapSet,
    certified_generic_gap,
    dimension_jump,
    gap_set,
    gap_set_closed_form,
    is_gap_totally_ramified,
    weierstrass_weight,
)
from .kernels import BACKEND
from .riemann_roch import InvariantDivisor, ell_invariant

__version__ = "0.1.0"
