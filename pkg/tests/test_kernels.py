import subprocess
import sys
from math import gcd

import pytest
from hypothesis import given, strategies as st

from kummer import kernels

pytestmark = pytest.mark.skipif(kernels.compiled is None, reason="extension not built")

small = st.integers(-50, 50)


@given(st.integers(2, 40), st.lists(st.integers(-100, 100), min_size=1, max_size=10))
def test_residue_table_agrees(m, mults):
    assert list(kernels.compiled.residue_table(mults, m)) == kernels.pure.residue_table(mults, m)


@given(st.integers(2, 40), st.data())
def test_gap_scan_agrees(m, data):
    table = data.draw(st.lists(st.integers(0, 40 * m), min_size=m, max_size=m))
    eta = data.draw(st.integers(1, m - 1).filter(lambda a: gcd(a, m) == 1))
    smax = data.draw(st.integers(0, 200))
    assert list(kernels.compiled.gap_scan(table, m, eta, smax)) == kernels.pure.gap_scan(table, m, eta, smax)


@given(st.integers(1, 20), st.data())
def test_invariant_ell_agrees(m, data):
    n = data.draw(st.integers(1, 8))
    coeffs = data.draw(st.lists(small, min_size=n, max_size=n))
    steps = data.draw(st.lists(small, min_size=n, max_size=n))
    ramif = data.draw(st.lists(st.integers(1, 20), min_size=n, max_size=n))
    assert kernels.compiled.invariant_ell(coeffs, steps, ramif, m) == kernels.pure.invariant_ell(
        coeffs, steps, ramif, m)


def test_huge_inputs_use_exact_path():
    big = 1 << 70
    coeffs, steps, ramif = [big, -3], [1, 2], [3, 5]
    assert kernels.invariant_ell(coeffs, steps, ramif, 4) == kernels.pure.invariant_ell(
        coeffs, steps, ramif, 4)
    assert kernels.residue_table([big, 1], 7) == kernels.pure.residue_table([big, 1], 7)


def test_backend_reported():
    assert kernels.BACKEND == "cython"


def test_pure_python_switch():
    code = "import kummer; print(kummer.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"KUMMER_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"
