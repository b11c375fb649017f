import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from chowmot import _kernels_py, kernels
from chowmot.graded import monomial_basis

try:
    from chowmot import _kernels
except ImportError:  # extension not built
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled kernel not built")


@st.composite
def operands(draw):
    caps = draw(st.sampled_from([(), (1,), (3,), (1, 1), (2, 3), (1, 1, 2), (2, 2, 2)]))
    bound = draw(st.sampled_from([9, 2 ** 40, 2 ** 200]))
    ints = st.integers(-bound, bound)
    out = []
    for _ in range(2):
        exps = [e for e in monomial_basis(caps) if draw(st.booleans())]
        out.append((exps, [draw(ints) for _ in exps]))
    return caps, out[0], out[1]


@needs_ext
@settings(max_examples=150, deadline=None)
@given(operands())
def test_backends_agree(ops):
    caps, (ae, an), (be, bn) = ops
    assert _kernels.truncated_mul(caps, ae, an, be, bn) == _kernels_py.truncated_mul(caps, ae, an, be, bn)


def test_python_kernel_small_case():
    # (1 + 2h)(3 - h) on P2 = 3 + 5h - 2h^2
    got = _kernels_py.truncated_mul((2,), [(0,), (1,)], [1, 2], [(0,), (1,)], [3, -1])
    assert got == {(0,): 3, (1,): 5, (2,): -2}


def test_zero_products_are_pruned():
    got = kernels.truncated_mul((1,), [(0,), (1,)], [1, 1], [(0,), (1,)], [1, -1])
    assert got == {(0,): 1}


def test_backend_selection_by_environment():
    code = "from chowmot.kernels import BACKEND; print(BACKEND)"
    env = dict(os.environ, CHOWMOT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    expected = "cython" if _kernels is not None else "python"
    assert kernels.BACKEND in (expected, "python")
