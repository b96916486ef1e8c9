import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from multiscalar.numdiff import default_step, partial, richardson_derivative


@given(st.floats(-3.0, 3.0))
def test_sin(x):
    d, err = richardson_derivative(np.sin, x)
    assert abs(d - np.cos(x)) < 1e-12
    assert err < 1e-10


def test_vector_valued():
    f = lambda t: np.array([t**3, np.exp(2 * t)])  # noqa: E731
    d, _ = richardson_derivative(f, 0.7)
    np.testing.assert_allclose(d, [3 * 0.49, 2 * np.exp(1.4)], rtol=1e-12)


def test_partial():
    f = lambda x: x[0] * x[1] ** 2 + np.sin(x[2])  # noqa: E731
    x = np.array([1.5, -2.0, 0.4])
    assert abs(partial(f, x, 1) - 2 * 1.5 * -2.0) < 1e-11
    assert abs(partial(f, x, 2) - np.cos(0.4)) < 1e-12


def test_default_step_scales():
    assert default_step(0.1) == 1e-2
    assert default_step(-300.0) == 3.0
