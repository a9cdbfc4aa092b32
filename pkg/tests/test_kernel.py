import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bgframes import (
    NotHermitian,
    NotPositiveDefinite,
    NotSquare,
    ShapeMismatch,
    adjoint,
    as_matrix,
    eig_hermitian,
    hermitian_deviation,
    inner,
    operator_norm,
    solve_pd,
)
from bgframes.generators import random_hermitian_pd

finite_floats = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


@st.composite
def complex_matrices(draw, rows=None, cols=None, max_dim=4):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    re = draw(st.lists(finite_floats, min_size=r * c, max_size=r * c))
    im = draw(st.lists(finite_floats, min_size=r * c, max_size=r * c))
    return (np.array(re) + 1j * np.array(im)).reshape(r, c)


@st.composite
def conformable_pairs(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    k = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return draw(complex_matrices(rows=r, cols=k)), draw(complex_matrices(rows=k, cols=c))


# ---------------------------------------------------------------------------
# adjoint


def test_adjoint_identity_is_self():
    np.testing.assert_array_equal(adjoint(np.eye(2)), np.eye(2))


def test_adjoint_conjugate_transposes():
    m = np.array([[0.0, 1j]])
    expected = np.array([[0.0], [-1j]])
    np.testing.assert_array_equal(adjoint(m), expected)
    assert adjoint(m).shape == (2, 1)


@settings(max_examples=50, deadline=None)
@given(complex_matrices())
def test_adjoint_involution(m):
    np.testing.assert_array_equal(adjoint(adjoint(m)), m)


@settings(max_examples=50, deadline=None)
@given(conformable_pairs())
def test_adjoint_reverses_products(pair):
    a, b = pair
    np.testing.assert_allclose(adjoint(a @ b), adjoint(b) @ adjoint(a), atol=1e-12)


# ---------------------------------------------------------------------------
# hermitian_deviation


def test_deviation_zero_for_diagonal():
    assert hermitian_deviation(np.diag([2.0, 1.0])) == 0.0


def test_deviation_of_nilpotent():
    # M - M* = [[0, 1], [-1, 0]], Frobenius norm sqrt(2), ||M|| = 1.
    m = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert hermitian_deviation(m) == pytest.approx(math.sqrt(2.0), rel=1e-15)


@settings(max_examples=50, deadline=None)
@given(complex_matrices(rows=3, cols=3))
def test_deviation_vanishes_after_symmetrization(m):
    assert hermitian_deviation(m + adjoint(m)) <= 1e-14 * (1.0 + np.linalg.norm(m))


def test_deviation_requires_square():
    with pytest.raises(NotSquare):
        hermitian_deviation(np.ones((2, 3)))


# ---------------------------------------------------------------------------
# eig_hermitian


def test_eig_diagonal_sorted_ascending():
    eig = eig_hermitian(np.diag([2.0, 1.0]))
    np.testing.assert_allclose(eig.eigenvalues, [1.0, 2.0], atol=1e-14)


def test_eig_identity():
    eig = eig_hermitian(np.eye(4))
    np.testing.assert_allclose(eig.eigenvalues, np.ones(4), atol=1e-14)


def test_eig_swap_matrix():
    # Characteristic polynomial x^2 - 1.
    eig = eig_hermitian(np.array([[0.0, 1.0], [1.0, 0.0]]))
    np.testing.assert_allclose(eig.eigenvalues, [-1.0, 1.0], atol=1e-14)


def test_eig_residual_and_unitarity():
    rng = np.random.default_rng(7)
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    m = a + a.conj().T
    eig = eig_hermitian(m)
    scale = np.linalg.norm(m)
    for k in range(6):
        residual = m @ eig.eigenvectors[:, k] - eig.eigenvalues[k] * eig.eigenvectors[:, k]
        assert np.linalg.norm(residual) <= 1e-10 * scale
    gram = eig.eigenvectors.conj().T @ eig.eigenvectors
    assert np.max(np.abs(gram - np.eye(6))) <= 1e-10


def test_eig_reconstructs_matrix():
    rng = np.random.default_rng(8)
    a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    m = a + a.conj().T
    eig = eig_hermitian(m)
    rebuilt = (eig.eigenvectors * eig.eigenvalues) @ eig.eigenvectors.conj().T
    assert np.linalg.norm(rebuilt - m) <= 1e-9 * np.linalg.norm(m)


def test_eig_rejects_rectangular_and_nonhermitian():
    with pytest.raises(NotSquare):
        eig_hermitian(np.ones((2, 3)))
    with pytest.raises(NotHermitian):
        eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


# ---------------------------------------------------------------------------
# solve_pd


def test_solve_pd_diagonal():
    x = solve_pd(np.diag([2.0, 1.0]), np.eye(2))
    np.testing.assert_allclose(x, np.diag([0.5, 1.0]), atol=1e-14)


def test_solve_pd_identity_returns_rhs():
    rng = np.random.default_rng(3)
    b = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    np.testing.assert_allclose(solve_pd(np.eye(3), b), b, atol=1e-14)


def test_solve_pd_vector_rhs():
    x = solve_pd(np.array([[2.0, 0.0], [0.0, 1.0]]), np.array([1.0, 0.0]))
    np.testing.assert_allclose(x, [0.5, 0.0], atol=1e-14)
    assert x.ndim == 1


def test_solve_pd_recovers_solution_at_cond_1e6():
    m = random_hermitian_pd(6, seed=101, eig_low=1e-3, eig_high=1e3)
    rng = np.random.default_rng(5)
    x0 = rng.standard_normal((6, 3)) + 1j * rng.standard_normal((6, 3))
    b = m @ x0
    x = solve_pd(m, b)
    assert np.linalg.norm(x - x0) <= 1e-8 * np.linalg.norm(x0)
    assert np.linalg.norm(m @ x - b) <= 1e-9 * np.linalg.norm(b)


def test_solve_pd_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite) as excinfo:
        solve_pd(np.diag([1.0, -1.0]), np.eye(2))
    assert excinfo.value.smallest_eigenvalue == pytest.approx(-1.0)


def test_solve_pd_rejects_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        solve_pd(np.eye(2), np.ones(3))


# ---------------------------------------------------------------------------
# operator_norm


def test_operator_norm_diagonal():
    assert operator_norm(np.diag([2.0, 1.0])) == pytest.approx(2.0, rel=1e-12)


def test_operator_norm_zero_matrix():
    assert operator_norm(np.zeros((3, 2))) == 0.0


def test_operator_norm_unitary_is_one():
    rng = np.random.default_rng(11)
    q, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
    assert operator_norm(q) == pytest.approx(1.0, abs=1e-12)


def test_operator_norm_matches_spectrum_for_hermitian():
    rng = np.random.default_rng(12)
    a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    m = a + a.conj().T
    top = float(np.max(np.abs(eig_hermitian(m).eigenvalues)))
    assert operator_norm(m) == pytest.approx(top, rel=1e-9)


# ---------------------------------------------------------------------------
# constructors and the inner-product convention


def test_as_matrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        as_matrix(np.array([[np.nan, 0.0], [0.0, 1.0]]))
    with pytest.raises(ShapeMismatch):
        as_matrix(np.zeros((0, 2)))


def test_inner_is_linear_in_first_argument():
    u = np.array([1.0 + 1j, 0.0])
    v = np.array([0.0 + 2j, 1.0])
    # sum_i u[i] conj(v[i]) = (1+i)(-2i) = 2 - 2i
    assert inner(u, v) == pytest.approx(2.0 - 2.0j)
    assert inner(2j * u, v) == pytest.approx(2j * inner(u, v))
