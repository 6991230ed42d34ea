import numpy as np
import pytest

from frcalc.linalg import (
    DEFAULT_TOL,
    is_unitary,
    max_abs,
    nullspace,
    numerical_rank,
    orthonormal_span,
    random_unitary,
    subspace_distance,
)


def test_random_unitary_is_unitary_and_deterministic():
    u1 = random_unitary(7, 42)
    u2 = random_unitary(7, 42)
    assert np.array_equal(u1, u2)
    assert is_unitary(u1)
    assert max_abs(u1 @ u1.conj().T - np.eye(7)) < 1e-12


def test_random_unitary_seed_sensitivity():
    assert max_abs(random_unitary(5, 1) - random_unitary(5, 2)) > 1e-3


def test_nullspace_and_rank():
    # rank-2 3x4 matrix with a known 2-dim kernel
    a = np.array([[1.0, 2.0, 3.0, 4.0],
                  [2.0, 4.0, 6.0, 8.0],
                  [0.0, 1.0, 1.0, 1.0]])
    assert numerical_rank(a) == 2
    ns = nullspace(a)
    assert ns.shape == (4, 2)
    assert max_abs(a @ ns) < 1e-12


def test_orthonormal_span_dimension():
    rng = np.random.default_rng(0)
    m = rng.standard_normal((3, 3))
    mats = [m, 2 * m, m + 1j * m, np.eye(3)]
    basis = orthonormal_span(mats)
    assert len(basis) == 2
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            inner = np.trace(x @ y.conj().T)
            assert abs(inner - (1.0 if i == j else 0.0)) < 1e-12


def test_subspace_distance_zero_and_one():
    e11 = np.array([[1.0, 0.0], [0.0, 0.0]])
    e22 = np.array([[0.0, 0.0], [0.0, 1.0]])
    assert subspace_distance([e11], [2 * e11]) < 1e-12
    assert subspace_distance([e11], [e22]) > 0.9
