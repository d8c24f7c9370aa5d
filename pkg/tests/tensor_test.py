import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from noninertial_tangles.errors import EmptyKeepSetError, EmptyTransposeSetError, \
    InvalidDensityMatrixError, NonHermitianInputError, PartyNotInRegisterError, \
    RegisterError
from noninertial_tangles.tensor import DensityMatrix, ModeRegister, \
    hermitian_eigenvalues, is_hermitian, jacobi_eigh, kron, partial_trace, \
    partial_transpose, trace_norm
from noninertial_tangles.utils import Party, Region


def _random_hermitian(seed, size):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    return (m + m.conj().T) / 2


def _random_density(seed, slots):
    rng = np.random.default_rng(seed)
    dim = 2 ** slots
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = m @ m.conj().T
    register = ModeRegister.minkowski(list(Party)[:slots])
    return DensityMatrix(register, rho / np.trace(rho).real)


def test_kron_dimensions():
    a = np.eye(2)
    b = np.ones((4, 4))
    assert kron(a, b).shape == (8, 8)
    # a is the most significant factor
    assert kron(np.diag([1, 0]), np.eye(2))[0, 0] == 1
    assert kron(np.diag([1, 0]), np.eye(2))[2, 2] == 0


def test_register_order_and_labels():
    register = ModeRegister([(Party.A, Region.minkowski), (Party.D, Region.region_i),
                             (Party.D, Region.region_ii)])
    assert register.labels == ['A', 'D_I', 'D_II']
    assert register.dimension == 8
    assert register.party_indices(Party.D) == [1, 2]
    assert register.region_indices(Region.region_ii) == [2]
    assert register.index(Party.D, Region.region_i) == 1


def test_register_rejects_bad_slots():
    with pytest.raises(RegisterError):
        ModeRegister([(Party.B, Region.minkowski), (Party.A, Region.minkowski)])
    with pytest.raises(RegisterError):
        ModeRegister([(Party.A, Region.minkowski), (Party.A, Region.minkowski)])
    with pytest.raises(PartyNotInRegisterError):
        ModeRegister.minkowski([Party.A]).party_indices(Party.B)


def test_density_matrix_validation():
    register = ModeRegister.minkowski([Party.A])
    with pytest.raises(InvalidDensityMatrixError):
        DensityMatrix(register, np.eye(2))
    with pytest.raises(InvalidDensityMatrixError):
        DensityMatrix(register, np.array([[1, 1], [0, 0]]))
    with pytest.raises(InvalidDensityMatrixError):
        DensityMatrix(register, np.diag([1.5, -0.5]))
    with pytest.raises(InvalidDensityMatrixError):
        DensityMatrix(register, np.eye(4) / 4)


def test_non_hermitian_input():
    with pytest.raises(NonHermitianInputError):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))
    assert not is_hermitian(np.ones((2, 3)))


def test_unknown_eigensolver():
    with pytest.raises(ValueError):
        hermitian_eigenvalues(np.eye(2), method='qr')


def test_bell_partial_transpose(bell):
    transposed = partial_transpose(bell, [0])
    values = hermitian_eigenvalues(transposed)
    assert values[0] == pytest.approx(-0.5, abs=1e-12)
    assert np.allclose(values[1:], 0.5, atol=1e-12)
    assert trace_norm(transposed) == pytest.approx(2, abs=1e-12)


def test_bell_partial_trace(bell):
    reduced = partial_trace(bell, [1])
    assert reduced.register.labels == ['B']
    assert np.allclose(reduced.matrix, np.eye(2) / 2, atol=1e-12)


def test_product_state_partial_trace():
    first = np.diag([0.7, 0.3])
    second = np.array([[0.5, 0.5], [0.5, 0.5]])
    register = ModeRegister.minkowski([Party.A, Party.B])
    rho = DensityMatrix(register, kron(first, second))
    assert np.allclose(partial_trace(rho, [0]).matrix, first, atol=1e-12)
    assert np.allclose(partial_trace(rho, [1]).matrix, second, atol=1e-12)


def test_empty_sets(bell):
    with pytest.raises(EmptyKeepSetError):
        partial_trace(bell, [])
    with pytest.raises(EmptyTransposeSetError):
        partial_transpose(bell, [])
    with pytest.raises(RegisterError):
        partial_trace(bell, [2])


def test_jacobi_diagonal_input():
    values, vectors = jacobi_eigh(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(values, [-1, 2, 3])
    assert np.allclose(np.abs(vectors), np.eye(3)[:, [1, 2, 0]])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 16))
def test_jacobi_matches_lapack(seed, size):
    m = _random_hermitian(seed, size)
    jacobi = hermitian_eigenvalues(m, method='jacobi')
    lapack = hermitian_eigenvalues(m)
    assert np.max(np.abs(jacobi - lapack)) <= 1e-9


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 16),
       st.sampled_from(['lapack', 'jacobi']))
def test_eigenvector_reconstruction(seed, size, method):
    m = _random_hermitian(seed, size)
    values, vectors = hermitian_eigenvalues(m, method=method, eigenvectors=True)
    rebuilt = (vectors * values) @ vectors.conj().T
    assert np.max(np.abs(rebuilt - m)) <= 1e-9
    assert list(values) == sorted(values)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 16))
def test_trace_norm_bounds_trace(seed, size):
    m = _random_hermitian(seed, size)
    norm = trace_norm(m)
    assert norm == pytest.approx(np.sum(np.abs(hermitian_eigenvalues(m))), abs=1e-10)
    assert norm >= abs(np.trace(m).real) - 1e-10


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 4), st.data())
def test_partial_trace_of_random_density(seed, slots, data):
    rho = _random_density(seed, slots)
    keep = data.draw(st.sets(st.integers(0, slots - 1), min_size=1))
    reduced = partial_trace(rho, keep)
    values = reduced.eigenvalues()
    assert len(values) == 2 ** len(keep)
    assert np.sum(values) == pytest.approx(1, abs=1e-10)
    assert values[0] >= -1e-10


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 4), st.data())
def test_partial_transpose_preserves_trace_and_involution(seed, slots, data):
    rho = _random_density(seed, slots)
    transposed = data.draw(st.sets(st.integers(0, slots - 1), min_size=1))
    once = partial_transpose(rho, transposed)
    assert np.trace(once).real == pytest.approx(1, abs=1e-10)
    assert is_hermitian(once)
    twice = partial_transpose(DensityMatrix(rho.register, once, validate=False),
                              transposed)
    assert np.allclose(twice, rho.matrix, atol=1e-12)
