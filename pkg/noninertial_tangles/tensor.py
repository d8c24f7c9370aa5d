"""Dense complex linear algebra over registers of binary fermionic mode slots.

Matrices here never exceed 256 x 256 so everything is dense. Basis indices follow the
canonical slot order of a ``ModeRegister`` with slot 0 as the most significant bit.
"""

from __future__ import annotations

import logging
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from .errors import EmptyKeepSetError, EmptyTransposeSetError, \
    InvalidDensityMatrixError, NonHermitianInputError, PartyNotInRegisterError, \
    RegisterError
from .utils import Party, Region

_logger = logging.getLogger(__name__)

HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-10
PSD_TOLERANCE = 1e-10
JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100

Slot = Tuple[Party, Region]


class ModeRegister:
    """Ordered list of mode slots, each tagged with its owner party and region.

    Args:
        slots: A sequence of (Party, Region) tuples in canonical order: parties A, B,
            C, D and, for an accelerated party, Region I right before Region II.
    """

    def __init__(self, slots: Sequence[Slot]) -> None:
        slots = tuple((Party(party), Region(region)) for party, region in slots)
        if len(set(slots)) != len(slots):
            raise RegisterError(f'Duplicated slots in register {slots}')
        keys = [(party.order, region.order) for party, region in slots]
        if keys != sorted(keys):
            raise RegisterError(f'Slots are not in canonical order: {slots}')
        self._slots = slots

    @classmethod
    def minkowski(cls, parties: Iterable[Party]) -> ModeRegister:
        """Register with one Minkowski slot per party."""
        ordered = sorted(set(parties), key=lambda party: party.order)
        return cls([(party, Region.minkowski) for party in ordered])

    @property
    def slots(self) -> Tuple[Slot, ...]:
        """Get the slots."""
        return self._slots

    @property
    def size(self) -> int:
        """Get the number of slots."""
        return len(self._slots)

    @property
    def dimension(self) -> int:
        """Get the Hilbert space dimension."""
        return 2 ** len(self._slots)

    @property
    def parties(self) -> List[Party]:
        """Get the parties owning at least one slot, in canonical order."""
        parties = []
        for party, _ in self._slots:
            if party not in parties:
                parties.append(party)
        return parties

    @property
    def labels(self) -> List[str]:
        """Get slot labels such as ``A``, ``D_I`` and ``D_II``."""
        return [party.value if region is Region.minkowski
                else f'{party.value}_{region.value}' for party, region in self._slots]

    def index(self, party: Party, region: Region) -> int:
        """Slot index of a (party, region) pair."""
        try:
            return self._slots.index((party, region))
        except ValueError:
            raise PartyNotInRegisterError(
                f'No {region.value} slot for party {party.value} in {self.labels}') \
                from None

    def party_indices(self, party: Party) -> List[int]:
        """Indices of every slot owned by a party."""
        indices = [count for count, (owner, _) in enumerate(self._slots)
                   if owner is party]
        if not indices:
            raise PartyNotInRegisterError(
                f'Party {party.value} has no slot in {self.labels}')
        return indices

    def region_indices(self, *regions: Region) -> List[int]:
        """Indices of every slot in any of the given regions."""
        return [count for count, (_, region) in enumerate(self._slots)
                if region in regions]

    def subset(self, indices: Iterable[int]) -> ModeRegister:
        """Register made of the given slots, kept in canonical order."""
        return ModeRegister([self._slots[i] for i in sorted(set(indices))])

    def __len__(self) -> int:
        return len(self._slots)

    def __iter__(self) -> Iterator[Slot]:
        return iter(self._slots)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ModeRegister) and self._slots == other._slots

    def __hash__(self) -> int:
        return hash(self._slots)

    def __repr__(self) -> str:
        return f'ModeRegister({self.labels})'


def is_hermitian(m: np.ndarray, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
    """Check max|M[i][j] - conj(M[j][i])| against a tolerance."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tolerance)


class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix over a mode register.

    Args:
        register: The ModeRegister the matrix is written in.
        matrix: A square complex array of size register.dimension.
        validate: Check the density matrix invariants. (Default: True).
    """

    def __init__(self, register: ModeRegister, matrix: np.ndarray,
                 validate: bool = True) -> None:
        matrix = np.array(matrix, dtype=complex)
        if matrix.shape != (register.dimension, register.dimension):
            raise InvalidDensityMatrixError(
                f'Matrix shape {matrix.shape} does not match register of dimension'
                f' {register.dimension}')
        if validate:
            if not is_hermitian(matrix):
                raise InvalidDensityMatrixError('Density matrix is not Hermitian.')
            trace = np.trace(matrix).real
            if abs(trace - 1) > TRACE_TOLERANCE:
                raise InvalidDensityMatrixError(
                    f'Density matrix trace is {trace} instead of 1.')
            smallest = np.linalg.eigvalsh(matrix)[0]
            if smallest < -PSD_TOLERANCE:
                raise InvalidDensityMatrixError(
                    f'Density matrix has negative eigenvalue {smallest}.')
        matrix.setflags(write=False)
        self._register = register
        self._matrix = matrix

    @property
    def register(self) -> ModeRegister:
        """Get the mode register."""
        return self._register

    @property
    def matrix(self) -> np.ndarray:
        """Get the read-only matrix."""
        return self._matrix

    @property
    def purity(self) -> float:
        """Get tr(rho^2)."""
        return float(np.real(np.trace(self._matrix @ self._matrix)))

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues of the matrix."""
        return hermitian_eigenvalues(self._matrix)

    def __repr__(self) -> str:
        return f'DensityMatrix({self._register.labels})'


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product with a as the most significant factor."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def jacobi_eigh(m: np.ndarray, tolerance: float = JACOBI_TOLERANCE,
                max_sweeps: int = JACOBI_MAX_SWEEPS) -> Tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot M[p][q] and then applies a real
    Givens rotation in the (p, q) plane. Sweeps stop once the off-diagonal Frobenius
    norm drops to tolerance * dim or after max_sweeps sweeps.

    Args:
        m: A Hermitian matrix.
        tolerance: Off-diagonal norm per dimension at which sweeps stop.
        max_sweeps: Hard cap on the number of sweeps.

    Returns:
        A tuple of two items

        -   Ascending real eigenvalues.

        -   A unitary matrix whose columns are the matching eigenvectors.
    """
    a = np.array(m, dtype=complex)
    dim = a.shape[0]
    vectors = np.eye(dim, dtype=complex)

    for sweep in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tolerance * dim:
            break
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                pivot = a[p, q]
                size = abs(pivot)
                if size == 0:
                    continue
                phase = pivot / size
                theta = 0.5 * np.arctan2(2 * size, a[q, q].real - a[p, p].real)
                c, s = np.cos(theta), np.sin(theta)
                rotation = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                pair = [p, q]
                a[:, pair] = a[:, pair] @ rotation
                a[pair, :] = rotation.conj().T @ a[pair, :]
                a[p, q] = a[q, p] = 0
                vectors[:, pair] = vectors[:, pair] @ rotation
    else:
        _logger.debug('Jacobi stopped after %d sweeps without converging.', max_sweeps)

    values = np.real(np.diag(a))
    order = np.argsort(values, kind='stable')
    return values[order], vectors[:, order]


def hermitian_eigenvalues(
    m: np.ndarray, method: str = 'lapack', eigenvectors: bool = False
) -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]:
    """Ascending real eigenvalues of a Hermitian matrix.

    Args:
        m: A square complex matrix. It must be Hermitian within 1e-12.
        method: Either ``lapack`` for numpy's Hermitian driver or ``jacobi`` for the
            cyclic Jacobi solver. (Default: lapack).
        eigenvectors: Also return eigenvectors as matrix columns. (Default: False).

    Returns:
        The ascending eigenvalues, or a tuple of eigenvalues and eigenvectors when
        eigenvectors is True.
    """
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m):
        raise NonHermitianInputError(
            'Matrix is not Hermitian within {}.'.format(HERMITIAN_TOLERANCE))
    if method == 'jacobi':
        values, vectors = jacobi_eigh(m)
    elif method == 'lapack':
        if not eigenvectors:
            return np.linalg.eigvalsh(m)
        values, vectors = np.linalg.eigh(m)
    else:
        raise ValueError(f'Unknown eigensolver "{method}". Use lapack or jacobi.')
    return (values, vectors) if eigenvectors else values


def trace_norm(m: np.ndarray) -> float:
    """Trace norm tr sqrt(M^dagger M) of a Hermitian matrix: the sum of |eigenvalues|."""
    return float(np.sum(np.abs(hermitian_eigenvalues(m))))


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every slot not in keep.

    Args:
        rho: A DensityMatrix.
        keep: Indices of the slots to keep.

    Returns:
        A DensityMatrix over the kept slots in canonical order.
    """
    keep = set(keep)
    if not keep:
        raise EmptyKeepSetError('Partial trace needs at least one slot to keep.')
    size = rho.register.size
    if not keep.issubset(range(size)):
        raise RegisterError(f'Slots {sorted(keep)} are not all in {rho.register}')

    tensor = rho.matrix.reshape([2] * (2 * size))
    traced = sorted(set(range(size)) - keep, reverse=True)
    for count, slot in enumerate(traced):
        # row axes left before this trace
        rows = size - count
        tensor = np.trace(tensor, axis1=slot, axis2=slot + rows)
    dim = 2 ** len(keep)
    return DensityMatrix(rho.register.subset(keep), tensor.reshape(dim, dim))


def partial_transpose(rho: DensityMatrix, transposed: Iterable[int]) -> np.ndarray:
    """Transpose the given slots of a density matrix.

    Args:
        rho: A DensityMatrix.
        transposed: Indices of the slots to transpose.

    Returns:
        The partially transposed matrix in the same basis as rho.
    """
    transposed = set(transposed)
    if not transposed:
        raise EmptyTransposeSetError('Partial transpose needs at least one slot.')
    size = rho.register.size
    if not transposed.issubset(range(size)):
        raise RegisterError(f'Slots {sorted(transposed)} are not all in {rho.register}')

    axes = list(range(2 * size))
    for slot in transposed:
        axes[slot], axes[slot + size] = axes[slot + size], axes[slot]
    dim = rho.register.dimension
    tensor = rho.matrix.reshape([2] * (2 * size)).transpose(axes)
    return np.ascontiguousarray(tensor.reshape(dim, dim))
