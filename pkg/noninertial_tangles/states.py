"""Minkowski-frame entangled states of up to four parties."""

from __future__ import annotations

import math
from typing import Iterable, List, Tuple

import numpy as np

from ._helper import ket_label
from .errors import EmptyKeepSetError, PartyCountError, RegisterError, \
    UnnormalizedStateError
from .tensor import DensityMatrix, ModeRegister
from .utils import PARTIES, StateFamily

NORM_TOLERANCE = 1e-9


class StateVector:
    """Complex amplitude vector over a mode register.

    Args:
        register: The ModeRegister the amplitudes are written in.
        amplitudes: Complex amplitudes, one per basis ket. Slot 0 of the register is
            the most significant bit of the basis index.
    """

    def __init__(self, register: ModeRegister, amplitudes: np.ndarray) -> None:
        amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
        if amplitudes.size != register.dimension:
            raise RegisterError(
                f'{amplitudes.size} amplitudes do not fit a register of dimension'
                f' {register.dimension}')
        amplitudes.setflags(write=False)
        self._register = register
        self._amplitudes = amplitudes

    @property
    def register(self) -> ModeRegister:
        """Get the mode register."""
        return self._register

    @property
    def amplitudes(self) -> np.ndarray:
        """Get the read-only amplitudes."""
        return self._amplitudes

    @property
    def norm(self) -> float:
        """Get the Euclidean norm of the amplitudes."""
        return float(np.linalg.norm(self._amplitudes))

    def nonzero_terms(self, tolerance: float = 1e-15) -> List[Tuple[str, complex]]:
        """Ket labels and amplitudes of every basis ket with a nonzero amplitude."""
        labels = self._register.labels
        return [(ket_label(index, labels), complex(value))
                for index, value in enumerate(self._amplitudes)
                if abs(value) > tolerance]

    def inner(self, other: StateVector) -> complex:
        """Inner product <self|other> of two states over the same register."""
        if other.register != self._register:
            raise RegisterError('Inner product needs states over the same register.')
        return complex(np.vdot(self._amplitudes, other.amplitudes))

    def __repr__(self) -> str:
        return f'StateVector({self._register.labels})'


def _check_party_count(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise PartyCountError(f'At least 2 parties are required. Instead got {n}')
    if n > len(PARTIES):
        raise PartyCountError(
            f'At most {len(PARTIES)} parties (A to D) are supported. Instead got {n}')


def w_state(n: int) -> StateVector:
    """Symmetric state with a single excitation shared by n parties.

    Args:
        n: Number of parties, between 2 and 4.

    Returns:
        A StateVector with amplitude 1/sqrt(n) on each ket with exactly one slot
        excited.
    """
    _check_party_count(n)
    amplitudes = np.zeros(2 ** n, dtype=complex)
    for slot in range(n):
        amplitudes[1 << (n - 1 - slot)] = 1 / math.sqrt(n)
    return StateVector(ModeRegister.minkowski(PARTIES[:n]), amplitudes)


def ghz_state(n: int) -> StateVector:
    """Equal superposition (|0...0> + |1...1>)/sqrt(2) of n parties."""
    _check_party_count(n)
    amplitudes = np.zeros(2 ** n, dtype=complex)
    amplitudes[0] = amplitudes[-1] = 1 / math.sqrt(2)
    return StateVector(ModeRegister.minkowski(PARTIES[:n]), amplitudes)


def initial_state(family: StateFamily, n: int = 4) -> StateVector:
    """Initial state of a family. The analyses use n = 4."""
    if family is StateFamily.ghz:
        return ghz_state(n)
    return w_state(n)


def _check_normalized(psi: StateVector) -> None:
    if abs(psi.norm - 1) > NORM_TOLERANCE:
        raise UnnormalizedStateError(f'State norm is {psi.norm} instead of 1.')


def pure_density(psi: StateVector) -> DensityMatrix:
    """Projector |psi><psi| of a normalized state."""
    _check_normalized(psi)
    amplitudes = psi.amplitudes
    return DensityMatrix(psi.register, np.outer(amplitudes, amplitudes.conj()))


def reduced_density(psi: StateVector, keep: Iterable[int]) -> DensityMatrix:
    """Reduction of a pure state onto the kept slots.

    Equivalent to ``partial_trace(pure_density(psi), keep)`` but computed from the
    amplitude tensor directly, so the full projector over traced slots is never formed.

    Args:
        psi: A normalized StateVector.
        keep: Indices of the slots to keep.

    Returns:
        A DensityMatrix over the kept slots in canonical order.
    """
    _check_normalized(psi)
    keep = sorted(set(keep))
    if not keep:
        raise EmptyKeepSetError('Reduction needs at least one slot to keep.')
    size = psi.register.size
    if not set(keep).issubset(range(size)):
        raise RegisterError(f'Slots {keep} are not all in {psi.register}')
    traced = [slot for slot in range(size) if slot not in keep]

    tensor = psi.amplitudes.reshape([2] * size).transpose(keep + traced)
    schmidt = tensor.reshape(2 ** len(keep), 2 ** len(traced))
    return DensityMatrix(psi.register.subset(keep), schmidt @ schmidt.conj().T)