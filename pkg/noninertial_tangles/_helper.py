"""Helper functions for basis bookkeeping."""

from __future__ import annotations

from typing import List, Sequence


def basis_bits(index: int, size: int) -> List[int]:
    """Bits of a basis index. Slot 0 is the most significant bit."""
    return [(index >> (size - 1 - slot)) & 1 for slot in range(size)]


def ket_label(index: int, labels: Sequence[str]) -> str:
    """Ket notation of a basis index, e.g. ``|0_A 1_B 1_D_I 1_D_II>``."""
    bits = basis_bits(index, len(labels))
    return '|' + ' '.join(f'{bit}_{label}' for bit, label in zip(bits, labels)) + '>'
