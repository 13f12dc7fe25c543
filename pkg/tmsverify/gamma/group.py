"""Γ = (Z/2)^(2g), its characters and the Weil pairing."""

from typing import Iterator

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from tmsverify.core.exceptions import ContractViolation


class _BitVector(BaseModel):
    bits: tuple[int, ...] = Field(..., description="2g binary digits")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("bits")
    @classmethod
    def _check_bits(cls, bits: tuple[int, ...]) -> tuple[int, ...]:
        if not bits or len(bits) % 2:
            raise ValueError(f"need a positive even number of bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        return bits

    @property
    def genus(self) -> int:
        return len(self.bits) // 2

    def is_zero(self) -> bool:
        return not any(self.bits)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.bits, dtype=np.uint8)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


class GroupElement(_BitVector):
    """A 2-torsion line bundle γ, written in a fixed symplectic basis e_1..e_2g."""

    @classmethod
    def identity(cls, g: int) -> "GroupElement":
        return cls(bits=(0,) * (2 * g))

    @classmethod
    def basis(cls, g: int, index: int) -> "GroupElement":
        """Basis vector e_(index+1); indices g..2g-1 are the symplectic partners of 0..g-1."""
        if not 0 <= index < 2 * g:
            raise ContractViolation(f"basis index must be in 0..{2 * g - 1} (got {index})")
        return cls(bits=tuple(1 if i == index else 0 for i in range(2 * g)))

    @classmethod
    def from_int(cls, g: int, n: int) -> "GroupElement":
        """Element whose bit i is bit i of n."""
        return cls(bits=tuple((n >> i) & 1 for i in range(2 * g)))

    @classmethod
    def from_array(cls, row: np.ndarray) -> "GroupElement":
        return cls(bits=tuple(int(b) for b in row))

    def is_identity(self) -> bool:
        return self.is_zero()

    def __add__(self, other: "GroupElement") -> "GroupElement":
        _require_same_length(self, other)
        return GroupElement(bits=tuple(a ^ b for a, b in zip(self.bits, other.bits)))


class GroupCharacter(_BitVector):
    """A character κ of Γ, evaluated on γ as the mod-2 dot product."""

    @classmethod
    def trivial(cls, g: int) -> "GroupCharacter":
        return cls(bits=(0,) * (2 * g))

    @classmethod
    def dual_basis(cls, g: int, index: int) -> "GroupCharacter":
        """Dual basis vector ε_(index+1)."""
        element = GroupElement.basis(g, index)
        return cls(bits=element.bits)

    def is_trivial(self) -> bool:
        return self.is_zero()

    def __call__(self, element: GroupElement) -> int:
        _require_same_length(self, element)
        return sum(a & b for a, b in zip(self.bits, element.bits)) % 2

    def __add__(self, other: "GroupCharacter") -> "GroupCharacter":
        _require_same_length(self, other)
        return GroupCharacter(bits=tuple(a ^ b for a, b in zip(self.bits, other.bits)))


def _require_same_length(a: _BitVector, b: _BitVector) -> None:
    if len(a.bits) != len(b.bits):
        raise ContractViolation(
            f"length mismatch: {len(a.bits)} bits vs {len(b.bits)} bits"
        )


def symplectic_form(g: int) -> np.ndarray:
    """The standard form J = [[0, I], [I, 0]] over GF(2)."""
    identity = np.eye(g, dtype=np.int64)
    zero = np.zeros((g, g), dtype=np.int64)
    return np.block([[zero, identity], [identity, zero]])


def weil_pairing(a: GroupElement, b: GroupElement) -> int:
    """
    Σ_i (a_i·b_(g+i) + a_(g+i)·b_i) mod 2.

    Raises:
        ContractViolation: If the elements have different lengths
    """
    _require_same_length(a, b)
    form = symplectic_form(a.genus)
    return int(a.as_array().astype(np.int64) @ form @ b.as_array().astype(np.int64)) % 2


def swap_halves(rows: np.ndarray, g: int) -> np.ndarray:
    """Apply J to bit rows; J is its own inverse, so this maps both ways."""
    order = np.r_[g : 2 * g, 0:g]
    return rows[..., order]


def element_to_character(element: GroupElement) -> GroupCharacter:
    """w(γ) = weil_pairing(γ, ·)."""
    return GroupCharacter(bits=tuple(int(b) for b in swap_halves(element.as_array(), element.genus)))


def character_to_element(character: GroupCharacter) -> GroupElement:
    """The unique γ with w(γ) = κ."""
    return GroupElement(
        bits=tuple(int(b) for b in swap_halves(character.as_array(), character.genus))
    )


def bit_rows(g: int, start: int, stop: int) -> np.ndarray:
    """Rows of bits for the integers start..stop-1 (bit i of n in column i)."""
    numbers = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(2 * g, dtype=np.int64)
    return ((numbers[:, None] >> shifts) & 1).astype(np.uint8)


def group_order(g: int) -> int:
    return 1 << (2 * g)


def all_elements(g: int) -> Iterator[GroupElement]:
    for n in range(group_order(g)):
        yield GroupElement.from_int(g, n)


def pairing_matrix(g: int) -> np.ndarray:
    """Table of weil_pairing over all pairs of elements, rows and columns in from_int order."""
    rows = bit_rows(g, 0, group_order(g)).astype(np.int64)
    return (rows @ symplectic_form(g) @ rows.T) % 2


def radical(g: int) -> list[GroupElement]:
    """Elements pairing trivially with everything; only the identity when the form is nondegenerate."""
    table = pairing_matrix(g)
    return [GroupElement.from_int(g, int(n)) for n in np.flatnonzero(~table.any(axis=1))]
