"""Subsets of group elements as fixed-width bitmasks.

An ElementSet is bound to the order of the group it lives in; every set bit
is an element index below that order.  All set algebra is exact integer
bitmask arithmetic.
"""

from collections.abc import Iterable, Iterator


class ElementSet:
    """Immutable set of element indices, stored as a bitmask."""

    __slots__ = ("bits", "size")

    def __init__(self, bits: int, size: int):
        if size <= 0:
            raise ValueError(f"set universe must be positive, got {size}")
        if bits < 0 or bits >> size:
            raise ValueError(f"bitmask {bits:#x} has bits outside 0..{size - 1}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "size", size)

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "ElementSet":
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f"element index {i} out of range 0..{size - 1}")
            bits |= 1 << i
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int) -> "ElementSet":
        return cls(0, size)

    @classmethod
    def singleton(cls, index: int, size: int) -> "ElementSet":
        return cls.from_indices([index], size)

    @classmethod
    def full(cls, size: int) -> "ElementSet":
        return cls((1 << size) - 1, size)

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and (self.bits >> index) & 1 == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.bits == other.bits and self.size == other.size

    def __hash__(self) -> int:
        return hash((self.bits, self.size))

    def _check_compatible(self, other: "ElementSet") -> None:
        if self.size != other.size:
            raise ValueError(
                f"sets belong to different universes ({self.size} vs {other.size})"
            )

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check_compatible(other)
        return ElementSet(self.bits | other.bits, self.size)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check_compatible(other)
        return ElementSet(self.bits & other.bits, self.size)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check_compatible(other)
        return ElementSet(self.bits & ~other.bits, self.size)

    def issubset(self, other: "ElementSet") -> bool:
        self._check_compatible(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "ElementSet") -> bool:
        self._check_compatible(other)
        return self.bits & other.bits == 0

    def add(self, index: int) -> "ElementSet":
        """Return a copy with one more element."""
        if not 0 <= index < self.size:
            raise ValueError(f"element index {index} out of range 0..{self.size - 1}")
        return ElementSet(self.bits | (1 << index), self.size)

    def nonidentity_complement(self) -> "ElementSet":
        """Complement within the non-identity elements (index 0 excluded)."""
        universe = ((1 << self.size) - 1) & ~1
        return ElementSet(universe & ~self.bits, self.size)

    def __repr__(self) -> str:
        return f"ElementSet({list(self)}, size={self.size})"
