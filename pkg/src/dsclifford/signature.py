"""Metric signatures and blade bookkeeping.

A blade is stored as a bitmask; bit ``k`` stands for the ``k``-th basis
vector of the signature, in the order given by ``labels``.  Canonical order
of a blade is increasing bit index, so for the bulk algebra (labels
1, 2, 3, 4, 0) the blade with every bit set is E1 E2 E3 E4 E0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Signature:
    name: str
    labels: tuple[int, ...]
    squares: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.squares):
            raise ValueError("labels and squares must have equal length")
        if not 1 <= len(self.labels) <= 16:
            raise ValueError("between 1 and 16 generators are supported")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        if any(s not in (1, -1) for s in self.squares):
            raise ValueError("squares must be +1 or -1")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def top(self) -> int:
        """Mask of the pseudoscalar."""
        return (1 << self.dim) - 1

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"label {label} not in signature {self.name}") from None

    def square(self, label: int) -> int:
        return self.squares[self.index(label)]

    def mask(self, *labels: int) -> int:
        m = 0
        for lab in labels:
            bit = 1 << self.index(lab)
            if m & bit:
                raise ValueError(f"repeated label {lab}")
            m |= bit
        return m

    def blade_labels(self, mask: int) -> tuple[int, ...]:
        return tuple(self.labels[k] for k in range(self.dim) if mask >> k & 1)

    def masks(self):
        return range(1 << self.dim)


def grade_of(mask: int) -> int:
    return mask.bit_count()


def _reorder_parity(a: int, b: int) -> int:
    # number of pairs (i in a, j in b) with i > j
    n = 0
    a >>= 1
    while a:
        n += (a & b).bit_count()
        a >>= 1
    return n & 1


@lru_cache(maxsize=None)
def blade_product(sig: Signature, a: int, b: int) -> tuple[int, int]:
    """Return ``(sign, mask)`` with e_a e_b = sign * e_mask."""
    sign = -1 if _reorder_parity(a, b) else 1
    common = a & b
    k = 0
    while common:
        if common & 1 and sig.squares[k] < 0:
            sign = -sign
        common >>= 1
        k += 1
    return sign, a ^ b


BULK = Signature("R41", (1, 2, 3, 4, 0), (1, 1, 1, 1, -1))
MINKOWSKI = Signature("R13", (0, 1, 2, 3), (1, -1, -1, -1))
PAULI = Signature("R30", (1, 2, 3), (1, 1, 1))

REGISTRY = {s.name: s for s in (BULK, MINKOWSKI, PAULI)}
