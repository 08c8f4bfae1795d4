from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import GuardError

PARTITION_GUARD = 200


@dataclass(frozen=True)
class Partition:
    """A partition stored as its weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> Partition:
        parts = []
        for i in sorted(mult, reverse=True):
            if mult[i] < 0:
                raise ValueError("multiplicities must be nonnegative")
            parts.extend([i] * mult[i])
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Sparse map ``i -> m_i`` (only parts that occur)."""
        out: dict[int, int] = {}
        for p in reversed(self.parts):
            out[p] = out.get(p, 0) + 1
        return out

    def m(self, i: int) -> int:
        return self.parts.count(i)

    def __str__(self):
        if not self.parts:
            return "()"
        return "(" + " ".join(f"{i}^{m}" for i, m in sorted(self.multiplicities.items())) + ")"


def multiplicities(nu: Partition) -> dict[int, int]:
    return nu.multiplicities


def iter_partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > PARTITION_GUARD:
        raise GuardError(f"n = {n} exceeds partition guard {PARTITION_GUARD}")
    if n == 0:
        yield Partition(())
        return
    a = [n]
    while True:
        yield Partition(tuple(a))
        # drop trailing ones, decrement the last part > 1, refill greedily
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        k = a.pop() - 1
        rem = ones + 1
        a.append(k)
        while rem > k:
            a.append(k)
            rem -= k
        if rem:
            a.append(rem)


def partitions(n: int) -> list[Partition]:
    return list(iter_partitions(n))
