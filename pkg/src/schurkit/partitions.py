"""Schur partitions and their canonical block structure.

A Schur partition has parts pairwise at least 3 apart, with multiples of 3
pairwise at least 6 apart (equivalently: no two consecutive multiples of 3).
Two adjacent parts exactly 3 apart are then both 1 (mod 3) or both 2 (mod 3)
and can be bound into a pair; scanning left to right and always binding the
leftmost available pair gives a canonical, maximal pairing whose blocks
(1-mod-3 pairs, 2-mod-3 pairs, and leftover singletons) drive everything
else in this package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class BlockKind(enum.Enum):
    PAIR1 = "pair1"  # [3k+1, 3k+4]
    PAIR2 = "pair2"  # [3k+2, 3k+5]
    SINGLETON = "singleton"


@dataclass(frozen=True)
class Partition:
    """A weakly increasing sequence of parts.

    Zeros are permitted only when ``allow_zeros`` is set; they count toward
    the length but not the weight.  Companion sequences recorded by the
    decomposition use zeros, actual Schur partitions never do.
    """

    parts: tuple[int, ...]
    allow_zeros: bool = False

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if p < 0:
                raise ValueError(f"negative part {p}")
            if p == 0 and not self.allow_zeros:
                raise ValueError("zero parts not allowed here")
            if prev is not None and p < prev:
                raise ValueError(f"parts not weakly increasing: {prev} > {p}")
            prev = p

    @classmethod
    def of(cls, parts: Iterable[int], allow_zeros: bool = False) -> "Partition":
        return cls(tuple(parts), allow_zeros)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.parts) if self.parts else "(empty)"


EMPTY_PARTITION = Partition(())


@dataclass(frozen=True)
class Block:
    """One unit of the canonical pairing: a pair or a singleton.

    A pair occupies the two values ``low`` and ``low + 3``; its kind is
    determined by ``low % 3`` (1 or 2, never 0).
    """

    kind: BlockKind
    low: int

    def __post_init__(self) -> None:
        if self.kind is BlockKind.PAIR1 and self.low % 3 != 1:
            raise ValueError(f"1-mod-3 pair must start at 1 mod 3, got {self.low}")
        if self.kind is BlockKind.PAIR2 and self.low % 3 != 2:
            raise ValueError(f"2-mod-3 pair must start at 2 mod 3, got {self.low}")
        if self.low < 1:
            raise ValueError(f"block below 1: {self.low}")

    @property
    def is_pair(self) -> bool:
        return self.kind is not BlockKind.SINGLETON

    @property
    def top(self) -> int:
        return self.low + 3 if self.is_pair else self.low

    @property
    def values(self) -> tuple[int, ...]:
        return (self.low, self.low + 3) if self.is_pair else (self.low,)

    def __str__(self) -> str:
        if self.is_pair:
            return f"[{self.low}, {self.low + 3}]"
        return str(self.low)


@dataclass(frozen=True)
class PairedPartition:
    """A Schur partition presented as its canonical block sequence."""

    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        prev_top = None
        for b in self.blocks:
            if prev_top is not None and b.low <= prev_top:
                raise ValueError("blocks overlap or are out of order")
            prev_top = b.top

    @property
    def n21(self) -> int:
        return sum(1 for b in self.blocks if b.kind is BlockKind.PAIR1)

    @property
    def n22(self) -> int:
        return sum(1 for b in self.blocks if b.kind is BlockKind.PAIR2)

    @property
    def n1(self) -> int:
        return sum(1 for b in self.blocks if b.kind is BlockKind.SINGLETON)

    @property
    def weight(self) -> int:
        return sum(sum(b.values) for b in self.blocks)

    def flatten(self) -> Partition:
        parts: list[int] = []
        for b in self.blocks:
            parts.extend(b.values)
        return Partition(tuple(parts))

    def singletons(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if not b.is_pair)

    def pairs(self, kind: BlockKind) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.kind is kind)

    def __str__(self) -> str:
        return ", ".join(str(b) for b in self.blocks) if self.blocks else "(empty)"


@dataclass(frozen=True)
class ResidueStats:
    """Part counts by residue mod 3 and by parity."""

    m1: int
    m2: int
    m0: int
    modd: int
    meven: int

    @property
    def length(self) -> int:
        return self.m1 + self.m2 + self.m0


def schur_violation(p: Partition) -> str | None:
    """Return a description of the first violated gap rule, or None.

    Checks the two conditions defining a Schur partition: parts pairwise at
    least 3 apart, and multiples of 3 at least 6 apart.  Zeros are rejected.
    """
    for i, part in enumerate(p.parts):
        if part < 1:
            return f"part {part} is not positive"
        if i == 0:
            continue
        prev = p.parts[i - 1]
        gap = part - prev
        if gap < 3:
            return f"parts {prev} and {part} differ by {gap} < 3"
        if gap < 6 and prev % 3 == 0 and part % 3 == 0:
            return f"multiples of 3 {prev} and {part} differ by {gap} < 6"
    return None


def is_schur(p: Partition) -> bool:
    """True iff ``p`` satisfies Schur's gap conditions (no zeros allowed)."""
    return schur_violation(p) is None


def pair_up(p: Partition) -> PairedPartition:
    """Canonical leftmost-greedy pairing of a Schur partition.

    Scanning left to right, an unbound part is bound to its successor
    whenever they are exactly 3 apart (then necessarily of the same nonzero
    residue mod 3).  The result maximizes the number of pairs; unbound parts
    become singletons, each at distance >= 4 from a neighbor on at least one
    side.
    """
    violation = schur_violation(p)
    if violation is not None:
        raise ValueError(f"not a Schur partition: {violation}")
    blocks: list[Block] = []
    parts = p.parts
    i = 0
    while i < len(parts):
        if i + 1 < len(parts) and parts[i + 1] - parts[i] == 3:
            kind = BlockKind.PAIR1 if parts[i] % 3 == 1 else BlockKind.PAIR2
            blocks.append(Block(kind, parts[i]))
            i += 2
        else:
            blocks.append(Block(BlockKind.SINGLETON, parts[i]))
            i += 1
    return PairedPartition(tuple(blocks))


def residue_stats(p: Partition) -> ResidueStats:
    """Count parts by residue mod 3 and by parity."""
    m1 = m2 = m0 = modd = 0
    for part in p.parts:
        if part < 1:
            raise ValueError("residue statistics require positive parts")
        r = part % 3
        if r == 1:
            m1 += 1
        elif r == 2:
            m2 += 1
        else:
            m0 += 1
        if part % 2 == 1:
            modd += 1
    return ResidueStats(m1=m1, m2=m2, m0=m0, modd=modd, meven=len(p.parts) - modd)
