"""Forward and backward moves on paired Schur partitions.

A move changes one block's weight by a fixed amount (6 for a pair, the
stride for a singleton) and then restores validity through weight-preserving
local adjustments:

* a pair passing a pair of the other residue class shifts both by 6;
* a pair and a singleton pass each other with the singleton jumping 6 and
  the pair sliding 3 the other way (this also covers the re-pairing update
  when the raw move would duplicate a part);
* two singletons of different classes exchange, each displaced by the least
  multiple of the stride that restores a gap of at least 4;
* a block landing exactly 3 below a same-residue streak is handled by the
  canonical re-pairing, which relabels blocks without touching part values.

A move whose adjustments would require exchanging two blocks of the same
class, push a part below 1, or change the canonical block counts is
illegal; legality is decided by attempting the move and rolling back.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .partitions import Block, BlockKind, PairedPartition

# light block representation: (low, is_pair)
LightBlock = tuple[int, bool]


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class IllegalMove(Exception):
    """The requested move is not permitted from this configuration."""


class InvariantViolation(Exception):
    """The engine produced a state its rules should never reach."""


@dataclass(frozen=True)
class Move:
    """A single move request: which block, which way, by how much.

    ``stride`` is the weight change: always 6 for pairs, and 1, 2 or 3 for
    singletons depending on the operating mode.  ``index`` is 1-based within
    blocks of the target kind, smallest first.
    """

    target: BlockKind
    direction: Direction
    index: int
    stride: int

    def __str__(self) -> str:
        kind = {
            BlockKind.PAIR1: "1mod3-pair",
            BlockKind.PAIR2: "2mod3-pair",
            BlockKind.SINGLETON: "singleton",
        }[self.target]
        extra = "" if self.target is not BlockKind.SINGLETON else f" stride {self.stride}"
        return f"{self.direction.value} {kind}#{self.index}{extra}"


@dataclass(frozen=True)
class MoveStep:
    before: PairedPartition
    move: Move
    adjustments: tuple[str, ...]
    after: PairedPartition


@dataclass(frozen=True)
class MoveTrace:
    steps: tuple[MoveStep, ...]

    def __add__(self, other: "MoveTrace") -> "MoveTrace":
        return MoveTrace(self.steps + other.steps)

    def render(self) -> str:
        lines = []
        for s in self.steps:
            lines.append(
                f"{s.before} --{s.move}--> {s.after} [adjustments: {len(s.adjustments)}]"
            )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# light-block helpers


def light_blocks(pp: PairedPartition) -> tuple[LightBlock, ...]:
    return tuple((b.low, b.is_pair) for b in pp.blocks)


def from_light(blocks: tuple[LightBlock, ...]) -> PairedPartition:
    out = []
    for low, is_pair in blocks:
        if not is_pair:
            out.append(Block(BlockKind.SINGLETON, low))
        else:
            out.append(Block(BlockKind.PAIR1 if low % 3 == 1 else BlockKind.PAIR2, low))
    return PairedPartition(tuple(out))


def flatten_light(blocks) -> tuple[int, ...]:
    parts: list[int] = []
    for low, is_pair in blocks:
        parts.append(low)
        if is_pair:
            parts.append(low + 3)
    return tuple(parts)


def canonical_light(parts) -> tuple[LightBlock, ...]:
    """Leftmost-greedy pairing on a flat part tuple (assumed valid)."""
    blocks: list[LightBlock] = []
    i = 0
    n = len(parts)
    while i < n:
        if i + 1 < n and parts[i + 1] - parts[i] == 3:
            blocks.append((parts[i], True))
            i += 2
        else:
            blocks.append((parts[i], False))
            i += 1
    return tuple(blocks)


def _gap_ok(a_low: int, a_pair: bool, b_low: int, b_pair: bool) -> bool:
    """Adjacent blocks a < b form a valid resting configuration.

    Gap 3 between two singletons would either pair them up or put two
    multiples of 3 within 6, so only mixed or pair boundaries allow gap 3.
    """
    gap = b_low - (a_low + 3 if a_pair else a_low)
    if gap >= 4:
        return True
    return gap == 3 and (a_pair or b_pair)


def _singleton_class(value: int, stride: int) -> int:
    return value % stride if stride > 1 else 0


def _profile(blocks, stride: int):
    """Block-count signature a legal move must preserve.

    Pairs are counted per residue class; singletons per value class modulo
    ``stride`` (modulo 6 for pair moves, which shift singletons by 6 only).
    """
    pair_counts = Counter()
    singleton_counts = Counter()
    for low, is_pair in blocks:
        if is_pair:
            pair_counts[low % 3] += 1
        else:
            singleton_counts[low % stride if stride > 1 else 0] += 1
    return pair_counts, singleton_counts


def apply_light_move(
    blocks: tuple[LightBlock, ...], pos: int, forward: bool, stride: int
) -> tuple[tuple[LightBlock, ...], tuple[str, ...]]:
    """Move the block at ``pos`` and run the adjustment rewrites.

    ``stride`` is the singleton stride of the operating mode (1, 2 or 3);
    pairs always move by 3 per part regardless.  Returns the canonical block
    tuple of the result and the names of the adjustments applied.  Raises
    IllegalMove if the move is forbidden.
    """
    work = list(blocks)
    m_low, m_pair = work[pos]
    delta = 3 if m_pair else stride
    if not forward:
        delta = -delta
    work[pos] = (m_low + delta, m_pair)
    adjustments: list[str] = []
    i = pos
    while True:
        cur_low, cur_pair = work[i]
        if cur_low < 1:
            raise IllegalMove("a part would drop below 1")
        j = i + 1 if forward else i - 1
        if j < 0 or j >= len(work):
            break
        nb_low, nb_pair = work[j]
        if forward:
            ok = _gap_ok(cur_low, cur_pair, nb_low, nb_pair)
        else:
            ok = _gap_ok(nb_low, nb_pair, cur_low, cur_pair)
        if ok:
            break
        sign = 1 if forward else -1
        if cur_pair and nb_pair:
            if cur_low % 3 == nb_low % 3:
                raise IllegalMove("blocked by a pair of the same residue class")
            work[i] = (cur_low + sign * 6, True)
            work[j] = (nb_low - sign * 6, True)
            adjustments.append("pair-through-pair")
        elif cur_pair:
            work[i] = (cur_low + sign * 3, True)
            work[j] = (nb_low - sign * 6, False)
            adjustments.append("pair-through-singleton")
        elif nb_pair:
            work[i] = (cur_low + sign * 6, False)
            work[j] = (nb_low - sign * 3, True)
            adjustments.append("singleton-through-pair")
        else:
            if _singleton_class(cur_low, stride) == _singleton_class(nb_low, stride):
                raise IllegalMove("blocked by a singleton of the same class")
            gap = (nb_low - cur_low) if forward else (cur_low - nb_low)
            d = stride
            while 2 * d - gap < 4:
                d += stride
            work[i] = (cur_low + sign * d, False)
            work[j] = (nb_low - sign * d, False)
            adjustments.append("singleton-exchange")
        if work[j][0] < 1:
            raise IllegalMove("a part would drop below 1")
        work[i], work[j] = work[j], work[i]
        i = j

    # full adjacency validation over block boundaries; note whether any
    # singleton sits exactly 3 below a pair, the one pattern the canonical
    # leftmost-greedy pairing would relabel
    needs_regroup = False
    prev_low, prev_pair = work[0]
    for b_low, b_pair in work[1:]:
        if not _gap_ok(prev_low, prev_pair, b_low, b_pair):
            raise InvariantViolation(f"rewrites quiesced in an invalid state: {work}")
        if b_pair and not prev_pair and b_low - prev_low == 3:
            needs_regroup = True
        prev_low, prev_pair = b_low, b_pair
    if not needs_regroup:
        return tuple(work), tuple(adjustments)
    # re-pairing relabels blocks; the exchanges themselves preserve every
    # block's kind and class, so only this path can change counts
    canonical = canonical_light(flatten_light(work))
    adjustments.append("regroup")
    move_stride = 6 if m_pair else stride
    if _profile(blocks, move_stride) != _profile(canonical, move_stride):
        raise IllegalMove("move would change the block or class counts")
    return canonical, tuple(adjustments)


# ---------------------------------------------------------------------------
# public API on PairedPartition


def _checked_blocks(pp: PairedPartition) -> tuple[LightBlock, ...]:
    blocks = light_blocks(pp)
    if canonical_light(flatten_light(blocks)) != blocks:
        raise ValueError("PairedPartition is not canonically paired")
    return blocks


def _kind_positions(blocks, kind: BlockKind) -> list[int]:
    def matches(low: int, is_pair: bool) -> bool:
        if kind is BlockKind.SINGLETON:
            return not is_pair
        if not is_pair:
            return False
        return low % 3 == (1 if kind is BlockKind.PAIR1 else 2)

    return [p for p, (low, is_pair) in enumerate(blocks) if matches(low, is_pair)]


def move_pair(
    pp: PairedPartition, kind: BlockKind, index: int, direction: Direction
) -> tuple[PairedPartition, MoveTrace]:
    """Move the index-th smallest pair of the given kind; weight changes by 6."""
    if kind is BlockKind.SINGLETON:
        raise ValueError("use move_singleton for singletons")
    blocks = _checked_blocks(pp)
    positions = _kind_positions(blocks, kind)
    if not 1 <= index <= len(positions):
        raise ValueError(f"no {kind.value} block with index {index}")
    forward = direction is Direction.FORWARD
    new_blocks, adjustments = apply_light_move(blocks, positions[index - 1], forward, 1)
    after = from_light(new_blocks)
    move = Move(kind, direction, index, 6)
    return after, MoveTrace((MoveStep(pp, move, adjustments, after),))


def move_singleton(
    pp: PairedPartition, index: int, direction: Direction, stride: int = 1
) -> tuple[PairedPartition, MoveTrace]:
    """Move the index-th smallest singleton by the given stride (1, 2 or 3)."""
    if stride not in (1, 2, 3):
        raise ValueError("stride must be 1, 2 or 3")
    blocks = _checked_blocks(pp)
    positions = _kind_positions(blocks, BlockKind.SINGLETON)
    if not 1 <= index <= len(positions):
        raise ValueError(f"no singleton with index {index}")
    forward = direction is Direction.FORWARD
    new_blocks, adjustments = apply_light_move(
        blocks, positions[index - 1], forward, stride
    )
    after = from_light(new_blocks)
    move = Move(BlockKind.SINGLETON, direction, index, stride)
    return after, MoveTrace((MoveStep(pp, move, adjustments, after),))
