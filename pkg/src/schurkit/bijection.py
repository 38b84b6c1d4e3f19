"""Base partitions and the decomposition correspondences.

Every Schur partition factors uniquely as a minimal-weight base partition of
its block shape plus companion sequences recording how far each block was
moved forward.  Decomposition stows blocks backward until blocked (1-mod-3
pairs, then 2-mod-3 pairs, then singletons class by class, smallest first);
recomposition replays the recorded distances forward in exactly the reverse
order.  Three modes share the machinery and differ only in the singleton
stride and class structure:

* main: stride 1, one singleton class, companions (mu, eta_m, eta_d);
* mod2: stride 2, odd/even singleton classes, mu split as (mu1, mu0);
* mod3: stride 3, classes 1, 2, 0 mod 3, mu split as (mu1, mu2, mu0).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .moves import (
    Direction,
    IllegalMove,
    InvariantViolation,
    LightBlock,
    Move,
    MoveStep,
    MoveTrace,
    apply_light_move,
    canonical_light,
    flatten_light,
    from_light,
    light_blocks,
)
from .partitions import BlockKind, Partition, pair_up
from .series import exponent_main, exponent_mod2, exponent_mod3


class Mode(enum.Enum):
    MAIN = "main"
    MOD2 = "mod2"
    MOD3 = "mod3"


# singleton class labels, in processing order for backward passes
CLASS_ORDER = {Mode.MAIN: (0,), Mode.MOD2: (1, 0), Mode.MOD3: (1, 2, 0)}
STRIDE = {Mode.MAIN: 1, Mode.MOD2: 2, Mode.MOD3: 3}


@dataclass(frozen=True)
class Shape:
    """Block counts of a paired partition: pairs per class, singletons per class.

    ``singleton_counts`` is aligned with ``CLASS_ORDER[mode]``: (n1,) for
    main, (n11, n10) for mod2, (n11, n12, n10) for mod3.
    """

    mode: Mode
    n21: int
    n22: int
    singleton_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.singleton_counts) != len(CLASS_ORDER[self.mode]):
            raise ValueError("singleton_counts arity does not match mode")
        if self.n21 < 0 or self.n22 < 0 or any(c < 0 for c in self.singleton_counts):
            raise ValueError("counts must be nonnegative")

    @classmethod
    def main(cls, n21: int, n22: int, n1: int) -> "Shape":
        return cls(Mode.MAIN, n21, n22, (n1,))

    @classmethod
    def mod2(cls, n21: int, n22: int, n11: int, n10: int) -> "Shape":
        return cls(Mode.MOD2, n21, n22, (n11, n10))

    @classmethod
    def mod3(cls, n21: int, n22: int, n11: int, n12: int, n10: int) -> "Shape":
        return cls(Mode.MOD3, n21, n22, (n11, n12, n10))

    @classmethod
    def of_blocks(cls, blocks: tuple[LightBlock, ...], mode: Mode) -> "Shape":
        n21 = sum(1 for low, p in blocks if p and low % 3 == 1)
        n22 = sum(1 for low, p in blocks if p and low % 3 == 2)
        stride = STRIDE[mode]
        counts = []
        for label in CLASS_ORDER[mode]:
            counts.append(
                sum(1 for low, p in blocks if not p and low % stride == label % stride)
            )
        return cls(mode, n21, n22, tuple(counts))

    @property
    def n1(self) -> int:
        return sum(self.singleton_counts)

    @property
    def stride(self) -> int:
        return STRIDE[self.mode]


def base_weight(shape: Shape) -> int:
    """Minimal weight of a Schur partition with this shape.

    Coincides with the q-exponent of the shape's term in the corresponding
    multiple series.
    """
    if shape.mode is Mode.MAIN:
        return exponent_main(shape.n21, shape.n22, *shape.singleton_counts)
    if shape.mode is Mode.MOD2:
        return exponent_mod2(shape.n21, shape.n22, *shape.singleton_counts)
    return exponent_mod3(shape.n21, shape.n22, *shape.singleton_counts)


# ---------------------------------------------------------------------------
# base partitions


def _base_main_parts(n21: int, n22: int, n1: int) -> tuple[int, ...]:
    parts: list[int] = []
    for s in range(1, n21 + 1):
        parts.extend((6 * s - 5, 6 * s - 2))
    lead = 6 * n21
    if n1 > 0:
        parts.append(lead + 1)
        for s in range(1, n22 + 1):
            parts.extend((lead + 6 * s - 1, lead + 6 * s + 2))
        for j in range(1, n1):
            parts.append(lead + 6 * n22 + 4 * j + 1)
    else:
        for s in range(1, n22 + 1):
            parts.extend((lead + 6 * s - 4, lead + 6 * s - 1))
    return tuple(parts)


def _base_mod2_parts(n21: int, n22: int, n11: int, n10: int) -> tuple[int, ...]:
    # main base (all singletons odd), then the n10 largest singletons +1;
    # parts stay sorted because every singleton has gap >= 4 above it
    parts = list(_base_main_parts(n21, n22, n11 + n10))
    if n10 > 0:
        singles = [low for low, is_pair in canonical_light(tuple(parts)) if not is_pair]
        bump = set(singles[len(singles) - n10 :])
        parts = [v + 1 if v in bump else v for v in parts]
    return tuple(parts)


def mod3_primitive(n11: int, n12: int, n10: int) -> Partition:
    """The tight same-residue streaks the mod-3 base is built from."""
    parts = [6 * j - 5 for j in range(1, n11 + 1)]
    parts += [6 * n11 + 6 * j - 4 for j in range(1, n12 + 1)]
    parts += [6 * (n11 + n12) + 6 * j - 3 for j in range(1, n10 + 1)]
    return Partition(tuple(parts))


def _nth_singleton_pos(blocks, label: int, stride: int, rank: int) -> int:
    seen = 0
    for pos, (low, is_pair) in enumerate(blocks):
        if not is_pair and (stride == 1 or low % stride == label % stride):
            seen += 1
            if seen == rank:
                return pos
    raise ValueError(f"no singleton of class {label} with rank {rank}")


def _base_mod3_singleton_blocks(n11: int, n12: int, n10: int) -> tuple[LightBlock, ...]:
    """Primitive streaks tightened by the prescribed triple backward moves.

    Each 0-mod-3 singleton moves back n12 times (smallest first); then every
    singleton not congruent to 1 moves back n11 times, in ascending order of
    current value.
    """
    blocks = tuple((v, False) for v in mod3_primitive(n11, n12, n10).parts)
    for rank in range(1, n10 + 1):
        for _ in range(n12):
            pos = _nth_singleton_pos(blocks, 0, 3, rank)
            blocks, _adj = apply_light_move(blocks, pos, False, 3)
    for k in range(1, n12 + n10 + 1):
        for _ in range(n11):
            non1 = [
                pos
                for pos, (low, is_pair) in enumerate(blocks)
                if not is_pair and low % 3 != 1
            ]
            blocks, _adj = apply_light_move(blocks, non1[k - 1], False, 3)
    return blocks


def _sink_pair(blocks: tuple[LightBlock, ...], residue: int) -> tuple[LightBlock, ...]:
    """Append a pair of the given residue class above everything and move it
    backward until blocked."""
    top = 0
    if blocks:
        last_low, last_pair = blocks[-1]
        top = last_low + 3 if last_pair else last_low
    low = top + 4
    while low % 3 != residue:
        low += 1
    blocks = blocks + ((low, True),)
    pos = len(blocks) - 1
    while True:
        try:
            blocks, _adj = apply_light_move(blocks, pos, False, 1)
        except IllegalMove:
            return blocks
        pairs_of_class = [
            p for p, (lo, ip) in enumerate(blocks) if ip and lo % 3 == residue
        ]
        pos = pairs_of_class[-1]


@lru_cache(maxsize=None)
def base_partition(shape: Shape) -> Partition:
    """The unique minimal-weight Schur partition with the given shape."""
    if shape.mode is Mode.MAIN:
        return Partition(_base_main_parts(shape.n21, shape.n22, *shape.singleton_counts))
    if shape.mode is Mode.MOD2:
        return Partition(_base_mod2_parts(shape.n21, shape.n22, *shape.singleton_counts))
    blocks = _base_mod3_singleton_blocks(*shape.singleton_counts)
    for _ in range(shape.n21):
        blocks = _sink_pair(blocks, 1)
    for _ in range(shape.n22):
        blocks = _sink_pair(blocks, 2)
    return Partition(flatten_light(blocks))


# ---------------------------------------------------------------------------
# decomposition


@dataclass(frozen=True)
class Decomposition:
    """A shape, its base partition, and the recorded move distances.

    ``mu`` holds one companion per singleton class in CLASS_ORDER order;
    entries are the distances travelled (move count times stride), so mu
    parts are multiples of the stride and eta parts are multiples of 6.
    """

    shape: Shape
    beta: Partition
    mu: tuple[Partition, ...]
    eta_m: Partition
    eta_d: Partition

    def __post_init__(self) -> None:
        stride = self.shape.stride
        if len(self.mu) != len(self.shape.singleton_counts):
            raise ValueError("mu must have one companion per singleton class")
        for companion, count in zip(self.mu, self.shape.singleton_counts):
            if companion.length != count:
                raise ValueError("mu companion length does not match shape")
            if stride > 1 and any(v % stride for v in companion.parts):
                raise ValueError(f"mu parts must be multiples of {stride}")
        for eta, count, name in (
            (self.eta_m, self.shape.n21, "eta_m"),
            (self.eta_d, self.shape.n22, "eta_d"),
        ):
            if eta.length != count:
                raise ValueError(f"{name} length does not match shape")
            if any(v % 6 for v in eta.parts):
                raise ValueError(f"{name} parts must be multiples of 6")

    @property
    def total_weight(self) -> int:
        return (
            self.beta.weight
            + sum(c.weight for c in self.mu)
            + self.eta_m.weight
            + self.eta_d.weight
        )


def _companion(values: list[int]) -> Partition:
    return Partition(tuple(values), allow_zeros=True)


def _stow_blocked(
    blocks: tuple[LightBlock, ...],
    find_pos,
    stride: int,
    steps: list[MoveStep] | None,
    move_label,
) -> tuple[tuple[LightBlock, ...], int]:
    """Move one block backward until blocked, returning the move count."""
    count = 0
    while True:
        pos = find_pos(blocks)
        try:
            new_blocks, adjustments = apply_light_move(blocks, pos, False, stride)
        except IllegalMove:
            return blocks, count
        if steps is not None:
            steps.append(
                MoveStep(from_light(blocks), move_label, adjustments, from_light(new_blocks))
            )
        blocks = new_blocks
        count += 1


def _pair_positions(blocks, residue: int) -> list[int]:
    return [p for p, (low, ip) in enumerate(blocks) if ip and low % 3 == residue]


def decompose(
    lam: Partition, mode: Mode, record_trace: bool = True
) -> tuple[Decomposition, MoveTrace]:
    """Stow every block of ``lam`` backward until blocked, recording distances.

    The blocked configuration must equal the closed-form base partition of
    the shape; any mismatch raises InvariantViolation since it would mean a
    gap in the move rules.
    """
    pp = pair_up(lam)  # validates the gap conditions
    blocks = light_blocks(pp)
    shape = Shape.of_blocks(blocks, mode)
    stride = shape.stride
    steps: list[MoveStep] | None = [] if record_trace else None

    eta_values: dict[int, list[int]] = {1: [], 2: []}
    for residue, kind in ((1, BlockKind.PAIR1), (2, BlockKind.PAIR2)):
        n_pairs = shape.n21 if residue == 1 else shape.n22
        for rank in range(1, n_pairs + 1):
            label = Move(kind, Direction.BACKWARD, rank, 6)
            blocks, count = _stow_blocked(
                blocks,
                lambda b, residue=residue, rank=rank: _pair_positions(b, residue)[rank - 1],
                stride,
                steps,
                label,
            )
            eta_values[residue].append(6 * count)

    mu_values: list[list[int]] = []
    for label_cls, n_singles in zip(CLASS_ORDER[mode], shape.singleton_counts):
        entries: list[int] = []
        for rank in range(1, n_singles + 1):
            label = Move(BlockKind.SINGLETON, Direction.BACKWARD, rank, stride)
            blocks, count = _stow_blocked(
                blocks,
                lambda b, c=label_cls, r=rank: _nth_singleton_pos(b, c, stride, r),
                stride,
                steps,
                label,
            )
            entries.append(stride * count)
        mu_values.append(entries)

    beta = Partition(flatten_light(blocks))
    expected = base_partition(shape)
    if beta.parts != expected.parts:
        raise InvariantViolation(
            f"stowing ended at {beta}, expected base partition {expected}"
        )
    decomposition = Decomposition(
        shape=shape,
        beta=beta,
        mu=tuple(_companion(v) for v in mu_values),
        eta_m=_companion(eta_values[1]),
        eta_d=_companion(eta_values[2]),
    )
    trace = MoveTrace(tuple(steps)) if steps is not None else MoveTrace(())
    return decomposition, trace


def recompose(
    d: Decomposition, record_trace: bool = True
) -> tuple[Partition, MoveTrace]:
    """Replay the recorded distances forward, inverting :func:`decompose`.

    Order is the exact reverse of decomposition: singleton classes last to
    first (largest rank first within a class), then 2-mod-3 pairs, then
    1-mod-3 pairs, largest first.
    """
    expected = base_partition(d.shape)
    if d.beta.parts != expected.parts:
        raise ValueError(f"beta is not the base partition of {d.shape}")
    mode = d.shape.mode
    stride = d.shape.stride
    blocks = canonical_light(d.beta.parts)
    steps: list[MoveStep] | None = [] if record_trace else None

    def run(pos_getter, n_moves: int, label: Move) -> None:
        nonlocal blocks
        for _ in range(n_moves):
            pos = pos_getter(blocks)
            new_blocks, adjustments = apply_light_move(blocks, pos, True, stride)
            if steps is not None:
                steps.append(
                    MoveStep(
                        from_light(blocks), label, adjustments, from_light(new_blocks)
                    )
                )
            blocks = new_blocks

    for label_cls, companion in reversed(list(zip(CLASS_ORDER[mode], d.mu))):
        for rank in range(companion.length, 0, -1):
            run(
                lambda b, c=label_cls, r=rank: _nth_singleton_pos(b, c, stride, r),
                companion.parts[rank - 1] // stride,
                Move(BlockKind.SINGLETON, Direction.FORWARD, rank, stride),
            )
    for residue, kind, eta in ((2, BlockKind.PAIR2, d.eta_d), (1, BlockKind.PAIR1, d.eta_m)):
        for rank in range(eta.length, 0, -1):
            run(
                lambda b, residue=residue, r=rank: _pair_positions(b, residue)[r - 1],
                eta.parts[rank - 1] // 6,
                Move(kind, Direction.FORWARD, rank, 6),
            )

    lam = Partition(flatten_light(blocks))
    trace = MoveTrace(tuple(steps)) if steps is not None else MoveTrace(())
    return lam, trace


# ---------------------------------------------------------------------------
# enumeration of valid decompositions (independent of decompose)


def _bounded_companions(length: int, step: int, budget: int, min_part: int = 0):
    """Weakly increasing tuples of ``length`` multiples of ``step`` (zeros
    allowed) with sum at most ``budget``."""
    if length == 0:
        yield ()
        return
    p = min_part
    while p * length <= budget:
        for rest in _bounded_companions(length - 1, step, budget - p, p):
            yield (p,) + rest
        p += step if step > 1 else 1


def iter_shapes(mode: Mode, max_weight: int):
    """All shapes whose base partition weighs at most ``max_weight``."""
    n21 = 0
    while exponent_main(n21, 0, 0) <= max_weight:
        n22 = 0
        while exponent_main(n21, n22, 0) <= max_weight:
            n_classes = len(CLASS_ORDER[mode])

            def rec(counts: tuple[int, ...]):
                if len(counts) == n_classes:
                    shape = Shape(mode, n21, n22, counts)
                    if base_weight(shape) <= max_weight:
                        yield shape
                    return
                c = 0
                while True:
                    probe = counts + (c,) + (0,) * (n_classes - len(counts) - 1)
                    if base_weight(Shape(mode, n21, n22, probe)) > max_weight:
                        break
                    yield from rec(counts + (c,))
                    c += 1

            yield from rec(())
            n22 += 1
        n21 += 1


def iter_decompositions(mode: Mode, max_total_weight: int):
    """Every valid decomposition with total weight at most ``max_total_weight``.

    Enumerated directly from shapes and companion partitions, independently
    of :func:`decompose`, so round-trip tests exercise both directions.
    """
    stride = STRIDE[mode]
    for shape in iter_shapes(mode, max_total_weight):
        beta = base_partition(shape)
        budget0 = max_total_weight - beta.weight
        for eta_m in _bounded_companions(shape.n21, 6, budget0):
            budget1 = budget0 - sum(eta_m)
            for eta_d in _bounded_companions(shape.n22, 6, budget1):
                budget2 = budget1 - sum(eta_d)

                def rec_mu(idx: int, budget: int, acc: tuple):
                    if idx == len(shape.singleton_counts):
                        yield acc
                        return
                    for mu in _bounded_companions(
                        shape.singleton_counts[idx], stride, budget
                    ):
                        yield from rec_mu(idx + 1, budget - sum(mu), acc + (mu,))

                for mu_tuple in rec_mu(0, budget2, ()):
                    yield Decomposition(
                        shape=shape,
                        beta=beta,
                        mu=tuple(_companion(list(m)) for m in mu_tuple),
                        eta_m=_companion(list(eta_m)),
                        eta_d=_companion(list(eta_d)),
                    )


# ---------------------------------------------------------------------------
# JSON form


_MU_KEYS = {Mode.MAIN: ("mu",), Mode.MOD2: ("mu1", "mu0"), Mode.MOD3: ("mu1", "mu2", "mu0")}


def decomposition_to_dict(d: Decomposition, lam: Partition) -> dict:
    out: dict = {"mode": d.shape.mode.value, "lambda": list(lam.parts), "beta": list(d.beta.parts)}
    keys = _MU_KEYS[d.shape.mode]
    if d.shape.mode is Mode.MAIN:
        out["mu"] = list(d.mu[0].parts)
    else:
        for key, companion in zip(keys, d.mu):
            out[key] = list(companion.parts)
    out["eta_m"] = list(d.eta_m.parts)
    out["eta_d"] = list(d.eta_d.parts)
    weights = {"lambda": lam.weight, "beta": d.beta.weight}
    for key, companion in zip(keys, d.mu):
        weights[key] = companion.weight
    weights["eta_m"] = d.eta_m.weight
    weights["eta_d"] = d.eta_d.weight
    out["weights"] = weights
    return out


def decomposition_from_dict(data: dict) -> tuple[Decomposition, Partition]:
    mode = Mode(data["mode"])
    lam = Partition(tuple(data["lambda"]))
    beta = Partition(tuple(data["beta"]))
    mu = tuple(_companion(list(data[k])) for k in _MU_KEYS[mode])
    blocks = light_blocks(pair_up(beta))
    shape = Shape.of_blocks(blocks, mode)
    d = Decomposition(
        shape=shape,
        beta=beta,
        mu=mu,
        eta_m=_companion(list(data["eta_m"])),
        eta_d=_companion(list(data["eta_d"])),
    )
    return d, lam
