"""Shared test oracles, independent of the implementation paths they check."""

from __future__ import annotations

import pytest

from schurkit import Mode, Shape, base_partition
from schurkit.bijection import CLASS_ORDER, STRIDE
from schurkit.moves import IllegalMove, apply_light_move, canonical_light
from schurkit.oracle import count_tables


def max_pairs_exhaustive(parts: tuple[int, ...]) -> int:
    """Maximum number of disjoint gap-3 couples, by trying every pairing.

    In a Schur partition a part's only possible partner is its immediate
    neighbor, so this explores the full binary pair/skip tree.
    """

    def best(i: int) -> int:
        if i >= len(parts) - 1:
            return 0
        skip = best(i + 1)
        if parts[i + 1] - parts[i] == 3:
            return max(skip, 1 + best(i + 2))
        return skip

    return best(0)


def _block_class(low: int, is_pair: bool, stride: int):
    if is_pair:
        return ("pair", low % 3)
    return ("singleton", low % stride if stride > 1 else 0)


def nth_of_class(blocks, key, rank: int, stride: int) -> int:
    """Position of the rank-th smallest block of the given class."""
    seen = 0
    for pos, (low, is_pair) in enumerate(blocks):
        if _block_class(low, is_pair, stride) == key:
            seen += 1
            if seen == rank:
                return pos
    raise AssertionError(f"no block {key} rank {rank} in {blocks}")


def legal_moves(blocks, stride: int):
    """All legal moves from a configuration, addressed by (class, rank).

    A block never passes another of its own class, so (class, rank) names
    the same block before and after a move; that makes the inverse move
    well defined.
    """
    found = []
    seen: dict[tuple, int] = {}
    for pos, (low, is_pair) in enumerate(blocks):
        key = _block_class(low, is_pair, stride)
        seen[key] = seen.get(key, 0) + 1
        rank = seen[key]
        for forward in (True, False):
            try:
                after, _ = apply_light_move(blocks, pos, forward, stride)
            except IllegalMove:
                continue
            found.append((key, rank, forward, after))
    return found


def small_shapes(mode: Mode, max_pairs: int = 2, max_singles: int = 2):
    """Shapes with n21 + n22 <= max_pairs and singleton total <= max_singles."""
    n_classes = len(CLASS_ORDER[mode])
    shapes = []
    for n21 in range(max_pairs + 1):
        for n22 in range(max_pairs + 1 - n21):

            def rec(counts):
                if len(counts) == n_classes:
                    shapes.append(Shape(mode, n21, n22, counts))
                    return
                for c in range(max_singles + 1 - sum(counts)):
                    rec(counts + (c,))

            rec(())
    return shapes


def explore_invertibility(mode: Mode, depth: int, check_backward: bool = True) -> int:
    """BFS from every small base partition, checking each legal move inverts.

    With ``check_backward`` false only forward moves are required to invert
    (see the known stride-2 backward asymmetry pinned in test_moves).
    Returns the number of (state, move) edges checked.
    """
    stride = STRIDE[mode]
    edges = 0
    for shape in small_shapes(mode):
        start = canonical_light(base_partition(shape).parts)
        frontier = {start}
        visited = {start}
        for _ in range(depth):
            nxt = set()
            for blocks in frontier:
                for key, rank, forward, after in legal_moves(blocks, stride):
                    if forward or check_backward:
                        pos = nth_of_class(after, key, rank, stride)
                        back, _ = apply_light_move(after, pos, not forward, stride)
                        assert back == blocks, (shape, blocks, key, rank, forward)
                        edges += 1
                    if after not in visited:
                        visited.add(after)
                        nxt.add(after)
            frontier = nxt
    return edges


@pytest.fixture(scope="session")
def tables100():
    return count_tables(100)
