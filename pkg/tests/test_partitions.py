import pytest
from hypothesis import given, strategies as st

from schurkit import (
    Block,
    BlockKind,
    Partition,
    is_schur,
    pair_up,
    residue_stats,
    schur_violation,
)
from schurkit.oracle import _schur_parts

from conftest import max_pairs_exhaustive


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((0, 2))
    p = Partition((0, 0, 2), allow_zeros=True)
    assert p.weight == 2 and p.length == 3
    assert Partition(()).weight == 0


@pytest.mark.parametrize(
    "parts,expected",
    [
        ((), True),
        ((3, 6), False),
        ((3, 9), True),
        ((1, 4, 7), True),
        ((1, 3), False),
        ((5,), True),
        ((2, 5, 9, 13, 16, 19, 22, 26, 29), True),
        ((6, 12), True),
        ((6, 9), False),
    ],
)
def test_is_schur(parts, expected):
    assert is_schur(Partition(parts)) is expected


def test_is_schur_rejects_zeros():
    p = Partition((0, 5), allow_zeros=True)
    assert not is_schur(p)
    assert "not positive" in schur_violation(p)


def test_violation_messages():
    assert "differ by 2" in schur_violation(Partition((1, 3)))
    assert "multiples of 3" in schur_violation(Partition((3, 6)))


def test_pair_up_streak():
    pp = pair_up(Partition((1, 4, 7)))
    assert [str(b) for b in pp.blocks] == ["[1, 4]", "7"]
    assert (pp.n21, pp.n22, pp.n1) == (1, 0, 1)


def test_pair_up_final_configuration():
    pp = pair_up(Partition((2, 5, 9, 13, 16, 19, 22, 26, 29)))
    assert str(pp) == "[2, 5], 9, [13, 16], [19, 22], [26, 29]"
    assert (pp.n21, pp.n22, pp.n1) == (2, 2, 1)


def test_pair_up_empty():
    pp = pair_up(Partition(()))
    assert pp.blocks == () and (pp.n21, pp.n22, pp.n1) == (0, 0, 0)


def test_pair_up_rejects_non_schur():
    with pytest.raises(ValueError):
        pair_up(Partition((1, 3)))


def test_block_kind_consistency():
    with pytest.raises(ValueError):
        Block(BlockKind.PAIR1, 2)
    with pytest.raises(ValueError):
        Block(BlockKind.PAIR2, 1)
    assert Block(BlockKind.PAIR1, 7).values == (7, 10)


def test_residue_stats_examples():
    s = residue_stats(Partition((8, 13, 19, 24)))
    assert (s.modd, s.meven) == (2, 2)
    s2 = residue_stats(Partition((1, 5, 10, 14)))
    assert (s2.m1, s2.m2, s2.m0) == (2, 2, 0)
    s3 = residue_stats(Partition(()))
    assert (s3.m1, s3.m2, s3.m0, s3.modd, s3.meven) == (0, 0, 0, 0, 0)


def test_flatten_round_trip_and_singleton_gaps():
    # canonical pairing reproduces the parts; every singleton has gap >= 4
    # on at least one side
    for n in range(61):
        for parts in _schur_parts(n):
            pp = pair_up(Partition(parts))
            assert pp.flatten().parts == parts
            flat = parts
            for b in pp.blocks:
                if b.is_pair:
                    continue
                i = flat.index(b.low)
                before = flat[i] - flat[i - 1] if i > 0 else None
                after = flat[i + 1] - flat[i] if i + 1 < len(flat) else None
                assert (
                    before is None
                    or after is None
                    or before >= 4
                    or after >= 4
                )


def test_pairing_is_maximal_up_to_40():
    for n in range(41):
        for parts in _schur_parts(n):
            pp = pair_up(Partition(parts))
            assert pp.n21 + pp.n22 == max_pairs_exhaustive(parts)


@given(
    st.lists(st.integers(min_value=1, max_value=60), min_size=0, max_size=8).map(
        lambda xs: tuple(sorted(set(xs)))
    )
)
def test_is_schur_matches_quadratic_definition(parts):
    naive = all(
        b - a >= 3 and (a % 3 != 0 or b % 3 != 0 or b - a >= 6)
        for a, b in zip(parts, parts[1:])
    )
    # pairwise conditions reduce to adjacent ones for sorted distinct parts
    full = all(
        abs(x - y) >= 3 and (x % 3 != 0 or y % 3 != 0 or abs(x - y) >= 6)
        for i, x in enumerate(parts)
        for y in parts[i + 1 :]
    )
    assert naive == full
    assert is_schur(Partition(parts)) == full
