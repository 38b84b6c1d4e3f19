import pytest

from schurkit import (
    Partition,
    count_by_length,
    count_product_side,
    count_schur,
    count_tables,
    enumerate_schur,
)

SMALL_S = [1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4]


def test_enumerate_weight_zero():
    assert enumerate_schur(0) == [Partition(())]


def test_enumerate_weight_nine():
    got = [p.parts for p in enumerate_schur(9)]
    assert got == [(1, 8), (2, 7), (9,)]
    assert (3, 6) not in got


def test_enumerate_weight_twelve():
    got = [p.parts for p in enumerate_schur(12)]
    assert len(got) == 6
    assert (3, 9) in got and (1, 4, 7) in got
    assert got == sorted(got)  # lexicographic


def test_enumerate_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_schur(-1)


def test_count_schur_small_values():
    assert count_schur(10) == SMALL_S


def test_count_schur_matches_listing():
    counts = count_schur(60)
    for n in range(61):
        assert counts[n] == len(enumerate_schur(n))


def test_product_side_counts():
    counts = count_product_side(12)
    assert counts[0] == 1
    assert counts[9] == 3  # 1^9, 1^4+5, 1^2+7
    assert counts[12] == 6


def test_schur_theorem_small():
    assert count_schur(100) == count_product_side(100)


def test_count_by_length_agrees_with_tables():
    tables = count_tables(60)
    refined = count_by_length(60)
    assert refined == tables.sm
    agg: dict[int, int] = {}
    for (_, n), c in refined.items():
        agg[n] = agg.get(n, 0) + c
    assert [agg.get(n, 0) for n in range(61)] == count_schur(60)


def test_tables_examples(tables100):
    assert tables100.sm[(2, 9)] == 2  # [1,8] and [2,7]
    assert tables100.sp[(2, 2, 64)] >= 1  # 8+13+19+24 among them
    assert tables100.s[12] == 6


def test_marginals(tables100):
    tables100.check_marginals()


def test_marginal_check_catches_corruption():
    tables = count_tables(20)
    tables.sp[(1, 0, 1)] += 1
    with pytest.raises(AssertionError):
        tables.check_marginals()
