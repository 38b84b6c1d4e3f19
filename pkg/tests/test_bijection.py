import pytest

from schurkit import (
    Decomposition,
    InvariantViolation,
    Mode,
    Partition,
    Shape,
    base_partition,
    base_weight,
    decompose,
    decomposition_from_dict,
    decomposition_to_dict,
    iter_decompositions,
    iter_shapes,
    mod3_primitive,
    pair_up,
    recompose,
    residue_stats,
)
from schurkit.oracle import _schur_parts
from schurkit.series import _mul_dense, _poch_inv_dense


def comp(parts):
    return Partition(tuple(parts), allow_zeros=True)


def test_base_main_golden():
    b = base_partition(Shape.main(2, 2, 1))
    assert b.parts == (1, 4, 7, 10, 13, 17, 20, 23, 26)
    assert b.weight == 121 == base_weight(Shape.main(2, 2, 1))


def test_base_mod2_golden():
    b = base_partition(Shape.mod2(0, 0, 2, 2))
    assert b.parts == (1, 5, 10, 14)
    assert b.weight == 30 == base_weight(Shape.mod2(0, 0, 2, 2))


def test_base_mod3_golden():
    assert mod3_primitive(2, 3, 4).parts == (1, 7, 14, 20, 26, 33, 39, 45, 51)
    assert mod3_primitive(2, 3, 4).weight == 236
    b = base_partition(Shape.mod3(0, 0, 2, 3, 4))
    assert b.parts == (1, 5, 9, 13, 17, 21, 26, 30, 36)
    assert b.weight == 158 == base_weight(Shape.mod3(0, 0, 2, 3, 4))


def test_base_weight_zero_shape():
    assert base_weight(Shape.main(0, 0, 0)) == 0
    assert base_partition(Shape.main(0, 0, 0)).parts == ()


def test_base_weight_matches_base_partition_up_to_120():
    for mode in Mode:
        for shape in iter_shapes(mode, 120):
            assert base_partition(shape).weight == base_weight(shape), shape


def test_base_partition_is_schur_with_right_shape():
    from schurkit.moves import light_blocks

    for mode in Mode:
        for shape in iter_shapes(mode, 90):
            b = base_partition(shape)
            pp = pair_up(b)  # raises if the gap conditions fail
            assert Shape.of_blocks(light_blocks(pp), mode) == shape


def test_decompose_main_golden():
    lam = Partition((2, 5, 9, 13, 16, 19, 22, 26, 29))
    d, _ = decompose(lam, Mode.MAIN)
    assert d.beta.weight == 121
    assert d.mu[0].parts == (2,)
    assert d.eta_m.parts == (6, 6)
    assert d.eta_d.parts == (0, 6)
    assert d.total_weight == lam.weight == 141


def test_decompose_mod2_golden():
    d, _ = decompose(Partition((8, 13, 19, 24)), Mode.MOD2)
    assert d.beta.parts == (1, 5, 10, 14)
    assert d.mu[0].parts == (8, 10)  # odd singletons
    assert d.mu[1].parts == (6, 10)  # even singletons
    assert d.eta_m.parts == () and d.eta_d.parts == ()
    assert (d.beta.weight, d.mu[0].weight, d.mu[1].weight) == (30, 18, 16)


def test_base_partition_is_fixed_point():
    for mode in Mode:
        for shape in iter_shapes(mode, 60):
            d, trace = decompose(base_partition(shape), mode)
            assert trace.steps == ()
            assert all(set(c.parts) <= {0} for c in d.mu)
            assert set(d.eta_m.parts) <= {0} and set(d.eta_d.parts) <= {0}


def test_recompose_golden_with_trace():
    d = Decomposition(
        shape=Shape.main(2, 2, 1),
        beta=base_partition(Shape.main(2, 2, 1)),
        mu=(comp([2]),),
        eta_m=comp([6, 6]),
        eta_d=comp([0, 6]),
    )
    lam, trace = recompose(d)
    assert lam.parts == (2, 5, 9, 13, 16, 19, 22, 26, 29)
    states = [str(s.after) for s in trace.steps]
    assert "[1, 4], [7, 10], [14, 17], [20, 23], 26" in states
    assert "[1, 4], [8, 11], 15, [19, 22], [26, 29]" in states
    # every step changes the weight by exactly the move's stride
    for step in trace.steps:
        assert step.after.weight - step.before.weight == step.move.stride


def test_recompose_all_zero_companions():
    shape = Shape.mod3(1, 1, 1, 1, 1)
    d = Decomposition(
        shape=shape,
        beta=base_partition(shape),
        mu=(comp([0]), comp([0]), comp([0])),
        eta_m=comp([0]),
        eta_d=comp([0]),
    )
    lam, trace = recompose(d)
    assert lam.parts == base_partition(shape).parts
    assert trace.steps == ()


def test_decomposition_validation():
    shape = Shape.main(1, 0, 1)
    beta = base_partition(shape)
    with pytest.raises(ValueError):
        Decomposition(shape, beta, (comp([1, 2]),), comp([6]), comp([]))
    with pytest.raises(ValueError):
        Decomposition(shape, beta, (comp([1]),), comp([5]), comp([]))
    with pytest.raises(ValueError):
        Decomposition(shape, beta, (comp([2, 1]),), comp([6]), comp([]))
    with pytest.raises(ValueError):
        Decomposition(
            Shape.mod2(0, 0, 1, 0), base_partition(Shape.mod2(0, 0, 1, 0)),
            (comp([3]), comp([])), comp([]), comp([]),
        )


def test_recompose_rejects_wrong_beta():
    shape = Shape.main(1, 0, 0)
    d = Decomposition(shape, Partition((7, 10)), (comp([]),), comp([0]), comp([]))
    with pytest.raises(ValueError):
        recompose(d)


def test_round_trip_both_ways_to_40():
    for mode in Mode:
        for n in range(41):
            for parts in _schur_parts(n):
                lam = Partition(parts)
                d, _ = decompose(lam, mode, record_trace=False)
                assert d.total_weight == lam.weight
                back, _ = recompose(d, record_trace=False)
                assert back.parts == lam.parts
        for d in iter_decompositions(mode, 30):
            lam, _ = recompose(d, record_trace=False)
            d2, _ = decompose(lam, mode, record_trace=False)
            assert d2 == d


def test_decomposition_count_matches_partition_count():
    # the correspondence is weight preserving, so decompositions by total
    # weight must count exactly like Schur partitions by weight
    from schurkit import count_schur

    expected = sum(count_schur(25))
    for mode in Mode:
        got = sum(1 for _ in iter_decompositions(mode, 25))
        assert got == expected


def test_part_count_laws_to_40():
    for n in range(41):
        for parts in _schur_parts(n):
            lam = Partition(parts)
            stats = residue_stats(lam)
            pp = pair_up(lam)
            from schurkit.moves import light_blocks

            main = Shape.of_blocks(light_blocks(pp), Mode.MAIN)
            assert lam.length == 2 * main.n21 + 2 * main.n22 + main.n1
            two = Shape.of_blocks(light_blocks(pp), Mode.MOD2)
            assert stats.modd == two.n21 + two.n22 + two.singleton_counts[0]
            assert stats.meven == two.n21 + two.n22 + two.singleton_counts[1]
            three = Shape.of_blocks(light_blocks(pp), Mode.MOD3)
            n11, n12, n10 = three.singleton_counts
            assert stats.m1 == 2 * three.n21 + n11
            assert stats.m2 == 2 * three.n22 + n12
            assert stats.m0 == n10


def test_single_shape_terms_match_counts_to_60():
    # per-shape generating function: q^base / ((q;q)_n1 (q^6;q^6)_n21 (q^6;q^6)_n22)
    from collections import Counter

    from schurkit.moves import light_blocks

    by_shape: Counter = Counter()
    for n in range(61):
        for parts in _schur_parts(n):
            shape = Shape.of_blocks(light_blocks(pair_up(Partition(parts))), Mode.MAIN)
            by_shape[(shape, n)] += 1
    for shape in iter_shapes(Mode.MAIN, 60):
        e = base_weight(shape)
        room = 60 - e
        tail = _mul_dense(
            _poch_inv_dense(1, 1, shape.n1, room),
            _mul_dense(
                _poch_inv_dense(6, 6, shape.n21, room),
                _poch_inv_dense(6, 6, shape.n22, room),
                room,
            ),
            room,
        )
        for off, coeff in enumerate(tail):
            assert by_shape.get((shape, e + off), 0) == coeff


def test_json_round_trip():
    lam = Partition((2, 5, 9, 13, 16, 19, 22, 26, 29))
    for mode in Mode:
        d, _ = decompose(lam, mode, record_trace=False)
        data = decomposition_to_dict(d, lam)
        d2, lam2 = decomposition_from_dict(data)
        assert d2 == d and lam2.parts == lam.parts
        assert data["weights"]["lambda"] == sum(
            v for k, v in data["weights"].items() if k != "lambda"
        )


def test_decompose_rejects_non_schur():
    with pytest.raises(ValueError):
        decompose(Partition((3, 6)), Mode.MAIN)


def test_internal_invariant_is_exported():
    assert issubclass(InvariantViolation, Exception)
