"""Codecs, closed-form counts, hook lengths, skew weight polynomials."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tableaux.formulas import (SYMMETRIZATION_CAP, check_hook_length_claim,
                               format_partition, hook_lengths, hook_product,
                               parse_partition, partition_to_young_vertex,
                               skew_weight_fn, skew_weight_polynomial,
                               strict_count, strict_partition_to_vertex,
                               strict_skew_count, strict_vertex_to_partition,
                               syt_count, syt_count_hook,
                               young_path_count, young_vertex_to_partition)
from tableaux.graded_graphs import count_paths_dp, make_graph
from tableaux.multipoly import MultiPoly, canonical_text

partitions = st.lists(st.integers(min_value=1, max_value=6),
                      min_size=0, max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def test_young_codec_goldens():
    assert young_vertex_to_partition((1, 3)) == (2, 1)
    assert young_vertex_to_partition((2, 3)) == (2, 2)
    assert young_vertex_to_partition((1, 3, 5)) == (3, 2, 1)
    assert young_vertex_to_partition((0, 1, 2)) == ()
    assert partition_to_young_vertex((2, 1), 2) == (1, 3)
    assert partition_to_young_vertex((3, 1), 4) == (0, 1, 3, 6)
    assert young_vertex_to_partition((0, 1, 3, 6)) == (3, 1)


def test_strict_codec_goldens():
    assert strict_vertex_to_partition((0, 0, 1, 3)) == (3, 1)
    assert strict_partition_to_vertex((3, 1), 4) == (0, 0, 1, 3)
    assert strict_partition_to_vertex((2, 1), 2) == (1, 2)
    assert strict_vertex_to_partition((0, 0, 0)) == ()


def test_codecs_reject_small_k():
    with pytest.raises(ValueError):
        partition_to_young_vertex((3, 2, 1), 2)
    with pytest.raises(ValueError):
        strict_partition_to_vertex((3, 1), 1)
    with pytest.raises(ValueError):
        strict_partition_to_vertex((2, 2), 3)  # repeats not allowed


@given(partitions, st.integers(min_value=4, max_value=6))
def test_young_codec_round_trip(rows, k):
    assert young_vertex_to_partition(partition_to_young_vertex(rows, k)) == rows


@given(st.sets(st.integers(min_value=1, max_value=9), max_size=4),
       st.integers(min_value=4, max_value=6))
def test_strict_codec_round_trip(parts, k):
    rows = tuple(sorted(parts, reverse=True))
    assert strict_vertex_to_partition(strict_partition_to_vertex(rows, k)) == rows


def test_parse_and_format_partition():
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("-") == ()
    assert parse_partition("") == ()
    assert format_partition((3, 1)) == "3,1"
    assert format_partition(()) == "-"
    with pytest.raises(ValueError):
        parse_partition("1,2")  # must be weakly decreasing
    with pytest.raises(ValueError):
        parse_partition("2,x")


def test_vertex_validators():
    with pytest.raises(ValueError):
        young_vertex_to_partition((3, 3))
    with pytest.raises(ValueError):
        young_vertex_to_partition((-1, 2))
    with pytest.raises(ValueError):
        strict_vertex_to_partition((2, 2))
    with pytest.raises(ValueError):
        strict_vertex_to_partition((3, 1))


def test_spot_counts():
    assert syt_count(partition_to_young_vertex((2, 1), 2)) == 2
    assert syt_count(partition_to_young_vertex((2, 2), 2)) == 2
    assert syt_count(partition_to_young_vertex((3, 2, 1), 3)) == 16
    assert strict_count((2, 1)) == 1
    assert strict_count((3, 1)) == 2
    assert young_path_count((0, 2), (1, 3)) == 2
    assert strict_skew_count((1,), (2, 1), 2) == 1


def test_young_path_count_against_dp():
    g = make_graph("young", 3)
    base = g.base_vertex()
    for d in range(7):
        for v in g.vertices_of_degree(d):
            assert young_path_count(base, v) == syt_count(v)
            assert young_path_count(base, v) == count_paths_dp(g, base, v)


def test_young_path_count_outside_order_is_zero():
    assert young_path_count((1, 3), (0, 4)) == 0
    assert young_path_count((1, 3), (1, 3)) == 1


def test_hook_length_goldens():
    assert hook_lengths((2, 1)) == [[3, 1], [1]]
    assert hook_lengths((3, 2, 1)) == [[5, 3, 1], [3, 1], [1]]
    assert hook_lengths((4,)) == [[4, 3, 2, 1]]
    assert hook_product((2, 1)) == 3
    assert hook_product((3, 2, 1)) == 45
    assert hook_product(()) == 1


def test_hook_length_claim_reports():
    rep = check_hook_length_claim((4, 2, 1))
    assert rep.ok
    assert rep.identity == "hook_length_product"


@given(partitions)
def test_hook_length_claim_property(rows):
    assert check_hook_length_claim(rows).ok


def test_syt_hook_route_matches_alternant_route():
    for rows in [(), (1,), (3, 1), (2, 2, 1), (4, 3, 1), (5, 2)]:
        k = max(len(rows), 1)
        v = partition_to_young_vertex(rows, k)
        assert syt_count_hook(rows) == syt_count(v)


def test_strict_count_values():
    # shifted shapes: known small values
    assert strict_count(()) == 1
    assert strict_count((1,)) == 1
    assert strict_count((2,)) == 1
    assert strict_count((3, 2, 1)) == 2
    g = make_graph("strict", 4)
    base = g.base_vertex()
    for d in range(8):
        for v in g.vertices_of_degree(d):
            assert strict_count(strict_vertex_to_partition(v)) == \
                count_paths_dp(g, base, v)


def test_skew_weight_polynomial_base_cases():
    assert skew_weight_polynomial((), 2) == MultiPoly.one(2)
    psi = skew_weight_polynomial((1,), 2)
    assert canonical_text(psi) == "1 * x1^1 x2^0 + 1 * x1^0 x2^1"


def test_skew_weight_polynomial_is_symmetric():
    psi = skew_weight_polynomial((2, 1), 3)
    x = [MultiPoly.var(3, i) for i in range(3)]
    assert psi.substitute([x[1], x[0], x[2]]) == psi
    assert psi.substitute([x[0], x[2], x[1]]) == psi


def test_skew_weight_polynomial_caps_symmetrization():
    with pytest.raises(ValueError):
        skew_weight_polynomial((1,), SYMMETRIZATION_CAP + 1)


def test_skew_weight_fn_shape():
    fn = skew_weight_fn((1,), 3)
    assert set(fn.denominators) == {(0, 1), (0, 2), (1, 2)}
    assert all(m == 1 for m in fn.denominators.values())


def test_strict_skew_count_against_dp():
    g = make_graph("strict", 3)
    pairs = [((1,), (2, 1)), ((2,), (3, 1)), ((), (3, 2)), ((2, 1), (4, 2, 1))]
    for rows_from, rows_to in pairs:
        got = strict_skew_count(rows_from, rows_to, 3)
        want = count_paths_dp(g, strict_partition_to_vertex(rows_from, 3),
                              strict_partition_to_vertex(rows_to, 3))
        assert got == want


def test_strict_skew_count_edge_cases():
    assert strict_skew_count((2, 1), (2, 1), 2) == 1
    assert strict_skew_count((3,), (2, 1), 2) == 0  # not nested
    with pytest.raises(ValueError):
        strict_skew_count((2, 1), (3, 2, 1), 2)  # needs k >= 3


def test_strict_skew_from_empty_matches_plain_count():
    for rows in [(1,), (2, 1), (3, 1), (3, 2)]:
        assert strict_skew_count((), rows, 3) == strict_count(rows)
