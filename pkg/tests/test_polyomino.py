import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetaroot import polyomino
from thetaroot.polyomino import FerrersDiagram, StackPolyomino
from thetaroot.series import QSeries, pochhammer_infinite

# stacks by area: unimodal compositions with a strict step into the first peak
STACKS_BY_AREA = [0, 1, 2, 4, 8, 15, 27, 47, 79, 130, 209]
PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
CONSTRAINED_BY_AREA = [0, 1, 1, 1, 2, 3, 5, 7, 10, 14, 19]


def test_stack_counts_by_area():
    assert polyomino.area_marginal(polyomino.enumerate_stacks(10), 10) == STACKS_BY_AREA


def test_area_three_stacks():
    shapes = sorted(s.heights for s in polyomino.iter_stacks(3) if s.area == 3)
    assert shapes == [(1, 1, 1), (1, 2), (2, 1), (3,)]


def test_ferrers_marginals():
    plain = polyomino.area_marginal(polyomino.enumerate_ferrers(10), 10)
    plain[0] += 1
    assert plain == PARTITIONS
    assert plain == list(pochhammer_infinite(QSeries.monomial(1, 10)).reciprocal().coeffs)
    constrained = polyomino.area_marginal(polyomino.enumerate_ferrers(10, durfee_condition=True), 10)
    assert constrained == CONSTRAINED_BY_AREA


@pytest.mark.parametrize("n", [0, 1, 4, 8])
def test_closed_forms_match_enumeration(n):
    assert polyomino.stack_gf_closed(n, n, n, n) == polyomino.enumerate_stacks(n)
    assert polyomino.stack_gf_functional(n, n, n, n) == polyomino.enumerate_stacks(n)
    assert polyomino.ferrers_gf_constrained(n, n, n) == polyomino.enumerate_ferrers(n, True)
    by_columns, by_durfee = polyomino.ferrers_gf_two_forms(n, n, n)
    assert by_columns == by_durfee == polyomino.enumerate_ferrers(n)


def test_closed_forms_respect_caps():
    full = polyomino.stack_gf_closed(9, 9, 9, 9)
    capped = polyomino.stack_gf_closed(3, 4, 1, 9)
    assert capped == polyomino.truncate_table(full, x_order=3, y_order=4, a_order=1)


def test_functional_iteration_count_is_height():
    # each pass adds one layer of height
    two = polyomino.stack_gf_functional(8, 8, 8, 8, iterations=2)
    assert two == polyomino.truncate_table(polyomino.enumerate_stacks(8), y_order=2)


def test_large_stack_class_matches_direct_count():
    # width 10, height 6, rise 4, area 37: four columns below the peak,
    # the peak column, then five columns no taller than it
    direct = 0
    for left in itertools.combinations_with_replacement(range(1, 6), 4):
        for right in itertools.combinations_with_replacement(range(1, 7), 5):
            direct += sum(left) + 6 + sum(right) == 37
    assert direct == 1125
    assert polyomino.stack_gf_closed(10, 6, 4, 37)[37, 10, 6, 4] == direct


def test_rise_is_unique_for_every_stack():
    for s in polyomino.iter_stacks(9):
        assert s.rise_candidates() == {s.rise}


def test_durfee_side():
    for f in polyomino.iter_ferrers(10):
        n, rows = f.durfee, f.rows
        assert rows[n - 1] >= n
        assert n == f.height or rows[n] <= n


def test_enumerators_produce_distinct_shapes():
    stacks = list(polyomino.iter_stacks(9))
    assert len(stacks) == len({s.heights for s in stacks})
    ferrers = list(polyomino.iter_ferrers(9))
    assert len(ferrers) == len({f.rows for f in ferrers})


@given(st.lists(st.integers(1, 6), min_size=1, max_size=7))
def test_stack_validation_matches_unimodality(heights):
    peak = heights.index(max(heights))
    unimodal = all(a <= b for a, b in zip(heights[:peak], heights[1 : peak + 1])) and all(
        a >= b for a, b in zip(heights[peak:], heights[peak + 1 :])
    )
    if unimodal:
        assert StackPolyomino(tuple(heights)).rise == peak
    else:
        with pytest.raises(ValueError):
            StackPolyomino(tuple(heights))


def test_ferrers_validation_and_condition():
    with pytest.raises(ValueError):
        FerrersDiagram((1, 2))
    assert FerrersDiagram((1, 1, 1)).durfee_condition
    assert not FerrersDiagram((2, 1)).durfee_condition
    assert FerrersDiagram((3, 2, 2)).durfee == 2


def test_csv_output():
    text = polyomino.table_to_csv(polyomino.enumerate_stacks(2), ("area", "width", "height", "rise"))
    assert text.splitlines() == [
        "area,width,height,rise,count",
        "1,1,1,0,1",
        "2,1,2,0,1",
        "2,2,1,0,1",
    ]


def test_negative_area_rejected():
    with pytest.raises(ValueError):
        polyomino.enumerate_stacks(-1)
