from math import factorial, prod

import pytest
from hypothesis import given

from conftest import skew_shapes_st
from skewtab.diagrams import (Diagram, broken_diagonals, broken_diagonals_by_moves, closure,
                              diagram_from_tableau, excited_closure, excited_diagrams,
                              excited_flags, excited_peaks, excited_peaks_by_moves,
                              flagged_from_re, initial_diagram, initial_reverse, move_path,
                              oo_ambient, oo_excited_closure, oo_excited_diagrams,
                              re_from_flagged, reverse_excited_closure, reverse_excited_diagrams,
                              right_neighbors, shifted_weight, tableau_from_diagram)
from skewtab.shapes import (Partition, ShapeError, SkewShape, hook, hook_product, shifted_outer,
                            shifted_shape)
from skewtab.tableaux import count_syt, enumerate_oot, enumerate_sf

RUNNING = SkewShape.parse("2,2,2,1/1,1")


def cell_sets(diags):
    return sorted(sorted(d.cells) for d in diags)


@given(skew_shapes_st())
def test_excited_diagrams_match_closure(s):
    assert cell_sets(excited_diagrams(s)) == cell_sets(excited_closure(s))


@given(skew_shapes_st())
def test_oo_excited_diagrams_match_closure(s):
    assert cell_sets(oo_excited_diagrams(s)) == cell_sets(oo_excited_closure(s))
    region = oo_ambient(s)
    assert all(d.cells <= region for d in oo_excited_diagrams(s))


@given(skew_shapes_st())
def test_reverse_excited_diagrams_match_closure(s):
    assert cell_sets(reverse_excited_diagrams(s)) == cell_sets(reverse_excited_closure(s))
    outer = shifted_outer(s)
    assert all(d.cells <= outer for d in reverse_excited_diagrams(s))


@given(skew_shapes_st())
def test_naruse_hook_formula(s):
    total = sum(prod(hook(s.outer, c) for c in d.cells) for d in excited_diagrams(s))
    assert factorial(s.size) * total == count_syt(s) * hook_product(s.outer)


@given(skew_shapes_st())
def test_tableau_diagram_round_trip(s):
    for t in enumerate_oot(s):
        assert tableau_from_diagram(s, diagram_from_tableau(t)) == t


@given(skew_shapes_st())
def test_flagged_re_round_trip(s):
    for u in enumerate_sf(s):
        assert flagged_from_re(s, re_from_flagged(s, u)) == u


def test_initial_reverse_is_shifted_shape():
    assert initial_reverse(RUNNING).cells == frozenset(shifted_shape(RUNNING))


@given(skew_shapes_st(max_size=6))
def test_excited_peaks_replay(s):
    for d in oo_excited_diagrams(s):
        assert excited_peaks(d, s) == excited_peaks_by_moves(s, d)


@given(skew_shapes_st(max_size=6))
def test_broken_diagonals_replay(s):
    for d in reverse_excited_diagrams(s):
        fast = broken_diagonals(d, s)
        assert fast == broken_diagonals_by_moves(s, d)
        assert not fast.union & d.cells
        assert len(fast.union) == s.inner.size


@given(skew_shapes_st(max_size=6))
def test_right_neighbors_live_in_shifted_outer(s):
    outer = shifted_outer(s)
    for d in reverse_excited_diagrams(s):
        nbrs = right_neighbors(d, s)
        assert nbrs <= outer
        assert all((i, j - 1) in d.cells for i, j in nbrs)


@pytest.mark.parametrize("text, multiset", [
    ("2,2/2", [2, 2, 2]),
    ("3,2/3", [2, 4, 6]),
    ("3,3/3,1", [24, 24, 24]),
    ("2/0", [1]),
    ("2,2/1,1", [6]),
])
def test_reverse_excited_term_multisets(text, multiset):
    s = SkewShape.parse(text)
    terms = sorted(prod(shifted_weight(s, c) for c in broken_diagonals(d, s).union)
                   for d in reverse_excited_diagrams(s))
    assert terms == multiset
    assert count_syt(s) == 1


def test_flags_of_running_example():
    # (1,1) can reach (2,2) and (2,1) can reach (3,2), no further
    assert excited_flags(RUNNING) == [2, 3]
    assert len(excited_diagrams(RUNNING)) == 3


def test_move_path_reaches_target():
    mu = Partition((1,))
    amb = set(Partition((2, 2)).cells())
    start = initial_diagram(mu)
    target = Diagram.from_map({(1, 1): (2, 2)})
    path = move_path(start, target, amb, 1)
    assert [moved for _, moved in path] == [(1, 1)]
    with pytest.raises(ShapeError):
        move_path(start, Diagram.from_map({(1, 1): (3, 3)}), amb, 1)


def test_closure_contains_start():
    start = initial_diagram(Partition((2, 1)))
    amb = set(Partition((3, 3, 2)).cells())
    diags = closure(start, amb, 1)
    assert start in diags
    assert len({d.cells for d in diags}) == len(diags)
