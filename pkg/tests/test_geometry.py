import xml.etree.ElementTree as ET
from collections import Counter
from math import prod

import pytest
from hypothesis import given

from conftest import skew_shapes_st
from skewtab import geometry as geo
from skewtab.diagrams import (broken_diagonals, diagram_from_tableau, re_from_flagged)
from skewtab.shapes import Partition, ShapeError, SkewShape
from skewtab.tableaux import (Tableau, enumerate_oot, enumerate_sf, enumerate_ssyt, oof_weight,
                              straight)

RUNNING = SkewShape.parse("5,4,3,2,1/3,2,1")
RUNNING_T = Tableau.from_dict(straight(RUNNING.inner),
                              {(1, 1): 1, (1, 2): 2, (1, 3): 3, (2, 1): 2, (2, 2): 5, (3, 1): 5})


def oof_term(shape, t):
    return prod(oof_weight(shape, u, v) for u, v in t.items())


@given(skew_shapes_st(max_size=6))
def test_tilings_match_generic_tiler(s):
    ours = {t.placements for t in geo.enumerate_tilings(s)}
    assert ours == set(geo.brute_force_tilings(s))
    assert len(ours) == len(enumerate_oot(s))


@given(skew_shapes_st(max_size=6))
def test_path_readers(s):
    sfs = set()
    for t in enumerate_oot(s):
        tiling = geo.tiling_from_oot(t, s)
        assert geo.oot_from_tiling(tiling) == t
        assert geo.oot_from_red(tiling) == t
        u = geo.sf_from_tiling(tiling)
        assert u == geo.sf_from_green(tiling)
        sfs.add(u)
        systems = geo.path_systems(tiling)
        assert len(systems["red"]) == len(systems["blue"]) == s.d
        assert len(systems["green"]) == s.lam(1)
    assert sfs == set(enumerate_sf(s))


@given(skew_shapes_st(max_size=6))
def test_shears_and_weights(s):
    for t in enumerate_oot(s):
        tiling = geo.tiling_from_oot(t, s)
        assert tiling.weight() == oof_term(s, t)
        assert geo.tiling_to_ooe(tiling) == diagram_from_tableau(t).cells
        re, diag = geo.tiling_to_re(tiling)
        red = re_from_flagged(s, geo.sf_from_tiling(tiling))
        assert re == red.cells
        assert diag == broken_diagonals(red, s).union


def test_lozenge_weights_are_cellwise():
    tiling = geo.tiling_from_oot(RUNNING_T, RUNNING)
    for (i, j), v in RUNNING_T.items():
        assert (v, j - i) in tiling.nwse()
        assert tiling.rhombus_weight(v, j - i) == oof_weight(RUNNING, (i, j), v)


def test_non_oot_is_rejected():
    s = RUNNING
    bad = [t for t in enumerate_ssyt(straight(s.inner), max_entry=s.d) if t not in enumerate_oot(s)]
    assert bad
    for t in bad:
        with pytest.raises(geo.TilingError):
            geo.tiling_from_oot(t, s)


def test_bad_placements_are_rejected():
    s = SkewShape.parse("2,1/1")
    good = geo.enumerate_tilings(s)[0]
    with pytest.raises(geo.TilingError):
        geo.LozengeTiling(s, frozenset(list(good.placements)[1:]))


def test_region_size():
    s = SkewShape.parse("2,2,2,1/1,1")
    # strip t holds 2(lambda_{d+1-t} + t) - 1 triangles; bumps remove d of them
    expected = sum(2 * (s.lam(s.d + 1 - t) + t) - 1 for t in range(1, s.d + 1)) - s.d
    assert len(geo.region(s)) == expected


@pytest.mark.parametrize("lam, rows, cols, word", [
    ((6, 4, 4, 1), 4, 6, "1011100110"),
    ((), 2, 2, "0011"),
    ((2, 2), 2, 2, "1100"),
    ((2, 1), 2, 2, "1010"),
])
def test_boundary_words(lam, rows, cols, word):
    assert geo.boundary_word(Partition(lam), rows, cols) == word


def test_boundary_word_must_fit():
    with pytest.raises(ShapeError):
        geo.boundary_word(Partition((3,)), 2, 2)


def test_running_example_puzzle_heights():
    tiling = geo.tiling_from_oot(RUNNING_T, RUNNING)
    puzzle = geo.puzzle_from_tiling(tiling)
    assert sorted(puzzle.heights()) == [1, 1, 1, 3, 5, 7]
    assert puzzle.weight() == 1 * 1 * 1 * 3 * 5 * 7 == oof_term(RUNNING, RUNNING_T)


@given(skew_shapes_st(max_size=6))
def test_puzzles_match_enumerator(s):
    if s.d + s.lam(1) > 9:
        return
    images = {}
    for t in enumerate_oot(s):
        tiling = geo.tiling_from_oot(t, s)
        puzzle = geo.puzzle_from_tiling(tiling)
        assert geo.tiling_from_puzzle(puzzle, s) == tiling
        assert Counter(puzzle.heights()) == Counter(oof_weight(s, u, v) for u, v in t.items())
        images[puzzle.pieces] = puzzle
    found = geo.enumerate_puzzles(s.outer, s.inner, s.outer, s.d, s.lam(1))
    assert {p.pieces for p in found} == set(images)


@pytest.mark.parametrize("mu, nu, lam, rows, cols, count", [
    ((1,), (1,), (2,), 2, 2, 1),
    ((1,), (1,), (1, 1), 2, 2, 1),
    ((1,), (1,), (2, 1), 2, 2, 0),
    ((2, 1), (2, 1), (3, 2, 1), 3, 3, 2),
    ((2, 1), (2, 1), (4, 2), 3, 4, 1),
    ((2, 1), (1,), (2, 2), 2, 2, 1),
])
def test_puzzles_give_littlewood_richardson_numbers(mu, nu, lam, rows, cols, count):
    found = geo.enumerate_puzzles(Partition(mu), Partition(nu), Partition(lam), rows, cols)
    assert len(found) == count
    assert all(not p.equivariant() for p in found)


def test_puzzle_budget():
    s = SkewShape.parse("8,8,8,8,8,8,8/1")
    with pytest.raises(geo.BudgetError):
        geo.enumerate_puzzles(s.outer, s.inner, s.outer)


def test_validator_catches_damage():
    s = SkewShape.parse("2,2,2,1/1,1")
    puzzle = geo.puzzle_from_tiling(geo.enumerate_tilings(s)[0])
    geo.validate_puzzle(puzzle)
    missing = geo.Puzzle(puzzle.size, frozenset(list(puzzle.pieces)[1:]))
    with pytest.raises(geo.PuzzleError):
        geo.validate_puzzle(missing)
    flipped = {(geo.TRI1, p[1]) if p[0] == geo.TRI0 else p for p in puzzle.pieces}
    with pytest.raises(geo.PuzzleError):
        geo.validate_puzzle(geo.Puzzle(puzzle.size, frozenset(flipped)))
    with pytest.raises(geo.PuzzleError):
        geo.tiling_from_puzzle(puzzle, SkewShape.parse("2,2,2,1/1"))


def _svg_points(root):
    ns = "{http://www.w3.org/2000/svg}"
    for el in root.iter():
        if el.tag in (ns + "polygon", ns + "polyline"):
            for pair in el.get("points").split():
                yield [int(v) for v in pair.split(",")]


@pytest.mark.parametrize("kind", ["tiling", "puzzle"])
def test_svg_is_well_formed_with_integer_coordinates(kind):
    tiling = geo.tiling_from_oot(RUNNING_T, RUNNING)
    text = geo.tiling_svg(tiling) if kind == "tiling" else geo.puzzle_svg(geo.puzzle_from_tiling(tiling))
    root = ET.fromstring(text)
    assert root.get("version") == "1.1"
    assert all(isinstance(v, int) for pt in _svg_points(root) for v in pt)
    if kind == "tiling":
        for color in ("red", "blue", "green"):
            assert geo.PALETTE[color] in text
