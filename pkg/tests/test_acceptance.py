"""Acceptance criteria, one test each. Every test records a PASS/FAIL line,
shown in the pytest terminal summary (or printed when run as a script)."""

import time
from contextlib import contextmanager
from math import factorial

from conftest import ACCEPTANCE_LINES
from skewtab import cli, counting, geometry
from skewtab.counting import count_oot_by, count_syt_by
from skewtab.numbers import euler, genocchi
from skewtab.qseries import RATIO_METHODS, rpp_ratio
from skewtab.shapes import SkewShape, skew_shapes, staircase, thick_zigzag, zigzag
from skewtab.tableaux import Tableau, count_syt, enumerate_oot, oof_weight, straight


@contextmanager
def criterion(label: str, budget_s: float):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_s, f"took {elapsed:.1f}s, budget {budget_s}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_LINES.append(f"{status}  {label}  ({elapsed:.2f}s)")


def _assert_no_failures(results):
    bad = [(name, fails) for name, fails in results if fails]
    assert not bad, f"counterexample {bad[0][0]}: {bad[0][1][0]}"


def test_criterion_1a_running_example_counts():
    with criterion("1a f(2221/11) = 9 and OOT = 6", 1):
        s = SkewShape.parse("2,2,2,1/1,1")
        assert count_syt_by(s, "oof").value == 9
        assert count_syt(s) == 9
        assert count_oot_by(s, "detRows").value == len(enumerate_oot(s)) == 6


def test_criterion_1b_q_ratio_all_methods():
    with criterion("1b rpp ratio of 2221/11 by all six methods", 5):
        s = SkewShape.parse("2,2,2,1/1,1")
        for m in RATIO_METHODS:
            assert str(rpp_ratio(s, m)) == "1 - q^5 - q^6 - q^7 + q^8 + q^10", m


def test_criterion_1c_zigzags_and_euler_display():
    with criterion("1c OOT(sigma_n) = G_2n for n <= 6 and the E_5 identity", 10):
        assert [genocchi(n) for n in range(1, 5)] == [1, 1, 3, 17]
        for n in range(1, 7):
            assert len(enumerate_oot(zigzag(n))) == genocchi(n)
        terms = sorted(counting.euler_identity_terms(3), reverse=True)
        assert terms == [3, 2, 1]
        value, formula = counting.euler_identity(3)
        assert value == euler(5) == formula == 16
        assert factorial(5) * sum(terms) == 16 * 5 * 3 ** 2 * 1 ** 3


def test_criterion_1d_puzzle_heights():
    with criterion("1d puzzle height product 1*1*1*3*5*7 equals the OOF term", 5):
        s = SkewShape.parse("5,4,3,2,1/3,2,1")
        t = Tableau.from_dict(straight(s.inner),
                              {(1, 1): 1, (1, 2): 2, (1, 3): 3, (2, 1): 2, (2, 2): 5, (3, 1): 5})
        puzzle = geometry.puzzle_from_tiling(geometry.tiling_from_oot(t, s))
        assert sorted(puzzle.heights()) == [1, 1, 1, 3, 5, 7]
        term = 1
        for u, v in t.items():
            term *= oof_weight(s, u, v)
        assert puzzle.weight() == term == 105


def test_criterion_2_exhaustive_cross_agreement():
    with criterion("2  all SYT/OOT methods, tilings and puzzles agree for |lambda| <= 7", 600):
        shapes = list(skew_shapes(7))
        assert len(shapes) == 449
        _assert_no_failures((str(s), cli.check_cross(s)) for s in shapes)


def test_criterion_3_bijections_and_weight_transport():
    with criterion("3  bijection round trips and cellwise weight transport for |lambda| <= 6", 120):
        _assert_no_failures((str(s), cli.check_bijections(s)) for s in skew_shapes(6))


def test_criterion_4_q_suite():
    with criterion("4  q-ratio methods agree, match series to degree 25, q -> 1 gives f", 600):
        _assert_no_failures((str(s), cli.check_qratio(s, 25)) for s in skew_shapes(6))


def test_criterion_5_zigzag_determinants():
    with criterion("5  thick zigzags, Hankel, proportionality, shifted Genocchi", 120):
        results = cli.proportionality_suite(20) + cli.genocchi_suite(6)
        _assert_no_failures(results)
        for n, k in cli.thick_zigzag_params_upto(20):
            shape = thick_zigzag(n, k)
            oot = counting.thick_zigzag_oot(n, k)
            assert oot == count_oot_by(shape, "detRows").value == count_oot_by(shape, "detCols").value
            if oot <= 20000:
                assert oot == len(enumerate_oot(shape))


def test_criterion_6_inequalities():
    with criterion("6  staircase inequality chain and sandwich G <= f <= OOT*G", 120):
        for k in range(1, 5):
            a = count_syt(SkewShape(staircase(2 * k), staircase(k)), limit=40)
            b = count_syt(SkewShape(staircase(2 * k + 1), staircase(k + 1)), limit=40)
            c = count_syt(SkewShape(staircase(2 * k + 2), staircase(k + 1)), limit=40)
            assert a <= b <= c
        for s in skew_shapes(7):
            low, high = counting.sandwich_bounds(s)
            assert low <= count_syt(s) <= high, str(s)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(ACCEPTANCE_LINES))
