"""Command-line front end: count, verify, qratio, svg."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from pathlib import Path

from . import counting, diagrams, geometry, numbers, qseries
from .shapes import ShapeError, SkewShape, content, skew_shapes, thick_zigzag, zigzag
from .tableaux import BudgetError, cell_budget, count_syt, enumerate_oot, enumerate_sf, straight

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


class Mismatch(RuntimeError):
    pass


def _shape(text: str) -> SkewShape:
    try:
        return SkewShape.parse(text)
    except ShapeError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# count

def cmd_count(args) -> int:
    shape = args.shape
    if args.oot:
        methods = counting.applicable_oot_methods(shape) if args.all_methods else [args.method or "detRows"]
        run = counting.count_oot_by
    else:
        methods = counting.applicable_syt_methods(shape) if args.all_methods else [args.method or "aitken"]
        run = counting.count_syt_by
    reports = []
    for m in methods:
        start = time.perf_counter()
        rep = run(shape, m)
        reports.append((rep, round(1000 * (time.perf_counter() - start))))
    values = {rep.value for rep, _ in reports}
    if args.json:
        print(json.dumps([rep.to_json(ms) for rep, ms in reports] if args.all_methods
                         else reports[0][0].to_json(reports[0][1]), sort_keys=True))
    elif args.all_methods:
        for rep, _ in reports:
            print(f"{rep.method}: {rep.value}")
        if len(values) == 1:
            print(f"agreed: {values.pop()}")
    else:
        print(reports[0][0].value)
    if len(values) > 1:
        raise Mismatch(f"methods disagree on {shape}: " +
                       ", ".join(f"{r.method}={r.value}" for r, _ in reports))
    return EXIT_OK


# verify suites; each check returns a list of failure messages

def check_cross(shape: SkewShape) -> list[str]:
    fails = []
    f = count_syt(shape, limit=max(shape.size, 20))
    for m in counting.applicable_syt_methods(shape):
        v = counting.count_syt_by(shape, m).value
        if v != f:
            fails.append(f"f by {m} = {v}, expected {f}")
    oot = counting.count_oot_by(shape, "enumerate").value
    for m in counting.OOT_METHODS:
        v = counting.count_oot_by(shape, m).value
        if v != oot:
            fails.append(f"OOT by {m} = {v}, expected {oot}")
    tilings = len(geometry.brute_force_tilings(shape))
    if tilings != oot:
        fails.append(f"{tilings} lozenge tilings, expected {oot}")
    if shape.d + shape.lam(1) <= geometry.PUZZLE_BUDGET:
        puzzles = len(geometry.enumerate_puzzles(shape.outer, shape.inner, shape.outer))
        if puzzles != oot:
            fails.append(f"{puzzles} puzzles, expected {oot}")
    return fails


def check_bijections(shape: SkewShape) -> list[str]:
    fails = []
    d = shape.d
    sfs = set()
    for t in enumerate_oot(shape):
        tiling = geometry.tiling_from_oot(t, shape)
        if geometry.oot_from_tiling(tiling) != t or geometry.oot_from_red(tiling) != t:
            fails.append(f"tiling round trip fails at {t}")
        u = geometry.sf_from_tiling(tiling)
        sfs.add(u)
        if u != geometry.sf_from_green(tiling):
            fails.append(f"blue and green paths disagree at {t}")
        ooe = diagrams.diagram_from_tableau(t)
        if geometry.tiling_to_ooe(tiling) != ooe.cells:
            fails.append(f"excited shear fails at {t}")
        re, diag = geometry.tiling_to_re(tiling)
        red = diagrams.re_from_flagged(shape, u)
        if re != red.cells or diag != diagrams.broken_diagonals(red, shape).union:
            fails.append(f"reverse excited shear fails at {t}")
        puzzle = geometry.puzzle_from_tiling(tiling)
        if geometry.tiling_from_puzzle(puzzle, shape) != tiling:
            fails.append(f"puzzle round trip fails at {t}")
        pieces = {p[1]: p for p in puzzle.equivariant()}
        peaks_of = set(ooe.cells)
        for cell, v in t.items():
            w = counting.oof_weight(shape, cell, v)
            c = content(cell)
            k = shape.lam(d + 1 - v) + v
            m = c - 1 + v
            carried = [
                ("lozenge", tiling.rhombus_weight(v, c) if (v, c) in tiling.nwse() else None),
                ("excited", diagrams.peak_weight(shape, (v, c + v)) if (v, c + v) in peaks_of else None),
                ("broken diagonal", diagrams.shifted_weight(shape, (d + 1 - v, c + d))
                 if (d + 1 - v, c + d) in diag else None),
                ("puzzle", k - 1 - m if ("U", k - 1 - m, m) in pieces else None),
            ]
            for name, got in carried:
                if got != w:
                    fails.append(f"{name} weight {got} != {w} for cell {cell} of {t}")
    if sfs != set(enumerate_sf(shape)):
        fails.append("flagged tableaux from tilings differ from direct enumeration")
    return fails


def check_qratio(shape: SkewShape, degree: int = 25) -> list[str]:
    fails = []
    ref = qseries.rpp_ratio(shape, "minStat")
    for m in qseries.RATIO_METHODS[1:]:
        if qseries.rpp_ratio(shape, m) != ref:
            fails.append(f"q-ratio by {m} differs")
    lhs = qseries.QSeries.from_poly(ref, degree) * qseries.rpp_series(straight(shape.outer), degree)
    if lhs != qseries.rpp_series(shape, degree):
        fails.append(f"ratio times rpp_lambda differs from rpp_lambda/mu below degree {degree}")
    if qseries.syt_from_ratio(shape, ref) != count_syt(shape):
        fails.append("q -> 1 limit does not give f")
    return fails


def check_identities(shape: SkewShape) -> list[str]:
    fails = []
    f = count_syt(shape, limit=max(shape.size, 20))
    low, high = counting.sandwich_bounds(shape)
    if not low <= f <= high:
        fails.append(f"sandwich {low} <= {f} <= {high} fails")
    if shape.inner.parts and shape.mu(1) <= shape.lam(shape.d):
        if counting.slim_oot(shape) != len(enumerate_oot(shape)):
            fails.append("slim hook-content product fails")
    if len(set(shape.outer.parts)) <= 1 and shape.outer.parts:
        if counting.rectangle_syt(shape.lam(1), shape.d, shape.inner) != f:
            fails.append("rectangle product fails")
    return fails


SHAPE_SUITES = {
    "cross": check_cross,
    "bijection": check_bijections,
    "qratio": check_qratio,
    "identities": check_identities,
}
SUITE_LIMITS = {"cross": None, "bijection": 6, "qratio": 6, "identities": None}


def _run_shape(job):
    suite, text = job
    return SHAPE_SUITES[suite](SkewShape.parse(text))


def genocchi_suite(n_max: int) -> list[tuple[str, list[str]]]:
    """Zigzag counts, pistols, shifted Genocchi numbers, recurrences and Hankel determinants."""
    out = []
    for n in range(1, n_max + 1):
        fails = []
        g = numbers.genocchi(n)
        if len(enumerate_oot(zigzag(n))) != g:
            fails.append(f"OOT(sigma_{n}) != G_{2 * n}")
        if numbers.pistol_count(2 * n - 1) != g:
            fails.append(f"pistols of length {2 * n - 1} != G_{2 * n}")
        for k in range(n):
            sg = counting.shifted_genocchi(n, k)
            if len(enumerate_oot(zigzag(n, k))) != sg:
                fails.append(f"OOT(sigma_{n}^({k})) != shifted Genocchi")
            if counting.truncated_pistols(n, k, k) != sg:
                fails.append(f"truncated pistols N_{k},{k} != shifted Genocchi")
            if counting.truncated_pistols(n, k, n - 1) != comb(2 * n - k - 1, k):
                fails.append(f"N_{k},{n - 1} != binomial")
            for j in range(k, n - 1):
                lhs = counting.truncated_pistols(n, k, j) + counting.truncated_pistols(n, k, j + 1)
                if lhs != comb(2 * j - k + 2, k) * counting.shifted_genocchi(n, j + 1):
                    fails.append(f"pistol step relation fails at k={k}, j={j}")
            for values in (counting.shifted_genocchi, lambda m, i: counting.truncated_pistols(m, i, i)):
                lhs, rhs = counting.shifted_genocchi_recurrence(n, k, values)
                if lhs != rhs:
                    fails.append(f"shifted Genocchi recurrence fails at n={n}, k={k}")
        out.append((f"sigma_{n}", fails))
    for k in range(1, 5):
        fails = [f"Hankel {v} k={k}" for v in ("odd", "even")
                 if len(set(counting.genocchi_hankel(k, v))) != 1]
        out.append((f"hankel k={k}", fails))
    return out


def thick_zigzag_params_upto(cells_max: int) -> list[tuple[int, int]]:
    out = []
    for k in range(1, cells_max + 1):
        for n in range(0, cells_max + 1):
            if thick_zigzag(n, k).size > cells_max:
                break
            out.append((n, k))
    return out


def proportionality_suite(cells_max: int) -> list[tuple[str, list[str]]]:
    out = []
    for n, k in thick_zigzag_params_upto(cells_max):
        shape = thick_zigzag(n, k)
        fails = []
        res = counting.proportionality(n, k)
        if not res["holds"]:
            fails.append(f"f = {res['f']} != factor * {res['oot']}")
        if counting.thick_zigzag_oot(n, k) != res["oot"]:
            fails.append("Genocchi determinant differs from OOT")
        if counting.count_syt_by(shape, "eulerdet").value != res["f"]:
            fails.append("Euler determinant differs from f")
        out.append((str(shape), fails))
    return out


def cmd_verify(args) -> int:
    suites = ["cross", "bijection", "qratio", "identities"] if args.suite == "all" else [args.suite]
    summary = {}
    failures = []
    for suite in suites:
        start = time.perf_counter()
        if suite == "genocchi":
            results = genocchi_suite(args.n_max)
        elif suite == "proportionality":
            results = proportionality_suite(args.cells_max)
        else:
            limit = args.max_cells if SUITE_LIMITS[suite] is None else min(args.max_cells, SUITE_LIMITS[suite])
            shapes = [str(s) for s in skew_shapes(limit)]
            jobs = [(suite, s) for s in shapes]
            if args.jobs > 1:
                with ProcessPoolExecutor(args.jobs) as pool:
                    outcomes = list(pool.map(_run_shape, jobs, chunksize=8))
            else:
                outcomes = [_run_shape(j) for j in jobs]
            results = list(zip(shapes, outcomes))
        bad = [(name, fails) for name, fails in results if fails]
        failures.extend((suite, name, fails) for name, fails in bad)
        summary[suite] = {"cases": len(results), "failed": len(bad),
                          "elapsed_ms": round(1000 * (time.perf_counter() - start))}
    status = "FAIL" if failures else "PASS"
    if args.json:
        payload = {"status": status, "suites": summary,
                   "failures": [{"suite": s, "case": c, "messages": m} for s, c, m in failures]}
        print(json.dumps(payload, sort_keys=True))
    else:
        for suite, info in summary.items():
            print(f"{suite}: {info['cases'] - info['failed']}/{info['cases']} cases passed")
        for suite, name, fails in failures:
            print(f"counterexample [{suite}] {name}: {fails[0]}")
        print(status)
    return EXIT_VERIFY if failures else EXIT_OK


# qratio and svg

def cmd_qratio(args) -> int:
    p = qseries.rpp_ratio(args.shape, args.method)
    _emit(args, str(p), {"shape": str(args.shape), "method": args.method, "ratio": p.to_json()})
    return EXIT_OK


def cmd_svg(args) -> int:
    shape = args.shape
    if args.target == "tiling":
        objects = geometry.enumerate_tilings(shape)
        render = geometry.tiling_svg
    else:
        if shape.d + shape.lam(1) > geometry.PUZZLE_BUDGET:
            raise BudgetError("puzzle too large to draw")
        objects = [geometry.puzzle_from_tiling(t) for t in geometry.enumerate_tilings(shape)]
        for p in objects:
            geometry.validate_puzzle(p)
        render = geometry.puzzle_svg
    if args.all:
        chosen = list(enumerate(objects))
    else:
        if not 0 <= args.index < len(objects):
            raise ShapeError(f"index {args.index} out of range; there are {len(objects)} objects")
        chosen = [(args.index, objects[args.index])]
    out = Path(args.output)
    written = []
    for idx, obj in chosen:
        path = out if not args.all else out.with_name(f"{out.stem}-{idx}{out.suffix or '.svg'}")
        path.write_text(render(obj))
        written.append(str(path))
    _emit(args, "\n".join(written), {"shape": str(shape), "target": args.target, "files": written})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewtab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("count", help="count standard or Okounkov-Olshanski tableaux")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--method")
    p.add_argument("--all-methods", action="store_true")
    p.add_argument("--oot", action="store_true", help="count OOT instead of SYT")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="exhaustive cross-checks")
    p.add_argument("--max-cells", type=_positive, default=cell_budget(6))
    p.add_argument("--suite", default="all",
                   choices=["all", *SHAPE_SUITES, "genocchi", "proportionality"])
    p.add_argument("--n-max", type=_positive, default=6)
    p.add_argument("--cells-max", type=_positive, default=20)
    p.add_argument("--jobs", type=_positive, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qratio", help="rpp_{lambda/mu}(q) / rpp_lambda(q)")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--method", default="minStat", choices=qseries.RATIO_METHODS)
    common(p)
    p.set_defaults(func=cmd_qratio)

    p = sub.add_parser("svg", help="draw lozenge tilings or puzzles")
    p.add_argument("target", choices=["tiling", "puzzle"])
    p.add_argument("--shape", type=_shape, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--index", type=int)
    group.add_argument("--all", action="store_true")
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with 2 on bad usage
    try:
        return args.func(args)
    except BudgetError as err:
        print(f"budget exceeded: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except Mismatch as err:
        print(f"mismatch: {err}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ShapeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
