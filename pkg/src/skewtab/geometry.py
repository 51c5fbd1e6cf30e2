"""Lozenge tilings of the region attached to lambda/mu, their path systems,
the shears onto excited diagrams, and Knutson-Tao puzzles.

Lattice conventions. A point (a, y) sits at (a + y/2, y*sqrt(3)/2). The strip
between heights y and y+1 holds up triangles ("U", y, a) with corners
(a,y), (a+1,y), (a,y+1) and down triangles ("D", y, a) with corners
(a+1,y), (a,y+1), (a+1,y+1). Edges are ("H", a, y) from (a,y) to (a+1,y),
("S", a, y) from (a,y) to (a,y+1) and ("B", a, y) from (a+1,y) to (a,y+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

from .shapes import Partition, ShapeError, SkewShape
from .tableaux import BudgetError, Tableau, enumerate_oot, straight

Tri = tuple[str, int, int]
Edge = tuple[str, int, int]

# lozenge kinds
VERT = "vert"  # U(t, a) over D(t-1, a)
NESW = "nesw"  # U(t, a) beside D(t, a)
NWSE = "nwse"  # D(t, a-1) beside U(t, a)


def tri_edges(tri: Tri) -> dict[str, Edge]:
    kind, y, a = tri
    if kind == "U":
        return {"H": ("H", a, y), "S": ("S", a, y), "B": ("B", a, y)}
    return {"H": ("H", a, y + 1), "B": ("B", a, y), "S": ("S", a + 1, y)}


def lozenge_tris(kind: str, t: int, a: int) -> tuple[Tri, Tri]:
    if kind == VERT:
        return ("U", t, a), ("D", t - 1, a)
    if kind == NESW:
        return ("U", t, a), ("D", t, a)
    if kind == NWSE:
        return ("D", t, a - 1), ("U", t, a)
    raise ValueError(kind)


class TilingError(ShapeError):
    pass


def _outer_right(shape: SkewShape, t: int) -> int:
    """Right boundary of strip t (counted from the bottom): lambda_{d+1-t}."""
    return shape.lam(shape.d + 1 - t)


def bump_positions(shape: SkewShape) -> list[int]:
    return [shape.mu(r) - r for r in range(1, shape.d + 1)]


def region(shape: SkewShape, with_bumps: bool = False) -> set[Tri]:
    """Triangles of the region; without bumps the top-row down triangles
    under the bumps are left out."""
    d = shape.d
    tris = set()
    for t in range(1, d + 1):
        r = _outer_right(shape, t)
        tris.update(("D", t, a) for a in range(-t, r))
        tris.update(("U", t, a) for a in range(1 - t, r))
    bumps = bump_positions(shape)
    if with_bumps:
        tris.update(("U", d + 1, b) for b in bumps)
    else:
        tris.difference_update(("D", d, b) for b in bumps)
    return tris


@dataclass(frozen=True)
class LozengeTiling:
    shape: SkewShape
    placements: frozenset[tuple[str, int, int]]  # tiling of the region without bumps

    def __post_init__(self):
        covered: list[Tri] = [tri for p in self.placements for tri in lozenge_tris(*p)]
        if len(covered) != len(set(covered)) or set(covered) != region(self.shape):
            raise TilingError(f"placements do not tile the region of {self.shape}")

    @cached_property
    def with_bumps(self) -> frozenset:
        d = self.shape.d
        return self.placements | {(VERT, d + 1, b) for b in bump_positions(self.shape)}

    @cached_property
    def _owner(self) -> dict[Tri, tuple[str, int, int]]:
        return {tri: p for p in self.with_bumps for tri in lozenge_tris(*p)}

    def lozenge_at(self, tri: Tri):
        return self._owner.get(tri)

    def nwse(self) -> list[tuple[int, int]]:
        return sorted((t, a) for k, t, a in self.placements if k == NWSE)

    def nesw(self) -> list[tuple[int, int]]:
        return sorted((t, a) for k, t, a in self.placements if k == NESW)

    def rhombus_weight(self, t: int, a: int) -> int:
        """Distance w(r) of a NW-SE lozenge from the right boundary."""
        return _outer_right(self.shape, t) - a

    def weight(self) -> int:
        return prod(self.rhombus_weight(t, a) for t, a in self.nwse())


def tiling_from_oot(t: Tableau, shape: SkewShape) -> LozengeTiling:
    """Green path i climbs from the bottom of column i; it steps NW in strip s
    exactly when s is an entry of column i of T."""
    d = shape.d
    lam_conj = shape.outer_conj
    placements = set()
    for i in range(1, shape.lam(1) + 1):
        col = set(t.column(i)) if i <= shape.mu(1) else set()
        a = i - 1
        for s in range(d + 1 - lam_conj[i], d + 1):
            if s in col:
                if a >= _outer_right(shape, s):
                    raise TilingError(f"{t} is not an Okounkov-Olshanski tableau of {shape}")
                placements.add((NWSE, s, a))
                a -= 1
            else:
                placements.add((NESW, s, a))
    used = {tri for p in placements for tri in lozenge_tris(*p)}
    for tri in sorted(region(shape) - used):
        kind, y, a = tri
        if kind == "U":
            partner = ("D", y - 1, a)
            if partner in used or partner not in region(shape):
                raise TilingError(f"cannot complete tiling at {tri}")
            placements.add((VERT, y, a))
            used.update((tri, partner))
    return LozengeTiling(shape, frozenset(placements))


def green_paths(tiling: LozengeTiling) -> list[list[tuple[int, int, str]]]:
    """For each column i, the steps (strip, position, kind) of its green path."""
    shape = tiling.shape
    d = shape.d
    paths = []
    for i in range(1, shape.lam(1) + 1):
        a = i - 1
        steps = []
        for s in range(d + 1 - shape.outer_conj[i], d + 1):
            loz = tiling.lozenge_at(("U", s, a))
            if loz == (NWSE, s, a):
                steps.append((s, a, NWSE))
                a -= 1
            elif loz == (NESW, s, a):
                steps.append((s, a, NESW))
            else:
                raise TilingError(f"green path {i} is blocked in strip {s}")
        paths.append(steps)
    return paths


def oot_from_tiling(tiling: LozengeTiling) -> Tableau:
    shape = tiling.shape
    entries = {}
    for i, steps in enumerate(green_paths(tiling), 1):
        col = [s for s, _, k in steps if k == NWSE]
        for r, s in enumerate(col, 1):
            entries[(r, i)] = s
    return Tableau.from_dict(straight(shape.inner), entries)


def red_paths(tiling: LozengeTiling) -> list[list[Tri]]:
    """Red path i enters strip i at the left boundary and crosses NW-SE
    lozenges (rightward) and vertical ones (upward) until it reaches a bump."""
    d = tiling.shape.d
    out = []
    for i in range(1, d + 1):
        tri = ("D", i, -i)
        path = [tri]
        while True:
            loz = tiling.lozenge_at(tri)
            _, t, a = tri
            if loz is None:
                raise TilingError(f"red path {i} left the region")
            if loz[0] == NWSE:
                tri = ("D", t, a + 1)
            elif loz[0] == VERT:
                if t == d:
                    break
                tri = ("D", t + 1, a)
            else:
                raise TilingError(f"red path {i} hit a NE-SW lozenge")
            path.append(tri)
        out.append(path)
    return out


def blue_paths(tiling: LozengeTiling) -> list[list[Tri]]:
    """Blue path r starts right of bump r and crosses NE-SW lozenges
    (rightward) and vertical ones (downward) to the right boundary."""
    shape = tiling.shape
    d = shape.d
    out = []
    for r in range(1, d + 1):
        tri = ("U", d, shape.mu(r) - r + 1)
        path = []
        while True:
            _, t, a = tri
            if a >= _outer_right(shape, t):
                break
            path.append(tri)
            loz = tiling.lozenge_at(tri)
            if loz is None:
                raise TilingError(f"blue path {r} left the region")
            if loz[0] == NESW:
                tri = ("U", t, a + 1)
            elif loz[0] == VERT:
                tri = ("U", t - 1, a + 1)
            else:
                raise TilingError(f"blue path {r} hit a NW-SE lozenge")
        out.append(path)
    return out


def oot_from_red(tiling: LozengeTiling) -> Tableau:
    """Row i of T lists the strips of the rightward steps of red path i."""
    shape = tiling.shape
    entries = {}
    for i, path in enumerate(red_paths(tiling), 1):
        row = [tri[1] for tri in path if tiling.lozenge_at(tri)[0] == NWSE]
        for j, s in enumerate(row, 1):
            entries[(i, j)] = s
    return Tableau.from_dict(straight(shape.inner), entries)


def sf_from_tiling(tiling: LozengeTiling) -> Tableau:
    """Row r of the flagged tableau lists the depths d+1-t of the rightward
    steps of blue path r."""
    shape = tiling.shape
    d = shape.d
    entries = {}
    for r, path in enumerate(blue_paths(tiling), 1):
        row = [d + 1 - tri[1] for tri in path if tiling.lozenge_at(tri)[0] == NESW]
        if len(row) != shape.lam(r) - shape.mu(r):
            raise TilingError(f"blue path {r} has the wrong number of steps")
        for k, v in enumerate(row):
            entries[(r, shape.mu(r) + k + 1)] = v
    return Tableau.from_dict(shape, entries)


def sf_from_green(tiling: LozengeTiling) -> Tableau:
    """Column i of the flagged tableau lists the depths of the straight
    steps of green path i."""
    shape = tiling.shape
    d = shape.d
    entries = {}
    for i, steps in enumerate(green_paths(tiling), 1):
        vals = sorted(d + 1 - s for s, _, k in steps if k == NESW)
        for r, v in zip(range(shape.inner_conj[i] + 1, shape.outer_conj[i] + 1), vals):
            entries[(r, i)] = v
    return Tableau.from_dict(shape, entries)


def path_systems(tiling: LozengeTiling) -> dict:
    return {"red": red_paths(tiling), "blue": blue_paths(tiling), "green": green_paths(tiling)}


def tiling_to_re(tiling: LozengeTiling) -> tuple[frozenset, frozenset]:
    """Shear into the shifted grid: (reverse excited diagram, broken diagonals)."""
    d = tiling.shape.d
    re = frozenset((d + 1 - t, a + d) for t, a in tiling.nesw())
    diag = frozenset((d + 1 - t, a + d) for t, a in tiling.nwse())
    return re, diag


def tiling_to_ooe(tiling: LozengeTiling) -> frozenset:
    """Flip and shear NW-SE lozenges onto unit squares."""
    return frozenset((t, a + t) for t, a in tiling.nwse())


def enumerate_tilings(shape: SkewShape) -> list[LozengeTiling]:
    return [tiling_from_oot(t, shape) for t in enumerate_oot(shape)]


def brute_force_tilings(shape: SkewShape) -> list[frozenset]:
    """Every lozenge tiling of the region, by covering the first free triangle."""
    tris = region(shape)
    order = sorted(tris, key=lambda x: (x[1], x[2], x[0]))
    free = set(tris)
    chosen: list = []
    out = []

    def options(tri: Tri):
        kind, y, a = tri
        if kind == "D":
            yield (NESW, y, a), ("U", y, a)
            yield (NWSE, y, a + 1), ("U", y, a + 1)
            yield (VERT, y + 1, a), ("U", y + 1, a)
        else:
            yield (VERT, y, a), ("D", y - 1, a)
            yield (NESW, y, a), ("D", y, a)
            yield (NWSE, y, a), ("D", y, a - 1)

    def rec(k: int):
        while k < len(order) and order[k] not in free:
            k += 1
        if k == len(order):
            out.append(frozenset(chosen))
            return
        tri = order[k]
        for placement, partner in options(tri):
            if partner in free:
                free.difference_update((tri, partner))
                chosen.append(placement)
                rec(k + 1)
                chosen.pop()
                free.update((tri, partner))

    rec(0)
    return out


# Knutson-Tao puzzles

def boundary_word(p: Partition, rows: int, cols: int) -> str:
    """0/1 word of the boundary path of p in a rows x cols box, read from
    the bottom left: 0 for a vertical step, 1 for a horizontal one."""
    if len(p) > rows or p[1] > cols:
        raise ShapeError(f"{p} does not fit in a {rows} x {cols} box")
    word = ["1"] * (rows + cols)
    for i in range(1, rows + 1):
        word[p[i] + rows - i] = "0"
    return "".join(word)


EQUIV = "equiv"
RHOMB = "rhomb"
TRI0 = "tri0"
TRI1 = "tri1"


def piece_labels(piece) -> dict[Edge, int]:
    """Edge labels carried by a puzzle piece."""
    kind = piece[0]
    if kind in (TRI0, TRI1):
        lab = 0 if kind == TRI0 else 1
        return {e: lab for e in tri_edges(piece[1]).values()}
    _, first, second = piece
    out = {}
    shared = set(tri_edges(first).values()) & set(tri_edges(second).values())
    for tri in (first, second):
        for direction, e in tri_edges(tri).items():
            if e in shared:
                continue
            out[e] = _rhombus_label(kind, first, second, direction)
    return out


def _rhombus_label(kind: str, first: Tri, second: Tri, direction: str) -> int:
    if kind == EQUIV:
        return {"S": 0, "B": 1}[direction]
    orient = _orientation(first, second)
    if orient == VERT:
        return {"S": 1, "B": 0}[direction]
    if orient == NESW:
        return {"H": 1, "S": 0}[direction]
    return {"B": 1, "H": 0}[direction]


def _orientation(first: Tri, second: Tri) -> str:
    shared = set(tri_edges(first).values()) & set(tri_edges(second).values())
    (edge,) = shared
    return {"H": VERT, "B": NESW, "S": NWSE}[edge[0]]


@dataclass(frozen=True)
class Puzzle:
    size: int
    pieces: frozenset

    def labels(self) -> dict[Edge, int]:
        out: dict[Edge, int] = {}
        for p in self.pieces:
            for e, lab in piece_labels(p).items():
                if out.setdefault(e, lab) != lab:
                    raise PuzzleError(f"edge {e} carries labels {out[e]} and {lab}")
        return out

    def equivariant(self) -> list:
        return sorted(p for p in self.pieces if p[0] == EQUIV)

    def heights(self) -> list[int]:
        """ht(p): height of the centre of each equivariant piece."""
        return [p[1][1] for p in self.equivariant()]

    def weight(self) -> int:
        return prod(self.heights())

    def boundary(self) -> tuple[str, str, str]:
        """(north-west, north-east, bottom) words."""
        lab = self.labels()
        n = self.size
        nw = "".join(str(lab[("S", 0, y)]) for y in range(n))
        ne = "".join(str(lab[("B", p - 1, n - p)]) for p in range(1, n + 1))
        bottom = "".join(str(lab[("H", a, 0)]) for a in range(n))
        return nw, ne, bottom


class PuzzleError(ShapeError):
    pass


def puzzle_triangles(n: int) -> set[Tri]:
    tris = set()
    for y in range(n):
        tris.update(("U", y, a) for a in range(n - y))
        tris.update(("D", y, a) for a in range(n - y - 1))
    return tris


def validate_puzzle(p: Puzzle, words: tuple[str, str, str] | None = None) -> None:
    covered = []
    for piece in p.pieces:
        if piece[0] in (TRI0, TRI1):
            covered.append(piece[1])
        else:
            if piece[0] == EQUIV and _orientation(piece[1], piece[2]) != VERT:
                raise PuzzleError("equivariant piece must stay vertical")
            covered.extend(piece[1:])
    if len(covered) != len(set(covered)) or set(covered) != puzzle_triangles(p.size):
        raise PuzzleError("pieces do not cover the triangle exactly once")
    p.labels()
    if words is not None and p.boundary() != words:
        raise PuzzleError(f"boundary {p.boundary()} differs from {words}")


def _diag_tri(k: int, s: int) -> Tri:
    """Element s of the diagonal strip between lines a+y = k-1 and a+y = k."""
    if s % 2 == 0:
        return ("U", k - 1 - s // 2, s // 2)
    m = (s - 1) // 2
    return ("D", k - 2 - m, m)


def _strip_tri(t: int, s: int) -> Tri:
    """Element s of tiling strip t, read left to right."""
    if s % 2 == 0:
        return ("D", t, -t + s // 2)
    return ("U", t, -t + (s + 1) // 2)


def puzzle_from_tiling(tiling: LozengeTiling) -> Puzzle:
    """Tiling strip t becomes the diagonal strip k = lambda_{d+1-t} + t;
    NW-SE lozenges become equivariant pieces, NE-SW ones regular rhombi,
    vertical halves 0-triangles. The other strips are filled with 1s."""
    shape = tiling.shape
    d, n = shape.d, shape.d + shape.lam(1)
    pieces = set()
    zero_strips = set()
    for t in range(1, d + 1):
        k = _outer_right(shape, t) + t
        zero_strips.add(k)
        index = {_strip_tri(t, s): s for s in range(2 * k - 1)}
        for s in range(2 * k - 1):
            tri = _strip_tri(t, s)
            loz = tiling.lozenge_at(tri)
            if loz[0] == VERT:
                pieces.add((TRI0, _diag_tri(k, s)))
            elif tri == lozenge_tris(*loz)[0]:
                other = index[lozenge_tris(*loz)[1]]
                assert other == s + 1
                kind = EQUIV if loz[0] == NWSE else RHOMB
                pieces.add((kind, _diag_tri(k, s), _diag_tri(k, s + 1)))
    labels: dict[Edge, int] = {}
    for piece in pieces:
        labels.update(piece_labels(piece))
    for k in range(1, n + 1):
        if k in zero_strips:
            continue
        for m in range(k - 1):
            up, down = ("U", k - 1 - m, m), ("D", k - 2 - m, m)
            inner = labels[tri_edges(down)["B"]] if k > 1 else 0
            if inner == 0:
                piece = (RHOMB, up, down)
            else:
                piece = None
                pieces.update({(TRI1, up), (TRI1, down)})
            if piece:
                pieces.add(piece)
                labels.update(piece_labels(piece))
            else:
                labels.update(piece_labels((TRI1, up)))
                labels.update(piece_labels((TRI1, down)))
        pieces.add((TRI1, ("U", 0, k - 1)))
        labels.update(piece_labels((TRI1, ("U", 0, k - 1))))
    puzzle = Puzzle(n, frozenset(pieces))
    validate_puzzle(puzzle, puzzle_words(shape.outer, shape.inner, shape.outer, d, shape.lam(1)))
    return puzzle


def puzzle_words(nw: Partition, ne: Partition, bottom: Partition, rows: int, cols: int):
    return (boundary_word(nw, rows, cols), boundary_word(ne, rows, cols),
            boundary_word(bottom, rows, cols))


def tiling_from_puzzle(puzzle: Puzzle, shape: SkewShape) -> LozengeTiling:
    """Invert puzzle_from_tiling, naming the local rule that fails."""
    d = shape.d
    if puzzle.size != d + shape.lam(1):
        raise PuzzleError("puzzle side does not match the shape")
    validate_puzzle(puzzle, puzzle_words(shape.outer, shape.inner, shape.outer, d, shape.lam(1)))
    owner = {}
    for piece in puzzle.pieces:
        for tri in piece[1:]:
            owner[tri] = piece
    placements = set()
    for t in range(1, d + 1):
        k = _outer_right(shape, t) + t
        s = 0
        while s < 2 * k - 1:
            piece = owner[_diag_tri(k, s)]
            if piece[0] == TRI0:
                s += 1
                continue
            if piece[0] == TRI1:
                raise PuzzleError(f"1-triangle inside the 0-strip of row {d + 1 - t}")
            if piece[1:] != (_diag_tri(k, s), _diag_tri(k, s + 1)):
                raise PuzzleError(f"rhombus crosses the 0-strip of row {d + 1 - t}")
            first, second = _strip_tri(t, s), _strip_tri(t, s + 1)
            if piece[0] == EQUIV:
                if first[0] != "D":
                    raise PuzzleError("equivariant piece at an odd strip position")
                placements.add((NWSE, t, second[2]))
            else:
                if first[0] != "U":
                    raise PuzzleError("regular rhombus at an even strip position")
                placements.add((NESW, t, first[2]))
            s += 2
    used = {tri for p in placements for tri in lozenge_tris(*p)}
    reg = region(shape)
    for tri in sorted(reg - used):
        if tri[0] == "U":
            partner = ("D", tri[1] - 1, tri[2])
            if partner not in reg or partner in used:
                raise PuzzleError(f"no vertical partner for {tri}")
            placements.add((VERT, tri[1], tri[2]))
            used.update((tri, partner))
    try:
        return LozengeTiling(shape, frozenset(placements))
    except TilingError as err:
        raise PuzzleError(str(err)) from None


PUZZLE_BUDGET = 14


def enumerate_puzzles(nw: Partition, ne: Partition, bottom: Partition,
                      rows: int | None = None, cols: int | None = None) -> list[Puzzle]:
    """All equivariant puzzles with the given boundary, by backtracking over
    triangles in reading order with edge-label unification."""
    rows = len(bottom) if rows is None else rows
    cols = bottom[1] if cols is None else cols
    n = rows + cols
    if n > PUZZLE_BUDGET:
        raise BudgetError(f"puzzle side {n} exceeds budget {PUZZLE_BUDGET}")
    w_nw, w_ne, w_bot = puzzle_words(nw, ne, bottom, rows, cols)
    labels: dict[Edge, int] = {}
    for y in range(n):
        labels[("S", 0, y)] = int(w_nw[y])
    for p in range(1, n + 1):
        labels[("B", p - 1, n - p)] = int(w_ne[p - 1])
    for a in range(n):
        labels[("H", a, 0)] = int(w_bot[a])
    order = []
    for y in range(n - 1, -1, -1):
        for a in range(n - y):
            order.append(("U", y, a))
            if a < n - y - 1:
                order.append(("D", y, a))
    tris = set(order)
    covered: set[Tri] = set()
    chosen: list = []
    out = []

    def fits(new: dict[Edge, int]) -> list[Edge] | None:
        added = []
        for e, lab in new.items():
            have = labels.get(e)
            if have is None:
                added.append(e)
            elif have != lab:
                return None
        return added

    def rec(k: int):
        while k < len(order) and order[k] in covered:
            k += 1
        if k == len(order):
            out.append(Puzzle(n, frozenset(chosen)))
            return
        tri = order[k]
        kind, y, a = tri
        cands = [(TRI0, tri), (TRI1, tri)]
        if kind == "U":
            right = ("D", y, a)
            below = ("D", y - 1, a)
            if right in tris:
                cands.append((RHOMB, tri, right))
            if below in tris:
                cands.append((RHOMB, tri, below))
                cands.append((EQUIV, tri, below))
        else:
            right = ("U", y, a + 1)
            cands.append((RHOMB, tri, right))
        for piece in cands:
            if any(x in covered for x in piece[2:]):
                continue
            new = piece_labels(piece)
            added = fits(new)
            if added is None:
                continue
            for e in added:
                labels[e] = new[e]
            covered.update(piece[1:])
            chosen.append(piece)
            rec(k + 1)
            chosen.pop()
            covered.difference_update(piece[1:])
            for e in added:
                del labels[e]

    rec(0)
    return out


# SVG output
#
# User coordinates are integers: lattice point (a, y) goes to
# (20a + 10y, 20(top - y)). The root element's height is scaled by
# sqrt(3)/2 with preserveAspectRatio="none", so triangles render equilateral.

PALETTE = {"red": "#d62728", "blue": "#1f77b4", "green": "#2ca02c",
           VERT: "#f2f2f2", NESW: "#c6dbef", NWSE: "#fdd0a2",
           TRI0: "#ffffff", TRI1: "#d9d9d9", RHOMB: "#c6dbef", EQUIV: "#fdd0a2"}
UNIT = 20
HALF = UNIT // 2


class _Canvas:
    def __init__(self):
        self.polys: list[tuple[list, str]] = []
        self.lines: list[tuple[list, str, int]] = []

    def render(self) -> str:
        pts = [p for poly, _ in self.polys for p in poly] or [(0, 0)]
        xs = [x for x, _ in pts]
        ys = [y for _, y in pts]
        x0, y0 = min(xs) - UNIT, min(ys) - UNIT
        w, h = max(xs) - x0 + UNIT, max(ys) - y0 + UNIT
        height = round(h * 0.8660254037844386)
        out = ['<?xml version="1.0" encoding="UTF-8"?>',
               f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" '
               f'height="{height}" viewBox="{x0} {-(y0 + h)} {w} {h}" preserveAspectRatio="none">']
        for poly, fill in self.polys:
            out.append(f'<polygon points="{_fmt(poly)}" fill="{fill}" stroke="#444" stroke-width="1"/>')
        for line, color, width in self.lines:
            out.append(f'<polyline points="{_fmt(line)}" fill="none" stroke="{color}" '
                       f'stroke-width="{width}"/>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _fmt(points) -> str:
    # y is negated so that the lattice grows upward
    return " ".join(f"{x},{-y}" for x, y in points)


def _xy(a: int, y: int) -> tuple[int, int]:
    return UNIT * a + HALF * y, UNIT * y


def _tri_points(tri: Tri):
    kind, y, a = tri
    if kind == "U":
        pts = [(a, y), (a + 1, y), (a, y + 1)]
    else:
        pts = [(a + 1, y), (a, y + 1), (a + 1, y + 1)]
    return [_xy(*p) for p in pts]


def _edge_points(e: Edge):
    kind, a, y = e
    if kind == "H":
        return [_xy(a, y), _xy(a + 1, y)]
    if kind == "S":
        return [_xy(a, y), _xy(a, y + 1)]
    return [_xy(a + 1, y), _xy(a, y + 1)]


def _midpoint(e: Edge) -> tuple[int, int]:
    (x1, y1), (x2, y2) = _edge_points(e)
    return (x1 + x2) // 2, (y1 + y2) // 2


def tiling_svg(tiling: LozengeTiling) -> str:
    """Lozenges with the red, blue and green path systems drawn through
    edge midpoints."""
    shape = tiling.shape
    canvas = _Canvas()
    for p in sorted(tiling.with_bumps):
        a, b = lozenge_tris(*p)
        pa, pb = _tri_points(a), _tri_points(b)
        shared = [q for q in pa if q in pb]
        outer = [q for q in pa if q not in pb] + [q for q in pb if q not in pa]
        canvas.polys.append(([outer[0], shared[0], outer[1], shared[1]], PALETTE[p[0]]))
    d = shape.d
    for tris in red_paths(tiling):
        pts = [_midpoint(("B", a, t)) for _, t, a in tris]
        pts.append(_midpoint(("H", tris[-1][2], d + 1)))
        canvas.lines.append((pts, PALETTE["red"], 3))
    for r, tris in enumerate(blue_paths(tiling), 1):
        pts = [_midpoint(("S", a, t)) for _, t, a in tris]
        if tris:
            _, t, a = tris[-1]
            loz = tiling.lozenge_at(tris[-1])
            pts.append(_midpoint(("S", a + 1, t if loz[0] == NESW else t - 1)))
        else:
            pts.append(_midpoint(("S", shape.mu(r) - r + 1, d)))
        canvas.lines.append((pts, PALETTE["blue"], 3))
    for steps in green_paths(tiling):
        if not steps:
            continue
        pts = [_midpoint(("H", a, s)) for s, a, _ in steps]
        s, a, kind = steps[-1]
        pts.append(_midpoint(("H", a - 1 if kind == NWSE else a, s + 1)))
        canvas.lines.append((pts, PALETTE["green"], 3))
    return canvas.render()


def puzzle_svg(puzzle: Puzzle) -> str:
    """Pieces coloured by type; edges labelled 1 are drawn thick."""
    canvas = _Canvas()
    for piece in sorted(puzzle.pieces):
        for tri in piece[1:]:
            canvas.polys.append((_tri_points(tri), PALETTE[piece[0]]))
    for e, lab in sorted(puzzle.labels().items()):
        if lab == 1:
            canvas.lines.append((_edge_points(e), "#000000", 3))
    return canvas.render()
