"""Excited diagrams, their Okounkov-Olshanski and reverse variants, broken
diagonals, excited peaks and right neighbours."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .shapes import Cell, Partition, ShapeError, SkewShape, content, shifted_outer, shifted_shape
from .tableaux import Tableau, enumerate_oot, enumerate_sf, enumerate_ssyt, straight


@dataclass(frozen=True)
class Diagram:
    """A set of cells together with where each one started."""

    origin: tuple[tuple[Cell, Cell], ...]  # sorted pairs (start cell, current cell)

    @classmethod
    def from_map(cls, mapping: dict[Cell, Cell]) -> Diagram:
        return cls(tuple(sorted(mapping.items())))

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(cur for _, cur in self.origin)

    def as_map(self) -> dict[Cell, Cell]:
        return dict(self.origin)

    def __len__(self) -> int:
        return len(self.origin)


def _moves(diag: Diagram, ambient: set[Cell], step: int):
    """Diagrams reachable by one diagonal slide by `step` (+1 SE, -1 NW)."""
    cells = diag.cells
    mapping = diag.as_map()
    for start, (i, j) in diag.origin:
        side_a, side_b, target = (i, j + step), (i + step, j), (i + step, j + step)
        # in the shifted grid a side cell may fall left of the staircase edge,
        # so only the target has to lie in the ambient region
        if target in ambient and not {side_a, side_b, target} & cells:
            new = dict(mapping)
            new[start] = target
            yield Diagram.from_map(new), (i, j)


def closure(start: Diagram, ambient: set[Cell], step: int) -> list[Diagram]:
    """All diagrams reachable from `start` by slides inside `ambient`."""
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt, _ in _moves(cur, ambient, step):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda d: d.origin)


def move_path(start: Diagram, target: Diagram, ambient: set[Cell], step: int):
    """One sequence of moved cells (old positions) leading from start to target."""
    parent: dict[Diagram, tuple[Diagram, Cell] | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == target:
            break
        for nxt, moved in _moves(cur, ambient, step):
            if nxt not in parent:
                parent[nxt] = (cur, moved)
                queue.append(nxt)
    if target not in parent:
        raise ShapeError("target diagram is not reachable")
    path = []
    node = target
    while parent[node] is not None:
        prev, moved = parent[node]
        path.append((prev, moved))
        node = prev
    return path[::-1]


def excited_flags(shape: SkewShape) -> list[int]:
    """f_i: lowest row the last cell of row i of mu can be slid to."""
    lam, mu = shape.outer, shape.inner
    flags = []
    for i in range(1, len(mu) + 1):
        r = i
        while (r + 1, mu[i] + r + 1 - i) in lam:
            r += 1
        flags.append(r)
    # a cell cannot pass the cell below it in its column
    for i in range(len(flags) - 2, -1, -1):
        flags[i] = min(flags[i], flags[i + 1] - 1) if mu[i + 2] >= mu[i + 1] else flags[i]
    return flags


def diagram_from_tableau(t: Tableau) -> Diagram:
    """phi^{-1}: cell u with entry r slides to row r along its diagonal."""
    return Diagram.from_map({(i, j): (v, j + v - i) for (i, j), v in t.items()})


def excited_diagrams(shape: SkewShape) -> list[Diagram]:
    """E(lambda/mu) via the flagged tableaux bijection."""
    mu = shape.inner
    if not mu.parts:
        return [Diagram(())]
    flags = excited_flags(shape)
    tabs = enumerate_ssyt(straight(mu), ([1] * len(mu), flags))
    return [diagram_from_tableau(t) for t in tabs]


def initial_diagram(mu: Partition) -> Diagram:
    return Diagram.from_map({c: c for c in mu.cells()})


def excited_closure(shape: SkewShape) -> list[Diagram]:
    return closure(initial_diagram(shape.inner), set(shape.outer.cells()), 1)


def oo_ambient(shape: SkewShape) -> set[Cell]:
    """Upside-down [lambda*]: row t has lambda_{d+1-t} + t - 1 cells."""
    d = shape.d
    return {(t, j) for t in range(1, d + 1) for j in range(1, shape.lam(d + 1 - t) + t)}


def oo_excited_diagrams(shape: SkewShape) -> list[Diagram]:
    """OOE(lambda/mu) as the image of OOT under the diagonal-slide map."""
    return [diagram_from_tableau(t) for t in enumerate_oot(shape)]


def oo_excited_closure(shape: SkewShape) -> list[Diagram]:
    """Slides of [mu] inside d unbounded rows, kept when they land in the
    upside-down [lambda*]. Sliding strictly inside that region is not enough:
    [mu] itself may stick out of it."""
    d = shape.d
    wide = {(i, j) for i in range(1, d + 1) for j in range(1, shape.mu(1) + d + 1)}
    region = oo_ambient(shape)
    return [D for D in closure(initial_diagram(shape.inner), wide, 1) if D.cells <= region]


def tableau_from_diagram(shape: SkewShape, diag: Diagram) -> Tableau:
    return Tableau.from_dict(straight(shape.inner), {u: cur[0] for u, cur in diag.origin})


def peak_weight(shape: SkewShape, cell: Cell) -> int:
    """lambda_{d+1-i} + i - j at a cell of the ambient rectangle."""
    i, j = cell
    return shape.lam(shape.d + 1 - i) + i - j


def excited_peaks(diag: Diagram, shape: SkewShape | None = None) -> frozenset[Cell]:
    """EP(D) from the origin tableau: cells (s, s+c(u)) with m_T(u) <= s < T(u)."""
    entries = {u: cur[0] for u, cur in diag.origin}
    peaks = set()
    for (i, j), v in entries.items():
        left, up = entries.get((i, j - 1)), entries.get((i - 1, j))
        m = max(left or 1, (up or 0) + 1)
        for s in range(m, v):
            peaks.add((s, s + j - i))
    return frozenset(peaks)


def excited_peaks_by_moves(shape: SkewShape, diag: Diagram) -> frozenset[Cell]:
    """EP(D) by replaying slides: EP' = (EP + {u}) - {u right, u below}."""
    peaks: set[Cell] = set()
    d = shape.d
    wide = {(i, j) for i in range(1, d + 1) for j in range(1, shape.mu(1) + d + 1)}
    for _, (i, j) in move_path(initial_diagram(shape.inner), diag, wide, 1):
        peaks.add((i, j))
        peaks.discard((i, j + 1))
        peaks.discard((i + 1, j))
    return frozenset(peaks)


# Reverse excited diagrams live in the shifted grid of lambda*.

def shifted_weight(shape: SkewShape, cell: Cell) -> int:
    """lambda_i + d - j."""
    i, j = cell
    return shape.lam(i) + shape.d - j


def re_from_flagged(shape: SkewShape, u: Tableau) -> Diagram:
    """Cell (i,j) with flagged entry r goes to (r, j + d - 1 - i + r)."""
    d = shape.d
    return Diagram.from_map({(i, j): (v, j + d - 1 - i + v) for (i, j), v in u.items()})


def flagged_from_re(shape: SkewShape, diag: Diagram) -> Tableau:
    return Tableau.from_dict(shape, {u: cur[0] for u, cur in diag.origin})


def reverse_excited_diagrams(shape: SkewShape) -> list[Diagram]:
    """RE(lambda/mu) via flagged tableaux."""
    return [re_from_flagged(shape, u) for u in enumerate_sf(shape)]


def initial_reverse(shape: SkewShape) -> Diagram:
    d = shape.d
    return Diagram.from_map({(i, j): (i, j + d - 1) for (i, j) in shape.cells()})


def reverse_excited_closure(shape: SkewShape) -> list[Diagram]:
    start = initial_reverse(shape)
    assert start.cells == frozenset(shifted_shape(shape))
    return closure(start, shifted_outer(shape), -1)


@dataclass(frozen=True)
class DiagonalSet:
    diagonals: tuple[frozenset[Cell], ...]  # indexed by column j = 1..lambda_1

    @property
    def union(self) -> frozenset[Cell]:
        return frozenset().union(*self.diagonals) if self.diagonals else frozenset()


def broken_diagonals(diag: Diagram, shape: SkewShape) -> DiagonalSet:
    """Broken diagonals from the column strings of the flagged tableau.

    For column j, with a_i = i - U(i,j) moves made by cell (i,j), the string
    running from row i - a_i + 1 to row i - a_{i+1} sits on content
    j + d - 1 - i, where a_{mu'_j} = mu'_j and a_{lambda'_j + 1} = 0.
    """
    d = shape.d
    rows = {u: cur[0] for u, cur in diag.origin}
    out = []
    for j in range(1, shape.lam(1) + 1):
        top, bottom = shape.inner_conj[j], shape.outer_conj[j]
        moves = {top: top, bottom + 1: 0}
        for i in range(top + 1, bottom + 1):
            moves[i] = i - rows[(i, j)]
        cells = set()
        for i in range(top, bottom + 1):
            c = j + d - 1 - i
            for r in range(i - moves[i] + 1, i - moves[i + 1] + 1):
                cells.add((r, r + c))
        out.append(frozenset(cells))
    return DiagonalSet(tuple(out))


def broken_diagonals_by_moves(shape: SkewShape, diag: Diagram) -> DiagonalSet:
    """Replay NW slides; each slide into (i-1,j-1) from (i,j) bends the
    diagonal through (i-1,j) onto (i,j)."""
    start = initial_reverse(shape)
    init = broken_diagonals(start, shape)
    diagonals = [set(x) for x in init.diagonals]
    for _, (i, j) in move_path(start, diag, shifted_outer(shape), -1):
        for dset in diagonals:
            if (i - 1, j) in dset:
                dset.discard((i - 1, j))
                dset.add((i, j))
    return DiagonalSet(tuple(frozenset(x) for x in diagonals))


def right_neighbors(diag: Diagram, shape: SkewShape) -> frozenset[Cell]:
    """F(D): cells of [lambda*] outside D immediately right of a cell of D."""
    ambient = shifted_outer(shape)
    return frozenset((i, j + 1) for (i, j) in diag.cells
                     if (i, j + 1) in ambient and (i, j + 1) not in diag.cells)
