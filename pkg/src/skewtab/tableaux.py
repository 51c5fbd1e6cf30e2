"""Generation and statistics of tableaux; the brute-force oracles live here."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Callable, Iterator

from .shapes import Cell, Partition, ShapeError, SkewShape, content

SYT_COUNT_LIMIT = 20
SYT_LIST_LIMIT = 10


class BudgetError(RuntimeError):
    """Raised when an enumeration would exceed its configured size budget."""


def cell_budget(default: int) -> int:
    env = os.environ.get("SKEWTAB_MAX_CELLS")
    if not env:
        return default
    value = int(env)
    if value <= 0:
        raise ValueError("SKEWTAB_MAX_CELLS must be positive")
    return value


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; rows[i-1] lists row i from column mu_i+1."""

    shape: SkewShape
    rows: tuple[tuple, ...]

    def __getitem__(self, cell: Cell):
        i, j = cell
        return self.rows[i - 1][j - self.shape.mu(i) - 1]

    def get(self, cell: Cell, default=None):
        return self[cell] if cell in self.shape else default

    def items(self) -> Iterator[tuple[Cell, object]]:
        for i, row in enumerate(self.rows, 1):
            start = self.shape.mu(i)
            for k, v in enumerate(row):
                yield (i, start + k + 1), v

    def column(self, j: int) -> list:
        s = self.shape
        return [self[(i, j)] for i in range(s.inner_conj[j] + 1, s.outer_conj[j] + 1)]

    def as_dict(self) -> dict[Cell, object]:
        return dict(self.items())

    @classmethod
    def from_dict(cls, shape: SkewShape, entries: dict) -> Tableau:
        rows = tuple(tuple(entries[(i, j)] for j in range(lo + 1, hi + 1))
                     for i, (lo, hi) in enumerate(shape.row_bounds(), 1))
        return cls(shape, rows)

    def __str__(self) -> str:
        return "/".join("".join(map(str, r)) for r in self.rows)


def straight(p: Partition) -> SkewShape:
    return SkewShape(p, Partition())


def _column_order(shape: SkewShape) -> list[Cell]:
    return sorted(shape.cells(), key=lambda c: (c[1], c[0]))


def _fillings(shape: SkewShape, lower: Callable[[Cell], int],
              upper: Callable[[Cell], int]) -> Iterator[Tableau]:
    """Semistandard fillings with lower(u) <= T(u) <= upper(u), column by column."""
    order = _column_order(shape)
    entries: dict[Cell, int] = {}

    def rec(k: int):
        if k == len(order):
            yield Tableau.from_dict(shape, entries)
            return
        i, j = order[k]
        lo = lower((i, j))
        if (i, j - 1) in entries:
            lo = max(lo, entries[(i, j - 1)])
        if (i - 1, j) in entries:
            lo = max(lo, entries[(i - 1, j)] + 1)
        for v in range(lo, upper((i, j)) + 1):
            entries[(i, j)] = v
            yield from rec(k + 1)
        entries.pop((i, j), None)

    yield from rec(0)


def enumerate_ssyt(shape: SkewShape | Partition, flags=None, max_entry: int | None = None) -> list[Tableau]:
    """SSYT of the shape with row-i entries in [lower_i, upper_i].

    `flags` is a pair (lower, upper) of per-row lists; alternatively pass
    `max_entry` for the uniform bound 1..max_entry.
    """
    if isinstance(shape, Partition):
        shape = straight(shape)
    if flags is None:
        if max_entry is None:
            raise ValueError("need flags or max_entry")
        flags = ([1] * shape.d, [max_entry] * shape.d)
    lower, upper = flags
    if len(lower) != shape.d or len(upper) != shape.d:
        raise ValueError("flag vectors must have one entry per row")
    return list(_fillings(shape, lambda c: lower[c[0] - 1], lambda c: upper[c[0] - 1]))


@cache
def _syt_count(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    if outer == inner:
        return 1
    total = 0
    for i, p in enumerate(outer):
        nxt = outer[i + 1] if i + 1 < len(outer) else 0
        if p > inner[i] and p > nxt:
            total += _syt_count(outer[:i] + (p - 1,) + outer[i + 1:], inner)
    return total


def count_syt(shape: SkewShape, limit: int | None = None) -> int:
    """f^{lambda/mu} by memoised removal of outer corners."""
    limit = cell_budget(SYT_COUNT_LIMIT) if limit is None else limit
    if shape.size > limit:
        raise BudgetError(f"{shape} has {shape.size} cells, limit {limit}")
    inner = tuple(shape.mu(i) for i in range(1, shape.d + 1))
    return _syt_count(shape.outer.parts, inner)


def enumerate_syt(shape: SkewShape, limit: int = SYT_LIST_LIMIT) -> list[Tableau]:
    """All standard fillings, by placing 1..n at successive inner corners."""
    if shape.size > limit:
        raise BudgetError(f"{shape} has {shape.size} cells, listing limit {limit}")
    entries: dict[Cell, int] = {}
    cells = set(shape.cells())
    out = []

    def rec(k: int):
        if k > len(cells):
            out.append(Tableau.from_dict(shape, entries))
            return
        for (i, j) in sorted(cells - entries.keys()):
            ok = all(nb not in cells or nb in entries for nb in ((i - 1, j), (i, j - 1)))
            if ok:
                entries[(i, j)] = k
                rec(k + 1)
                del entries[(i, j)]

    rec(1)
    return out


def oof_weight(shape: SkewShape, cell: Cell, t: int) -> int:
    """lambda_{d+1-t} - c(u)."""
    return shape.lam(shape.d + 1 - t) - content(cell)


def _inner_shape(shape: SkewShape) -> SkewShape:
    return straight(shape.inner)


def enumerate_oot(shape: SkewShape) -> list[Tableau]:
    """T in SSYT(mu, d) with every factor lambda_{d+1-T(u)} - c(u) positive."""
    d = shape.d

    def lower(cell):
        # lambda_{d+1-t} grows with t, so the condition is a lower bound
        for t in range(1, d + 1):
            if oof_weight(shape, cell, t) > 0:
                return t
        return d + 1

    return list(_fillings(_inner_shape(shape), lower, lambda c: d))


def enumerate_sf(shape: SkewShape) -> list[Tableau]:
    """Skew SSYT of lambda/mu with every entry at most its row index."""
    return list(_fillings(shape, lambda c: 1, lambda c: c[0]))


def is_semistandard(t: Tableau) -> bool:
    for (i, j), v in t.items():
        left, up = t.get((i, j - 1)), t.get((i - 1, j))
        if left is not None and left > v:
            return False
        if up is not None and up >= v:
            return False
    return True


@dataclass(frozen=True)
class Statistics:
    min_entry: dict      # m_T(u)
    max_entry: dict      # M_T(u), None when unbounded
    p: int
    p_star: int
    weights: dict        # u -> lambda_{d+1-T(u)} - c(u)


def statistics(t: Tableau, shape: SkewShape) -> Statistics:
    """m_T, M_T, p(T), p*(T) and the weights of T in SSYT(mu, d)."""
    if not is_semistandard(t) or t.shape.outer != shape.inner:
        raise ShapeError("statistics need a semistandard tableau of the inner shape")
    d = shape.d
    lo, hi, weights = {}, {}, {}
    p = p_star = 0
    for u, v in t.items():
        i, j = u
        if v > d:
            raise ShapeError(f"entry {v} exceeds d={d}")
        left, up = t.get((i, j - 1)), t.get((i - 1, j))
        right, down = t.get((i, j + 1)), t.get((i + 1, j))
        m = max(left or 1, (up or 0) + 1)
        bounds = [b for b in (right, None if down is None else down - 1) if b is not None]
        big = min(bounds) if bounds else None
        lo[u], hi[u] = m, big
        weights[u] = oof_weight(shape, u, v)
        p += sum(oof_weight(shape, u, k) for k in range(m, v))
        top = d if big is None else min(d, big)
        p_star += sum(oof_weight(shape, u, k) for k in range(v + 1, top + 1))
    return Statistics(lo, hi, p, p_star, weights)


def _series_dp(shape: SkewShape, max_deg: int, strict_columns: bool) -> list[int]:
    """Count fillings with nonnegative entries by total, rows weak,
    columns weak or strict. Entries above max_deg can never contribute."""
    order = sorted(shape.cells())
    cols = sorted({j for _, j in order})
    pos = {j: k for k, j in enumerate(cols)}
    cells = set(order)
    states: dict[tuple, int] = {((None,) * len(cols), 0): 1}
    for (i, j) in order:
        has_left = (i, j - 1) in cells
        has_up = (i - 1, j) in cells
        nxt: dict[tuple, int] = {}
        for (front, total), cnt in states.items():
            lo = 0
            if has_left:
                lo = front[pos[j - 1]]
            if has_up:
                lo = max(lo, front[pos[j]] + (1 if strict_columns else 0))
            for v in range(lo, max_deg - total + 1):
                key = (front[:pos[j]] + (v,) + front[pos[j] + 1:], total + v)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    out = [0] * (max_deg + 1)
    for (_, total), cnt in states.items():
        out[total] += cnt
    return out


def rpp_series(shape: SkewShape, max_deg: int):
    """Truncated series of reverse plane partitions of the shape by size."""
    from .qseries import QSeries
    return QSeries(0, _series_dp(shape, max_deg, False), max_deg)


def ssyt_series(shape: SkewShape, max_deg: int):
    """s_shape(1, q, q^2, ...) truncated, as sum over SSYT of q^{sum(T-1)}."""
    from .qseries import QSeries
    return QSeries(0, _series_dp(shape, max_deg, True), max_deg)


@dataclass(frozen=True)
class SetValuedTableau:
    shape: Partition
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def items(self):
        for i, row in enumerate(self.rows, 1):
            for j, v in enumerate(row, 1):
                yield (i, j), v

    @property
    def surplus(self) -> int:
        return sum(len(v) - 1 for _, v in self.items())

    def max_tableau(self) -> Tableau:
        return Tableau(straight(self.shape), tuple(tuple(max(v) for v in r) for r in self.rows))


def enumerate_svt(mu: Partition, d: int, max_extra: int) -> list[SetValuedTableau]:
    """Set-valued tableaux of shape mu with entries <= d and at most
    max_extra entries beyond one per cell."""
    order = sorted(mu.cells(), key=lambda c: (c[1], c[0]))
    entries: dict[Cell, tuple[int, ...]] = {}
    out = []

    def rec(k: int, extra: int):
        if k == len(order):
            rows = tuple(tuple(entries[(i, j)] for j in range(1, mu[i] + 1))
                         for i in range(1, len(mu) + 1))
            out.append(SetValuedTableau(mu, rows))
            return
        i, j = order[k]
        lo = 1
        if (i, j - 1) in entries:
            lo = max(lo, max(entries[(i, j - 1)]))
        if (i - 1, j) in entries:
            lo = max(lo, max(entries[(i - 1, j)]) + 1)
        pool = range(lo, d + 1)
        for size in range(1, min(len(pool), max_extra - extra + 1) + 1):
            for subset in combinations(pool, size):
                entries[(i, j)] = subset
                rec(k + 1, extra + size - 1)
        entries.pop((i, j), None)

    rec(0, 0)
    return out


def svt_groups(svts: list[SetValuedTableau]) -> dict[Tableau, list[SetValuedTableau]]:
    """Group set-valued tableaux by their cellwise maximum tableau."""
    groups: dict[Tableau, list[SetValuedTableau]] = {}
    for s in svts:
        groups.setdefault(s.max_tableau(), []).append(s)
    return groups
