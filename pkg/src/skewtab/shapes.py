"""Partitions, skew shapes, cell statistics and outside decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

Cell = tuple[int, int]


class ShapeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ShapeError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access; parts beyond the length are 0."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) or "0"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and j >= 1 and j <= self[i]


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(sum(1 for x in p.parts if x >= j) for j in range(1, p.parts[0] + 1))


def hook(p: Partition, cell: Cell) -> int:
    i, j = cell
    if cell not in p:
        raise ShapeError(f"cell {cell} not in {p}")
    return p[i] + conjugate(p)[j] - i - j + 1


def hook_product(p: Partition) -> int:
    conj = conjugate(p)
    out = 1
    for i, j in p.cells():
        out *= p[i] + conj[j] - i - j + 1
    return out


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


@dataclass(frozen=True)
class SkewShape:
    """lambda/mu with mu padded by zeros to d = len(lambda)."""

    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        lam, mu = self.outer, self.inner
        if not isinstance(lam, Partition):
            object.__setattr__(self, "outer", lam := Partition(lam))
        if not isinstance(mu, Partition):
            object.__setattr__(self, "inner", mu := Partition(mu))
        if len(mu) > len(lam):
            raise ShapeError(f"inner {mu} has more parts than outer {lam}")
        if any(mu[i] > lam[i] for i in range(1, len(mu) + 1)):
            raise ShapeError(f"{mu} does not fit inside {lam}")

    @classmethod
    def parse(cls, text: str) -> SkewShape:
        """Parse '2,2,2,1/1,1'; a missing or '0' inner part means empty."""
        text = text.strip()
        outer, _, inner = text.partition("/")

        def parts(s: str) -> list[int]:
            s = s.strip()
            if not s:
                return []
            try:
                return [int(x) for x in s.split(",")]
            except ValueError:
                raise ShapeError(f"cannot parse partition {s!r}") from None

        return cls(Partition(parts(outer)), Partition(parts(inner)))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @property
    def d(self) -> int:
        return len(self.outer)

    def lam(self, i: int) -> int:
        return self.outer[i]

    def mu(self, i: int) -> int:
        return self.inner[i]

    @cached_property
    def outer_conj(self) -> Partition:
        return conjugate(self.outer)

    @cached_property
    def inner_conj(self) -> Partition:
        return conjugate(self.inner)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[Cell]:
        return [(i, j) for i in range(1, self.d + 1)
                for j in range(self.inner[i] + 1, self.outer[i] + 1)]

    def __contains__(self, cell) -> bool:
        return cell in self.outer and cell not in self.inner

    def row_bounds(self) -> list[tuple[int, int]]:
        return [(self.inner[i], self.outer[i]) for i in range(1, self.d + 1)]


def shifted_shape(s: SkewShape) -> list[Cell]:
    """Cells of lambda*/mu*, where row i of lambda* has lambda_i + d - i
    cells starting in column i."""
    d = s.d
    return [(i, j) for i in range(1, d + 1)
            for j in range(s.mu(i) + d, s.lam(i) + d)]


def shifted_outer(s: SkewShape) -> set[Cell]:
    d = s.d
    return {(i, j) for i in range(1, d + 1) for j in range(i, s.lam(i) + d)}


def staircase(n: int) -> Partition:
    """delta_n = (n-1, ..., 1)."""
    return Partition(range(n - 1, 0, -1))


def zigzag(n: int, shift: int = 0) -> SkewShape:
    """The zigzag delta_{n+1}/delta_{n-1} with its first `shift` rows emptied."""
    if n < 1 or not 0 <= shift < n:
        raise ShapeError(f"need n > shift >= 0, got n={n}, shift={shift}")
    outer = staircase(n + 1)
    inner = [outer[i] if i <= shift else max(n - 1 - i, 0) for i in range(1, n + 1)]
    return SkewShape(outer, Partition(inner))


def thick_zigzag(n: int, k: int) -> SkewShape:
    """delta_{n+2k}/delta_n."""
    if n < 0 or k < 1:
        raise ShapeError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    return SkewShape(staircase(n + 2 * k), staircase(n))


def partitions(n: int, max_part: int | None = None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def subpartitions(p: Partition):
    """All partitions contained in p."""
    def rec(i, bound):
        if i > len(p):
            yield ()
            return
        for x in range(min(bound, p[i]), -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in rec(i + 1, x):
                    yield (x,) + rest
    for parts in rec(1, p[1]):
        yield Partition(parts)


def skew_shapes(max_size: int, min_size: int = 0):
    """Every lambda/mu with min_size <= |lambda| <= max_size."""
    for n in range(min_size, max_size + 1):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                yield SkewShape(lam, mu)


def _components(cells: set[Cell]) -> list[list[Cell]]:
    seen: set[Cell] = set()
    out = []
    for start in sorted(cells, key=lambda c: (c[1] - c[0], c)):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i, j = stack.pop()
            comp.append((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class Strip:
    cells: tuple[Cell, ...]

    @property
    def min_content(self) -> int:
        return min(content(c) for c in self.cells)

    @property
    def max_content(self) -> int:
        return max(content(c) for c in self.cells)


@dataclass(frozen=True)
class OutsideDecomposition:
    shape: SkewShape
    cutting_strip: Strip
    strips: tuple[Strip, ...]

    @property
    def content_ranges(self) -> list[tuple[int, int]]:
        return [(s.min_content, s.max_content) for s in self.strips]

    def strip_hash(self, i: int, j: int) -> SkewShape | None:
        """theta_i # theta_j placed on the rim of lambda, as lambda/nu.

        Returns None when the content interval is empty (n_j < m_i).
        """
        lo = self.strips[i].min_content
        hi = self.strips[j].max_content
        if hi < lo:
            return None
        lam = self.shape.outer
        removed = {c for c in self.cutting_strip.cells if lo <= content(c) <= hi}
        nu = [sum(1 for j2 in range(1, lam[r] + 1) if (r, j2) not in removed)
              for r in range(1, len(lam) + 1)]
        for r in range(1, len(lam) + 1):
            if any((r, j2) in removed for j2 in range(1, nu[r - 1] + 1)):
                raise ShapeError("strip composition is not a skew shape")
        return SkewShape(lam, Partition(nu))


def rim(p: Partition) -> list[Cell]:
    """Outer border strip: cells (i,j) of p whose SE diagonal neighbour is outside."""
    return [c for c in p.cells() if (c[0] + 1, c[1] + 1) not in p]


def lascoux_pragacz(s: SkewShape) -> OutsideDecomposition:
    """Cut lambda/mu into diagonal translates of the rim of lambda."""
    cells = set(s.cells())
    if not cells:
        raise ShapeError("empty skew shape has no outside decomposition")
    lo = min(content(c) for c in cells)
    hi = max(content(c) for c in cells)
    cutting = [c for c in rim(s.outer) if lo <= content(c) <= hi]
    pieces = set()
    for shift in range(0, s.d + 1):
        moved = {(i - shift, j - shift) for i, j in cutting}
        for comp in _components(moved & cells):
            pieces.add(tuple(comp))
    strips = sorted((Strip(p) for p in pieces), key=lambda st: (st.min_content, st.max_content))
    covered = sorted(c for st in strips for c in st.cells)
    if covered != sorted(cells):
        raise ShapeError(f"strips do not partition {s}")
    return OutsideDecomposition(s, Strip(tuple(sorted(cutting))), tuple(strips))
