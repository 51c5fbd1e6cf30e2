"""Counting formulas for standard tableaux and for Okounkov-Olshanski terms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial, prod

from .numbers import euler, genocchi
from .shapes import (Partition, ShapeError, SkewShape, content, hook, hook_product,
                     lascoux_pragacz, staircase, thick_zigzag, zigzag)
from .tableaux import (SYT_COUNT_LIMIT, BudgetError, _fillings, cell_budget, count_syt, enumerate_oot,
                       enumerate_sf, enumerate_ssyt, oof_weight, straight)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when k is out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def det_int(matrix: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                m[i][j] = q
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_fraction(matrix) -> Fraction:
    """Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    out = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            out = -out
        out *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return out


@dataclass(frozen=True)
class CountReport:
    shape: SkewShape
    method: str
    value: int
    terms: int | None = None

    def to_json(self, elapsed_ms: int = 0) -> dict:
        # big integers travel as decimal strings
        out = {"shape": str(self.shape), "method": self.method, "value": str(self.value)}
        if self.terms is not None:
            out["terms"] = str(self.terms)
        out["elapsed_ms"] = elapsed_ms
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CountReport":
        terms = data.get("terms")
        return cls(SkewShape.parse(data["shape"]), data["method"], int(data["value"]),
                   None if terms is None else int(terms))


SYT_METHODS = ("brute", "aitken", "oof", "nhlf", "kt", "edform", "lozengeform",
               "redform", "flagform", "eulerdet")
OOT_METHODS = ("enumerate", "detRows", "detCols", "lascouxPragacz", "ninthVariation")
KT_BUDGET = 14
# methods whose cost grows with a term enumeration; aitken, eulerdet, detRows
# and detCols are determinants and need no budget
SYT_ENUMERATIVE = frozenset(SYT_METHODS) - {"aitken", "eulerdet"}
OOT_ENUMERATIVE = frozenset({"enumerate", "lascouxPragacz", "ninthVariation"})


def _check_budget(shape: SkewShape, method: str) -> None:
    limit = cell_budget(SYT_COUNT_LIMIT)
    if shape.size > limit:
        raise BudgetError(f"{method} on {shape}: {shape.size} cells, limit {limit}")


def _prefactor(shape: SkewShape) -> Fraction:
    return Fraction(factorial(shape.size), hook_product(shape.outer))


def _finish(shape: SkewShape, method: str, weighted_sum: int, terms: int) -> CountReport:
    value = _prefactor(shape) * weighted_sum
    if value.denominator != 1:
        raise ArithmeticError(f"{method} gave non-integral {value} for {shape}")
    return CountReport(shape, method, int(value), terms)


def oof_terms(shape: SkewShape) -> list[int]:
    """Products prod (lambda_{d+1-T(u)} - c(u)) over all of SSYT(mu, d)."""
    if not shape.inner.parts:
        return [1]
    return [prod(oof_weight(shape, u, v) for u, v in t.items())
            for t in enumerate_ssyt(straight(shape.inner), max_entry=shape.d)]


def flagform_terms(shape: SkewShape) -> list[int]:
    """Weights prod_{(j,t) in M(T)} (lambda_t - t + i(j,t) - j + 1) over SF."""
    return [prod(w for _, w in _missing_entries(shape, t)) for t in enumerate_sf(shape)]


def flagform_columns(shape: SkewShape, t) -> dict[int, list[int]]:
    """Per column j, the weights of the pairs (j, t) in M(T)."""
    out: dict[int, list[int]] = {}
    lam = shape.outer
    for j in range(1, lam[1] + 1):
        col = t.column(j)
        weights = []
        for r in range(1, shape.outer_conj[j] + 1):
            if r in col:
                continue
            i = shape.inner_conj[j] + sum(1 for v in col if v < r)
            weights.append(lam[r] - r + i - j + 1)
        out[j] = weights
    return out


def _missing_entries(shape: SkewShape, t):
    for j, ws in flagform_columns(shape, t).items():
        for w in ws:
            yield j, w


def count_syt_by(shape: SkewShape, method: str) -> CountReport:
    """f^{lambda/mu} by one of SYT_METHODS."""
    from . import diagrams
    if method in SYT_ENUMERATIVE:
        _check_budget(shape, method)
    if method in ("kt", "lozengeform"):
        from . import geometry
    if method == "brute":
        return CountReport(shape, method, count_syt(shape))
    if method == "aitken":
        d = shape.d
        mat = [[Fraction(1, factorial(k)) if (k := shape.lam(i) - shape.mu(j) - i + j) >= 0 else 0
                for j in range(1, d + 1)] for i in range(1, d + 1)]
        value = factorial(shape.size) * det_fraction(mat)
        assert value.denominator == 1
        return CountReport(shape, method, int(value))
    if method == "oof":
        terms = oof_terms(shape)
        return _finish(shape, method, sum(terms), sum(1 for x in terms if x))
    if method == "nhlf":
        lam = shape.outer
        ws = [prod(hook(lam, c) for c in D.cells) for D in diagrams.excited_diagrams(shape)]
        return _finish(shape, method, sum(ws), len(ws))
    if method == "kt":
        if shape.d + shape.lam(1) > KT_BUDGET:
            raise BudgetError(f"puzzle side {shape.d + shape.lam(1)} exceeds {KT_BUDGET}")
        ws = [p.weight() for p in geometry.enumerate_puzzles(shape.outer, shape.inner, shape.outer)]
        return _finish(shape, method, sum(ws), len(ws))
    if method == "edform":
        ws = [prod(diagrams.peak_weight(shape, c) for c in D.cells)
              for D in diagrams.oo_excited_diagrams(shape)]
        return _finish(shape, method, sum(ws), len(ws))
    if method == "lozengeform":
        ws = [t.weight() for t in geometry.enumerate_tilings(shape)]
        return _finish(shape, method, sum(ws), len(ws))
    if method == "redform":
        ws = [prod(diagrams.shifted_weight(shape, c)
                   for c in diagrams.broken_diagonals(D, shape).union)
              for D in diagrams.reverse_excited_diagrams(shape)]
        return _finish(shape, method, sum(ws), len(ws))
    if method == "flagform":
        ws = flagform_terms(shape)
        return _finish(shape, method, sum(ws), len(ws))
    if method == "eulerdet":
        n, k = thick_zigzag_params(shape)
        mat = [[Fraction(euler(m := 2 * (n + i + j - 1) - 1), factorial(m))
                for j in range(1, k + 1)] for i in range(1, k + 1)]
        value = factorial(shape.size) * det_fraction(mat)
        assert value.denominator == 1
        return CountReport(shape, method, int(value))
    raise ValueError(f"unknown method {method!r}; choose from {SYT_METHODS}")


def thick_zigzag_params(shape: SkewShape) -> tuple[int, int]:
    """(n, k) with shape = delta_{n+2k}/delta_n, else a domain error."""
    big = len(shape.outer) + 1
    if shape.outer != staircase(big):
        raise ShapeError(f"{shape} is not a thick zigzag")
    small = len(shape.inner) + 1
    candidates = [small] if shape.inner.parts else [0, 1]
    for n in candidates:
        if shape.inner == staircase(n) and big - n >= 2 and (big - n) % 2 == 0:
            return n, (big - n) // 2
    raise ShapeError(f"{shape} is not a thick zigzag")


def applicable_syt_methods(shape: SkewShape) -> list[str]:
    small = shape.size <= cell_budget(SYT_COUNT_LIMIT)
    out = [m for m in SYT_METHODS
           if m not in ("eulerdet", "kt", "brute") and (small or m not in SYT_ENUMERATIVE)]
    if small:
        out.insert(0, "brute")
    if small and shape.d + shape.lam(1) <= KT_BUDGET:
        out.append("kt")
    try:
        thick_zigzag_params(shape)
        out.append("eulerdet")
    except ShapeError:
        pass
    return out


def applicable_oot_methods(shape: SkewShape) -> list[str]:
    small = shape.size <= cell_budget(SYT_COUNT_LIMIT)
    return [m for m in OOT_METHODS if small or m not in OOT_ENUMERATIVE]


# Okounkov-Olshanski term counts

def content_flags(lam: Partition) -> dict[int, int]:
    """d^lambda_c: the last row i with (i, i+c) in lambda, 0 if none."""
    out = {}
    for c in range(-len(lam), lam[1] + 1):
        rows = [i for i in range(1, len(lam) + 1) if (i, i + c) in lam]
        out[c] = max(rows) if rows else 0
    return out


def ninth_variation_count(shape: SkewShape) -> int:
    """SSYT of lambda/mu with T(u) <= d^lambda_{c(u)}."""
    flags = content_flags(shape.outer)
    return sum(1 for _ in _fillings(shape, lambda u: 1, lambda u: flags.get(content(u), 0)))


def lp_matrix(shape: SkewShape) -> list[list[int]]:
    dec = lascoux_pragacz(shape)
    k = len(dec.strips)
    mat = []
    for i in range(k):
        row = []
        for j in range(k):
            sub = dec.strip_hash(i, j)
            if sub is None:
                # empty composition: 1 when the intervals abut, else 0
                lo = dec.strips[i].min_content
                hi = dec.strips[j].max_content
                row.append(1 if hi == lo - 1 else 0)
            else:
                row.append(ninth_variation_count(sub))
        mat.append(row)
    return mat


def count_oot_by(shape: SkewShape, method: str) -> CountReport:
    d = shape.d
    lam, mu = shape.outer, shape.inner
    if method in OOT_ENUMERATIVE:
        _check_budget(shape, method)
    if method == "enumerate":
        value = len(enumerate_oot(shape))
    elif method == "detRows":
        value = det_int([[binom(lam[i] - mu[j] + j - 1, i - 1) for j in range(1, d + 1)]
                         for i in range(1, d + 1)])
    elif method == "detCols":
        lc, mc = shape.outer_conj, shape.inner_conj
        size = lam[1]
        value = det_int([[binom(lc[i], mc[j] + i - j) for j in range(1, size + 1)]
                         for i in range(1, size + 1)])
    elif method == "lascouxPragacz":
        value = 1 if shape.size == 0 else det_int(lp_matrix(shape))
    elif method == "ninthVariation":
        value = ninth_variation_count(shape)
    else:
        raise ValueError(f"unknown method {method!r}; choose from {OOT_METHODS}")
    return CountReport(shape, method, value)


def slim_oot(shape: SkewShape) -> int:
    """Hook-content product prod (d + c(u)) / h(u) over mu, when mu_1 <= lambda_d."""
    if shape.mu(1) > shape.lam(shape.d):
        raise ShapeError("need mu_1 <= lambda_d")
    mu = shape.inner
    value = Fraction(1)
    for u in mu.cells():
        value *= Fraction(shape.d + content(u), hook(mu, u))
    assert value.denominator == 1
    return int(value)


def macmahon_oot(a: int, b: int, c: int, c_prime: int = 0) -> int:
    """OOT((b+c')^{a+c} / b^a) = MacMahon's box count M(a, b, c)."""
    value = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                value *= Fraction(i + j + k - 1, i + j + k - 2)
    assert value.denominator == 1
    return int(value)


def macmahon_shape(a: int, b: int, c: int, c_prime: int = 0) -> SkewShape:
    return SkewShape(Partition([b + c_prime] * (a + c)), Partition([b] * a))


def slim_power(lam: Partition) -> int:
    """OOT(lambda / delta_{d+1}) = 2^{C(d,2)} when lambda_d >= d."""
    d = len(lam)
    if lam[d] < d:
        raise ShapeError("need lambda_d >= d")
    return 2 ** binom(d, 2)


def rectangle_syt(a: int, d: int, mu: Partition) -> int:
    """f^{a^d / mu} from the product over mu."""
    if len(mu) > d or mu[1] > a:
        raise ShapeError(f"{mu} does not fit in a {d} x {a} box")
    value = Fraction(factorial(a * d - mu.size),
                     prod(i + j - 1 for i in range(1, d + 1) for j in range(1, a + 1)))
    for u in mu.cells():
        c = content(u)
        value *= Fraction((a - c) * (d + c), hook(mu, u))
    assert value.denominator == 1
    return int(value)


# Zigzags

def g_hat(n: int) -> Fraction:
    """G_{2n} / (2n)!."""
    return Fraction(genocchi(n), factorial(2 * n))


def thick_zigzag_oot(n: int, k: int) -> int:
    if k < 1 or n < 0:
        raise ShapeError("need k >= 1 and n >= 0")
    mat = [[g_hat(n + i + j - 1) for j in range(1, k + 1)] for i in range(1, k + 1)]
    value = det_fraction(mat)
    for i in range(1, k + 1):
        value *= Fraction(factorial(2 * (n + i + k - 1)), factorial(2 * i - 1))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral thick zigzag count {value}")
    return int(value)


def shifted_genocchi(n: int, k: int) -> int:
    """G^{(k)}_{2n} = C(2n, 2k) G_{2(n-k)} / (2k+1)."""
    if not 0 <= k < n:
        raise ShapeError("need n > k >= 0")
    q, r = divmod(comb(2 * n, 2 * k) * genocchi(n - k), 2 * k + 1)
    assert r == 0
    return q


def shifted_genocchi_recurrence(n: int, k: int, values) -> tuple[int, int]:
    """Both sides of C(2n-k-1, k) = sum_i (-1)^{n-i-1} C(2i-k, k) values(n, i)."""
    lhs = binom(2 * n - k - 1, k)
    rhs = sum((-1) ** (n - i - 1) * binom(2 * i - k, k) * values(n, i) for i in range(k, n))
    return lhs, rhs


@cache
def truncated_pistols(n: int, start: int, switch: int) -> int:
    """Sequences a_{2*start+1}..a_{2n-1} with a_m <= (m+1)/2, weakly decreasing
    through a_{2*switch+1}, then a_{2m-1} >= a_{2m} < a_{2m+1}."""
    first = 2 * start + 1
    last = 2 * n - 1
    counts = {a: 1 for a in range(1, (first + 1) // 2 + 1)}
    for m in range(first + 1, last + 1):
        bound = (m + 1) // 2
        nxt = {}
        for a in range(1, bound + 1):
            total = 0
            for b, cnt in counts.items():
                if m % 2 == 0:
                    ok = a <= b
                elif (m - 1) // 2 <= switch:
                    ok = a <= b
                else:
                    ok = a > b
                if ok:
                    total += cnt
            if total:
                nxt[a] = total
        counts = nxt
    return sum(counts.values())


def genocchi_hankel(k: int, variant: str = "odd") -> tuple[Fraction, Fraction]:
    """(Hankel determinant of scaled Genocchi numbers, product closed form)."""
    if k < 1:
        raise ValueError("k must be positive")
    shift = {"odd": 1, "even": 2}[variant]
    mat = [[g_hat(i + j + shift) for j in range(k)] for i in range(k)]
    closed = Fraction(1)
    for i in range(k):
        closed *= Fraction(factorial(2 * i + 1), factorial(2 * i + 2 * k + 2 * (shift - 1)))
    return det_fraction(mat), closed


def proportionality_factor(n: int, k: int) -> Fraction:
    m = k * (2 * n + 2 * k - 1)
    value = Fraction(2 ** m * factorial(m))
    for i in range(1, k + 1):
        value *= Fraction(factorial(2 * i - 1), factorial(2 * n + 2 * i + 2 * k - 2))
    return value


def proportionality(n: int, k: int) -> dict:
    """Check f = factor * OOT for delta_{n+2k}/delta_n with both sides computed independently."""
    shape = thick_zigzag(n, k)
    f = count_syt(shape, limit=max(shape.size, 24))
    oot = count_oot_by(shape, "detRows").value
    factor = proportionality_factor(n, k)
    return {"n": n, "k": k, "f": f, "oot": oot, "factor": factor, "holds": f == factor * oot}


def euler_identity_terms(n: int) -> list[int]:
    """Flagged tableaux weights of sigma_n, with lambda_t = n + 1 - t."""
    return flagform_terms(zigzag(n))


def euler_identity(n: int) -> tuple[int, Fraction]:
    """(E_{2n-1}, (2n-1)! / prod (2n-2i+1)^i * sum of flagged weights)."""
    denom = prod((2 * n - 2 * i + 1) ** i for i in range(1, n + 1))
    return euler(2 * n - 1), Fraction(factorial(2 * n - 1), denom) * sum(euler_identity_terms(n))


def sandwich_bounds(shape: SkewShape) -> tuple[Fraction, Fraction]:
    """(G, OOT * G) with G the term of the unexcited reverse diagram."""
    from .diagrams import broken_diagonals, initial_reverse, shifted_weight
    diag = broken_diagonals(initial_reverse(shape), shape)
    g = _prefactor(shape) * prod(shifted_weight(shape, c) for c in diag.union)
    return g, g * count_oot_by(shape, "detRows").value
