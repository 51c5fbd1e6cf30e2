"""Exact Laurent polynomials and truncated Laurent series in q, and the
q-analogues of the reverse plane partition ratio rpp_{lambda/mu}/rpp_lambda."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial
from operator import mul

from .shapes import Partition, ShapeError, SkewShape, content, hook_product
from .tableaux import (BudgetError, enumerate_oot, enumerate_ssyt, enumerate_svt,
                       oof_weight, rpp_series, ssyt_series, statistics, straight)


class QLaurent:
    """Laurent polynomial sum_i coeffs[i] q^(min_deg + i), trimmed."""

    __slots__ = ("min_deg", "coeffs")

    def __init__(self, min_deg: int = 0, coeffs=()):
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(coeffs[lo:hi])
        self.min_deg = min_deg + lo if self.coeffs else 0

    @classmethod
    def const(cls, c: int) -> QLaurent:
        return cls(0, [c])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QLaurent:
        return cls(k, [c])

    @classmethod
    def bracket(cls, a: int) -> QLaurent:
        """[a] = 1 - q^a."""
        return cls.const(1) - cls.monomial(a)

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        i = k - self.min_deg
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _lift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        return QLaurent(lo, [self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self):
        return QLaurent(self.min_deg, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return QLaurent()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QLaurent(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QLaurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurent.const(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def at_one(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> dict:
        return {"minDeg": self.min_deg, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> QLaurent:
        return cls(int(data["minDeg"]), [int(c) for c in data["coeffs"]])

    def __repr__(self):
        return f"QLaurent({self.min_deg}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.min_deg + i
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _lift(x) -> QLaurent:
    if isinstance(x, QLaurent):
        return x
    if isinstance(x, int):
        return QLaurent.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


class QSeries:
    """Laurent series known exactly up to and including degree `trunc`."""

    __slots__ = ("min_deg", "coeffs", "trunc")

    def __init__(self, min_deg: int, coeffs, trunc: int):
        self.min_deg = min_deg
        self.trunc = trunc
        n = max(trunc - min_deg + 1, 0)
        cs = list(coeffs)[:n]
        self.coeffs = cs + [0] * (n - len(cs))

    @classmethod
    def from_poly(cls, p: QLaurent, trunc: int) -> QSeries:
        lo = min(p.min_deg, trunc)
        return cls(lo, [p.coeff(k) for k in range(lo, trunc + 1)], trunc)

    def coeff(self, k: int) -> int:
        if k > self.trunc:
            raise ValueError(f"degree {k} beyond truncation {self.trunc}")
        i = k - self.min_deg
        return self.coeffs[i] if i >= 0 else 0

    def _valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.min_deg + i
        return None

    def __add__(self, other):
        if isinstance(other, QLaurent):
            other = QSeries.from_poly(other, self.trunc)
        trunc = min(self.trunc, other.trunc)
        lo = min(self.min_deg, other.min_deg)
        return QSeries(lo, [self.coeff(k) + other.coeff(k) for k in range(lo, trunc + 1)], trunc)

    def __neg__(self):
        return QSeries(self.min_deg, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.min_deg, [c * other for c in self.coeffs], self.trunc)
        if isinstance(other, QLaurent):
            if other.is_zero():
                return QSeries(self.min_deg, [], self.trunc)
            lo = self.min_deg + other.min_deg
            # a polynomial factor shifts the known range by its lowest degree
            trunc = self.trunc + other.min_deg
            out = [0] * max(trunc - lo + 1, 0)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if i + j < len(out):
                            out[i + j] += a * b
            return QSeries(lo, out, trunc)
        va, vb = self._valuation(), other._valuation()
        # each factor is exact below its truncation, so the product is exact
        # up to min(trunc_a + val_b, trunc_b + val_a)
        if va is None or vb is None:
            trunc = min(self.trunc + (other.min_deg if vb is None else vb),
                        other.trunc + (self.min_deg if va is None else va))
            return QSeries(self.min_deg + other.min_deg, [], trunc)
        trunc = min(self.trunc + vb, other.trunc + va)
        lo = va + vb
        out = [0] * max(trunc - lo + 1, 0)
        a_off, b_off = va - self.min_deg, vb - other.min_deg
        for i in range(len(out)):
            ai = self.coeffs[a_off + i] if a_off + i < len(self.coeffs) else 0
            if not ai:
                continue
            for j in range(len(out) - i):
                bj = other.coeffs[b_off + j] if b_off + j < len(other.coeffs) else 0
                out[i + j] += ai * bj
        return QSeries(lo, out, trunc)

    __rmul__ = __mul__

    def inverse(self) -> QSeries:
        v = self._valuation()
        if v is None:
            raise ZeroDivisionError("series is zero to its truncation")
        lead = self.coeffs[v - self.min_deg]
        if lead not in (1, -1):
            raise ValueError("lowest coefficient must be a unit")
        n = self.trunc - v  # known terms beyond the leading one
        a = self.coeffs[v - self.min_deg:]
        inv = [0] * (n + 1)
        inv[0] = lead
        for k in range(1, n + 1):
            s = sum(a[i] * inv[k - i] for i in range(1, k + 1) if i < len(a))
            inv[k] = -s * lead
        return QSeries(-v, inv, n - v)

    def truncate(self, trunc: int) -> QSeries:
        return QSeries(self.min_deg, self.coeffs, min(trunc, self.trunc))

    def to_poly(self) -> QLaurent:
        return QLaurent(self.min_deg, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        lo = min(self.min_deg, other.min_deg)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, trunc + 1))

    def __repr__(self):
        return f"QSeries({self.min_deg}, {self.coeffs}, trunc={self.trunc})"


def bracket(a: int) -> QLaurent:
    return QLaurent.bracket(a)


def bracket_factorial(n: int) -> QLaurent:
    out = QLaurent.const(1)
    for i in range(1, n + 1):
        out = out * bracket(i)
    return out


def inverse_bracket_factorial(n: int, trunc: int) -> QSeries:
    """1/[n]! expanded; zero when n < 0."""
    if n < 0:
        return QSeries(0, [], trunc)
    return QSeries.from_poly(bracket_factorial(n), trunc).inverse()


def _weight_product(shape: SkewShape, t) -> QLaurent:
    out = QLaurent.const(1)
    for u, v in t.items():
        out = out * bracket(oof_weight(shape, u, v))
    return out


def degree_bound(shape: SkewShape) -> int:
    """A priori bound on the degree of the rpp ratio polynomial."""
    d = shape.d
    total = 0
    for u in shape.inner.cells():
        total += sum(max(oof_weight(shape, u, k), 0) for k in range(1, d + 1))
    return total


RATIO_METHODS = ("minStat", "maxStat", "excitedPeaks", "reverseExcited",
                 "krattenthaler", "grothendieck")
RATIO_BUDGET = 8


def rpp_ratio(shape: SkewShape, method: str = "minStat") -> QLaurent:
    """rpp_{lambda/mu}(q) / rpp_lambda(q) as an exact Laurent polynomial."""
    if method == "minStat":
        total = QLaurent()
        for t in enumerate_oot(shape):
            total = total + QLaurent.monomial(statistics(t, shape).p) * _weight_product(shape, t)
        return total
    if method == "maxStat":
        total = QLaurent()
        for t in enumerate_oot(shape):
            total = total + QLaurent.monomial(statistics(t, shape).p_star) * _weight_product(shape, t)
        return total
    if method == "excitedPeaks":
        from .diagrams import excited_peaks, oo_excited_diagrams, peak_weight
        total = QLaurent()
        for diag in oo_excited_diagrams(shape):
            exp = sum(peak_weight(shape, c) for c in excited_peaks(diag))
            term = QLaurent.monomial(exp)
            for c in diag.cells:
                term = term * bracket(peak_weight(shape, c))
            total = total + term
        return total
    if method == "reverseExcited":
        from .diagrams import broken_diagonals, reverse_excited_diagrams, right_neighbors, shifted_weight
        total = QLaurent()
        for diag in reverse_excited_diagrams(shape):
            exp = sum(shifted_weight(shape, c) for c in right_neighbors(diag, shape))
            term = QLaurent.monomial(exp)
            for c in broken_diagonals(diag, shape).union:
                term = term * bracket(shifted_weight(shape, c))
            total = total + term
        return total
    if method == "krattenthaler":
        _check_budget(shape)
        return _krattenthaler_ratio(shape)
    if method == "grothendieck":
        _check_budget(shape)
        return grothendieck_ratio(shape)
    raise ValueError(f"unknown method {method!r}; choose from {RATIO_METHODS}")


def _check_budget(shape: SkewShape):
    if shape.outer.size > RATIO_BUDGET:
        raise BudgetError(f"|lambda| = {shape.outer.size} exceeds budget {RATIO_BUDGET}")


def _series_det(matrix: list[list[QSeries]]) -> QSeries:
    """Laplace expansion along rows, memoised on the set of used columns."""
    n = len(matrix)
    memo: dict[int, QSeries] = {}

    def minor(row: int, used: int) -> QSeries | None:
        if row == n:
            return None  # stands for the constant 1
        if used in memo:
            return memo[used]
        acc = None
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if any(entry.coeffs):
                rest = minor(row + 1, used | 1 << col)
                term = entry if rest is None else entry * rest
                term = term if sign > 0 else -term
                acc = term if acc is None else acc + term
            sign = -sign
        if acc is None:
            acc = QSeries(0, [], matrix[0][0].trunc)
        memo[used] = acc
        return acc

    out = minor(0, 0)
    return out


def rpp_straight_closed(lam: Partition, max_deg: int) -> QSeries:
    """prod_{i<j} [l_i - l_j] / prod [l_i]! with l_i = lambda_i + d - i."""
    d = len(lam)
    ell = [lam[i] + d - i for i in range(1, d + 1)]
    num = QLaurent.const(1)
    for i in range(d):
        for j in range(i + 1, d):
            num = num * bracket(ell[i] - ell[j])
    den = QLaurent.const(1)
    for x in ell:
        den = den * bracket_factorial(x)
    return QSeries.from_poly(num, max_deg) * QSeries.from_poly(den, max_deg).inverse()


def krattenthaler_series(shape: SkewShape, max_deg: int) -> QSeries:
    """rpp_{lambda/mu} as det[q^{l_i (j-i)} / [lambda_i - i - mu_j + j]!]."""
    d = shape.d
    if d == 0:
        return QSeries(0, [1], max_deg)
    ell = [shape.lam(i) + d - i for i in range(1, d + 1)]
    # entries can carry negative powers; pad the working precision to cover them
    slack = sum(max(e * (d - 1), 0) for e in ell)
    work = max_deg + slack
    mat = []
    for i in range(1, d + 1):
        row = []
        for j in range(1, d + 1):
            n = shape.lam(i) - i - shape.mu(j) + j
            shift = ell[i - 1] * (j - i)
            row.append(inverse_bracket_factorial(n, work - shift) * QLaurent.monomial(shift))
        mat.append(row)
    return _series_det(mat).truncate(max_deg)


def _certify(series: QSeries, bound: int, what: str) -> QLaurent:
    for k in range(bound + 1, series.trunc + 1):
        if series.coeff(k):
            raise BudgetError(f"{what}: nonzero coefficient at degree {k} beyond bound {bound}")
    return series.truncate(bound).to_poly()


def _krattenthaler_ratio(shape: SkewShape) -> QLaurent:
    bound = degree_bound(shape)
    trunc = bound + shape.size + 4
    num = krattenthaler_series(shape, trunc)
    den = rpp_straight_closed(shape.outer, trunc)
    return _certify(num * den.inverse(), bound, "krattenthaler ratio")


def grothendieck_ratio(shape: SkewShape) -> QLaurent:
    """Signed sum over set-valued tableaux of shape mu with entries <= d."""
    d = shape.d
    mu = shape.inner
    total = QLaurent()
    for svt in enumerate_svt(mu, d, mu.size * max(d - 1, 0)):
        term = QLaurent.const(-1 if svt.surplus % 2 else 1)
        for u, vals in svt.items():
            for r in vals:
                term = term * bracket(oof_weight(shape, u, r))
        total = total + term
    return total


def grothendieck_group_sums(shape: SkewShape) -> dict:
    """Grothendieck terms summed within each max-tableau group."""
    from .tableaux import svt_groups
    d = shape.d
    mu = shape.inner
    out = {}
    for t0, group in svt_groups(enumerate_svt(mu, d, mu.size * max(d - 1, 0))).items():
        acc = QLaurent()
        for svt in group:
            term = QLaurent.const(-1 if svt.surplus % 2 else 1)
            for u, vals in svt.items():
                for r in vals:
                    term = term * bracket(oof_weight(shape, u, r))
            acc = acc + term
        out[t0] = acc
    return out


def ratio_series_oracle(shape: SkewShape, max_deg: int) -> QSeries:
    """rpp_{lambda/mu} / rpp_lambda from two brute-force DP series."""
    num = rpp_series(shape, max_deg)
    den = rpp_series(straight(shape.outer), max_deg)
    return num * den.inverse()


def ssyt_ratio_q(shape: SkewShape) -> QLaurent:
    """sum over SSYT(mu, d) of prod q^{T(u)-d} (1 - q^{w(u,T(u))})."""
    d = shape.d
    total = QLaurent()
    for t in enumerate_ssyt(shape.inner, max_entry=d) if shape.inner.parts else [None]:
        if t is None:
            return QLaurent.const(1)
        term = QLaurent.const(1)
        for u, v in t.items():
            term = term * QLaurent.monomial(v - d) * bracket(oof_weight(shape, u, v))
        total = total + term
    return total


def schur_principal_closed(lam: Partition, max_deg: int) -> QSeries:
    """s_lambda(1, q, q^2, ...) = q^{b(lambda)} / prod (1 - q^{h(u)})."""
    from .shapes import conjugate, hook
    b = sum(c * (c - 1) // 2 for c in conjugate(lam).parts)
    den = QLaurent.const(1)
    for u in lam.cells():
        den = den * bracket(hook(lam, u))
    return QSeries.from_poly(QLaurent.monomial(b), max_deg) * QSeries.from_poly(den, max_deg).inverse()


def ssyt_ratio_oracle(shape: SkewShape, max_deg: int) -> QSeries:
    """s_{lambda/mu}(1,q,...)/s_lambda(1,q,...) with a DP numerator."""
    b = sum(c * (c - 1) // 2 for c in shape.outer_conj.parts)
    num = ssyt_series(shape, max_deg + b)
    return (num * schur_principal_closed(shape.outer, max_deg + b).inverse()).truncate(max_deg)


def q_to_one_limit(p: QLaurent, mu_size: int) -> int:
    """lim_{q->1} p(q) / (1-q)^mu_size by repeated exact division."""
    coeffs = list(p.coeffs)
    for _ in range(mu_size):
        if sum(coeffs) != 0:
            raise ValueError("polynomial does not vanish to the required order at q=1")
        # divide by (1 - q): partial sums of the coefficients
        out, acc = [], 0
        for c in coeffs[:-1]:
            acc += c
            out.append(acc)
        coeffs = out
    return sum(coeffs)


def syt_from_ratio(shape: SkewShape, p: QLaurent) -> Fraction:
    """f^{lambda/mu} recovered as |lambda/mu|! / prod h * lim (1-q)^{-|mu|} p."""
    lim = q_to_one_limit(p, shape.inner.size)
    return Fraction(factorial(shape.size) * lim, hook_product(shape.outer))


# Factorial Grothendieck polynomials at numeric points.

def oplus(a, b):
    return a + b - a * b


def grothendieck_svt(mu: Partition, xs: list, a) -> Fraction:
    """G_mu(x | a) as a signed sum over SVT(mu, len(xs)); `a` maps index -> value."""
    n = len(xs)
    total = Fraction(0)
    for svt in enumerate_svt(mu, n, mu.size * max(n - 1, 0)):
        term = Fraction(-1 if svt.surplus % 2 else 1)
        for u, vals in svt.items():
            for r in vals:
                term *= oplus(xs[r - 1], a(r + content(u)))
        total += term
    return total


def grothendieck_bialternant(mu: Partition, xs: list, a) -> Fraction:
    """det[[x_i|a]^{mu_j+n-j} (1-x_i)^{j-1}] / prod_{i<j} (x_i - x_j)."""
    from .counting import det_fraction
    n = len(xs)
    mat = []
    for i in range(n):
        row = []
        for j in range(1, n + 1):
            k = mu[j] + n - j
            val = reduce(mul, (oplus(xs[i], a(m)) for m in range(1, k + 1)), Fraction(1))
            row.append(val * (1 - xs[i]) ** (j - 1))
        mat.append(row)
    vdm = reduce(mul, (xs[i] - xs[j] for i in range(n) for j in range(i + 1, n)), Fraction(1))
    return det_fraction(mat) / vdm
