"""Euler, Genocchi and median Genocchi numbers, pistols, superfactorials."""

from functools import cache
from math import factorial


@cache
def _seidel_row(n: int) -> tuple[int, ...]:
    # boustrophedon triangle; row n has n+1 entries and ends in E_n
    if n == 0:
        return (1,)
    prev = _seidel_row(n - 1)
    row = [0]
    for x in reversed(prev):
        row.append(row[-1] + x)
    return tuple(row)


def euler(n: int) -> int:
    """Euler zigzag number E_n (alternating permutations of n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _seidel_row(n)[-1]


def genocchi(n: int) -> int:
    """G_{2n}, obtained from E_{2n-1} by the exact relation G = 2n E / 2^(2n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    num = 2 * n * euler(2 * n - 1)
    den = 2 ** (2 * n - 1)
    q, r = divmod(num, den)
    assert r == 0, f"Genocchi division not exact at n={n}"
    return q


@cache
def _pistol_table(length: int, strict: bool) -> dict[int, int]:
    # number of valid prefixes of the given length, keyed by last value
    if length == 1:
        return {1: 1}
    prev = _pistol_table(length - 1, strict)
    bound = (length + 1) // 2
    out: dict[int, int] = {}
    for a in range(1, bound + 1):
        total = 0
        for b, cnt in prev.items():
            if strict:
                # even positions descend weakly, odd positions ascend strictly
                ok = a <= b if length % 2 == 0 else a > b
                if not ok:
                    continue
            total += cnt
        if total:
            out[a] = total
    return out


def pistol_count(length: int, strict_alternating: bool = True) -> int:
    """Count pistols a_1..a_length with a_k <= (k+1)/2.

    Strictly alternating means a_{2i-1} >= a_{2i} < a_{2i+1}.
    """
    if length < 1:
        raise ValueError("length must be positive")
    return sum(_pistol_table(length, strict_alternating).values())


def median_genocchi(n: int) -> int:
    """H_{2n+1}: strictly alternating pistols of length 2n."""
    if n < 1:
        raise ValueError("n must be positive")
    return pistol_count(2 * n, True)


def superfactorials(n: int) -> tuple[int, int, int]:
    """Return (prod i!, prod (2i-1)!, prod (2i-1)!!) for i = 1..n."""
    phi = psi = lam = 1
    for i in range(1, n + 1):
        phi *= factorial(i)
        psi *= factorial(2 * i - 1)
        lam *= double_factorial(2 * i - 1)
    return phi, psi, lam


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out
