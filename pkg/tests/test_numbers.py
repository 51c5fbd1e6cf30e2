from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from skewtab.numbers import (double_factorial, euler, genocchi, median_genocchi,
                             pistol_count, superfactorials)


def alternating_count(n):
    # permutations w_1 > w_2 < w_3 > ...
    return sum(1 for w in permutations(range(n))
               if all((w[i] > w[i + 1]) == (i % 2 == 0) for i in range(n - 1)))


def brute_pistols(length, strict):
    count = 0
    for seq in product(*(range(1, (k + 1) // 2 + 1) for k in range(1, length + 1))):
        if strict and not all(seq[i] >= seq[i + 1] if i % 2 == 0 else seq[i] < seq[i + 1]
                              for i in range(length - 1)):
            continue
        count += 1
    return count


@pytest.mark.parametrize("n", range(0, 9))
def test_euler_matches_alternating_permutations(n):
    assert euler(n) == alternating_count(n)


def test_euler_values():
    assert [euler(n) for n in range(9)] == [1, 1, 1, 2, 5, 16, 61, 272, 1385]


@pytest.mark.parametrize("n, value", [(1, 1), (2, 1), (3, 3), (4, 17), (5, 155), (6, 2073)])
def test_genocchi_values(n, value):
    assert genocchi(n) == value


@pytest.mark.parametrize("n", range(1, 6))
def test_genocchi_counts_odd_pistols(n):
    assert pistol_count(2 * n - 1) == genocchi(n) == brute_pistols(2 * n - 1, True)


@pytest.mark.parametrize("n, value", [(1, 1), (2, 2), (3, 8), (4, 56)])
def test_median_genocchi(n, value):
    assert median_genocchi(n) == value == brute_pistols(2 * n, True)


@pytest.mark.parametrize("length", range(1, 8))
def test_unrestricted_pistols_are_a_product(length):
    expected = 1
    for k in range(1, length + 1):
        expected *= (k + 1) // 2
    assert pistol_count(length, strict_alternating=False) == expected


def test_superfactorials():
    assert superfactorials(3) == (1 * 2 * 6, 1 * 6 * 120, 1 * 3 * 15)
    assert superfactorials(0) == (1, 1, 1)


@given(st.integers(0, 30))
def test_double_factorial_recursion(n):
    assert double_factorial(n + 2) == (n + 2) * double_factorial(n)


@given(st.integers(1, 40))
def test_genocchi_is_integral_from_euler(n):
    assert genocchi(n) * 2 ** (2 * n - 1) == 2 * n * euler(2 * n - 1)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        euler(-1)
    with pytest.raises(ValueError):
        genocchi(0)
    with pytest.raises(ValueError):
        pistol_count(0)
