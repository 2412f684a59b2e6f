"""Sanity checks of the integer oracle against hand-computed values."""

from goodstein import bruteforce


def test_hereditary_bump_by_hand():
    # 4 = 2^2 = 2^(2^1) -> 3^(3^1) = 27
    assert bruteforce.hereditary_bump(4, 2, 3) == 27
    # 5 = 2^(2^1) + 1 -> 4^4 + 1
    assert bruteforce.hereditary_bump(5, 2, 4) == 257
    # 26 = 2*3^2 + 2*3 + 2 -> 2*16 + 2*4 + 2
    assert bruteforce.hereditary_bump(26, 3, 4) == 42
    assert bruteforce.hereditary_bump(0, 2, 9) == 0


def test_classic_values_by_hand():
    assert bruteforce.classic_values(1, 10) == [1, 0]
    assert bruteforce.classic_values(2, 10) == [2, 2, 1, 0]
    assert bruteforce.classic_values(3, 10) == [3, 3, 3, 2, 1, 0]
    assert bruteforce.classic_values(4, 5) == [4, 26, 41, 60, 83, 109]


def test_generalized_values_by_hand():
    # base 3 -> 5: 2 stays 2, then 1, then 0
    assert bruteforce.goodstein_values(2, 3, [2, 2, 2], 10) == [2, 1, 0]
    # 3 = 3^1 in base 3; bump to 5 gives 5, minus one is 4
    assert bruteforce.goodstein_values(3, 3, iter([2] * 20), 2) == [3, 4, 3]


def test_tower():
    assert [bruteforce.tower(2, k) for k in range(1, 5)] == [2, 4, 16, 65536]
    assert bruteforce.tower(3, 3) == 7625597484987


def test_tower_bound_brute():
    assert bruteforce.tower_bound_brute(2, 1) == 1
    assert bruteforce.tower_bound_brute(2, 16) == 3
    assert bruteforce.tower_bound_brute(2, 17) == 4
    assert bruteforce.tower_bound_brute(10, 10**18) == 3
