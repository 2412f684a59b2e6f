"""Towers, the minimal tower bound, and the geometric decrement identity.

Towers follow ``a^^1 = a`` and ``a^^k = a ** (a^^(k-1))``; height 0 is rejected.
"""

from __future__ import annotations

import math

from goodstein import terms as T
from goodstein.hereditary import DEFAULT_DIGIT_CAP, HForm, evaluate
from goodstein.terms import Atom, Shape


def tower_form(a: int, k: int) -> HForm:
    """Exact normal form of ``a^^k`` in base ``a``; every coefficient is 1."""
    if k < 1:
        raise ValueError("tower height must be at least 1")
    if a < 2:
        raise ValueError("tower base must be at least 2")
    s = T.ONE
    for _ in range(k):
        s = Shape((Atom(1, s),))
    return HForm(a, s)


def superexp_value(a: int, k: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """Value of ``a^^k``; raises :class:`~goodstein.hereditary.TooLarge` past the cap."""
    return evaluate(tower_form(a, k), digit_cap)


def ceil_log(a: int, b: int) -> int:
    """Smallest ``e >= 0`` with ``a**e >= b``, in exact integer arithmetic."""
    if b <= 1:
        return 0
    # float estimate, then exact correction
    e = max(1, int(math.log(b) / math.log(a)))
    while a ** e < b:
        e += 1
    while e > 0 and a ** (e - 1) >= b:
        e -= 1
    return e


def tower_bound(a: int, b: int) -> int:
    """Smallest ``n >= 1`` with ``a^^n >= b``.

    ``a^^n >= b`` iff ``a^^(n-1) >= ceil_log(a, b)``, so the bound is found by
    repeatedly taking exact ceiling logarithms until the target drops to ``a``.
    """
    if a < 2 or b < 1:
        raise ValueError("need a >= 2 and b >= 1")
    n = 1
    while b > a:
        b = ceil_log(a, b)
        n += 1
    return n


def lemma34_check(a: int, b: int) -> bool:
    """Check ``a**b - 1 == (a - 1) * sum(a**i for i < b)`` exactly."""
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    return a ** b - 1 == (a - 1) * sum(a ** i for i in range(b))
