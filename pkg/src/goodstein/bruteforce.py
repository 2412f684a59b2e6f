"""Plain-integer Goodstein arithmetic, used as an independent oracle.

Nothing here touches the symbolic forms; every value is a Python ``int``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List


def hereditary_bump(n: int, base: int, new_base: int) -> int:
    """Write ``n`` in hereditary base ``base`` and replace every base by ``new_base``."""
    result = 0
    pos = 0
    while n:
        n, digit = divmod(n, base)
        if digit:
            result += digit * new_base ** hereditary_bump(pos, base, new_base)
        pos += 1
    return result


def goodstein_values(m: int, base0: int, increments: Iterable[int],
                     max_steps: int) -> List[int]:
    """Values ``g(m, a_0), g(m, a_1), ...`` up to zero or ``max_steps`` steps."""
    values = [m]
    base = base0
    it = iter(increments)
    for _ in range(max_steps):
        if m == 0:
            break
        nb = base + next(it)
        m = hereditary_bump(m, base, nb) - 1
        base = nb
        values.append(m)
    return values


def classic_values(m: int, max_steps: int) -> List[int]:
    return goodstein_values(m, 2, _ones(), max_steps)


def _ones() -> Iterator[int]:
    while True:
        yield 1


def tower(a: int, k: int) -> int:
    """``a`` iterated ``k`` times: ``a``, ``a**a``, ``a**(a**a)``, ..."""
    if k < 1:
        raise ValueError("tower height must be at least 1")
    v = a
    for _ in range(k - 1):
        v = a ** v
    return v


def tower_bound_brute(a: int, b: int) -> int:
    """Smallest ``n >= 1`` with ``tower(a, n) >= b``, by direct enumeration."""
    n, v = 1, a
    while v < b:
        n += 1
        if v > b.bit_length():
            # a**v >= 2**v > b without materialising a**v
            return n
        v = a ** v
    return n
