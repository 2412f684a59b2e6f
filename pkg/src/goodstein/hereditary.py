"""Run-compressed hereditary base-n normal forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from goodstein import terms as T
from goodstein.terms import Atom, Ordering, Run, Shape

DEFAULT_DIGIT_CAP = 10**6

ASTRONOMICAL = math.inf

# exponents whose own estimate exceeds this many digits make the whole form
# astronomically large for any practical cap
_EXPONENT_DIGIT_LIMIT = 300


class TooLarge(ArithmeticError):
    """The form is valid but its value has too many digits to materialise."""

    def __init__(self, digits: float, cap: int):
        super().__init__(f"estimated {digits:.4g} decimal digits exceeds cap {cap}")
        self.digits = digits
        self.cap = cap


@dataclass(frozen=True, repr=False)
class HForm:
    """A shape read in a concrete base.

    Exponents live in the shared :class:`~goodstein.terms.Shape` tree and are
    implicitly written in the same base, so the base is stored once.
    """

    base: int
    shape: Shape = T.ZERO

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 2:
            raise ValueError(f"base must be an integer >= 2, got {self.base!r}")
        if self.shape.digit_max >= self.base:
            raise T.NonCanonicalError(
                f"digit {self.shape.digit_max} is not below base {self.base}")

    @property
    def terms(self) -> tuple:
        return self.shape.terms

    def is_zero(self) -> bool:
        return not self.shape.terms

    def __bool__(self) -> bool:
        return bool(self.shape.terms)

    def sub(self, shape: Shape) -> "HForm":
        """An exponent or endpoint of this form, read in the same base."""
        return HForm(self.base, shape)

    def __str__(self) -> str:
        from goodstein.grammar import render
        return render(self)

    def __repr__(self) -> str:
        return f"HForm({self.base}, {str(self)!r})"


def zero(base: int) -> HForm:
    return HForm(base)


def from_natural(m: int, base: int) -> HForm:
    """Complete normal form of ``m``; digits are expanded greedily at every level."""
    if m < 0:
        raise ValueError("m must be a natural number")
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    return HForm(base, T.natural_shape(m, base))


def atom(coeff: int, exp: Union[HForm, int], base: int) -> HForm:
    """Convenience constructor for ``coeff * base**exp``."""
    if isinstance(exp, int):
        exp = from_natural(exp, base)
    return HForm(base, Shape((Atom(coeff, exp.shape),)))


def run(coeff: int, lo: Union[HForm, int], hi: Union[HForm, int], base: int,
        bound: int = None) -> HForm:
    """``coeff * sum(base**e)`` for bounded exponents ``lo <= e < hi``.

    ``bound`` defaults to ``base``, i.e. the plain geometric block.
    """
    if isinstance(lo, int):
        lo = from_natural(lo, base)
    if isinstance(hi, int):
        hi = from_natural(hi, base)
    s = Shape((Run(coeff, lo.shape, hi.shape, base if bound is None else bound),))
    T.validate(s, base)
    return HForm(base, s)


def validate(f: HForm) -> None:
    T.validate(f.shape, f.base)


# ---------------------------------------------------------------------------
# values


def _value(s: Shape, b: int, memo: Optional[dict] = None) -> int:
    # exponent subtrees are shared heavily, so values are memoised by identity
    if memo is None:
        memo = {}
    key = id(s)
    if key in memo:
        return memo[key][1]
    total = 0
    for t in s.terms:
        if isinstance(t, Atom):
            total += t.coeff * b ** _value(t.exp, b, memo)
        elif t.bound == b:
            lo, hi = _value(t.lo, b, memo), _value(t.hi, b, memo)
            total += t.coeff * ((b ** hi - b ** lo) // (b - 1))
        else:
            # bounded exponents correspond to the base-`bound` naturals in range
            k = t.bound
            j0, j1 = _value(t.lo, k), _value(t.hi, k)
            total += t.coeff * sum(b ** _value(T.natural_shape(j, k), b, memo)
                                   for j in range(j0, j1))
    # keep s alive so its id is not reused during this evaluation
    memo[key] = (s, total)
    return total


def _digits(s: Shape, b: int) -> float:
    if not s.terms:
        return 0.0
    lead = s.terms[0]
    if isinstance(lead, Atom):
        exp = lead.exp
        # c*b^x plus lower terms stays below (c+1)*b^x
        c = lead.coeff if len(s.terms) == 1 else lead.coeff + 1
    else:
        exp = lead.hi
        c = 1
    if _digits(exp, b) > _EXPONENT_DIGIT_LIMIT:
        return ASTRONOMICAL
    x = _value(exp, b)
    return math.log10(c) + x * math.log10(b) + 1.0


def estimate_digits(f: HForm) -> float:
    """Upper-bound estimate of ``log10(value) + 1`` without evaluating ``f``.

    Zero has 0 digits.  Returns :data:`ASTRONOMICAL` (``inf``) when even the
    leading exponent is too large to evaluate.
    """
    return _digits(f.shape, f.base)


def evaluate(f: HForm, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """Exact value of ``f``; raises :class:`TooLarge` above ``digit_cap`` digits."""
    if digit_cap < 1:
        raise ValueError("digit_cap must be at least 1")
    est = estimate_digits(f)
    if est > digit_cap:
        raise TooLarge(est, digit_cap)
    return _value(f.shape, f.base)


def try_evaluate(f: HForm, digit_cap: int = DEFAULT_DIGIT_CAP):
    """Like :func:`evaluate` but returns ``None`` instead of raising."""
    try:
        return evaluate(f, digit_cap)
    except TooLarge:
        return None


# ---------------------------------------------------------------------------
# structural operations


def bump(f: HForm, new_base: int) -> HForm:
    """Replace the base everywhere; coefficients and structure are untouched."""
    if new_base <= f.base:
        raise ValueError(f"new base {new_base} must exceed current base {f.base}")
    return HForm(new_base, f.shape)


def decrement(f: HForm) -> HForm:
    """``f - 1``, rewriting only the term of smallest exponent."""
    if f.is_zero():
        raise ValueError("cannot decrement zero")
    return HForm(f.base, T.pred(f.shape, f.base))


def successor(f: HForm) -> HForm:
    """``f + 1`` with carries absorbed into higher powers."""
    return HForm(f.base, T.succ(f.shape, f.base))


def compare_value(f: HForm, g: HForm) -> Ordering:
    """Numeric order of two same-base forms, decided without evaluation."""
    if f.base != g.base:
        raise ValueError(f"bases differ: {f.base} vs {g.base}")
    return T.compare(f.shape, g.shape)


def leading_exponent(f: HForm) -> HForm:
    """Largest exponent occurring in ``f`` (the top of a leading run)."""
    return HForm(f.base, T.top_exponent(f.shape))


def expand_runs(f: HForm) -> HForm:
    """Rewrite every top-level run as explicit atoms.

    Only intended for small runs: the number of atoms equals the number of
    exponents the run covers.
    """
    out = []
    for t in f.terms:
        if isinstance(t, Atom):
            out.append(t)
            continue
        e = t.lo
        block = []
        while T.compare(e, t.hi) == T.LESS:
            block.append(Atom(t.coeff, e))
            e = T.succ(e, t.bound)
        out.extend(reversed(block))
    return HForm(f.base, Shape(tuple(out)))
