"""Base-free term structure shared by hereditary forms and ordinal shapes.

A :class:`Shape` is a hereditary normal form with the base erased.  Reading it
with a concrete base ``b`` gives a natural number; reading it with ``omega``
gives an ordinal below epsilon-zero.  Both readings induce the same order on
shapes whose digits stay below ``b``, so a single comparison routine serves
both :func:`goodstein.hereditary.compare_value` and
:func:`goodstein.ordinal.compare_shape`.

Terms come in two flavours:

``Atom(c, e)``
    ``c * base**e``.

``Run(d, lo, hi, bound)``
    ``d * sum(base**x)`` over every exponent ``x`` with ``lo <= x < hi`` whose
    hereditary digits are all below ``bound``.  When ``bound`` equals the
    current base this is the plain geometric block ``[lo, hi)``.  Keeping the
    bound explicit is what makes runs survive a base bump: the exponents of a
    run created in base ``k`` and bumped to base ``b`` are exactly the
    ``k``-bounded base-``b`` forms between the bumped endpoints.

Invariants (checked by :func:`validate`):

* terms are sorted strictly descending and their exponent regions are disjoint;
* ``1 <= coeff``; for runs ``coeff < bound`` and both endpoints are
  ``bound``-bounded shapes with ``lo < hi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property, lru_cache
from typing import Optional, Union


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, x, y) -> "Ordering":
        return cls.LESS if x < y else cls.GREATER if x > y else cls.EQUAL


LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


@dataclass(frozen=True, repr=False)
class Shape:
    terms: tuple = ()

    def __repr__(self) -> str:
        return f"Shape({self.template!r})"

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @cached_property
    def digit_max(self) -> int:
        """Largest digit that can occur anywhere in the form (0 for zero)."""
        return max((t.digit_max for t in self.terms), default=0)

    @cached_property
    def size(self) -> int:
        """Number of term nodes, counted through every exponent level."""
        return sum(t.size for t in self.terms)

    @cached_property
    def depth(self) -> int:
        return max((t.depth for t in self.terms), default=0)

    @property
    def has_runs(self) -> bool:
        return any(isinstance(t, Run) or t.exp.has_runs for t in self.terms)

    def is_bounded(self, k: int) -> bool:
        return self.digit_max < k

    @cached_property
    def template(self) -> str:
        """Canonical rendering with the base written as ``X``; ``0`` for zero."""
        if not self.terms:
            return "0"
        return " + ".join(t.template for t in self.terms)


@dataclass(frozen=True)
class Atom:
    coeff: int
    exp: Shape

    @property
    def low(self) -> Shape:
        return self.exp

    @property
    def top(self) -> Shape:
        return self.exp

    @cached_property
    def digit_max(self) -> int:
        return max(self.coeff, self.exp.digit_max)

    @property
    def template(self) -> str:
        return f"{self.coeff}*X^({self.exp.template})"

    @cached_property
    def size(self) -> int:
        return 1 + self.exp.size

    @cached_property
    def depth(self) -> int:
        return 1 + self.exp.depth


@dataclass(frozen=True)
class Run:
    coeff: int
    lo: Shape
    hi: Shape
    bound: int

    @property
    def low(self) -> Shape:
        return self.lo

    @cached_property
    def top(self) -> Shape:
        """Largest exponent covered by the run."""
        return pred(self.hi, self.bound)

    @property
    def digit_max(self) -> int:
        return self.bound - 1

    @property
    def template(self) -> str:
        text = f"{self.coeff}*X^[{self.lo.template}..{self.hi.template})"
        if self.bound != self.coeff + 1:
            text += f"{{{self.bound}}}"
        return text

    @cached_property
    def size(self) -> int:
        return 1 + self.lo.size + self.hi.size

    @cached_property
    def depth(self) -> int:
        return 1 + max(self.lo.depth, self.hi.depth)


Term = Union[Atom, Run]

ZERO = Shape(())
ONE = Shape((Atom(1, ZERO),))


@lru_cache(maxsize=1 << 16)
def natural_shape(m: int, base: int) -> Shape:
    """Complete hereditary base-``base`` normal form of ``m``."""
    if m < 0:
        raise ValueError("negative numbers have no normal form")
    terms = []
    pos = 0
    while m:
        m, c = divmod(m, base)
        if c:
            terms.append(Atom(c, natural_shape(pos, base)))
        pos += 1
    return Shape(tuple(reversed(terms)))


# ---------------------------------------------------------------------------
# successor / predecessor relative to a carry threshold


def make_run(coeff: int, lo: Shape, hi: Shape, bound: int) -> list:
    """Terms (descending) covering the bounded exponents in ``[lo, hi)``.

    Empty ranges vanish and single-exponent ranges collapse to an atom.
    """
    if compare(lo, hi) >= 0:
        return []
    if compare(succ(lo, bound), hi) == EQUAL:
        return [Atom(coeff, lo)]
    return [Run(coeff, lo, hi, bound)]


def succ(s: Shape, k: int) -> Shape:
    """``s + 1`` where a digit reaching ``k`` carries into the next power.

    ``s`` must be ``k``-bounded; the result is too.
    """
    asc = s.terms[::-1]
    pos = ZERO
    i = 0
    new: list = []
    while True:
        if i == len(asc):
            new = [Atom(1, pos)]
            break
        t = asc[i]
        c = compare(t.low, pos)
        if c == GREATER:
            new = [Atom(1, pos)]
            i -= 1
            break
        assert c == EQUAL, "terms below the carry position"
        if isinstance(t, Atom):
            if t.coeff + 1 < k:
                new = [Atom(t.coeff + 1, pos)]
                break
            pos = succ(pos, k)
        else:
            if t.coeff + 1 < k:
                # descending: rest of the run sits above the bumped digit
                new = make_run(t.coeff, succ(pos, t.bound), t.hi, t.bound)
                new.append(Atom(t.coeff + 1, pos))
                break
            # full-digit contiguous block: (k-1)(k^lo + ... + k^(hi-1)) + k^lo = k^hi
            assert t.bound == k
            pos = t.hi
        i += 1
    rest = asc[i + 1:][::-1]
    return Shape(tuple(rest) + tuple(new))


def pred(s: Shape, k: int) -> Shape:
    """``s - 1`` in base ``k``; only the lowest term changes."""
    if not s.terms:
        raise ValueError("zero has no predecessor")
    *rest, t = s.terms
    new: list = []
    if isinstance(t, Atom):
        if t.coeff > 1:
            new.append(Atom(t.coeff - 1, t.exp))
        if t.exp:
            new += make_run(k - 1, ZERO, t.exp, k)
    else:
        new += make_run(t.coeff, succ(t.lo, t.bound), t.hi, t.bound)
        if t.coeff > 1:
            new.append(Atom(t.coeff - 1, t.lo))
        if t.lo:
            new += make_run(k - 1, ZERO, t.lo, k)
    return Shape(tuple(rest) + tuple(new))


# ---------------------------------------------------------------------------
# order


def _run_vs_point(r: Run, e: Shape) -> Ordering:
    """Order of the top exponent of ``r`` against the exponent ``e``."""
    if e.digit_max < r.bound:
        # e is a possible member of r: compare hi against e and its successor
        if compare(r.hi, e) <= 0:
            return LESS
        return compare(r.hi, succ(e, r.bound))
    return compare(r.top, e)


def _tops(x: Term, y: Term) -> Ordering:
    if isinstance(x, Atom):
        if isinstance(y, Atom):
            return compare(x.exp, y.exp)
        return Ordering(-_run_vs_point(y, x.exp))
    if isinstance(y, Atom):
        return _run_vs_point(x, y.exp)
    if x.bound == y.bound:
        return compare(x.hi, y.hi)
    return compare(x.top, y.top)


def _drop_top(r: Run, other: Term) -> Optional[Run]:
    """``r`` without its top exponent, which is known to equal ``other``'s."""
    if isinstance(other, Atom) and other.exp.digit_max < r.bound:
        top = other.exp
    else:
        top = r.top
    if compare(r.lo, top) == EQUAL:
        return None
    return Run(r.coeff, r.lo, top, r.bound)


def compare(s: Shape, t: Shape) -> Ordering:
    """Order of two shapes, read in a common base or as ordinals.

    Sweeps both term lists from the top, locating the largest exponent at
    which the coefficient functions differ.  Runs are consumed in blocks when
    their bounds agree and one exponent at a time otherwise.
    """
    if s is t:
        return EQUAL
    a, b = s.terms, t.terms
    i = j = 0
    x = a[0] if a else None
    y = b[0] if b else None
    while True:
        if x is None:
            return EQUAL if y is None else LESS
        if y is None:
            return GREATER
        if x is y:
            drop_x = drop_y = True
        else:
            x_term = x
            c = _tops(x, y)
            if c:
                return c
            if x.coeff != y.coeff:
                return Ordering.of(x.coeff, y.coeff)
            drop_x = drop_y = False
            if isinstance(x, Run) and isinstance(y, Run) and x.bound == y.bound:
                c = compare(x.lo, y.lo)
                if c == EQUAL:
                    drop_x = drop_y = True
                elif c == GREATER:
                    drop_x = True
                    y = Run(y.coeff, y.lo, x.lo, y.bound)
                else:
                    drop_y = True
                    x = Run(x.coeff, x.lo, y.lo, x.bound)
            else:
                if isinstance(x, Atom):
                    drop_x = True
                else:
                    x = _drop_top(x, y)
                    drop_x = x is None
                if isinstance(y, Atom):
                    drop_y = True
                else:
                    y = _drop_top(y, x_term)
                    drop_y = y is None
        if drop_x:
            i += 1
            x = a[i] if i < len(a) else None
        if drop_y:
            j += 1
            y = b[j] if j < len(b) else None


def top_exponent(s: Shape) -> Shape:
    """Largest exponent present in a non-zero shape."""
    if not s.terms:
        raise ValueError("zero has no exponents")
    return s.terms[0].top


# ---------------------------------------------------------------------------
# validation


class NonCanonicalError(ValueError):
    """A structurally well-formed form that violates a canonical invariant."""


def validate(s: Shape, base: Optional[int] = None) -> None:
    """Raise :class:`NonCanonicalError` unless ``s`` is canonical.

    With ``base`` given, every digit must also stay below it.
    """
    prev: Optional[Term] = None
    for t in s.terms:
        if t.coeff < 1:
            raise NonCanonicalError(f"coefficient {t.coeff} must be at least 1")
        if base is not None and t.coeff >= base:
            raise NonCanonicalError(f"coefficient {t.coeff} is not below base {base}")
        if isinstance(t, Atom):
            validate(t.exp, base)
        else:
            if t.bound < 2:
                raise NonCanonicalError(f"run bound {t.bound} must be at least 2")
            if base is not None and t.bound > base:
                raise NonCanonicalError(f"run bound {t.bound} exceeds base {base}")
            if t.coeff >= t.bound:
                raise NonCanonicalError(
                    f"run coefficient {t.coeff} is not below its bound {t.bound}")
            validate(t.lo, base)
            validate(t.hi, base)
            for end in (t.lo, t.hi):
                if not end.is_bounded(t.bound):
                    raise NonCanonicalError(
                        f"run endpoint has digits at or above its bound {t.bound}")
            if compare(t.lo, t.hi) != LESS:
                raise NonCanonicalError("run is empty: lower endpoint not below upper")
        if prev is not None and compare(prev.low, t.top) != GREATER:
            raise NonCanonicalError("terms are not strictly descending")
        prev = t
