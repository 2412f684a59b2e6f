"""Base-erased shapes as ordinals below epsilon-zero, and the per-step
termination certificate."""

from __future__ import annotations

from dataclasses import dataclass

from goodstein import terms as T
from goodstein.grammar import render_shape
from goodstein.hereditary import HForm, bump, compare_value
from goodstein.terms import Ordering, Shape


def shape_of(f: HForm) -> Shape:
    """The form with its base erased."""
    return f.shape


def compare_shape(s: Shape, t: Shape) -> Ordering:
    """Ordinal order of two shapes (base replaced by omega)."""
    return T.compare(s, t)


@dataclass(frozen=True)
class StepCheck:
    ok: bool
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_step_decrease(before: HForm, after: HForm, new_base: int) -> StepCheck:
    """Certify that one Goodstein step strictly lowered the ordinal measure.

    Checks that bumping left the shape unchanged and that the result is below
    the bumped form in value; the two together force a strict ordinal drop,
    which is then compared directly as well.
    """
    if before.is_zero():
        raise ValueError("a step from zero is undefined")
    bumped = bump(before, new_base)
    problems = []
    if shape_of(bumped) != shape_of(before):
        problems.append("bump changed the shape")
    if after.base != new_base:
        problems.append(f"result base {after.base} is not {new_base}")
    elif compare_value(after, bumped) != Ordering.LESS:
        problems.append("result is not below the bumped form")
    if compare_shape(shape_of(after), shape_of(before)) != Ordering.LESS:
        problems.append("shape did not decrease")
    if not problems:
        return StepCheck(True)
    detail = "; ".join(problems)
    return StepCheck(False, f"{detail}\n  before: {render_shape(shape_of(before))}"
                            f"\n  after:  {render_shape(shape_of(after))}")
