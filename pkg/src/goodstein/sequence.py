"""Classic and generalized Goodstein sequences over hereditary forms.

A generalized sequence starts from ``m`` written in base ``a_0 >= 2``; each
step raises the base by the next schedule increment ``d >= 1`` and subtracts
one.  ``a_0 = 2`` with every ``d = 1`` is the classic sequence.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Sequence, Union

from goodstein.grammar import render, render_shape
from goodstein.hereditary import (DEFAULT_DIGIT_CAP, HForm, bump, compare_value,
                                  decrement, estimate_digits, from_natural,
                                  try_evaluate)
from goodstein.ordinal import check_step_decrease
from goodstein.terms import Ordering


class ScheduleExhausted(Exception):
    """A strict explicit schedule ran out of increments."""


class OrdinalCheckFailed(AssertionError):
    """A step failed to lower the ordinal measure; this is never expected."""


# ---------------------------------------------------------------------------
# schedules


@dataclass(frozen=True)
class Constant:
    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("increment must be at least 1")

    def increments(self) -> Iterator[int]:
        while True:
            yield self.d

    def to_json(self) -> dict:
        return {"kind": "constant", "d": self.d}

    def spec(self) -> str:
        return f"const:{self.d}"


@dataclass(frozen=True)
class Explicit:
    ds: tuple
    tail_policy: str = "repeat-last"

    def __post_init__(self):
        object.__setattr__(self, "ds", tuple(self.ds))
        if not self.ds:
            raise ValueError("explicit schedule needs at least one increment")
        if any(d < 1 for d in self.ds):
            raise ValueError("increments must be at least 1")
        if self.tail_policy not in ("repeat-last", "error-on-exhaustion"):
            raise ValueError(f"unknown tail policy {self.tail_policy!r}")

    def increments(self) -> Iterator[int]:
        yield from self.ds
        if self.tail_policy == "error-on-exhaustion":
            raise ScheduleExhausted(f"schedule exhausted after {len(self.ds)} increments")
        while True:
            yield self.ds[-1]

    def to_json(self) -> dict:
        return {"kind": "explicit", "ds": list(self.ds), "tail_policy": self.tail_policy}

    def spec(self) -> str:
        tail = "repeat" if self.tail_policy == "repeat-last" else "strict"
        return "list:" + ",".join(map(str, self.ds)) + "," + tail


@dataclass(frozen=True)
class SeededRandom:
    """Increments drawn uniformly from ``[d_min, d_max]``.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed`` and
    one ``randint(d_min, d_max)`` call per increment, so a seed fixes the
    whole schedule.
    """

    seed: int
    d_min: int = 1
    d_max: int = 10

    def __post_init__(self):
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be a 64-bit natural")
        if self.d_min < 1 or self.d_max < self.d_min:
            raise ValueError("need 1 <= d_min <= d_max")

    def increments(self) -> Iterator[int]:
        rng = random.Random(self.seed)
        while True:
            yield rng.randint(self.d_min, self.d_max)

    def to_json(self) -> dict:
        return {"kind": "seeded-random", "seed": self.seed,
                "d_min": self.d_min, "d_max": self.d_max}

    def spec(self) -> str:
        return f"rand:{self.seed}:{self.d_min}:{self.d_max}"


Schedule = Union[Constant, Explicit, SeededRandom]

CLASSIC = Constant(1)


def parse_schedule(text: str) -> Schedule:
    """``const:<d>`` | ``list:<d1>,<d2>,...[,repeat|,strict]`` | ``rand:<seed>:<min>:<max>``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "const":
            return Constant(int(rest))
        if kind == "list":
            parts = rest.split(",")
            policy = "repeat-last"
            if parts and parts[-1] in ("repeat", "strict"):
                policy = "repeat-last" if parts.pop() == "repeat" else "error-on-exhaustion"
            return Explicit(tuple(int(p) for p in parts), policy)
        if kind == "rand":
            seed, d_min, d_max = (int(p) for p in rest.split(":"))
            return SeededRandom(seed, d_min, d_max)
    except ValueError as exc:
        raise ValueError(f"bad schedule {text!r}: {exc}") from None
    raise ValueError(f"bad schedule {text!r}: unknown kind {kind!r}")


def schedule_from_json(obj: dict) -> Schedule:
    kind = obj["kind"]
    if kind == "constant":
        return Constant(obj["d"])
    if kind == "explicit":
        return Explicit(tuple(obj["ds"]), obj["tail_policy"])
    if kind == "seeded-random":
        return SeededRandom(obj["seed"], obj["d_min"], obj["d_max"])
    raise ValueError(f"unknown schedule kind {kind!r}")


# ---------------------------------------------------------------------------
# engine


@dataclass(frozen=True)
class SequenceState:
    n: int
    form: HForm

    @property
    def base(self) -> int:
        return self.form.base

    @property
    def terminated(self) -> bool:
        return self.form.is_zero()


def start(m: Union[int, HForm], base0: int) -> SequenceState:
    if base0 < 2:
        raise ValueError("initial base must be at least 2")
    if isinstance(m, HForm):
        if m.base != base0:
            raise ValueError(f"start form is in base {m.base}, not {base0}")
        return SequenceState(0, m)
    return SequenceState(0, from_natural(m, base0))


def step(state: SequenceState, d: int) -> SequenceState:
    """Raise the base by ``d`` and subtract one."""
    if state.terminated:
        raise ValueError("sequence already terminated")
    if d < 1:
        raise ValueError("increment must be at least 1")
    return SequenceState(state.n + 1, decrement(bump(state.form, state.base + d)))


@dataclass
class TraceRecord:
    n: int
    base_before: int
    d: int
    base_after: int
    form: str
    shape: str
    digits10: float
    value: Optional[str]
    ordinal_decreased: bool


@dataclass(frozen=True)
class Outcome:
    kind: str  # TerminatedAt | StepBudgetExhausted | ScheduleExhausted
    step: int

    def __str__(self) -> str:
        return f"{self.kind} {self.step}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "step": self.step}


def decimal_string(n: int) -> str:
    try:
        return str(n)
    except ValueError:
        # interpreter cap on int -> str conversion
        old = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(0)
        try:
            return str(n)
        finally:
            sys.set_int_max_str_digits(old)


def _record(state: SequenceState, base_before: int, d: int, digit_cap: int) -> TraceRecord:
    f = state.form
    value = try_evaluate(f, digit_cap)
    return TraceRecord(
        n=state.n, base_before=base_before, d=d, base_after=f.base,
        form=render(f), shape=render_shape(f.shape), digits10=estimate_digits(f),
        value=None if value is None else decimal_string(value),
        ordinal_decreased=True)


def iterate(state: SequenceState, schedule: Schedule, max_steps: int) -> Iterator[tuple]:
    """Yield ``(d, before, after)`` for each step, verifying the ordinal drop.

    Stops at zero or after ``max_steps``; a strict schedule running dry raises
    :class:`ScheduleExhausted`.
    """
    incs = schedule.increments()
    for _ in range(max_steps):
        if state.terminated:
            return
        d = next(incs)
        nxt = step(state, d)
        check = check_step_decrease(state.form, nxt.form, nxt.base)
        if not check:
            raise OrdinalCheckFailed(f"step {nxt.n}: {check.diagnostic}")
        yield d, state, nxt
        state = nxt


def run(m: Union[int, HForm], base0: int, schedule: Schedule = CLASSIC,
        max_steps: int = 1000, digit_cap: int = DEFAULT_DIGIT_CAP,
        sink: Optional[Callable[[TraceRecord], None]] = None) -> Outcome:
    """Run a sequence, feeding one record per state (step 0 included) to ``sink``."""
    state = start(m, base0)
    emit = sink or (lambda rec: None)
    emit(_record(state, state.base, 0, digit_cap))
    try:
        for d, before, state in iterate(state, schedule, max_steps):
            emit(_record(state, before.base, d, digit_cap))
    except ScheduleExhausted:
        return Outcome("ScheduleExhausted", state.n)
    if state.terminated:
        return Outcome("TerminatedAt", state.n)
    return Outcome("StepBudgetExhausted", state.n)


@dataclass
class Trace:
    start: HForm
    base0: int
    schedule: Schedule
    digit_cap: int
    records: List[TraceRecord] = field(default_factory=list)
    outcome: Optional[Outcome] = None
    m: Optional[int] = None


def trace(m: Union[int, HForm], base0: int, schedule: Schedule = CLASSIC,
          max_steps: int = 1000, digit_cap: int = DEFAULT_DIGIT_CAP) -> Trace:
    """Run a sequence and collect every record."""
    st = start(m, base0)
    t = Trace(start=st.form, base0=base0, schedule=schedule, digit_cap=digit_cap,
              m=m if isinstance(m, int) else try_evaluate(st.form, digit_cap))
    t.outcome = run(st.form, base0, schedule, max_steps, digit_cap, t.records.append)
    return t


def forms(m: Union[int, HForm], base0: int, schedule: Schedule = CLASSIC,
          max_steps: int = 1000) -> List[HForm]:
    """The forms ``g(m, a_0), g(m, a_1), ...`` without trace bookkeeping."""
    st = start(m, base0)
    out = [st.form]
    for _, _, st in iterate(st, schedule, max_steps):
        out.append(st.form)
    return out


# ---------------------------------------------------------------------------
# monotonicity in the starting value


@dataclass(frozen=True)
class Verdict:
    kind: str  # HoldsStrictly | HoldsWithEqualZeros | Violated | Inconclusive
    step: Optional[int] = None

    def __str__(self) -> str:
        return self.kind if self.step is None else f"{self.kind}({self.step})"

    @property
    def holds(self) -> bool:
        return self.kind in ("HoldsStrictly", "HoldsWithEqualZeros")


def compare_sequences(xs: Sequence[HForm], ys: Sequence[HForm], steps: int) -> Verdict:
    """Lockstep verdict for two runs sharing base and schedule.

    A finished sequence stays at zero; equality is only acceptable there.
    """
    for n in range(steps + 1):
        x = xs[n] if n < len(xs) else None
        y = ys[n] if n < len(ys) else None
        if x is None and y is None:
            return Verdict("HoldsWithEqualZeros", n)
        if x is None:
            return Verdict("Violated", n)
        if y is None:
            continue
        if compare_value(x, y) != Ordering.GREATER:
            return Verdict("Violated", n)
    return Verdict("HoldsStrictly")


def drop_final_zero(fs: List[HForm]) -> List[HForm]:
    # drop the trailing zero: positions past the end read as "terminated"
    return fs[:-1] if fs and fs[-1].is_zero() else fs


def monotone_compare(x: int, y: int, base0: int = 2, schedule: Schedule = CLASSIC,
                     steps: int = 10) -> Verdict:
    """Check ``g(x, n) > g(y, n)`` for the first ``steps`` steps, unless both are zero."""
    if not x > y >= 1:
        raise ValueError("need x > y >= 1")
    xs = drop_final_zero(forms(x, base0, schedule, steps))
    ys = drop_final_zero(forms(y, base0, schedule, steps))
    return compare_sequences(xs, ys, steps)
