"""Property suites behind ``goodstein verify``.

Each suite returns a :class:`Report` counting cases and failures and keeping
the first counterexample.  The randomized suites are seeded, so reports are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Union

from goodstein import bruteforce
from goodstein.grammar import parse, parse_shape, render, render_shape
from goodstein.hereditary import (HForm, bump, compare_value, decrement,
                                  estimate_digits, evaluate, from_natural)
from goodstein.lemmas import lemma34_check, tower_bound
from goodstein.ordinal import compare_shape
from goodstein.sequence import (CLASSIC, Schedule, SeededRandom, compare_sequences,
                                forms, iterate, start, drop_final_zero)
from goodstein.terms import Ordering


@dataclass
class Report:
    suite: str
    cases: int = 0
    failures: int = 0
    counterexample: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def fail(self, what: str) -> None:
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = what

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        line = f"{self.suite}: {self.cases} cases, {self.failures} failures"
        if self.notes:
            line += " (" + "; ".join(self.notes) + ")"
        return line


def _order(x: int, y: int) -> Ordering:
    return Ordering.of(x, y)


# ---------------------------------------------------------------------------
# random forms


def random_form(rng: random.Random, base: int, max_digits: int = 300) -> HForm:
    """A random canonical form in ``base`` whose value has at most ``max_digits`` digits.

    Forms are produced the way sequences produce them: a random start in a
    smaller base, a few bump-and-decrement steps, then a few plain
    decrements.  This mixes exact atoms with runs whose bound lies below the
    current base.
    """
    while True:
        b = rng.randint(2, base)
        digits = rng.randint(1, max(1, max_digits // 3))
        f = from_natural(rng.randrange(10 ** digits), b)
        while b < base and not f.is_zero():
            nb = rng.randint(b + 1, base)
            g = bump(f, nb)
            if estimate_digits(g) > max_digits:
                break
            f, b = decrement(g), nb
        if b != base:
            continue
        for _ in range(rng.randint(0, 4)):
            if f.is_zero():
                break
            f = decrement(f)
        if estimate_digits(f) <= max_digits:
            return f


def _near(rng: random.Random, f: HForm) -> HForm:
    """A form close to ``f`` in value, to exercise long common prefixes."""
    g = f
    for _ in range(rng.randint(0, 3)):
        if g.is_zero():
            break
        g = decrement(g)
    return g


# ---------------------------------------------------------------------------
# suites


def decrement_oracle(cases: int = 10_000, seed: int = 0, bases=(2, 16),
                     max_digits: int = 300) -> Report:
    rng = random.Random(seed)
    rep = Report("decrement-oracle")
    while rep.cases < cases:
        f = random_form(rng, rng.randint(*bases), max_digits)
        if f.is_zero():
            continue
        rep.cases += 1
        g = decrement(f)
        if evaluate(g) != evaluate(f) - 1:
            rep.fail(render(f))
    return rep


def compare_oracle(cases: int = 10_000, seed: int = 0, bases=(2, 16),
                   max_digits: int = 300) -> Report:
    """Agreement of value and shape comparison with integer order."""
    rng = random.Random(seed)
    rep = Report("compare-oracle")
    for _ in range(cases):
        base = rng.randint(*bases)
        f = random_form(rng, base, max_digits)
        g = _near(rng, f) if rng.random() < 0.5 else random_form(rng, base, max_digits)
        if rng.random() < 0.5:
            f, g = g, f
        want = _order(evaluate(f), evaluate(g))
        rep.cases += 1
        if compare_value(f, g) != want:
            rep.fail(f"compare_value {render(f)} vs {render(g)}")
        if compare_shape(f.shape, g.shape) != want:
            rep.fail(f"compare_shape {render_shape(f.shape)} vs {render_shape(g.shape)}")
    return rep


def lemma34(a_max: int = 50, b_max: int = 50) -> Report:
    rep = Report("lemma34")
    for a in range(2, a_max + 1):
        for b in range(1, b_max + 1):
            rep.cases += 1
            if not lemma34_check(a, b):
                rep.fail(f"a={a} b={b}")
    return rep


def monotone(x_max: int = 128, steps: int = 10, base0: int = 2,
             schedule: Schedule = CLASSIC) -> Report:
    """All pairs ``1 <= y < x <= x_max`` under one shared schedule."""
    rep = Report("monotone")
    seqs = {m: drop_final_zero(forms(m, base0, schedule, steps)) for m in range(1, x_max + 1)}
    for x in range(2, x_max + 1):
        for y in range(1, x):
            rep.cases += 1
            v = compare_sequences(seqs[x], seqs[y], steps)
            if not v.holds:
                rep.fail(f"x={x} y={y} schedule={schedule.spec()}: {v}")
    return rep


def monotone_generalized(schedules: int = 100, x_max: int = 32, steps: int = 10,
                         seed: int = 0, d_max: int = 10) -> Report:
    rep = Report("monotone-generalized")
    rng = random.Random(seed)
    for _ in range(schedules):
        sched = SeededRandom(rng.getrandbits(64), 1, d_max)
        base0 = rng.randint(2, 5)
        sub = monotone(x_max, steps, base0, sched)
        rep.cases += sub.cases
        for _ in range(sub.failures):
            rep.fail(sub.counterexample)
    return rep


def ordinal(m: Union[int, HForm] = 16, steps: int = 100_000, base0: int = 2,
            schedule: Schedule = CLASSIC, distinct: bool = True) -> Report:
    """Run the engine with its per-step ordinal check switched on.

    Every step also checks bump invariance of the shape and, with
    ``distinct``, that no shape repeats.
    """
    rep = Report("ordinal")
    st = start(m, base0)
    seen = {st.form.shape.template} if distinct else None
    try:
        for d, before, after in iterate(st, schedule, steps):
            rep.cases += 1
            if bump(before.form, after.base).shape != before.form.shape:
                rep.fail(f"bump changed shape at step {after.n}")
            if distinct:
                key = after.form.shape.template
                if key in seen:
                    rep.fail(f"shape repeated at step {after.n}: {key}")
                seen.add(key)
    except AssertionError as exc:
        rep.fail(str(exc))
    rep.notes.append(f"{rep.cases - rep.failures} decreases")
    return rep


def serialization(texts: Iterable[str], shapes: Iterable[str] = ()) -> Report:
    """Every rendering re-parses to a value that renders identically."""
    rep = Report("serialization")
    for t in texts:
        rep.cases += 1
        if render(parse(t)) != t:
            rep.fail(t)
    for t in shapes:
        rep.cases += 1
        if render_shape(parse_shape(t)) != t:
            rep.fail(t)
    return rep


def tower_minimality(cases: int = 1000, seed: int = 0, a_range=(2, 10),
                     b_max: int = 10**18) -> Report:
    rng = random.Random(seed)
    rep = Report("tower-bound")
    for a in range(a_range[0], a_range[1] + 1):
        for _ in range(cases):
            b = rng.randint(1, b_max)
            rep.cases += 1
            if tower_bound(a, b) != bruteforce.tower_bound_brute(a, b):
                rep.fail(f"a={a} b={b}")
    return rep


def termination(ms=(1, 2, 3), bases=(2, 3, 4, 5), schedules: int = 100,
                seed: int = 0, d_max: int = 10, max_steps: int = 10_000) -> Report:
    """Small starts terminate with the same step count as the integer oracle."""
    rng = random.Random(seed)
    rep = Report("termination")
    for _ in range(schedules):
        sched = SeededRandom(rng.getrandbits(64), 1, d_max)
        for m in ms:
            for base0 in bases:
                rep.cases += 1
                fs = forms(m, base0, sched, max_steps)
                want = bruteforce.goodstein_values(m, base0, sched.increments(), max_steps)
                if not fs[-1].is_zero() or [evaluate(f) for f in fs] != want:
                    rep.fail(f"m={m} base0={base0} schedule={sched.spec()}")
    return rep
