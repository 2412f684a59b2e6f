import random

import pytest
from hypothesis import given, settings, strategies as st

from goodstein import bruteforce
from goodstein import terms as T
from goodstein.grammar import render
from goodstein.hereditary import (ASTRONOMICAL, HForm, TooLarge, atom, bump, compare_value,
                                  decrement, estimate_digits, evaluate, expand_runs,
                                  from_natural, leading_exponent, run, successor,
                                  try_evaluate, zero)
from goodstein.lemmas import tower_form
from goodstein.suites import random_form
from goodstein.terms import Atom, NonCanonicalError, Ordering, Run


def top_exponents(f):
    return [evaluate(HForm(f.base, t.exp)) for t in f.terms]


def coeffs(f):
    return [t.coeff for t in f.terms]


def all_coeffs(s):
    for t in s.terms:
        yield t.coeff
        if isinstance(t, Atom):
            yield from all_coeffs(t.exp)
        else:
            yield from all_coeffs(t.lo)
            yield from all_coeffs(t.hi)


# --- from_natural ---------------------------------------------------------


def test_311_base_2():
    f = from_natural(311, 2)
    assert top_exponents(f) == [8, 5, 4, 2, 1, 0]
    assert coeffs(f) == [1] * 6
    assert render(f) == ("1*2^(1*2^(1*2^(1*2^(0)) + 1*2^(0))) + 1*2^(1*2^(1*2^(1*2^(0))) + 1*2^(0))"
                         " + 1*2^(1*2^(1*2^(1*2^(0)))) + 1*2^(1*2^(1*2^(0))) + 1*2^(1*2^(0))"
                         " + 1*2^(0)")


def test_311_base_3():
    f = from_natural(311, 3)
    assert top_exponents(f) == [5, 3, 2, 1, 0]
    assert coeffs(f) == [1, 2, 1, 1, 2]


def test_108_base_3_absorbs_coefficient():
    f = from_natural(108, 3)
    assert top_exponents(f) == [4, 3]
    assert coeffs(f) == [1, 1]


def test_zero():
    for b in (2, 7, 100):
        f = from_natural(0, b)
        assert f.is_zero() and not f
        assert f == zero(b)
        assert evaluate(f) == 0


def test_negative_rejected():
    with pytest.raises(ValueError):
        from_natural(-1, 2)


def test_base_below_two_rejected():
    with pytest.raises(ValueError):
        from_natural(3, 1)


def test_round_trip_small_exhaustive():
    for b in range(2, 17):
        for m in range(0, 3000):
            assert evaluate(from_natural(m, b)) == m


def test_round_trip_sampled_to_million():
    rng = random.Random(1)
    for b in range(2, 17):
        for m in [10**6] + [rng.randint(0, 10**6) for _ in range(400)]:
            assert evaluate(from_natural(m, b)) == m


@given(st.integers(0, 10**40), st.integers(2, 40))
def test_round_trip_property(m, b):
    f = from_natural(m, b)
    assert evaluate(f) == m
    assert not f.shape.has_runs


# --- evaluate / estimate_digits ---------------------------------------------


def test_run_lemma_instance():
    assert evaluate(run(2, 0, 3, 3)) == 26


def test_tower_too_large():
    with pytest.raises(TooLarge):
        evaluate(tower_form(3, 4), 10**6)
    assert try_evaluate(tower_form(3, 4)) is None


def test_digit_cap_must_be_positive():
    with pytest.raises(ValueError):
        evaluate(from_natural(3, 2), 0)


def test_estimate_digits_examples():
    assert estimate_digits(zero(5)) == 0
    assert 3 <= estimate_digits(from_natural(311, 2)) <= 4
    assert 13 <= estimate_digits(atom(1, 27, 3)) <= 14


def test_tower_digit_estimates():
    # 3^^4 has about 3.6e12 digits: the estimate stays finite
    assert 3.6e12 < estimate_digits(tower_form(3, 4)) < 3.7e12
    assert 13 <= estimate_digits(tower_form(3, 3)) <= 14
    # one level further even the exponent's digit count is out of reach
    assert estimate_digits(tower_form(3, 5)) == ASTRONOMICAL


@given(st.integers(1, 10**60), st.integers(2, 20))
def test_estimate_is_upper_bound(m, b):
    est = estimate_digits(from_natural(m, b))
    assert len(str(m)) <= est + 1e-9
    # one level of reduction loses at most about log10(b) + 1 digits
    assert est <= len(str(m)) + 2 + len(str(b))


def test_estimate_monotone_run_free():
    for b in (2, 3, 10):
        ests = [estimate_digits(from_natural(m, b)) for m in range(0, 2000)]
        assert all(x <= y + 1e-9 for x, y in zip(ests, ests[1:]))


def test_estimate_bounds_runs():
    rng = random.Random(5)
    for _ in range(300):
        f = random_form(rng, rng.randint(2, 12), 200)
        v = evaluate(f)
        assert len(str(v)) <= estimate_digits(f) + 1e-9 or v == 0


def test_run_expansion_equivalence():
    rng = random.Random(2)
    for _ in range(300):
        b = rng.randint(2, 9)
        hi = rng.randint(1, 64)
        lo = rng.randint(0, hi - 1)
        c = rng.randint(1, b - 1)
        f = run(c, lo, hi, b)
        g = expand_runs(f)
        assert not g.shape.has_runs
        assert evaluate(f) == evaluate(g) == c * sum(b ** e for e in range(lo, hi))


def test_bounded_run_expansion_equivalence():
    # exponents whose hereditary digits stay below the run's bound
    f = run(1, 0, 5, 4, bound=2)
    # of the exponents 0..4 only 0, 1 and 4 have base-4 digits below 2
    g = expand_runs(f)
    assert evaluate(f) == evaluate(g) == 4**0 + 4**1 + 4**4


# --- bump ---------------------------------------------------------------------


def test_bump_examples():
    assert evaluate(bump(from_natural(4, 2), 3)) == 27
    assert bump(zero(2), 5) == zero(5)
    assert evaluate(bump(from_natural(5, 2), 4)) == 257


def test_bump_rejects_non_increase():
    f = from_natural(4, 3)
    for nb in (2, 3):
        with pytest.raises(ValueError):
            bump(f, nb)


def test_bump_matches_integer_oracle():
    for b in range(2, 6):
        for nb in range(b + 1, b + 4):
            for m in range(0, 400):
                f = bump(from_natural(m, b), nb)
                assert evaluate(f) == bruteforce.hereditary_bump(m, b, nb)
                assert f.shape == from_natural(m, b).shape


def _bumped_values(nb, m_max):
    """Integer bumps of 0..m_max from base 2 to nb; top-level powers are shared."""
    pow_cache = {}
    out = []
    for m in range(m_max + 1):
        v, pos, n = 0, 0, m
        while n:
            n, digit = divmod(n, 2)
            if digit:
                e = bruteforce.hereditary_bump(pos, 2, nb)
                if e not in pow_cache:
                    pow_cache[e] = nb ** e
                v += pow_cache[e]
            pos += 1
        out.append(v)
    return out


def test_bump_monotonicity_bruteforce():
    for nb in range(3, 7):
        vals = _bumped_values(nb, 2000)
        # strictly increasing over m covers every pair m > m'
        assert all(x < y for x, y in zip(vals, vals[1:]))
        if nb <= 5:
            assert [evaluate(bump(from_natural(m, 2), nb)) for m in range(2001)] == vals


# --- decrement / successor ---------------------------------------------------


def test_decrement_27_base_3():
    f = decrement(atom(1, 3, 3))
    assert f == run(2, 0, 3, 3)
    assert evaluate(f) == 26


def test_decrement_one_is_zero():
    for b in (2, 3, 11):
        assert decrement(from_natural(1, b)).is_zero()


def test_decrement_run_base_4():
    f = run(2, 0, 3, 4)
    assert evaluate(f) == 42
    g = decrement(f)
    assert g == HForm(4, T.Shape(run(2, 1, 3, 4).terms + from_natural(1, 4).terms))
    assert evaluate(g) == 41


def test_decrement_zero_rejected():
    with pytest.raises(ValueError):
        decrement(zero(3))


def test_decrement_oracle_random():
    rng = random.Random(3)
    for _ in range(1500):
        f = random_form(rng, rng.randint(2, 16), 300)
        if f:
            assert evaluate(decrement(f)) == evaluate(f) - 1


def test_decrement_locality():
    # every term above the minimal one is carried over unchanged
    rng = random.Random(4)
    for _ in range(800):
        f = random_form(rng, rng.randint(2, 16), 200)
        if not f:
            continue
        g = decrement(f)
        keep = f.terms[:-1]
        assert g.terms[:len(keep)] == keep


def test_successor_examples():
    assert successor(zero(3)) == from_natural(1, 3)
    assert successor(from_natural(2, 3)) == atom(1, 1, 3)
    assert successor(from_natural(8, 3)) == from_natural(9, 3)


def test_successor_run_free_round_trip():
    for b in range(2, 8):
        for m in range(0, 2000):
            f = from_natural(m, b)
            g = successor(f)
            assert g == from_natural(m + 1, b)
            assert not g.shape.has_runs
            assert decrement(g) == f or evaluate(decrement(g)) == m


def test_decrement_after_successor_value_identity():
    # structural identity fails once a carry happens (see notes), values agree
    rng = random.Random(6)
    for _ in range(1000):
        f = random_form(rng, rng.randint(2, 16), 200)
        g = successor(f)
        assert evaluate(g) == evaluate(f) + 1
        assert evaluate(decrement(g)) == evaluate(f)


def test_decrement_after_successor_structural_without_carry():
    for b in range(3, 8):
        for m in range(0, 500):
            if m % b != b - 1:
                f = from_natural(m, b)
                assert decrement(successor(f)) == f


def test_coefficient_bound_along_compositions():
    rng = random.Random(7)
    for _ in range(200):
        b = rng.randint(2, 6)
        f = from_natural(rng.randint(0, 10**6), b)
        for _ in range(30):
            op = rng.random()
            if op < 0.4:
                b += rng.randint(1, 3)
                f = bump(f, b)
            elif op < 0.8 and f:
                f = decrement(f)
            else:
                f = successor(f)
            assert all(c < f.base for c in all_coeffs(f.shape))
            T.validate(f.shape, f.base)


# --- compare_value -------------------------------------------------------------


def test_compare_examples():
    f = from_natural(311, 2)
    assert compare_value(f, f) == Ordering.EQUAL
    assert compare_value(zero(2), from_natural(1, 2)) == Ordering.LESS
    assert compare_value(run(2, 0, 3, 3), atom(1, 3, 3)) == Ordering.LESS
    assert compare_value(atom(1, 3, 3), run(2, 0, 3, 3)) == Ordering.GREATER


def test_compare_rejects_mixed_bases():
    with pytest.raises(ValueError):
        compare_value(from_natural(3, 2), from_natural(3, 3))


def test_compare_run_free_exhaustive():
    for b in (2, 3, 5):
        fs = [from_natural(m, b) for m in range(0, 150)]
        for i, f in enumerate(fs):
            for j, g in enumerate(fs):
                assert compare_value(f, g) == Ordering.of(i, j)


def test_compare_random_against_integers():
    rng = random.Random(8)
    for _ in range(1500):
        b = rng.randint(2, 16)
        f, g = random_form(rng, b, 200), random_form(rng, b, 200)
        assert compare_value(f, g) == Ordering.of(evaluate(f), evaluate(g))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**64), st.integers(2, 9), st.integers(0, 8), st.integers(0, 8))
def test_compare_near_values(seed, b, i, j):
    # forms a few decrements apart share long prefixes
    f = random_form(random.Random(seed), b, 150)
    xs = [f]
    for _ in range(max(i, j)):
        if xs[-1]:
            xs.append(decrement(xs[-1]))
    x, y = xs[min(i, len(xs) - 1)], xs[min(j, len(xs) - 1)]
    assert compare_value(x, y) == Ordering.of(evaluate(x), evaluate(y))


# --- construction and validation ------------------------------------------------


def test_run_constructor_validation():
    with pytest.raises(NonCanonicalError):
        run(3, 0, 2, 3)  # coefficient must stay below the base
    with pytest.raises(NonCanonicalError):
        run(1, 2, 2, 3)  # empty range


def test_hform_rejects_large_coefficient():
    with pytest.raises((ValueError, NonCanonicalError)):
        HForm(2, T.Shape((Atom(2, T.ZERO),)))


def test_leading_exponent():
    assert evaluate(leading_exponent(from_natural(311, 2))) == 8
    assert evaluate(leading_exponent(run(2, 0, 3, 3))) == 2
    with pytest.raises(ValueError):
        leading_exponent(zero(2))


def test_engine_runs_render_without_bound_suffix():
    f = decrement(bump(decrement(atom(1, 3, 3)), 4))
    assert render(f) == "2*4^[1*4^(0)..1*4^(1*4^(0))) + 1*4^(0)"
    assert evaluate(f) == 41
    assert all(isinstance(t, (Atom, Run)) for t in f.terms)
