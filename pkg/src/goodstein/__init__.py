"""Goodstein sequences over symbolic hereditary base-n forms.

Forms are kept symbolic, so sequences can be followed long after their
values stop fitting in memory.  Each step is certified by a strict decrease
of the form's shape, read as an ordinal below epsilon-zero.
"""

from goodstein.grammar import ParseError, parse, parse_shape, render, render_shape
from goodstein.hereditary import (HForm, TooLarge, bump, compare_value, decrement,
                                  estimate_digits, evaluate, from_natural, successor,
                                  try_evaluate)
from goodstein.lemmas import superexp_value, tower_bound, tower_form
from goodstein.ordinal import check_step_decrease, compare_shape, shape_of
from goodstein.sequence import (CLASSIC, Constant, Explicit, SeededRandom, monotone_compare,
                                parse_schedule, run, trace)
from goodstein.terms import NonCanonicalError, Ordering, Shape

__version__ = "0.1.0"
