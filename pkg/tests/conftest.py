"""Shared strategies and helpers for the test suite."""

import os
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from variety_forge.scalar import RationalFunction
from variety_forge.terms import BRACKET, DOT, PLAIN, Element, enumerate_monomials

settings.register_profile(
    "suite", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("suite")

TWO_OPS = (DOT, BRACKET)
ONE_OP = (PLAIN,)


def extended_enabled():
    return os.environ.get("VARIETY_FORGE_EXTENDED") == "1"


requires_extended = pytest.mark.extended


def random_rational(rng, span=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_rational_function(rng, degree=2, span=4):
    num = tuple(rng.randint(-span, span) for _ in range(rng.randint(1, degree + 1)))
    den = ()
    while not any(den):
        den = tuple(rng.randint(-span, span) for _ in range(rng.randint(1, degree + 1)))
    if not any(num):
        num = (1,)
    return RationalFunction(num, den)


def random_element(rng, ops, arity, max_terms=4, delta_coeffs=False):
    monos = enumerate_monomials(arity, ops)
    e = Element(arity)
    for mono in rng.sample(monos, min(max_terms, len(monos))):
        if delta_coeffs:
            c = random_rational_function(rng, degree=1, span=3)
        else:
            c = RationalFunction.from_fraction(random_rational(rng))
        if not c.is_zero():
            e._add(mono, c)
    return e


def seeded(seed):
    return random.Random(seed)
