"""redgrp utility functions and defaults"""

import math
import os
from contextlib import contextmanager
from fractions import Fraction

from redgrp.exc import ConfigurationError


DEFAULT_BALL_CAP = 2000000
DEFAULT_SUPPORT_CAP = 2000000
DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ITERATIONS = 100000
DEFAULT_SYMBOL_TOLERANCE = 1e-8
DEFAULT_TEST_RADIUS = 4
DEFAULT_TEST_BALL_CAP = 100000
DEFAULT_SEARCH_CAP = 4096
DEFAULT_JOBS = 1
DEFAULT_SEED = 0
DEFAULT_DENSE_ORDER_CAP = 4096
DEFAULT_AGREEMENT_RADIUS = 16
DEFAULT_MOMENTS = 64

BALL_CAP_ENV = 'REDGRP_BALL_CAP'


@contextmanager
def ignored(*exceptions):
    try:
        yield
    except exceptions:
        pass


def ball_cap(cap=None):
    """Resolve the ball cap

    :param cap: An explicit cap. If ``None``, the ``REDGRP_BALL_CAP``
                environment variable is consulted before falling back to
                :data:`DEFAULT_BALL_CAP`.
    :returns: A positive integer
    :raise:
        :ConfigurationError: If the environment value is not a positive
                             integer
    """
    if cap is not None:
        if cap <= 0:
            raise ValueError("cap must be positive")
        return cap
    value = os.environ.get(BALL_CAP_ENV)
    if not value:
        return DEFAULT_BALL_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ConfigurationError(
            "{} must be an integer, got {!r}".format(BALL_CAP_ENV, value))
    if cap <= 0:
        raise ConfigurationError(
            "{} must be positive, got {}".format(BALL_CAP_ENV, cap))
    return cap


def log_fraction(value):
    """Natural logarithm of a positive rational, safe for huge terms"""
    value = Fraction(value)
    if value <= 0:
        raise ValueError("logarithm of a non-positive value")
    return math.log(value.numerator) - math.log(value.denominator)


def to_fraction(value):
    """Exact conversion of ints, Fractions and decimal strings"""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_scalar(value):
    """Rationals print exactly, floats with 12 significant digits"""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "{}/{}".format(value.numerator, value.denominator)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, complex):
        return "{:.12g}{:+.12g}j".format(value.real, value.imag)
    return "{:.12g}".format(value)


def exact_sqrt(value):
    """The square root of a rational if it is rational, else ``None``"""
    value = Fraction(value)
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def to_numeric(value):
    """A float, or a complex when the value has an imaginary part"""
    if isinstance(value, complex):
        return value
    return float(value)
