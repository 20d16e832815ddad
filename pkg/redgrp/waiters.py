"""Step budgets for the iterative numerics

Power iteration, symbol refinement and the modulus search all run under a
:class:`ConvergenceWaiter`, so a run that does not settle ends in a
:class:`redgrp.exc.NonConvergenceError` that still carries its last iterate.
"""

import abc
import inspect
import logging
import time

import six

from redgrp.exc import NonConvergenceError
from redgrp.util import (
    DEFAULT_MAX_ITERATIONS,
    ignored
)


logger = logging.getLogger(__name__)


def _describe(fn):
    """First source line of a step function, for error messages"""
    description = getattr(fn, '__name__', repr(fn))
    with ignored(Exception):
        description = inspect.getsource(fn).strip().splitlines()[0]
    return description


@six.add_metaclass(abc.ABCMeta)
class Waiter(object):
    """A budget of steps or of seconds, never both"""

    def __init__(self, n=0, ttl=None):
        """Create a new Waiter

        :param n: The largest number of steps.
        :param ttl: The number of seconds to keep stepping.
        """
        ttl = ttl or 0
        if n < 0 or ttl < 0:
            raise ValueError("step and time budgets cannot be negative")
        if n and ttl:
            raise ValueError("Cannot set both n and ttl")
        self.n = n
        self.ttl = ttl

    def __repr__(self):
        return '{}(n={}, ttl={})'.format(type(self).__name__, self.n, self.ttl)

    @abc.abstractmethod
    def wait(self, fn, state=None, n=0, ttl=None):
        """Step ``fn`` from ``state`` until it is done

        :param n: Step budget, overriding the constructor
        :param ttl: Time budget, overriding the constructor
        :returns: A tuple ``(state, steps)``
        """

    def _check_args(self, n, ttl):
        """Resolve the budget of one call

        A call without a budget of its own uses the constructor's.

        :return: A tuple ``(n, ttl)``
        :raise:
            :ValueError: If a value is negative, both are set, or neither
                         the call nor the constructor gives a budget
        """
        n = 0 if n is None else n
        ttl = 0 if ttl is None else ttl
        if n < 0 or ttl < 0:
            raise ValueError("step and time budgets cannot be negative")
        if n and ttl:
            raise ValueError("Cannot set both n and ttl")
        if n or ttl:
            return n, ttl
        if not (self.n or self.ttl):
            raise ValueError("Must set either n or ttl with value >= 0")
        return self.n, self.ttl


class ConvergenceWaiter(Waiter):
    """Step an iteration until it reports convergence

    The step function maps the current state to ``(state, done)``. Runs
    bounded by ``n`` are reproducible; ``ttl`` is for interactive use.
    """

    def __init__(self, n=None, ttl=None):
        if n is None:
            n = 0 if ttl else DEFAULT_MAX_ITERATIONS
        super(ConvergenceWaiter, self).__init__(n=n, ttl=ttl)

    def wait(self, fn, state=None, n=0, ttl=None):
        """Step ``fn`` from ``state`` until it reports convergence

        :param fn: The step function, ``fn(state) -> (state, done)``
        :returns: A tuple ``(state, steps)``
        :raise:
            :NonConvergenceError: Carrying the last state, once the budget
                                  is spent
        """
        n, ttl = self._check_args(n, ttl)
        deadline = time.time() + ttl
        steps = 0
        while (n and steps < n) or (ttl and time.time() < deadline):
            steps += 1
            state, done = fn(state)
            if done:
                logger.debug("converged after %d steps", steps)
                return state, steps
        raise NonConvergenceError(
            "no convergence after {} steps: {}".format(steps, _describe(fn)),
            last=state, iterations=steps)
