"""Reference values of reduced C*-norms for groups where they are known"""

import heapq
import itertools
import logging
import math

import numpy as np
import scipy.linalg

from redgrp.exc import UnsupportedOracleError
from redgrp.util import (
    DEFAULT_DENSE_ORDER_CAP,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_SYMBOL_TOLERANCE,
    format_scalar,
    to_numeric
)
from redgrp.waiters import ConvergenceWaiter


logger = logging.getLogger(__name__)

METHODS = ('power-iteration', 'dft', 'circulant', 'full-regular', 'moment',
           'symbol', 'dense')


class NormEstimate(object):
    """A norm value together with how it was obtained"""

    def __init__(self, value, method, tolerance=0.0, iterations=0):
        if method not in METHODS:
            raise ValueError("unknown method {!r}".format(method))
        if value < 0:
            raise ValueError("a norm cannot be negative")
        self.value = float(value)
        self.method = method
        self.tolerance = tolerance
        self.iterations = iterations

    def __repr__(self):
        return 'NormEstimate({}, {!r}, tolerance={}, iterations={})'.format(
            format_scalar(self.value), self.method, self.tolerance,
            self.iterations)

    def __float__(self):
        return self.value


def norm_oracle(f, tol=None, box_cap=None):
    """The norm of the left regular representation of ``f``

    * finite abelian groups: exact, the largest modulus of the Fourier
      transform over all characters
    * abelian groups with infinite factors: the supremum of the symbol,
      certified to ``tol`` by branch and bound over the torus, one run per
      character of the torsion part
    * other finite groups up to :data:`DEFAULT_DENSE_ORDER_CAP` elements:
      the largest singular value of the full regular representation

    :param f: An :class:`redgrp.algebra.AlgebraElement`
    :param tol: Absolute tolerance of the symbol supremum
    :param box_cap: Maximal number of boxes the branch and bound may split
    :returns: A :class:`NormEstimate`
    :raise:
        :UnsupportedOracleError: For any other group
        :NonConvergenceError: If the branch and bound runs out of boxes
    """
    oracle = f.oracle
    if oracle.kind == 'abelian':
        if oracle.finite:
            return NormEstimate(_dft_norm(f), 'dft')
        tol = DEFAULT_SYMBOL_TOLERANCE if tol is None else tol
        value, steps = _symbol_norm(f, tol, box_cap)
        return NormEstimate(value, 'symbol', tolerance=tol,
                            iterations=steps)
    order = oracle.order()
    if order is not None and order <= DEFAULT_DENSE_ORDER_CAP:
        return NormEstimate(_regular_norm(f), 'full-regular')
    raise UnsupportedOracleError(
        "no norm oracle for {}".format(oracle.spec))


def _dft_norm(f):
    oracle = f.oracle
    values = np.zeros(oracle.torsion, dtype=complex)
    for w, c in f.items():
        index = tuple(e % t for e, t in zip(oracle.vector(w), oracle.torsion))
        values[index] += to_numeric(c)
    if not values.size:
        return 0.0
    return float(np.max(np.abs(np.fft.fftn(values))))


def _regular_norm(f):
    oracle = f.oracle
    if not f:
        return 0.0
    elements = oracle.elements()
    index = dict((w, i) for i, w in enumerate(elements))
    matrix = np.zeros((len(elements), len(elements)), dtype=complex)
    for t, c in f.items():
        c = to_numeric(c)
        for j, y in enumerate(elements):
            matrix[index[oracle.multiply(t, y)], j] += c
    return float(scipy.linalg.svdvals(matrix)[0])


def _symbol_norm(f, tol, box_cap):
    oracle = f.oracle
    infinite = [i for i, t in enumerate(oracle.torsion) if not t]
    torsion = [(i, t) for i, t in enumerate(oracle.torsion) if t]
    characters = 1
    for _, t in torsion:
        characters *= t
    if characters > DEFAULT_DENSE_ORDER_CAP:
        raise UnsupportedOracleError(
            "torsion part of {} has too many characters".format(oracle.spec))
    if not f:
        return 0.0, 0
    best, steps = 0.0, 0
    for k in itertools.product(*[range(t) for _, t in torsion]):
        terms = {}
        for w, c in f.items():
            v = oracle.vector(w)
            phase = sum(kj * v[i] / float(t)
                        for kj, (i, t) in zip(k, torsion))
            n = tuple(v[i] for i in infinite)
            terms[n] = terms.get(n, 0) + to_numeric(c) * complex(
                math.cos(2 * math.pi * phase), math.sin(2 * math.pi * phase))
        ns = np.array(list(terms), dtype=float).reshape(len(terms),
                                                          len(infinite))
        bs = np.array(list(terms.values()), dtype=complex)
        value, used = symbol_supremum(ns, bs, tol, box_cap)
        best = max(best, value)
        steps += used
    logger.debug("symbol supremum of %s: %r after %d boxes",
                 oracle.spec, best, steps)
    return best, steps


def symbol_supremum(frequencies, coefficients, tol, box_cap=None):
    """Certified supremum of |sum_j b_j exp(i <n_j, theta>)| over the torus

    Branch and bound on u = |g|^2 with the bound
    u(c) + sum_j |du/dtheta_j (c)| h + H h^2 / 2 on a box of half width h,
    where H = 2 L1^2 + 2 L0 L2 bounds every second directional derivative
    (L0, L1, L2 the sums of |b_j|, |b_j| |n_j|_1 and |b_j| |n_j|_1^2).

    :param frequencies: An ``(m, k)`` array of integer frequency vectors
    :param coefficients: An ``(m,)`` complex array
    :param tol: Absolute tolerance on the supremum of |g|
    :param box_cap: Maximal number of boxes to split
    :returns: A tuple ``(value, boxes)`` with value <= sup <= value + tol
    :raise:
        :NonConvergenceError: If the box budget runs out
    """
    n = np.asarray(frequencies, dtype=float)
    b = np.asarray(coefficients, dtype=complex)
    k = n.shape[1]
    if k == 0:
        return float(abs(b.sum())), 0
    weights = np.abs(b)
    l1 = np.abs(n).sum(axis=1)
    big_h = 2 * (weights * l1).sum() ** 2 + 2 * weights.sum() * (
        weights * l1 ** 2).sum()

    def evaluate(center):
        phase = np.exp(1j * n.dot(center))
        g = (b * phase).sum()
        dg = (1j * b * phase).dot(n)
        return abs(g) ** 2, 2 * np.real(np.conj(g) * dg)

    def bound(u, grad, h):
        return u + np.abs(grad).sum() * h + 0.5 * big_h * h * h

    cells = max(4, 2 * int(np.abs(n).max()))
    h = math.pi / cells
    heap, best = [], 0.0
    counter = itertools.count()
    for idx in itertools.product(range(cells), repeat=k):
        center = (2 * np.array(idx) + 1) * h
        u, grad = evaluate(center)
        best = max(best, u)
        heapq.heappush(heap, (-bound(u, grad, h), next(counter),
                              tuple(center), h))

    def step(best):
        top = -heap[0][0]
        if top <= best + 2 * tol * math.sqrt(best) + tol * tol:
            return best, True
        _, _, center, half = heapq.heappop(heap)
        half /= 2
        for signs in itertools.product((-1, 1), repeat=k):
            child = np.array(center) + half * np.array(signs)
            u, grad = evaluate(child)
            best = max(best, u)
            heapq.heappush(heap, (-bound(u, grad, half), next(counter),
                                  tuple(child), half))
        return best, False

    cap = DEFAULT_MAX_ITERATIONS if box_cap is None else box_cap
    best, used = ConvergenceWaiter(n=cap).wait(step, best)
    return math.sqrt(best), used
