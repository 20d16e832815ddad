"""redgrp compressions of the left regular representation to finite windows

The compression of f to a ball E is the matrix with entries f(x y⁻¹) for
x, y in E. Its norm never exceeds the norm of f and increases with E.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.linalg
import scipy.sparse

from redgrp.algebra import (
    RadialElement,
    moment_sequence,
    radial_moments
)
from redgrp.exc import CapExceededError
from redgrp.groups import (
    ball,
    check_same,
    symmetrize
)
from redgrp.norms import NormEstimate
from redgrp.util import (
    DEFAULT_JOBS,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_SEED,
    DEFAULT_TOLERANCE,
    to_numeric
)
from redgrp.waiters import ConvergenceWaiter


logger = logging.getLogger(__name__)

# dense singular values are used below this dimension when asked for 'auto'
AUTO_DENSE_DIMENSION = 400


class CompressionOperator(object):
    """The compression of ``element`` to the ball ``window``"""

    def __init__(self, element, window, matrix):
        self.element = element
        self.window = window
        self.matrix = matrix

    def __repr__(self):
        return 'CompressionOperator({}, dimension={}, nnz={})'.format(
            self.element.oracle.spec, self.dimension, self.matrix.nnz)

    @property
    def dimension(self):
        return self.matrix.shape[0]

    def toarray(self):
        return self.matrix.toarray()

    def adjoint(self):
        """The compression of f*, i.e. the conjugate transpose"""
        return CompressionOperator(self.element.involute(), self.window,
                                   self.matrix.conj().T.tocsr())

    def is_hermitian(self):
        diff = self.matrix - self.matrix.conj().T
        return diff.count_nonzero() == 0 or abs(diff).max() == 0


def compression(f, window):
    """Assemble the compression of ``f`` to ``window``

    :param f: An :class:`redgrp.algebra.AlgebraElement`
    :param window: A :class:`redgrp.groups.Ball` over the same group
    :returns: A :class:`CompressionOperator` holding a CSR matrix
    :raise:
        :OracleMismatchError: If the ball lives on another group
    """
    oracle = check_same(f.oracle, window.oracle)
    rows, cols, data = [], [], []
    coeffs = [(t, to_numeric(c)) for t, c in f.items()]
    for j, y in enumerate(window):
        for t, c in coeffs:
            # x y⁻¹ = t  <=>  x = t y
            i = window.find(oracle.multiply(t, y))
            if i is not None:
                rows.append(i)
                cols.append(j)
                data.append(c)
    n = len(window)
    dtype = complex if any(isinstance(c, complex) for _, c in coeffs) \
        else float
    matrix = scipy.sparse.coo_matrix(
        (np.array(data, dtype=dtype), (rows, cols)), shape=(n, n)).tocsr()
    return CompressionOperator(f, window, matrix)


def operator_norm(op, tol=None, method='power', max_iterations=None,
                  seed=DEFAULT_SEED):
    """The largest singular value of a compression

    Power iteration runs on C†C from the all-ones vector plus a small
    fixed-seed perturbation. It stops when the relative change of the
    estimate and the geometric estimate of the remaining increase are both
    below ``tol``.

    :param op: A :class:`CompressionOperator`
    :param tol: Relative tolerance, :data:`DEFAULT_TOLERANCE` if ``None``
    :param method: ``power``, ``dense``, or ``auto`` (dense below
                   :data:`AUTO_DENSE_DIMENSION`)
    :param max_iterations: Iteration cap, :data:`DEFAULT_MAX_ITERATIONS` if
                           ``None``
    :param seed: Seed of the start vector perturbation
    :returns: A :class:`redgrp.norms.NormEstimate`
    :raise:
        :NonConvergenceError: Carrying ``(vector, value)`` of the last
                              iterate
    """
    tol = DEFAULT_TOLERANCE if tol is None else tol
    if tol <= 0:
        raise ValueError("tol must be positive")
    if method == 'auto':
        method = 'dense' if op.dimension <= AUTO_DENSE_DIMENSION else 'power'
    if method not in ('power', 'dense'):
        raise ValueError("unknown method {!r}".format(method))
    matrix = op.matrix
    if matrix.nnz == 0 or not np.any(matrix.data):
        return NormEstimate(0.0, 'power-iteration' if method == 'power'
                            else 'dense', tol, 0)
    if method == 'dense':
        value = float(scipy.linalg.svdvals(matrix.toarray())[0])
        return NormEstimate(value, 'dense', tol, 0)

    n = op.dimension
    adjoint = matrix.conj().T.tocsr()
    rng = np.random.default_rng(seed)
    v = np.ones(n) + 0.1 * rng.standard_normal(n)
    v /= np.linalg.norm(v)

    def step(state):
        v, previous, last_delta = state
        w = matrix.dot(v)
        rho = np.linalg.norm(w)
        if rho == 0:
            return (v, 0.0, None), True
        z = adjoint.dot(w)
        v_next = z / np.linalg.norm(z)
        if previous is None:
            return (v_next, rho, None), False
        delta = rho - previous
        if delta <= 0:
            return (v_next, max(rho, previous), delta), True
        done = False
        if delta <= tol * rho and last_delta and 0 < delta < last_delta:
            q = delta / last_delta
            done = delta * q / (1 - q) <= tol * rho
        return (v_next, rho, delta), done

    cap = DEFAULT_MAX_ITERATIONS if max_iterations is None \
        else max_iterations
    (v, rho, _), iterations = ConvergenceWaiter(n=cap).wait(
        step, (v, None, None))
    logger.debug("power iteration on dimension %d: %r after %d iterations",
                 n, rho, iterations)
    return NormEstimate(rho, 'power-iteration', tol, iterations)


def prop_a_window(oracle, generating_set, eps, modulus, cap=None):
    """The window (F ∪ {e} ∪ F⁻¹)^k(|F| + floor(2/eps))

    :param generating_set: The set F
    :param eps: A positive tolerance. 0 is accepted only for a saturated
                modulus (finite groups), giving the saturated radius.
    :param modulus: A :class:`redgrp.means.ModulusTable` or any callable
                    ``m -> k``
    :returns: A :class:`redgrp.groups.Ball`
    :raise:
        :BallOverflowError: If the window is too large
    """
    if eps < 0:
        raise ValueError("eps cannot be negative")
    words = set(oracle.canonical(w) for w in generating_set)
    if eps == 0:
        if not getattr(modulus, 'saturated', False):
            raise ValueError("eps = 0 needs a saturated modulus")
        radius = modulus.saturation
    else:
        m = len(words) + int(math.floor(2 / eps))
        radius = modulus(m)
    logger.debug("window radius %d for |F| = %d, eps = %s",
                 radius, len(words), eps)
    return ball(oracle, symmetrize(oracle, words), radius, cap=cap)


class SandwichReport(object):
    """Outcome of a sandwich check

    ``passed`` holds when reference <= (1 + eps) compression + tol and
    compression <= reference + tol.
    """

    def __init__(self, reference, compression, eps, tol, dimension=None):
        self.reference = float(reference)
        self.compression = float(compression)
        self.eps = eps
        self.tol = tol
        self.dimension = dimension
        self.upper_margin = (1 + float(eps)) * self.compression + tol - \
            self.reference
        self.lower_margin = self.reference + tol - self.compression
        self.passed = self.upper_margin >= 0 and self.lower_margin >= 0

    def __repr__(self):
        return ('SandwichReport(passed={}, reference={!r}, '
                'compression={!r}, eps={})').format(
                    self.passed, self.reference, self.compression, self.eps)

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__


def sandwich_check(f, window, eps, reference, tol=None, method='power'):
    """Check the two sided estimate of a norm by a compression

    Never raises on a violation: the report carries all three numbers.

    :param reference: A :class:`redgrp.norms.NormEstimate` or a float
    :returns: A :class:`SandwichReport`
    """
    tol = 1e-9 if tol is None else tol
    op = compression(f, window)
    estimate = operator_norm(op, method=method)
    report = SandwichReport(float(reference), estimate.value, eps, tol,
                            dimension=op.dimension)
    if not report.passed:
        logger.warning("sandwich violated: %r", report)
    return report


class ProfileRow(object):

    def __init__(self, radius, dimension, norm, iterations, tolerance):
        self.radius = radius
        self.dimension = dimension
        self.norm = norm
        self.iterations = iterations
        self.tolerance = tolerance

    def __repr__(self):
        return 'ProfileRow(radius={}, dimension={}, norm={!r})'.format(
            self.radius, self.dimension, self.norm)

    def as_tuple(self):
        return (self.radius, self.dimension, self.norm, self.iterations,
                self.tolerance)


class WindowProfile(object):
    """Compression norms over growing windows, with optional moments"""

    def __init__(self, element, rows, truncated=False, moments=None,
                 tol=DEFAULT_TOLERANCE):
        self.element = element
        self.rows = list(rows)
        self.truncated = truncated
        self.moments = moments
        norms = [r.norm for r in self.rows]
        self.monotone = all(b >= a * (1 - 2 * tol) for a, b in
                            zip(norms, norms[1:]))

    def norms(self):
        return [r.norm for r in self.rows]


def increasing_window_profile(f, radii, generating_set=None, tol=None,
                              jobs=DEFAULT_JOBS, moments=None,
                              method='power', cap=None):
    """Compression norms of ``f`` on balls of increasing radius

    :param radii: Strictly increasing radii
    :param generating_set: The set the balls are taken over, standard if
                           ``None``
    :param jobs: Number of radii evaluated concurrently; rows come back in
                 input order and do not depend on the number of jobs
    :param moments: When given, also compute this many moments
    :returns: A :class:`WindowProfile`, truncated at the first radius whose
              ball exceeds the cap
    """
    radii = list(radii)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be increasing")
    tol = DEFAULT_TOLERANCE if tol is None else tol
    oracle = f.oracle

    def row(r):
        try:
            window = ball(oracle, generating_set, r, cap=cap)
        except CapExceededError as e:
            return e
        estimate = operator_norm(compression(f, window), tol=tol,
                                 method=method)
        return ProfileRow(r, len(window), estimate.value,
                          estimate.iterations, tol)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(row, radii))
    else:
        results = [row(r) for r in radii]
    rows, truncated = [], False
    for r, result in zip(radii, results):
        if isinstance(result, CapExceededError):
            logger.warning("profile truncated at radius %d: %s", r, result)
            truncated = True
            break
        rows.append(result)
    sequence = None
    if moments:
        radial = RadialElement.from_element(f)
        sequence = radial_moments(radial, moments) if radial is not None \
            else moment_sequence(f, moments)
    profile = WindowProfile(f, rows, truncated=truncated, moments=sequence,
                            tol=tol)
    if not profile.monotone:
        logger.warning("compression norms decrease along %r", radii)
    return profile
