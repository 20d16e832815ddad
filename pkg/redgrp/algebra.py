"""redgrp group algebra elements"""

import logging
import math
from collections.abc import Mapping
from fractions import Fraction

import numpy as np

from redgrp.exc import (
    OracleMismatchError,
    SupportOverflowError,
    UnsupportedOracleError
)
from redgrp.groups import (
    ball,
    check_same
)
from redgrp.util import (
    DEFAULT_SUPPORT_CAP,
    exact_sqrt,
    format_scalar,
    log_fraction
)
from redgrp.words import (
    IDENTITY,
    alphabet,
    reduced_words,
    shortlex_key
)


logger = logging.getLogger(__name__)


def _is_exact(c):
    return isinstance(c, (int, Fraction))


def _conjugate(c):
    return c.conjugate() if isinstance(c, complex) else c


class AlgebraElement(Mapping):
    """A finitely supported function on a group, i.e. an element of the
    complex group algebra

    Keys are canonical words; zero coefficients are never stored. Exact
    scalars (``int`` and ``Fraction``) stay exact under every operation.
    """

    def __init__(self, oracle, coefficients=None, canonical=False):
        """Create an element

        :param oracle: The group
        :param coefficients: A mapping or an iterable of ``(word, scalar)``
                             pairs. Words that collide in the group are
                             merged by adding their coefficients.
        :param canonical: Skip canonicalization when the words are known
                          to be normal forms
        """
        self.oracle = oracle
        items = coefficients.items() if isinstance(
            coefficients, Mapping) else (coefficients or ())
        merged = {}
        for w, c in items:
            if not canonical:
                w = oracle.canonical(w)
            merged[w] = merged.get(w, 0) + c
        self._coeffs = dict((w, c) for w, c in merged.items() if c != 0)

    def __repr__(self):
        return 'AlgebraElement({}, {{{}}})'.format(
            self.oracle.spec, ', '.join(
                '{}: {}'.format(self.oracle.format(w), format_scalar(c))
                for w, c in self.items()))
    def __getitem__(self, word): return self._coeffs[tuple(word)]
    def __len__(self): return len(self._coeffs)
    def __iter__(self): return iter(self.support)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.oracle == other.oracle and self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    @property
    def support(self):
        """The support in shortlex order"""
        return sorted(self._coeffs, key=shortlex_key)

    @property
    def exact(self):
        return all(_is_exact(c) for c in self._coeffs.values())

    def evaluate(self, word):
        """The coefficient at any word, canonicalized first"""
        return self._coeffs.get(self.oracle.canonical(word), 0)

    def __add__(self, other):
        check_same(self.oracle, other.oracle)
        coeffs = dict(self._coeffs)
        for w, c in other._coeffs.items():
            coeffs[w] = coeffs.get(w, 0) + c
        return AlgebraElement(self.oracle, coeffs, canonical=True)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return AlgebraElement(
            self.oracle, ((w, scalar * c) for w, c in self._coeffs.items()),
            canonical=True)

    __rmul__ = __mul__

    def convolve(self, other, cap=None):
        return convolve(self, other, cap=cap)

    def involute(self):
        return involute(self)

    def is_self_adjoint(self):
        return involute(self) == self

    def l1_norm(self):
        return l1_norm(self)

    def l2_norm(self):
        return l2_norm(self)

    def pushforward(self, oracle):
        """The image under the marking of ``oracle``

        The element must live on a free group of the same rank; coefficients
        of words that collide in the target are added.

        :raise:
            :OracleMismatchError: If the ranks differ
        """
        if oracle.rank != self.oracle.rank:
            raise OracleMismatchError(
                "cannot push {} forward to {}".format(
                    self.oracle.spec, oracle.spec))
        return AlgebraElement(oracle, self._coeffs.items())


def delta(oracle, word=IDENTITY, c=1):
    """``c`` times the point mass at ``word``"""
    return AlgebraElement(oracle, [(word, c)])


def generator_sum(oracle):
    """The sum of the point masses at every generator and inverse"""
    return AlgebraElement(oracle, [((l,), 1) for l in alphabet(oracle.rank)])


def random_element(oracle, size, l1=None, seed=0, radius=2):
    """A random element with exact rational coefficients

    :param size: The support size (at most the size of the ball)
    :param l1: When given, coefficients are scaled so the l1 norm is at
               most this value
    :param seed: Seed for :func:`numpy.random.default_rng`
    :param radius: The support is drawn from the ball of this radius
    """
    rng = np.random.default_rng(seed)
    candidates = ball(oracle, None, radius).elements
    size = min(size, len(candidates))
    picks = rng.choice(len(candidates), size=size, replace=False)
    values = [int(v) for v in rng.integers(1, 5, size=size)]
    signs = [1 if s else -1 for s in rng.integers(0, 2, size=size)]
    coeffs = [Fraction(v * s) for v, s in zip(values, signs)]
    total = sum(abs(c) for c in coeffs)
    if l1 is not None and total > l1:
        scale = Fraction(l1) / total
        coeffs = [c * scale for c in coeffs]
    return AlgebraElement(oracle, [(candidates[i], c)
                                   for i, c in zip(picks, coeffs)],
                          canonical=True)


def convolve(f, g, cap=None):
    """The convolution (f * g)(x) = sum over t of f(t) g(t⁻¹x)

    :param cap: Support cap of the result, :data:`DEFAULT_SUPPORT_CAP` if
                ``None``
    :raise:
        :OracleMismatchError: If f and g live on different groups
        :SupportOverflowError: If the product outgrows the cap
    """
    oracle = check_same(f.oracle, g.oracle)
    cap = DEFAULT_SUPPORT_CAP if cap is None else cap
    result = {}
    for t, a in f._coeffs.items():
        for y, b in g._coeffs.items():
            x = oracle.multiply(t, y)
            result[x] = result.get(x, 0) + a * b
        if len(result) > cap:
            raise SupportOverflowError("convolution on {}".format(
                oracle.spec), cap)
    return AlgebraElement(oracle, result, canonical=True)


def involute(f):
    """f*(t) = conj(f(t⁻¹))"""
    oracle = f.oracle
    return AlgebraElement(
        oracle, ((oracle.inverse(t), _conjugate(c))
                 for t, c in f._coeffs.items()), canonical=True)


def l1_norm(f):
    return sum((abs(c) for c in f._coeffs.values()), 0)


def l2_norm_squared(f):
    return sum((abs(c) ** 2 if not _is_exact(c) else c * c
                for c in f._coeffs.values()), 0)


def l2_norm(f):
    """The l2 norm; exact when it is rational"""
    square = l2_norm_squared(f)
    if _is_exact(square):
        root = exact_sqrt(square)
        if root is not None:
            return root
    return math.sqrt(square)


def _root(value, n):
    """value ** (1 / 2n) in double precision"""
    if isinstance(value, complex):
        value = value.real
    if value <= 0:
        return 0.0
    if _is_exact(value):
        return math.exp(log_fraction(value) / (2 * n))
    return value ** (1.0 / (2 * n))


class MomentSequence(object):
    """The moments m_2n = ((f* f)^n)(e), n = 1 .. N, and their 2n-th roots

    ``truncated`` is set when a support cap stopped the computation before
    ``requested`` moments were known.
    """

    def __init__(self, element, values, requested=None, truncated=False,
                 l1=None):
        self.element = element
        self.values = list(values)
        self.requested = len(self.values) if requested is None else requested
        self.truncated = truncated
        self.l1 = l1_norm(element) if l1 is None else l1
        self.roots = [_root(m, n) for n, m in
                      enumerate(self.values, start=1)]

    def __len__(self):
        return len(self.values)

    def moment(self, n):
        """m_2n, with n counted from 1"""
        return self.values[n - 1]

    def root(self, n):
        return self.roots[n - 1]

    def best(self):
        """The largest root; a lower bound on the norm"""
        return max(self.roots) if self.roots else 0.0

    def check(self, slack=1e-12):
        """Check nonnegativity, monotone roots and the l1 bound

        :param slack: Relative slack for the floating point comparisons
        :returns: A list of violations, empty when the sequence is sound
        """
        problems = []
        l1 = float(self.l1)
        for n, (m, r) in enumerate(zip(self.values, self.roots), start=1):
            real = m.real if isinstance(m, complex) else m
            if real < 0 and not (not _is_exact(real) and
                                 abs(real) <= slack * l1 ** (2 * n)):
                problems.append("m_{} = {} is negative".format(
                    2 * n, format_scalar(m)))
            if r > l1 * (1 + slack):
                problems.append("root {} = {!r} exceeds l1 norm {!r}".format(
                    n, r, l1))
        for n in range(1, len(self.roots)):
            if self.roots[n] < self.roots[n - 1] * (1 - slack):
                problems.append("root {} decreases".format(n + 1))
        return problems


def moment_sequence(f, N, cap=None):
    """Exact moments of the spectral radius formula

    With h = f* f self-adjoint, m_2(a+b) = sum over x of h^a(x) conj(h^b(x)),
    so only the powers up to h^ceil(N/2) are materialized.

    :param f: An :class:`AlgebraElement`
    :param N: The number of moments
    :param cap: Support cap for the powers of h
    :returns: A :class:`MomentSequence`, truncated when the cap is hit
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    h = convolve(involute(f), f, cap=cap)
    powers = [delta(f.oracle), h]
    values = []
    truncated = False
    for n in range(1, N + 1):
        a, b = n // 2, n - n // 2
        try:
            while len(powers) <= b:
                powers.append(convolve(powers[-1], h, cap=cap))
        except SupportOverflowError as e:
            logger.warning("moments truncated after m_%d: %s", 2 * (n - 1), e)
            truncated = True
            break
        left, right = powers[a], powers[b]
        small, large = (left, right) if len(left) <= len(right) else \
            (right, left)
        m = 0
        for x, c in small._coeffs.items():
            d = large._coeffs.get(x)
            if d is not None:
                m += c * _conjugate(d) if small is left else \
                    _conjugate(c) * d
        if isinstance(m, complex):
            m = m.real
        values.append(m)
    return MomentSequence(f, values, requested=N, truncated=truncated)


def sphere_size(q, r):
    """Number of vertices at distance r in the (q+1)-regular tree"""
    return 1 if r == 0 else (q + 1) * q ** (r - 1)


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(u, v, scale=1):
    n = max(len(u), len(v))
    u = list(u) + [0] * (n - len(u))
    for i, c in enumerate(v):
        u[i] += scale * c
    return u


def _times_sphere_one(c, q):
    """A_1 times the radial vector c"""
    out = [0] * (len(c) + 1)
    for n, x in enumerate(c):
        if x == 0:
            continue
        if n == 0:
            out[1] += x
        elif n == 1:
            out[2] += x
            out[0] += (q + 1) * x
        else:
            out[n + 1] += x
            out[n - 1] += q * x
    return out


class RadialElement(object):
    """A radial element of the group algebra of a free group

    ``coefficients[r]`` multiplies the indicator A_r of the sphere of radius
    r in the (q+1)-regular tree, q = 2d - 1.
    """

    def __init__(self, q, coefficients):
        if q < 1:
            raise ValueError("q must be positive")
        self.q = q
        self.coefficients = _strip(coefficients)

    def __repr__(self):
        return 'RadialElement(q={}, [{}])'.format(
            self.q, ', '.join(format_scalar(c) for c in self.coefficients))

    def __eq__(self, other):
        if not isinstance(other, RadialElement):
            return NotImplemented
        return self.q == other.q and self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    @classmethod
    def sphere(cls, q, r):
        """The sphere indicator A_r"""
        return cls(q, [0] * r + [1])

    @classmethod
    def from_element(cls, f):
        """The radial form of ``f``, or ``None`` if f is not radial or not on
        a free group"""
        if f.oracle.kind != 'free' or f.oracle.rank < 1:
            return None
        q = 2 * f.oracle.rank - 1
        spheres = {}
        for w, c in f.items():
            spheres.setdefault(len(w), []).append(c)
        coeffs = [0] * (max(spheres) + 1 if spheres else 0)
        for r, values in spheres.items():
            if len(values) != sphere_size(q, r) or len(set(values)) != 1:
                return None
            coeffs[r] = values[0]
        return cls(q, coeffs)

    @property
    def radius(self):
        return len(self.coefficients) - 1

    def at_identity(self):
        return self.coefficients[0] if self.coefficients else 0

    def to_element(self, oracle):
        """Expand into an :class:`AlgebraElement` on a free group"""
        if oracle.kind != 'free' or 2 * oracle.rank - 1 != self.q:
            raise UnsupportedOracleError(
                "{} is not the free group with q = {}".format(
                    oracle.spec, self.q))
        return AlgebraElement(
            oracle, ((w, self.coefficients[len(w)]) for w in
                     reduced_words(oracle.rank, self.radius)),
            canonical=True)

    def __add__(self, other):
        self._check(other)
        return RadialElement(self.q, _add(self.coefficients,
                                          other.coefficients))

    def __mul__(self, scalar):
        return RadialElement(self.q, [scalar * c for c in self.coefficients])

    __rmul__ = __mul__

    def _check(self, other):
        if self.q != other.q:
            raise OracleMismatchError("radial elements with q = {} and {}"
                                      .format(self.q, other.q))

    def involute(self):
        return RadialElement(self.q,
                             [_conjugate(c) for c in self.coefficients])

    def l1_norm(self):
        return sum((abs(c) * sphere_size(self.q, r)
                    for r, c in enumerate(self.coefficients)), 0)

    def convolve(self, other):
        return radial_convolve(self, other)


def radial_convolve(f, g):
    """Product in the radial subalgebra

    Uses A_1 A_0 = A_1, A_1 A_1 = A_2 + (q+1) A_0 and
    A_1 A_n = A_(n+1) + q A_(n-1) for n >= 2, which give
    A_2 = A_1 A_1 - (q+1) A_0 and A_(m+1) = A_1 A_m - q A_(m-1) for m >= 2.
    """
    f._check(g)
    q = f.q
    result = []
    prev, cur = None, list(g.coefficients)
    for m, c in enumerate(f.coefficients):
        if m == 0:
            p = cur
        elif m == 1:
            prev, cur = cur, _times_sphere_one(cur, q)
            p = cur
        else:
            factor = q + 1 if m == 2 else q
            prev, cur = cur, _add(_times_sphere_one(cur, q), prev, -factor)
            p = cur
        if c != 0:
            result = _add(result, p, c)
    return RadialElement(q, result)


def radial_moments(f, N):
    """The moment sequence of a radial element, computed in the radial
    subalgebra"""
    if N < 1:
        raise ValueError("N must be at least 1")
    h = radial_convolve(f.involute(), f)
    powers = [RadialElement(f.q, [1]), h]
    values = []
    for n in range(1, N + 1):
        while len(powers) <= n:
            powers.append(radial_convolve(powers[-1], h))
        m = powers[n].at_identity()
        values.append(m.real if isinstance(m, complex) else m)
    return MomentSequence(f, values, requested=N, l1=f.l1_norm())
