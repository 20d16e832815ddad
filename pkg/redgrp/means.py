"""redgrp approximate invariant means and their certificates

A mean assigns to every group element x a finitely supported probability
measure η^x supported near the identity. Its defect on a finite unital
symmetric set F is the sum over s in F of the supremum over x of
‖η^{sx} − s·η^x‖₁, where (s·η)(g) = η(s⁻¹g).
"""

import abc
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import six

from redgrp.compression import (
    compression,
    operator_norm
)
from redgrp.exc import (
    BallOverflowError,
    CapExceededError,
    CocycleError,
    InvalidMeanError,
    UnsupportedOracleError
)
from redgrp.groups import (
    ball,
    covering_radius,
    is_standard,
    standard_set,
    symmetrize
)
from redgrp.norms import norm_oracle
from redgrp.oracles.finite import FiniteOracle
from redgrp.util import (
    DEFAULT_JOBS,
    DEFAULT_SEARCH_CAP,
    DEFAULT_TEST_BALL_CAP,
    DEFAULT_TEST_RADIUS,
    ball_cap,
    exact_sqrt
)
from redgrp.words import (
    IDENTITY,
    power,
    shortlex_key
)


logger = logging.getLogger(__name__)


def translate(oracle, s, measure):
    """The left translate s·η, with atoms s p"""
    return dict((oracle.multiply(s, p), c) for p, c in measure.items())


def l1_distance(mu, nu):
    """Exact l1 distance of two finitely supported measures"""
    total = 0
    for p, c in mu.items():
        total += abs(c - nu.get(p, 0))
    for p, c in nu.items():
        if p not in mu:
            total += abs(c)
    return total


def uniform(words):
    words = list(words)
    mass = Fraction(1, len(words))
    return dict((w, mass) for w in words)


@six.add_metaclass(abc.ABCMeta)
class Mean(object):
    """A map from group elements to probability measures near the
    identity"""

    def __init__(self, oracle, n):
        self.oracle = oracle
        self.n = n

    def __repr__(self):
        return '{}({}, n={})'.format(self.__class__.__name__,
                                     self.oracle.spec, self.n)

    def __call__(self, x):
        return self.evaluate(self.oracle.canonical(x))

    @abc.abstractmethod
    def evaluate(self, x):
        """The measure at a canonical word

        :param x: A canonical word of :attr:`oracle`
        :returns: A dict from canonical words to nonnegative masses summing
                  to 1. Callers must not modify it.
        """
        return

    @abc.abstractproperty
    def support_radius(self):
        """Word length bound, in the standard generators, of every atom"""
        return

    def required_test_radius(self, longest):
        """Test radius after which the defect is expected to be constant"""
        return self.support_radius + longest + 3


class FolnerMean(Mean):
    """The constant mean given by a uniform Følner window

    Abelian groups use the box of exponents [0, min(n, t)) in every factor
    of order t (t = 0 for infinite factors); other finite groups use the
    whole group.
    """

    def __init__(self, oracle, n):
        super(FolnerMean, self).__init__(oracle, n)
        if n < 1:
            raise ValueError("n must be positive")
        if oracle.kind == 'abelian':
            sides = [min(n, t) if t else n for t in oracle.torsion]
            vectors = [()]
            for side in sides:
                vectors = [v + (e,) for v in vectors for e in range(side)]
            self._measure = uniform(oracle.from_vector(v) for v in vectors)
            self._radius = sum(min(n, t // 2) if t else n
                               for t in oracle.torsion)
        elif oracle.order() is not None:
            elements = oracle.elements()
            self._measure = uniform(elements)
            self._radius = max(len(w) for w in elements)
        else:
            raise UnsupportedOracleError(
                "no Følner windows for {}".format(oracle.spec))

    def evaluate(self, x):
        return self._measure

    @property
    def support_radius(self):
        return self._radius


class TreeMean(Mean):
    """Uniform measure on the first n vertices of a geodesic ray

    The ray starts at the identity, passes through x and continues along
    ``end`` forever: η^x is uniform on the prefixes of length below n of the
    reduced infinite word x·end^∞.

    ``graph`` optionally records the :class:`redgrp.stallings.SubgroupGraph`
    whose free basis the oracle stands for; :meth:`ambient` then evaluates
    on words of the ambient free group.
    """

    def __init__(self, oracle, n, end=1, graph=None):
        super(TreeMean, self).__init__(oracle, n)
        if oracle.kind != 'free':
            raise UnsupportedOracleError(
                "tree means need a free group, got {}; fold subgroups "
                "first".format(oracle.spec))
        if n < 1:
            raise ValueError("n must be positive")
        if not end or abs(end) > oracle.rank:
            raise ValueError("end {} is not a letter of rank {}".format(
                end, oracle.rank))
        self.end = end
        self.graph = graph

    @classmethod
    def on_subgroup(cls, graph, n, end=1):
        """A tree mean on the free group a folded subgroup graph spans"""
        return cls(graph.as_free_oracle(), n, end=end, graph=graph)

    def evaluate(self, x):
        ray = list(x)
        while ray and ray[-1] == -self.end:
            ray.pop()
        ray.extend([self.end] * self.n)
        mass = Fraction(1, self.n)
        return dict((tuple(ray[:k]), mass) for k in range(self.n))

    def ambient(self, word):
        """The measure at an ambient member word, on ambient words"""
        if self.graph is None:
            raise ValueError("this tree mean is not tied to a subgroup")
        measure = self.evaluate(self.graph.coordinates(word))
        return dict((self.graph.from_coordinates(p), c)
                    for p, c in measure.items())

    @property
    def support_radius(self):
        return self.n - 1


class PointMean(Mean):
    """The point mass at the identity everywhere"""

    def __init__(self, oracle):
        super(PointMean, self).__init__(oracle, 0)

    def evaluate(self, x):
        return {IDENTITY: Fraction(1)}

    @property
    def support_radius(self):
        return 0


class TableMean(Mean):
    """A mean known on finitely many elements"""

    def __init__(self, oracle, table, support_radius, n=None):
        super(TableMean, self).__init__(oracle, n)
        self.table = dict(table)
        self._radius = support_radius

    def evaluate(self, x):
        try:
            return self.table[x]
        except KeyError:
            raise InvalidMeanError("no value at {}".format(
                self.oracle.format(x)))

    @property
    def support_radius(self):
        return self._radius


class SectionData(object):
    """An extension 1 → Δ → Γ → Γ̄ → 1 with a set-theoretic section

    :param gamma: The group Γ
    :param quotient: The group Γ̄
    :param kernel: The group Δ
    :param project: Γ-word → canonical Γ̄-word
    :param lift: canonical Γ̄-word → canonical Γ-word, the section ς
    :param kernel_coordinates: Γ-word in Δ → canonical Δ-word
    :param include: Δ-word → canonical Γ-word
    """

    def __init__(self, gamma, quotient, kernel, project, lift,
                 kernel_coordinates, include):
        self.gamma = gamma
        self.quotient = quotient
        self.kernel = kernel
        self.project = project
        self.lift = lift
        self.kernel_coordinates = kernel_coordinates
        self.include = include

    @classmethod
    def split(cls, gamma, quotient, kernel, split_index):
        """The section of a group whose first ``split_index`` generators
        map onto the quotient and whose remaining generators span the
        kernel, the two blocks commuting

        Covers abelian groups, direct products split at a factor boundary,
        and any group over the trivial quotient (``split_index = 0``).

        :raise:
            :UnsupportedOracleError: If the blocks need not commute
        """
        if quotient.rank != split_index or \
                kernel.rank != gamma.rank - split_index:
            raise ValueError("ranks do not add up at split {}".format(
                split_index))
        if split_index and gamma.kind != 'abelian' and not (
                gamma.kind == 'direct-product' and
                split_index in gamma.offsets):
            raise UnsupportedOracleError(
                "cannot split {} at {}".format(gamma.spec, split_index))

        def shift(word, by):
            return tuple(l + by if l > 0 else l - by for l in word)

        def project(x):
            return quotient.canonical(
                tuple(l for l in x if abs(l) <= split_index))

        def lift(p):
            return gamma.canonical(p)

        def kernel_coordinates(y):
            if not quotient.is_identity(project(y)):
                raise ValueError("{} is not in the kernel".format(
                    gamma.format(y)))
            return kernel.canonical(
                shift(tuple(l for l in y if abs(l) > split_index),
                      -split_index))

        def include(q):
            return gamma.canonical(shift(q, split_index))

        return cls(gamma, quotient, kernel, project, lift,
                   kernel_coordinates, include)

    @classmethod
    def trivial_quotient(cls, gamma):
        """Δ = Γ over the trivial group"""
        return cls.split(gamma, FiniteOracle.trivial(), gamma, 0)

    def cocycle(self, s, p):
        """α(s, p) = ς(s̄p)⁻¹ s ς(p), as a canonical Δ-word"""
        gamma = self.gamma
        sp = self.quotient.multiply(self.project(s), p)
        value = gamma.multiply(gamma.inverse(self.lift(sp)),
                               gamma.multiply(s, self.lift(p)))
        return self.kernel_coordinates(value)

    def check_cocycle(self, generating_set, cocycle_set, radius):
        """Verify α(s, p) ∈ F′ for s in F and p in the Γ̄-ball of ``radius``

        :returns: The set of cocycle values met
        :raise:
            :CocycleError: Naming the first α(s, p) outside F′
        """
        allowed = set(self.kernel.canonical(w) for w in cocycle_set)
        values = set()
        for p in ball(self.quotient, None, radius):
            for s in generating_set:
                alpha = self.cocycle(self.gamma.canonical(s), p)
                if alpha not in allowed:
                    raise CocycleError(
                        "α({}, {}) = {} is outside the certified set".format(
                            self.gamma.format(s), self.quotient.format(p),
                            self.kernel.format(alpha)),
                        s, p, alpha)
                values.add(alpha)
        return values


class CombinedMean(Mean):
    """ζ^x = Σ_p η̄^x̄(p) ς(p)·ξ^{ς(p)⁻¹x}

    ξ is extended from Δ to Γ by ξ^y = ξ^{y·ς(ȳ)⁻¹}, so that ξ^{dy} is ξ at
    d·y·ς(ȳ)⁻¹ for every d in Δ.
    """

    def __init__(self, eta_bar, xi, section):
        super(CombinedMean, self).__init__(section.gamma,
                                           (eta_bar.n, xi.n))
        self.eta_bar = eta_bar
        self.xi = xi
        self.section = section

    def _xi(self, y):
        sec, gamma = self.section, self.section.gamma
        base = sec.lift(sec.project(y))
        return self.xi.evaluate(sec.kernel_coordinates(
            gamma.multiply(y, gamma.inverse(base))))

    def evaluate(self, x):
        sec, gamma = self.section, self.section.gamma
        result = {}
        for p, w in self.eta_bar.evaluate(sec.project(x)).items():
            lift = sec.lift(p)
            y = gamma.multiply(gamma.inverse(lift), x)
            for q, c in self._xi(y).items():
                atom = gamma.multiply(lift, sec.include(q))
                result[atom] = result.get(atom, 0) + w * c
        return result

    @property
    def support_radius(self):
        k = self.eta_bar.support_radius
        return k + 2 * (k + 1) * self.xi.support_radius


def extension_combine(eta_bar, xi, section, generating_set=None,
                      cocycle_set=None, cocycle_radius=4):
    """Combine a mean on the quotient with a mean on the kernel

    :param generating_set: F in Γ; together with ``cocycle_set`` (F′ in Δ)
                           the cocycle is validated first
    :param cocycle_radius: Largest Γ̄-ball radius the cocycle is checked on
    :returns: A :class:`CombinedMean`
    :raise:
        :CocycleError: If some α(s, p) leaves F′
    """
    if generating_set is not None and cocycle_set is not None:
        section.check_cocycle(
            generating_set, cocycle_set,
            min(eta_bar.support_radius, cocycle_radius))
    return CombinedMean(eta_bar, xi, section)


class MeanCertificate(object):
    """Exact defect of a mean over a finite test ball"""

    def __init__(self, mean, generating_set, radius, defect,
                 pointwise_defect, per_generator, stabilized,
                 radius_sufficient, tested, bound=None):
        self.mean = mean
        self.oracle = mean.oracle
        self.generating_set = tuple(generating_set)
        self.n = mean.n
        self.support_radius = mean.support_radius
        self.radius = radius
        self.defect = defect
        self.pointwise_defect = pointwise_defect
        self.per_generator = per_generator
        self.stabilized = stabilized
        self.radius_sufficient = radius_sufficient
        self.tested = tested
        self.bound = bound
        self.bound_violated = bound is not None and defect > bound

    def __repr__(self):
        return 'MeanCertificate({}, n={}, defect={}, stabilized={})'.format(
            self.oracle.spec, self.n, self.defect, self.stabilized)

    @property
    def passed(self):
        return not self.bound_violated

    def support_ball(self, cap=None):
        """The window E holding every measure of the mean"""
        return ball(self.oracle, None, self.support_radius, cap=cap)


def _check_set(oracle, generating_set):
    words = [oracle.canonical(w) for w in generating_set]
    found = set(words)
    if IDENTITY not in found:
        raise ValueError("the set must contain the identity")
    for w in found:
        if oracle.inverse(w) not in found:
            raise ValueError("the set must be symmetric")
    return sorted(found, key=shortlex_key)


class _Evaluator(object):
    """Caches and validates the measures of a mean"""

    def __init__(self, mean):
        self.mean = mean
        self.cache = {}

    def __call__(self, x):
        measure = self.cache.get(x)
        if measure is None:
            measure = self.mean.evaluate(x)
            self._validate(x, measure)
            self.cache[x] = measure
        return measure

    def _validate(self, x, measure):
        oracle, radius = self.mean.oracle, self.mean.support_radius
        if sum(measure.values()) != 1:
            raise InvalidMeanError("η at {} has total mass {}".format(
                oracle.format(x), sum(measure.values())))
        for p, c in measure.items():
            if c < 0:
                raise InvalidMeanError("η at {} is negative at {}".format(
                    oracle.format(x), oracle.format(p)))
            if oracle.word_length(p) > radius:
                raise InvalidMeanError(
                    "η at {} charges {} outside radius {}".format(
                        oracle.format(x), oracle.format(p), radius))


def _defects(mean, generating_set, chunk):
    evaluate = _Evaluator(mean)
    oracle = mean.oracle
    rows = []
    for x in chunk:
        eta = evaluate(x)
        rows.append(tuple(
            l1_distance(evaluate(oracle.multiply(s, x)),
                        translate(oracle, s, eta))
            for s in generating_set))
    return rows


def certify_mean(mean, generating_set=None, radius=None, jobs=DEFAULT_JOBS,
                 cap=None):
    """Compute the exact defect of a mean over a test ball

    :param mean: A :class:`Mean`
    :param generating_set: F, finite unital symmetric; standard if ``None``
    :param radius: Test radius R. If ``None``, the radius after which the
                   defect should be constant, or :data:`DEFAULT_TEST_RADIUS`
                   when that ball exceeds :data:`DEFAULT_TEST_BALL_CAP`.
    :param jobs: Number of threads the test ball is sharded over
    :returns: A :class:`MeanCertificate`
    :raise:
        :InvalidMeanError: If a measure is not a probability measure inside
                           the declared radius
        :BallOverflowError: If the test ball exceeds the cap
    """
    oracle = mean.oracle
    if generating_set is None:
        generating_set = standard_set(oracle)
    F = _check_set(oracle, generating_set)
    longest = max(len(s) for s in F)
    required = mean.required_test_radius(longest)
    if radius is None:
        try:
            test = ball(oracle, F, required,
                        cap=min(ball_cap(cap), DEFAULT_TEST_BALL_CAP))
            radius = required
        except BallOverflowError:
            radius = min(required, DEFAULT_TEST_RADIUS)
            logger.warning("the radius %d ball of %r exceeds %d elements; "
                           "falling back to radius %d", required, mean,
                           DEFAULT_TEST_BALL_CAP, radius)
            test = ball(oracle, F, radius, cap=cap)
    else:
        test = ball(oracle, F, radius, cap=cap)
    sufficient = radius >= required or test.saturated
    if not sufficient:
        logger.warning("test radius %d is below %d for %r; stabilization "
                       "is the only evidence of uniformity",
                       radius, required, mean)

    elements = list(test)
    if jobs > 1 and len(elements) > 1:
        size = int(math.ceil(len(elements) / float(jobs)))
        chunks = [elements[i:i + size]
                  for i in range(0, len(elements), size)]
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            parts = list(executor.map(
                lambda c: _defects(mean, F, c), chunks))
        rows = [row for part in parts for row in part]
    else:
        rows = _defects(mean, F, elements)

    per_generator = dict((s, max(row[i] for row in rows))
                         for i, s in enumerate(F))
    defect = sum(per_generator.values())
    pointwise = max(sum(row) for row in rows)

    # every x on the two outer shells must show the same defect row
    outer = set(row for row, r in zip(rows, test.shells())
                if r >= radius - 1)
    if test.saturated:
        stabilized = True
    else:
        stabilized = radius >= 1 and len(outer) == 1

    bound = None
    if isinstance(mean, TreeMean):
        bound = sum(Fraction(4 * len(s), mean.n) for s in F)
    certificate = MeanCertificate(
        mean, F, radius, defect, pointwise, per_generator, stabilized,
        sufficient, len(elements), bound=bound)
    if certificate.bound_violated:
        logger.warning("counterexample: defect %s exceeds the tree bound %s",
                       defect, bound)
    logger.info("certified %r: defect %s over radius %d (%d elements)",
                mean, defect, radius, len(elements))
    return certificate


class ModulusEntry(object):

    def __init__(self, size, k, n, generating_set, certificate):
        self.size = size
        self.k = k
        self.n = n
        self.generating_set = tuple(generating_set)
        self.certificate = certificate

    def __repr__(self):
        return 'ModulusEntry(size={}, k={}, n={})'.format(
            self.size, self.k, self.n)


class ModulusTable(object):
    """Values m ↦ k(m) of a modulus of uniform exactness

    Certified tables carry the certificate behind every value. A saturated
    table (finite groups) takes one value everywhere.
    """

    def __init__(self, entries=(), saturation=None, function=None,
                 certified=True):
        self.entries = dict((e.size, e) for e in entries)
        self.saturation = saturation
        self.function = function
        self.certified = certified

    @classmethod
    def constant(cls, k, certificate=None):
        entries = [ModulusEntry(None, k, certificate.n if certificate
                                else None, (), certificate)]
        return cls(entries=entries, saturation=k)

    @classmethod
    def from_function(cls, function):
        """An uncertified table, e.g. the identity for tests"""
        return cls(function=function, certified=False)

    @property
    def saturated(self):
        return self.saturation is not None

    def _entry(self, m):
        # k is nondecreasing in m, so a larger size bounds a smaller one
        sizes = [s for s in self.entries if s is not None and s >= m]
        return self.entries[min(sizes)] if sizes else None

    def __contains__(self, m):
        return self.saturated or self.function is not None or \
            self._entry(m) is not None

    def __call__(self, m):
        if self.saturated:
            return self.saturation
        if self.function is not None:
            return self.function(m)
        entry = self._entry(m)
        if entry is None:
            raise ValueError("the modulus is not known at {}".format(m))
        return entry.k

    def rows(self):
        return [self.entries[m] for m in sorted(
            self.entries, key=lambda m: (m is None, m))]


def scheme_set(oracle, scheme, size):
    """A unital symmetric set for a generator scheme

    * ``standard``: e with the generators and their inverses
    * ``shortlex``: e and the first elements in shortlex order, closed
      under inverses, until the set has at least ``size`` elements
    * ``powers``: a^i for |i| <= (size - 1) / 2
    """
    if scheme == 'standard':
        return standard_set(oracle)
    if scheme == 'powers':
        half = (size - 1) // 2
        return symmetrize(oracle, [power((1,), i) for i in range(half + 1)])
    if scheme == 'shortlex':
        found = set([IDENTITY])
        r = 1
        while len(found) < size:
            window = ball(oracle, None, r)
            for w in window:
                if len(found) >= size:
                    break
                found.add(w)
                found.add(oracle.inverse(w))
            if len(found) < size and window.saturated:
                raise ValueError("the group has fewer than {} elements"
                                 .format(size))
            r += 1
        return sorted(found, key=shortlex_key)
    raise ValueError("unknown scheme {!r}".format(scheme))


def default_mean(oracle, n):
    """Følner windows on amenable groups, tree means on free groups"""
    if oracle.kind == 'free':
        return TreeMean(oracle, n)
    return FolnerMean(oracle, n)


def modulus_estimate(oracle, scheme='standard', sizes=None,
                     mean_factory=None, search_cap=None, radius=None,
                     jobs=DEFAULT_JOBS, cap=None):
    """Certified values of a modulus of uniform exactness

    For every set F of the scheme, search the least n whose certified defect
    is at most 1/|F| (doubling, then bisection) and record the least k with
    E ⊆ F^k. Finite groups give a saturated table: the uniform mean has
    defect 0 and k is the diameter with respect to F.

    :param sizes: Requested set sizes; ignored by the ``standard`` scheme
    :param mean_factory: ``(oracle, n) -> Mean``, :func:`default_mean` if
                         ``None``
    :param search_cap: Largest n tried, :data:`DEFAULT_SEARCH_CAP` if
                       ``None``
    :param radius: Test radius of every certificate
    :returns: A :class:`ModulusTable`
    :raise:
        :CapExceededError: If no n up to the search cap is good enough
    """
    factory = default_mean if mean_factory is None else mean_factory
    search_cap = DEFAULT_SEARCH_CAP if search_cap is None else search_cap
    if scheme == 'standard' or not sizes:
        sizes = [len(standard_set(oracle))]

    order = oracle.order()
    if order is not None:
        F = scheme_set(oracle, scheme, sizes[0])
        cert = certify_mean(FolnerMean(oracle, order), F, radius=radius,
                            jobs=jobs, cap=cap)
        k = covering_radius(oracle, F, oracle.elements(), cap=cap)
        logger.info("%s is finite: saturated modulus k = %d",
                    oracle.spec, k)
        return ModulusTable.constant(k, cert)

    entries = []
    for size in sizes:
        F = scheme_set(oracle, scheme, size)
        target = Fraction(1, len(F))
        certificates = {}

        def certify(n):
            if n not in certificates:
                certificates[n] = certify_mean(factory(oracle, n), F,
                                               radius=radius, jobs=jobs,
                                               cap=cap)
                logger.debug("|F| = %d, n = %d: defect %s", len(F), n,
                             certificates[n].defect)
            return certificates[n]

        hi = 1
        while certify(hi).defect > target:
            if hi >= search_cap:
                raise CapExceededError(
                    "no n with defect <= 1/{} for {}".format(
                        len(F), oracle.spec), search_cap)
            hi = min(2 * hi, search_cap)
        lo = hi // 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if certify(mid).defect <= target:
                hi = mid
            else:
                lo = mid
        cert = certify(hi)
        if is_standard(oracle, F):
            k = cert.support_radius
        else:
            k = covering_radius(oracle, F,
                                ball(oracle, None, cert.support_radius,
                                     cap=cap), cap=cap)
        entries.append(ModulusEntry(len(F), k, hi, F, cert))
        logger.info("%s: |F| = %d needs n = %d, k = %d",
                    oracle.spec, len(F), hi, k)
    return ModulusTable(entries)


class BoundReport(object):
    """Outcome of comparing a certificate with a compression norm

    ``scalar`` is sup_x Σ_s |1 − ⟨s·ξ^x, ξ^{sx}⟩| with ξ = η^{1/2}, which the
    defect bounds; ``lower`` is (1 − ε) times the reference norm, which the
    compression to E must reach.
    """

    def __init__(self, reference, compression, eps, scalar, exact, tol):
        self.reference = float(reference)
        self.compression = float(compression)
        self.eps = eps
        self.lower = (1 - float(eps)) * self.reference
        self.scalar = scalar
        self.exact = exact
        self.tol = tol
        self.norm_passed = self.compression + tol >= self.lower
        if exact:
            self.scalar_passed = scalar <= eps
        else:
            self.scalar_passed = float(scalar) <= float(eps) + tol
        self.passed = self.norm_passed and self.scalar_passed

    def __repr__(self):
        return ('BoundReport(passed={}, lower={!r}, compression={!r}, '
                'scalar={})').format(self.passed, self.lower,
                                     self.compression, self.scalar)

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__


def _inner(oracle, s, eta, eta_s):
    """⟨s·ξ^x, ξ^{sx}⟩ for ξ = η^{1/2}; exact whenever every root is"""
    total, exact = 0, True
    for p, c in eta.items():
        d = eta_s.get(oracle.multiply(s, p))
        if d is None:
            continue
        root = exact_sqrt(c * d) if exact else None
        if root is None:
            exact = False
            total = float(total) + math.sqrt(c * d)
        else:
            total += root
    return total, exact


def mean_to_compression_bound(certificate, f, reference=None, tol=1e-9,
                              method='power', cap=None):
    """Check a certificate against the compression of ``f`` to its window

    :param certificate: A :class:`MeanCertificate` with defect below 1
    :param f: An algebra element supported in the certificate's F
    :param reference: The norm of f, from :func:`redgrp.norms.norm_oracle`
                      if ``None``
    :returns: A :class:`BoundReport`
    """
    mean, oracle = certificate.mean, certificate.oracle
    eps = certificate.defect
    if eps >= 1:
        raise ValueError("the defect must be below 1, got {}".format(eps))
    F = set(certificate.generating_set)
    if not set(f.support) <= F:
        raise ValueError("f must be supported in the certified set")
    if reference is None:
        reference = norm_oracle(f).value
    evaluate = _Evaluator(mean)
    scalar, exact = 0, True
    for x in ball(oracle, certificate.generating_set, certificate.radius,
                  cap=cap):
        eta = evaluate(x)
        row = 0
        for s in certificate.generating_set:
            value, ok = _inner(oracle, s, eta,
                               evaluate(oracle.multiply(s, x)))
            exact = exact and ok
            row += abs(1 - value)
        scalar = max(scalar, row)
    window = certificate.support_ball(cap=cap)
    estimate = operator_norm(compression(f, window), method=method)
    report = BoundReport(reference, estimate.value, eps, scalar, exact, tol)
    if not report.passed:
        logger.warning("compression bound violated: %r", report)
    return report
