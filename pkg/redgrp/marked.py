"""redgrp marked groups, their metric and strong convergence"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from redgrp.algebra import (
    RadialElement,
    moment_sequence,
    radial_moments
)
from redgrp.compression import (
    compression,
    operator_norm
)
from redgrp.exc import (
    BallOverflowError,
    InconclusiveError,
    OracleMismatchError
)
from redgrp.groups import (
    ball,
    standard_set
)
from redgrp.means import (
    TableMean,
    certify_mean
)
from redgrp.norms import norm_oracle
from redgrp.util import (
    DEFAULT_AGREEMENT_RADIUS,
    DEFAULT_JOBS,
    DEFAULT_MOMENTS,
    DEFAULT_TEST_RADIUS,
    ball_cap
)
from redgrp.words import (
    count_reduced_words,
    reduced_words
)


logger = logging.getLogger(__name__)


class Marking(object):
    """A group marked by the free group of rank ``rank``: free generator k
    maps to generator k of the oracle"""

    def __init__(self, oracle, label=None):
        self.oracle = oracle
        self.rank = oracle.rank
        self.label = oracle.spec if label is None else label

    def __repr__(self):
        return 'Marking({!r})'.format(self.label)


def as_marking(m):
    return m if isinstance(m, Marking) else Marking(m)


class RelationBall(object):
    """The reduced words of length at most ``radius`` trivial in a marked
    group, identity included, in shortlex order"""

    def __init__(self, marking, radius, words):
        self.marking = marking
        self.radius = radius
        self.words = tuple(words)
        self._set = frozenset(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, word):
        return tuple(word) in self._set

    def __iter__(self):
        return iter(self.words)

    @property
    def relators(self):
        """The nontrivial words of the ball"""
        return [w for w in self.words if w]


def _check_count(rank, radius, cap):
    cap = ball_cap(cap)
    if count_reduced_words(rank, radius) > cap:
        raise BallOverflowError(
            "reduced words of length {} in rank {}".format(radius, rank), cap)


def relation_ball(marking, radius, cap=None):
    """Enumerate the relations of length at most ``radius``

    :raise:
        :BallOverflowError: If there are too many reduced words to check
    """
    marking = as_marking(marking)
    _check_count(marking.rank, radius, cap)
    oracle = marking.oracle
    return RelationBall(marking, radius,
                        [w for w in reduced_words(marking.rank, radius)
                         if oracle.is_identity(w)])


class MarkedDistance(object):
    """2^-r where r is the largest radius with equal relation balls

    When the balls agree all the way to the search radius, ``exact`` is
    ``False`` and ``distance`` is only an upper bound.
    """

    def __init__(self, agreement, exact, witness=None):
        self.agreement = agreement
        self.exact = exact
        self.witness = witness
        self.distance = Fraction(1, 2 ** agreement)

    def __repr__(self):
        return 'MarkedDistance({})'.format(self)

    def __str__(self):
        prefix = '' if self.exact else '<='
        return '{}2^-{}'.format(prefix, self.agreement)


def marked_distance(m1, m2, r_max=DEFAULT_AGREEMENT_RADIUS, cap=None):
    """Distance of two marked groups of the same rank

    Reduced words are compared in shortlex order; the first word trivial in
    exactly one of the groups, of length L, gives agreement radius L - 1.

    :raise:
        :OracleMismatchError: If the ranks differ
        :BallOverflowError: If there are too many words to compare
    """
    m1, m2 = as_marking(m1), as_marking(m2)
    if m1.rank != m2.rank:
        raise OracleMismatchError("ranks {} and {} differ".format(
            m1.rank, m2.rank))
    if m1.oracle == m2.oracle:
        return MarkedDistance(r_max, False)
    _check_count(m1.rank, r_max, cap)
    for w in reduced_words(m1.rank, r_max):
        if m1.oracle.is_identity(w) != m2.oracle.is_identity(w):
            return MarkedDistance(len(w) - 1, True, witness=w)
    return MarkedDistance(r_max, False)


class MarkedSequence(object):
    """Markings Γ_n together with a designated limit Γ_∞"""

    def __init__(self, terms, limit):
        self.terms = [as_marking(t) for t in terms]
        self.limit = as_marking(limit)
        for t in self.terms:
            if t.rank != self.limit.rank:
                raise OracleMismatchError(
                    "{} does not have rank {}".format(t.label,
                                                      self.limit.rank))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def rank(self):
        return self.limit.rank


def estimate_norm(f, method='oracle'):
    """The norm of f by the named method

    * ``oracle``: :func:`redgrp.norms.norm_oracle`
    * ``moment:N``: the best of N moment roots (a lower bound)
    * ``compression:R``: the compression to the standard ball of radius R
      (a lower bound)

    :raise:
        :UnsupportedOracleError: If the group has no norm oracle
    """
    if method == 'oracle':
        return norm_oracle(f).value
    name, _, arg = method.partition(':')
    if name == 'moment' and arg.isdigit():
        radial = RadialElement.from_element(f)
        sequence = radial_moments(radial, int(arg)) if radial is not None \
            else moment_sequence(f, int(arg))
        return sequence.best()
    if name == 'compression' and arg.isdigit():
        window = ball(f.oracle, None, int(arg))
        return operator_norm(compression(f, window)).value
    raise ValueError("unknown norm method {!r}".format(method))


class ConvergenceRow(object):

    def __init__(self, index, label, distance, norm, gap, method):
        self.index = index
        self.label = label
        self.distance = distance
        self.norm = norm
        self.gap = gap
        self.method = method

    def __repr__(self):
        return 'ConvergenceRow({!r}, {}, norm={!r}, gap={!r})'.format(
            self.label, self.distance, self.norm, self.gap)


class ConvergenceTable(object):

    def __init__(self, rows, limit_norm):
        self.rows = list(rows)
        self.limit_norm = limit_norm

    def gaps(self):
        return [r.gap for r in self.rows]


def strong_convergence_table(sequence, f, methods=None, limit_method='oracle',
                             r_max=DEFAULT_AGREEMENT_RADIUS,
                             jobs=DEFAULT_JOBS):
    """Norms of the images of ``f`` along a marked sequence

    :param sequence: A :class:`MarkedSequence`
    :param f: An element of the free group algebra of the sequence's rank
    :param methods: A norm method for every term, one method for all, or
                    ``None`` for ``oracle``
    :param r_max: Search radius of the marked distances
    :param jobs: Rows evaluated concurrently; the order follows the terms
    :returns: A :class:`ConvergenceTable`
    """
    if f.oracle.kind != 'free' or f.oracle.rank != sequence.rank:
        raise OracleMismatchError(
            "f must live on free:{}".format(sequence.rank))
    if methods is None or isinstance(methods, str):
        methods = [methods or 'oracle'] * len(sequence)
    if len(methods) != len(sequence):
        raise ValueError("one norm method per term")
    limit = sequence.limit
    limit_norm = estimate_norm(f.pushforward(limit.oracle), limit_method)

    def row(args):
        index, (term, method) = args
        distance = marked_distance(term, limit, r_max=r_max)
        norm = estimate_norm(f.pushforward(term.oracle), method)
        return ConvergenceRow(index, term.label, distance, norm,
                              abs(norm - limit_norm), method)

    work = list(enumerate(zip(sequence.terms, methods)))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(row, work))
    else:
        rows = [row(w) for w in work]
    return ConvergenceTable(rows, limit_norm)


class LimitResult(object):
    """A limit of means on the limit group, with its certificate"""

    def __init__(self, mean, certificate, terms_used):
        self.mean = mean
        self.certificate = certificate
        self.terms_used = terms_used

    def __repr__(self):
        return 'LimitResult({!r}, defect={})'.format(
            self.mean, self.certificate.defect)


def limit_of_means(sequence, means, generating_set=None, radius=None,
                   window=2):
    """Push means on the terms of a sequence to a mean on its limit

    Every term mean is read on the limit's canonical words, and its atoms
    (words of length at most k, the largest support radius) are carried to
    the limit. A term qualifies once its relation ball agrees with the
    limit's up to radius 2k, so that the transfer is injective on the
    support. The limit mean is the common value of the last ``window``
    terms; it is certified on the limit.

    :param sequence: A :class:`MarkedSequence`
    :param means: One :class:`redgrp.means.Mean` per term
    :param generating_set: F in the limit, standard if ``None``
    :param radius: Test radius, :data:`DEFAULT_TEST_RADIUS` if ``None``
    :param window: Number of final terms that must agree
    :returns: A :class:`LimitResult`
    :raise:
        :InconclusiveError: If the final terms do not qualify or disagree
    """
    if len(means) != len(sequence):
        raise ValueError("one mean per term")
    if not means:
        raise InconclusiveError("the sequence is empty")
    limit = sequence.limit.oracle
    if generating_set is None:
        generating_set = standard_set(limit)
    radius = DEFAULT_TEST_RADIUS if radius is None else radius
    k = max(m.support_radius for m in means)
    window = min(window, len(means))
    tail = list(range(len(means) - window, len(means)))
    for i in tail:
        distance = marked_distance(sequence.terms[i], sequence.limit,
                                   r_max=2 * k)
        if distance.exact:
            raise InconclusiveError(
                "{} agrees with the limit only to radius {}, need {}".format(
                    sequence.terms[i].label, distance.agreement, 2 * k))

    def carried(i, y):
        term = sequence.terms[i].oracle
        result = {}
        for p, c in means[i].evaluate(term.canonical(y)).items():
            q = limit.canonical(p)
            result[q] = result.get(q, 0) + c
        return result

    table = {}
    for y in ball(limit, generating_set, radius + 1):
        values = [carried(i, y) for i in tail]
        if any(v != values[0] for v in values[1:]):
            raise InconclusiveError(
                "the means do not stabilize at {}".format(limit.format(y)))
        table[y] = values[0]
    logger.info("means stabilized over the last %d terms on %d points",
                window, len(table))
    mean = TableMean(limit, table, k, n=means[-1].n)
    certificate = certify_mean(mean, generating_set, radius=radius)
    return LimitResult(mean, certificate, tail)


class SrfRow(object):

    def __init__(self, label, reference, n, root, moments):
        self.label = label
        self.reference = reference
        self.n = n
        self.root = root
        self.moments = moments

    @property
    def reached(self):
        return self.n is not None

    def __repr__(self):
        return 'SrfRow({!r}, n={})'.format(
            self.label, self.n if self.reached else '>{}'.format(
                self.moments))


class UniformityTable(object):

    def __init__(self, rows, delta):
        self.rows = list(rows)
        self.delta = delta

    @property
    def uniform(self):
        return all(r.reached for r in self.rows)

    @property
    def bound(self):
        """The common n, or ``None`` when some row never got there"""
        if not self.rows or not self.uniform:
            return None
        return max(r.n for r in self.rows)


def srf_uniformity(instances, delta, moments=DEFAULT_MOMENTS,
                   jobs=DEFAULT_JOBS):
    """How fast the spectral radius formula converges across a family

    :param instances: Algebra elements on groups with a norm oracle
    :param delta: Relative threshold; a row records the least n with
                  m_2n^(1/2n) >= (1 - delta) ||f||
    :param moments: Number of moments computed per row
    :returns: A :class:`UniformityTable`
    """
    if not 0 <= delta < 1:
        raise ValueError("delta must lie in [0, 1)")

    def row(f):
        reference = norm_oracle(f).value
        threshold = (1 - delta) * reference
        sequence = moment_sequence(f, moments)
        for n, root in enumerate(sequence.roots, start=1):
            if root >= threshold:
                return SrfRow(f.oracle.spec, reference, n, root, moments)
        return SrfRow(f.oracle.spec, reference, None, sequence.best(),
                      moments)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(row, instances))
    else:
        rows = [row(f) for f in instances]
    return UniformityTable(rows, delta)
