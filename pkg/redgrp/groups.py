"""redgrp marked groups and balls"""

import abc
import logging
from collections.abc import Sequence

import six

from redgrp.exc import (
    BallOverflowError,
    OracleMismatchError,
    UnsupportedOracleError
)
from redgrp.util import ball_cap
from redgrp.words import (
    IDENTITY,
    alphabet,
    check_word,
    format_word,
    invert,
    parse_word,
    shortlex_key
)


logger = logging.getLogger(__name__)


@six.add_metaclass(abc.ABCMeta)
class GroupOracle(object):
    """A marked group: a rank, and a normal form for words in its generators

    Normal forms are canonical: two words represent the same element exactly
    when their normal forms agree. Every oracle shipped with redgrp returns
    geodesic normal forms, so ``word_length`` is the word metric for the
    standard generators.
    """

    kind = None

    def __init__(self, rank):
        if rank < 0:
            raise ValueError("rank cannot be negative")
        self.rank = rank

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, self.spec)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GroupOracle):
            return NotImplemented
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return self.spec

    @abc.abstractproperty
    def spec(self):
        """The group spec string that describes this oracle"""
        return

    @abc.abstractmethod
    def normal_form(self, word):
        """Get the canonical word for the element ``word`` represents

        :param word: A tuple of letters within the rank
        :returns: The canonical word
        """
        return

    def order(self):
        """The number of elements, or ``None`` for an infinite group"""
        return None

    def elements(self):
        """All canonical words of a finite group, in shortlex order

        :raise:
            :UnsupportedOracleError: If the group is infinite
        """
        if self.order() is None:
            raise UnsupportedOracleError(
                "{} is infinite".format(self.spec))
        return ball(self, None, self.order()).elements

    def canonical(self, word):
        """Validate ``word`` and return its normal form"""
        return self.normal_form(check_word(word, self.rank))

    def multiply(self, x, y):
        return self.normal_form(tuple(x) + tuple(y))

    def inverse(self, x):
        return self.normal_form(invert(x))

    def is_identity(self, word):
        return not self.normal_form(tuple(word))

    def equal(self, x, y):
        return self.is_identity(tuple(x) + invert(y))

    def word_length(self, word):
        return len(self.normal_form(tuple(word)))

    def generators(self):
        """Normal forms of the marked generators"""
        return [self.normal_form((i + 1,)) for i in range(self.rank)]

    def parse(self, text):
        """Parse a word in this group's alphabet and canonicalize it"""
        return self.normal_form(parse_word(text, self.rank))

    def format(self, word):
        return format_word(word, self.rank)


class Ball(Sequence):
    """The elements of a ball, in breadth-first shortlex order

    Every element remembers the BFS shell it was found in, i.e. the least
    number of factors from the generating set needed to reach it.
    ``saturated`` is set when the enumeration ran out of new elements, so
    the ball is the whole group.
    """

    def __init__(self, oracle, generating_set, radius, elements, shells,
                 saturated=False):
        self.oracle = oracle
        self.generating_set = tuple(generating_set)
        self.radius = radius
        self.elements = tuple(elements)
        self._shells = tuple(shells)
        self.saturated = saturated
        self._index = dict((w, i) for i, w in enumerate(self.elements))

    def __repr__(self):
        return 'Ball({!r}, radius={}, size={})'.format(
            self.oracle, self.radius, len(self))
    def __getitem__(self, i): return self.elements[i]
    def __len__(self): return len(self.elements)
    def __iter__(self): return iter(self.elements)
    def __contains__(self, word): return tuple(word) in self._index

    def index(self, word, *args):
        """Position of a canonical word in the ball

        :raise:
            :ValueError: If the word is not in the ball
        """
        try:
            return self._index[tuple(word)]
        except KeyError:
            raise ValueError("{} is not in the ball".format(
                self.oracle.format(word)))

    def find(self, word):
        """Position of a canonical word, or ``None``"""
        return self._index.get(word)

    def shell(self, word):
        """The BFS shell of ``word``"""
        return self._shells[self.index(word)]

    def sphere(self, r):
        """The elements of shell ``r``"""
        return [w for w, s in zip(self.elements, self._shells) if s == r]

    def shells(self):
        """The shell of every element, aligned with :attr:`elements`"""
        return self._shells


def standard_set(oracle):
    """The unital symmetric standard set {e} with the generators and their
    inverses, as canonical words in shortlex order"""
    return symmetrize(oracle, [(l,) for l in alphabet(oracle.rank)])


def symmetrize(oracle, words):
    """Canonical ``F ∪ {e} ∪ F⁻¹``, deduplicated, in shortlex order"""
    result = set([IDENTITY])
    for w in words:
        w = oracle.canonical(w)
        result.add(w)
        result.add(oracle.inverse(w))
    return sorted(result, key=shortlex_key)


def is_standard(oracle, generating_set):
    return (set(oracle.canonical(w) for w in generating_set) ==
            set(standard_set(oracle)))


def ball(oracle, generating_set, radius, cap=None):
    """Enumerate a ball

    :param oracle: The group
    :param generating_set: The set F, or ``None`` for the standard set. The
                           identity is always added.
    :param radius: The number of factors from F
    :param cap: The maximal number of elements. If ``None``,
                :func:`redgrp.util.ball_cap` decides.
    :returns: A :class:`Ball`
    :raise:
        :BallOverflowError: If the ball grows past the cap
    """
    if radius < 0:
        raise ValueError("radius cannot be negative")
    cap = ball_cap(cap)
    if generating_set is None:
        factors = standard_set(oracle)
    else:
        factors = sorted(set(oracle.canonical(w) for w in generating_set),
                         key=shortlex_key)
    factors = [s for s in factors if s]
    elements, shells = [IDENTITY], [0]
    seen = set(elements)
    frontier = [IDENTITY]
    for r in range(1, radius + 1):
        layer = set()
        for x in frontier:
            for s in factors:
                y = oracle.multiply(x, s)
                if y not in seen:
                    layer.add(y)
        if len(seen) + len(layer) > cap:
            raise BallOverflowError(
                "ball of radius {} over {}".format(radius, oracle.spec), cap)
        frontier = sorted(layer, key=shortlex_key)
        seen.update(frontier)
        elements.extend(frontier)
        shells.extend([r] * len(frontier))
        if not frontier:
            break
    logger.debug("ball of radius %d over %s has %d elements",
                 radius, oracle.spec, len(elements))
    return Ball(oracle, factors, radius, elements, shells,
                saturated=not frontier)


def multiply(oracle, x, y):
    """Product of two words in the group, validated against the rank"""
    return oracle.normal_form(check_word(x, oracle.rank) +
                              check_word(y, oracle.rank))


def factor_length(oracle, generating_set, word, cap=None):
    """The least number of factors from F whose product is ``word``

    :raise:
        :BallOverflowError: If the search ball grows past the cap
    """
    word = oracle.canonical(word)
    if generating_set is None or is_standard(oracle, generating_set):
        return len(word)
    return covering_radius(oracle, generating_set, [word], cap=cap)


def covering_radius(oracle, generating_set, words, cap=None):
    """The least k such that every word lies in F^k

    :raise:
        :BallOverflowError: If the search ball grows past the cap
    """
    target = set(oracle.canonical(w) for w in words)
    cap = ball_cap(cap)
    factors = [s for s in set(oracle.canonical(w) for w in generating_set)
               if s]
    seen = set([IDENTITY])
    frontier = [IDENTITY]
    target.discard(IDENTITY)
    k = 0
    while target:
        k += 1
        layer = set()
        for x in frontier:
            for s in factors:
                y = oracle.multiply(x, s)
                if y not in seen:
                    layer.add(y)
        if not layer:
            raise ValueError("the words are not in the subgroup generated "
                             "by the set")
        if len(seen) + len(layer) > cap:
            raise BallOverflowError("covering radius search", cap)
        seen.update(layer)
        target.difference_update(layer)
        frontier = layer
    return k


def check_same(*oracles):
    """Raise unless all oracles describe the same marked group

    :raise:
        :OracleMismatchError: On the first disagreement
    """
    first = oracles[0]
    for other in oracles[1:]:
        if other != first:
            raise OracleMismatchError(
                "{} and {} are different groups".format(
                    first.spec, other.spec))
    return first
