"""One-relator groups solved by Dehn's algorithm"""

import logging
import threading

from redgrp.exc import (
    BallOverflowError,
    SmallCancellationError,
    WordProblemError
)
from redgrp.groups import GroupOracle
from redgrp.util import ball_cap
from redgrp.words import (
    IDENTITY,
    alphabet,
    cyclic_permutations,
    cyclic_reduce,
    format_word,
    invert,
    reduce,
    shortlex_key
)


logger = logging.getLogger(__name__)


def symmetrize_relator(relator):
    """All cyclic permutations of the cyclically reduced relator and of its
    inverse, deduplicated and sorted"""
    r = cyclic_reduce(relator)
    if not r:
        raise ValueError("the relator is trivial in the free group")
    return sorted(set(cyclic_permutations(r) + cyclic_permutations(invert(r))))


def max_piece(relator):
    """The longest piece of the symmetrized relator set

    A piece is a common prefix of two distinct elements of the symmetrized
    set. After sorting, the longest one is shared by some adjacent pair.
    """
    rstar = symmetrize_relator(relator)
    best = IDENTITY
    for u, v in zip(rstar, rstar[1:]):
        k = 0
        while k < len(u) and u[k] == v[k]:
            k += 1
        if k > len(best):
            best = u[:k]
    return best


def check_small_cancellation(relator):
    """Verify C'(1/6): every piece is shorter than a sixth of the relator

    :raise:
        :SmallCancellationError: With the offending piece
    """
    n = len(cyclic_reduce(relator))
    piece = max_piece(relator)
    if 6 * len(piece) >= n:
        raise SmallCancellationError(piece, n)
    return piece


class DehnReducer(object):
    """Dehn's algorithm for a single C'(1/6) relator"""

    def __init__(self, relator):
        check_small_cancellation(relator)
        self.relator = cyclic_reduce(relator)
        n = len(self.relator)
        self.length = n
        self.half = n // 2
        # more than half of some r' = u v maps to v⁻¹
        self._rules = {}
        for r in symmetrize_relator(self.relator):
            for k in range(self.half + 1, n + 1):
                self._rules.setdefault(r[:k], invert(r[k:]))

    def _find(self, word):
        for i in range(len(word)):
            for k in range(min(self.length, len(word) - i), self.half, -1):
                rhs = self._rules.get(word[i:i + k])
                if rhs is not None:
                    return i, k, rhs
        return None

    def reduce(self, word):
        """Apply Dehn's algorithm

        :returns: A reduced word, empty exactly when ``word`` is trivial
        """
        word = reduce(word)
        while True:
            hit = self._find(word)
            if hit is None:
                return word
            i, k, rhs = hit
            word = reduce(word[:i] + rhs + word[i + k:])


def dehn_reduce(relator, word):
    """Reduce ``word`` by Dehn's algorithm for the one-relator group with the
    given relator

    :raise:
        :SmallCancellationError: If the relator fails C'(1/6)
    """
    return DehnReducer(relator).reduce(word)


class DehnOracle(GroupOracle):
    """A one-relator C'(1/6) group

    Equality is decided by Dehn's algorithm. Normal forms are shortlex-least
    representatives, found in a geodesic ball that grows on demand; the ball
    is shared between threads behind a lock.
    """

    kind = 'one-relator-dehn'

    def __init__(self, rank, relator, cap=None):
        super(DehnOracle, self).__init__(rank)
        if any(abs(l) > rank for l in relator):
            raise ValueError("relator uses letters outside rank {}".format(
                rank))
        self.reducer = DehnReducer(relator)
        self.relator = self.reducer.relator
        self._cap = cap
        self._shift = self._abelian_shift()
        self._lock = threading.Lock()
        self._radius = 0
        self._layer = [IDENTITY]
        self._buckets = {self._bucket(IDENTITY): [IDENTITY]}
        self._size = 1
        self._complete = False

    @property
    def spec(self):
        return 'onerel:free:{}:{}'.format(
            self.rank, format_word(self.relator, self.rank))

    def _key(self):
        return (self.rank, self.relator)

    def is_identity(self, word):
        return not self.reducer.reduce(word)

    def _abelian_shift(self):
        v = [0] * self.rank
        for l in self.relator:
            v[abs(l) - 1] += 1 if l > 0 else -1
        pivot = next((i for i, e in enumerate(v) if e), None)
        return v, pivot

    def _bucket(self, word):
        """The image of a word in the abelianization, as a canonical
        vector"""
        v = [0] * self.rank
        for l in word:
            v[abs(l) - 1] += 1 if l > 0 else -1
        rel, pivot = self._shift
        if pivot is not None:
            c = rel[pivot]
            m = -(v[pivot] // abs(c)) * (1 if c > 0 else -1)
            v = [a + m * b for a, b in zip(v, rel)]
        return tuple(v)

    def _find(self, word, bucket):
        for rep in self._buckets.get(bucket, ()):
            if self.is_identity(word + invert(rep)):
                return rep
        return None

    def _grow(self):
        cap = ball_cap(self._cap)
        found = []
        candidates = set()
        for w in self._layer:
            for l in alphabet(self.rank):
                if w and w[-1] == -l:
                    continue
                candidates.add(w + (l,))
        for c in sorted(candidates, key=shortlex_key):
            bucket = self._bucket(c)
            if self._find(c, bucket) is None:
                self._buckets.setdefault(bucket, []).append(c)
                found.append(c)
        self._size += len(found)
        if self._size > cap:
            raise BallOverflowError(
                "geodesic ball of {}".format(self.spec), cap)
        self._radius += 1
        self._layer = found
        self._complete = not found
        logger.debug("%s: geodesic ball of radius %d has %d elements",
                     self.spec, self._radius, self._size)

    def normal_form(self, word):
        short = self.reducer.reduce(word)
        if not short:
            return IDENTITY
        bucket = self._bucket(short)
        with self._lock:
            while True:
                rep = self._find(short, bucket)
                if rep is not None:
                    return rep
                if self._radius >= len(short) or self._complete:
                    # geodesic length never exceeds the Dehn output length
                    raise WordProblemError(
                        "no representative for {}".format(
                            format_word(short, self.rank)), short)
                self._grow()
