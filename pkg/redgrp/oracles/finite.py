"""Finite groups given by a multiplication table"""

import logging

from redgrp.groups import GroupOracle
from redgrp.words import (
    IDENTITY,
    alphabet
)


logger = logging.getLogger(__name__)


class FiniteOracle(GroupOracle):
    """A finite group with elements ``0 .. order - 1``

    ``table[i][j]`` is the product of elements ``i`` and ``j``. The marking
    sends generator ``k`` to element ``generators[k]``; the generators must
    generate the whole group. Normal forms are shortlex-least words.
    """

    kind = 'finite'

    def __init__(self, table, generators, name=None):
        table = tuple(tuple(int(x) for x in row) for row in table)
        super(FiniteOracle, self).__init__(len(generators))
        self.table = table
        self.gens = tuple(int(g) for g in generators)
        n = len(table)
        for g in self.gens:
            if not 0 <= g < n:
                raise ValueError("generator {} is not an element".format(g))
        self.identity = _check_table(table)
        self._inverses = tuple(row.index(self.identity) for row in table)
        _check_associative(table, [self.letter_element(l)
                                   for l in alphabet(self.rank)])
        self.name = name
        self._words = self._spanning_words()

    @classmethod
    def from_permutations(cls, permutations, name=None):
        """The group generated by permutations of ``0 .. degree - 1``

        :param permutations: Sequences of images; generator ``k`` of the
                             marking is ``permutations[k]``
        """
        perms = [tuple(p) for p in permutations]
        degree = len(perms[0]) if perms else 1
        if any(sorted(p) != list(range(degree)) for p in perms):
            raise ValueError("not a permutation of 0..{}".format(degree - 1))
        compose = lambda p, q: tuple(p[q[i]] for i in range(degree))
        elements = [tuple(range(degree))]
        index = {elements[0]: 0}
        i = 0
        while i < len(elements):
            for p in perms:
                q = compose(elements[i], p)
                if q not in index:
                    index[q] = len(elements)
                    elements.append(q)
            i += 1
        table = [[index[compose(p, q)] for q in elements] for p in elements]
        return cls(table, [index[p] for p in perms], name=name)

    @classmethod
    def symmetric(cls, degree):
        """The symmetric group marked by a transposition and a long cycle"""
        transposition = [1, 0] + list(range(2, degree))
        cycle = list(range(1, degree)) + [0]
        return cls.from_permutations([transposition, cycle],
                                     name='S{}'.format(degree))

    @classmethod
    def trivial(cls):
        """The trivial group marked by the rank-0 free group"""
        return cls([[0]], [], name='trivial')

    @property
    def spec(self):
        if self.name is not None:
            return 'finite:{}'.format(self.name)
        return 'finite:<table of order {}>'.format(len(self.table))

    def _key(self):
        return (self.table, self.gens)

    def order(self):
        return len(self.table)

    def _spanning_words(self):
        # BFS in shortlex order finds the shortlex-least word of every element
        n = len(self.table)
        words = {self.identity: IDENTITY}
        frontier = [self.identity]
        letters = alphabet(self.rank)
        while frontier:
            nxt = []
            for x in frontier:
                for l in letters:
                    y = self.table[x][self.letter_element(l)]
                    if y not in words:
                        words[y] = words[x] + (l,)
                        nxt.append(y)
            frontier = nxt
        if len(words) != n:
            raise ValueError("generators span {} of {} elements".format(
                len(words), n))
        logger.debug("finite group %s of order %d", self.spec, n)
        return tuple(words[i] for i in range(n))

    def letter_element(self, l):
        g = self.gens[abs(l) - 1]
        return g if l > 0 else self._inverses[g]

    def element(self, word):
        """The table index of the element a word represents"""
        x = self.identity
        for l in word:
            x = self.table[x][self.letter_element(l)]
        return x

    def word(self, element):
        """The normal form of a table element"""
        return self._words[element]

    def normal_form(self, word):
        return self._words[self.element(word)]

    def is_identity(self, word):
        return self.element(word) == self.identity


def _check_table(table):
    """Check for a Latin square with an identity; returns the identity"""
    n = len(table)
    if not n:
        raise ValueError("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError("row {} has {} entries, expected {}".format(
                i, len(row), n))
        if sorted(row) != list(range(n)):
            raise ValueError("row {} is not a permutation".format(i))
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != list(range(n)):
            raise ValueError("column {} is not a permutation".format(j))
    for i in range(n):
        if all(table[i][j] == j for j in range(n)):
            return i
    raise ValueError("the table has no identity")


def _check_associative(table, middles):
    """Light's test: (x g) y = x (g y) for every g of a generating set"""
    n = len(table)
    for g in set(middles):
        rg = table[g]
        for x in range(n):
            rxg = table[table[x][g]]
            rx = table[x]
            for y in range(n):
                if rxg[y] != rx[rg[y]]:
                    raise ValueError(
                        "the table is not associative at ({}, {}, {})".format(
                            x, g, y))
