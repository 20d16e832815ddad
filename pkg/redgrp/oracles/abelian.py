"""Finitely generated abelian groups"""

import functools
import operator

from redgrp.groups import GroupOracle


def symmetric_residue(value, modulus):
    """Residue of ``value`` in (-modulus/2, modulus/2]"""
    r = value % modulus
    if r > modulus // 2:
        r -= modulus
    return r


class AbelianOracle(GroupOracle):
    """Z^k times finite cyclic factors, one factor per generator

    The torsion vector lists the order of every factor, with 0 for an
    infinite cyclic factor. Normal forms list the exponent of each generator
    in index order, torsion exponents taken in the symmetric residue range,
    which makes them geodesic.
    """

    kind = 'abelian'

    def __init__(self, torsion):
        torsion = tuple(int(t) for t in torsion)
        if any(t < 0 for t in torsion):
            raise ValueError("torsion orders cannot be negative")
        super(AbelianOracle, self).__init__(len(torsion))
        self.torsion = torsion

    @classmethod
    def cyclic(cls, n):
        """The cyclic group of order ``n`` (0 for the integers)"""
        return cls([n])

    @property
    def spec(self):
        if self.rank == 1 and self.torsion[0]:
            return 'cyclic:{}'.format(self.torsion[0])
        return 'abelian:[{}]'.format(','.join(str(t) for t in self.torsion))

    @property
    def finite(self):
        return all(self.torsion)

    def order(self):
        if not self.finite:
            return None
        return functools.reduce(operator.mul, self.torsion, 1)

    def vector(self, word):
        """The reduced exponent vector of a word"""
        v = [0] * self.rank
        for l in word:
            v[abs(l) - 1] += 1 if l > 0 else -1
        return self.reduce_vector(v)

    def reduce_vector(self, v):
        return tuple(symmetric_residue(e, t) if t else e
                     for e, t in zip(v, self.torsion))

    def from_vector(self, v):
        """The normal form of an exponent vector"""
        word = []
        for i, e in enumerate(self.reduce_vector(v)):
            word.extend([(i + 1) if e > 0 else -(i + 1)] * abs(e))
        return tuple(word)

    def normal_form(self, word):
        return self.from_vector(self.vector(word))

    def multiply(self, x, y):
        return self.from_vector([a + b for a, b in
                                 zip(self.vector(x), self.vector(y))])

    def is_identity(self, word):
        return not any(self.vector(word))
