"""Direct and free products of marked groups

Both products are marked by the concatenated generators of their factors:
generator ``k`` of factor ``i`` becomes generator ``offset[i] + k``.
"""

import functools
import itertools
import operator

from redgrp.groups import GroupOracle


class _Product(GroupOracle):

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("a product needs at least one factor")
        self.factors = factors
        self.offsets = tuple(itertools.accumulate(
            [0] + [f.rank for f in factors[:-1]]))
        super(_Product, self).__init__(sum(f.rank for f in factors))
        self._owner = {}
        for i, (f, off) in enumerate(zip(factors, self.offsets)):
            for k in range(f.rank):
                self._owner[off + k + 1] = i

    def _key(self):
        return tuple(f for f in self.factors)

    def factor_of(self, l):
        """Index of the factor a letter belongs to"""
        return self._owner[abs(l)]

    def localize(self, i, word):
        """Translate letters of factor ``i`` into that factor's alphabet"""
        off = self.offsets[i]
        return tuple(l - off if l > 0 else l + off for l in word)

    def globalize(self, i, word):
        off = self.offsets[i]
        return tuple(l + off if l > 0 else l - off for l in word)


class DirectProductOracle(_Product):
    """The direct product; normal forms are concatenated factor normal
    forms"""

    kind = 'direct-product'

    @property
    def spec(self):
        return 'product({})'.format(','.join(f.spec for f in self.factors))

    def order(self):
        orders = [f.order() for f in self.factors]
        if None in orders:
            return None
        return functools.reduce(operator.mul, orders, 1)

    def components(self, word):
        """Split a word into one local word per factor"""
        parts = [[] for _ in self.factors]
        for l in word:
            i = self.factor_of(l)
            parts[i].append(l)
        return [self.localize(i, p) for i, p in enumerate(parts)]

    def normal_form(self, word):
        result = ()
        for i, (f, part) in enumerate(zip(self.factors,
                                          self.components(word))):
            result += self.globalize(i, f.normal_form(part))
        return result

    def is_identity(self, word):
        return all(f.is_identity(part) for f, part in
                   zip(self.factors, self.components(word)))


class FreeProductOracle(_Product):
    """The free product; normal forms are alternating syllables, each a
    nontrivial normal form of its factor"""

    kind = 'free-product'

    @property
    def spec(self):
        return 'freeprod({})'.format(','.join(f.spec for f in self.factors))

    def order(self):
        nontrivial = [f for f in self.factors if f.order() != 1]
        if len(nontrivial) > 1:
            return None
        if nontrivial:
            return nontrivial[0].order()
        return 1

    def syllables(self, word):
        """The reduced syllable sequence of a word as ``(factor, local)``
        pairs"""
        stack = []
        for l in word:
            i = self.factor_of(l)
            local = self.localize(i, (l,))
            if stack and stack[-1][0] == i:
                merged = self.factors[i].normal_form(stack[-1][1] + local)
                if merged:
                    stack[-1] = (i, merged)
                else:
                    stack.pop()
            else:
                local = self.factors[i].normal_form(local)
                if local:
                    stack.append((i, local))
        return stack

    def normal_form(self, word):
        result = ()
        for i, local in self.syllables(word):
            result += self.globalize(i, local)
        return result
