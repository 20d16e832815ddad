"""The free group"""

from redgrp.groups import GroupOracle
from redgrp.words import reduce


class FreeOracle(GroupOracle):
    """The free group of a given rank; normal forms are reduced words"""

    kind = 'free'

    @property
    def spec(self):
        return 'free:{}'.format(self.rank)

    def normal_form(self, word):
        return reduce(word)

    def multiply(self, x, y):
        # x and y are reduced, so cancellation only happens at the seam
        i = 0
        n = min(len(x), len(y))
        while i < n and x[-1 - i] == -y[i]:
            i += 1
        return tuple(x[:len(x) - i]) + tuple(y[i:])
