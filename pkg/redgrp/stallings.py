"""Subgroups of free groups through Stallings foldings"""

import logging
from collections import deque

from redgrp.oracles.free import FreeOracle
from redgrp.words import (
    alphabet,
    check_word,
    invert,
    letter_key,
    reduce
)


logger = logging.getLogger(__name__)


class _UnionFind(object):

    def __init__(self):
        self.parent = {}

    def add(self, v):
        self.parent.setdefault(v, v)

    def find(self, v):
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, u, v):
        u, v = self.find(u), self.find(v)
        if u == v:
            return False
        if v < u:
            u, v = v, u
        self.parent[v] = u
        return True


class SubgroupGraph(object):
    """The folded core graph of a finitely generated subgroup of a free
    group

    Vertices are integers with ``base`` the base vertex. ``edges`` is a set
    of ``(u, l, v)`` with a positive letter ``l``; such an edge can be read
    forwards with ``l`` or backwards with ``-l``.
    """

    def __init__(self, rank, vertices, edges, base=0):
        self.rank = rank
        self.vertices = tuple(sorted(vertices))
        self.edges = frozenset(edges)
        self.base = base
        self._out = {}
        for u, l, v in self.edges:
            self._out[(u, l)] = v
            self._out[(v, -l)] = u
        self._tree, self._paths = self._spanning_tree()
        self._basis_edges = sorted(
            (e for e in self.edges if e not in self._tree),
            key=lambda e: (self.vertices.index(e[0]), letter_key(e[1]),
                           self.vertices.index(e[2])))
        self.basis = [reduce(self._paths[u] + (l,) + invert(self._paths[v]))
                      for u, l, v in self._basis_edges]

    def __repr__(self):
        return 'SubgroupGraph(rank={}, vertices={}, edges={})'.format(
            self.rank, len(self.vertices), len(self.edges))

    @property
    def subgroup_rank(self):
        """Rank of the subgroup: edges - vertices + 1"""
        return len(self.edges) - len(self.vertices) + 1

    def follow(self, vertex, l):
        """The vertex reached by reading ``l`` at ``vertex``, or ``None``"""
        return self._out.get((vertex, l))

    def _spanning_tree(self):
        paths = {self.base: ()}
        tree = set()
        queue = deque([self.base])
        letters = alphabet(self.rank)
        while queue:
            u = queue.popleft()
            for l in letters:
                v = self._out.get((u, l))
                if v is None or v in paths:
                    continue
                paths[v] = paths[u] + (l,)
                tree.add((u, l, v) if l > 0 else (v, -l, u))
                queue.append(v)
        return tree, paths

    def trace(self, word):
        """Read a reduced word from the base vertex

        :returns: The final vertex, or ``None`` if the path leaves the graph
        """
        v = self.base
        for l in reduce(word):
            v = self._out.get((v, l))
            if v is None:
                return None
        return v

    def contains(self, word):
        """Membership test: the word reads a loop at the base vertex"""
        return self.trace(word) == self.base

    def coordinates(self, word):
        """Express a member as a word in the free basis

        Basis element ``j`` is letter ``j + 1`` of the returned word.

        :raise:
            :ValueError: If the word is not in the subgroup
        """
        position = dict((e, j) for j, e in enumerate(self._basis_edges))
        v = self.base
        result = []
        for l in reduce(word):
            w = self._out.get((v, l))
            if w is None:
                raise ValueError("the word is not in the subgroup")
            edge = (v, l, w) if l > 0 else (w, -l, v)
            j = position.get(edge)
            if j is not None:
                result.append(j + 1 if l > 0 else -(j + 1))
            v = w
        if v != self.base:
            raise ValueError("the word is not in the subgroup")
        return reduce(result)

    def from_coordinates(self, coordinates):
        """The ambient word of a word in the free basis"""
        word = []
        for c in coordinates:
            b = self.basis[abs(c) - 1]
            word.extend(b if c > 0 else invert(b))
        return reduce(word)

    def as_free_oracle(self):
        """The subgroup as a free group marked by its basis"""
        return FreeOracle(len(self.basis))

    def index(self):
        """The index of the subgroup when finite, else ``None``

        The index is finite exactly when every vertex has all ``2 * rank``
        labels, in which case it is the number of vertices.
        """
        for v in self.vertices:
            for l in alphabet(self.rank):
                if (v, l) not in self._out:
                    return None
        return len(self.vertices)


def stallings_fold(generators, rank=None):
    """Fold the bouquet of loops spelled by ``generators``

    :param generators: Words of the ambient free group
    :param rank: The ambient rank. If ``None``, the largest generator index
                 that occurs.
    :returns: A :class:`SubgroupGraph`
    """
    generators = [reduce(g) for g in generators]
    if rank is None:
        rank = max([abs(l) for g in generators for l in g] or [0])
    for g in generators:
        check_word(g, rank)
    uf = _UnionFind()
    uf.add(0)
    edges = set()
    fresh = 1
    for g in generators:
        if not g:
            continue
        u = 0
        for i, l in enumerate(g):
            if i == len(g) - 1:
                v = 0
            else:
                v = fresh
                fresh += 1
                uf.add(v)
            edges.add((u, l, v) if l > 0 else (v, -l, u))
            u = v
    changed = True
    while changed:
        changed = False
        edges = set((uf.find(u), l, uf.find(v)) for u, l, v in edges)
        out = {}
        for u, l, v in sorted(edges):
            for a, lab, b in ((u, l, v), (v, -l, u)):
                seen = out.get((a, lab))
                if seen is None:
                    out[(a, lab)] = b
                elif seen != b and uf.union(seen, b):
                    changed = True
    vertices = set([0])
    for u, _, v in edges:
        vertices.add(u)
        vertices.add(v)
    logger.debug("folded %d generators into %d vertices and %d edges",
                 len(generators), len(vertices), len(edges))
    return SubgroupGraph(rank, vertices, edges, base=0)
