"""Group specs

::

    spec     := 'free:' INT
              | 'cyclic:' INT
              | 'abelian:[' INT (',' INT)* ']'
              | 'finite:' PATH
              | 'symmetric:' INT
              | 'trivial'
              | 'product(' spec (',' spec)* ')'
              | 'freeprod(' spec (',' spec)* ')'
              | 'onerel:free:' INT ':' WORD

A torsion entry of 0 in ``abelian`` stands for an infinite cyclic factor.
"""

import logging

from redgrp.exc import ParseError
from redgrp.oracles import (
    AbelianOracle,
    DehnOracle,
    DirectProductOracle,
    FiniteOracle,
    FreeOracle,
    FreeProductOracle
)
from redgrp.words import parse_word


logger = logging.getLogger(__name__)

_STOP = ',)'


class _Parser(object):

    def __init__(self, text, loader):
        self.text = text
        self.pos = 0
        self.loader = loader

    def error(self, message, pos=None):
        return ParseError(message, column=(self.pos if pos is None
                                           else pos) + 1)

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def accept(self, token):
        self.skip_space()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            raise self.error("expected {!r}".format(token))

    def integer(self):
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def until_stop(self):
        self.skip_space()
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == '(':
                depth += 1
            elif ch in _STOP:
                if depth == 0:
                    break
                if ch == ')':
                    depth -= 1
            self.pos += 1
        return start, self.text[start:self.pos].strip()

    def spec(self):
        self.skip_space()
        start = self.pos
        if self.accept('free:'):
            return FreeOracle(self.integer())
        if self.accept('cyclic:'):
            n = self.integer()
            if n < 1:
                raise self.error("cyclic order must be positive", start)
            return AbelianOracle.cyclic(n)
        if self.accept('abelian:'):
            self.expect('[')
            torsion = [self.integer()]
            while self.accept(','):
                torsion.append(self.integer())
            self.expect(']')
            return AbelianOracle(torsion)
        if self.accept('symmetric:'):
            n = self.integer()
            if n < 2:
                raise self.error("symmetric degree must be at least 2", start)
            return FiniteOracle.symmetric(n)
        if self.accept('trivial'):
            return FiniteOracle.trivial()
        if self.accept('finite:'):
            at, path = self.until_stop()
            if not path:
                raise self.error("expected a table file", at)
            try:
                return self.loader(path)
            except ParseError as e:
                err = ParseError("{}: {}".format(path, e))
                err.line, err.column = e.line, e.column
                raise err
            except (IOError, OSError) as e:
                raise self.error("cannot read {}: {}".format(path, e), at)
        for name, cls in (('product(', DirectProductOracle),
                          ('freeprod(', FreeProductOracle)):
            if self.accept(name):
                factors = [self.spec()]
                while self.accept(','):
                    factors.append(self.spec())
                self.expect(')')
                return cls(factors)
        if self.accept('onerel:'):
            self.expect('free:')
            rank = self.integer()
            self.expect(':')
            at, text = self.until_stop()
            relator = parse_word(text, rank, offset=at)
            try:
                return DehnOracle(rank, relator)
            except ValueError as e:
                raise self.error(str(e), at)
        raise self.error("unknown group spec")


def parse_group(text, loader=None):
    """Build a marked group from its spec

    :param text: The spec, e.g. ``product(free:2,abelian:[0])``
    :param loader: Callable that reads a multiplication table file into a
                   :class:`FiniteOracle`. Defaults to
                   :func:`redgrp.io.read_table_file`.
    :returns: A :class:`redgrp.groups.GroupOracle`
    :raise:
        :ParseError: With the column of the offending character
        :SmallCancellationError: For a one-relator spec failing C'(1/6)
    """
    if loader is None:
        from redgrp.io import read_table_file
        loader = read_table_file
    parser = _Parser(text, loader)
    oracle = parser.spec()
    parser.skip_space()
    if parser.pos != len(text):
        raise parser.error("trailing characters")
    logger.debug("parsed %r as %s", text, oracle.spec)
    return oracle
