"""redgrp file formats

* element files: CSV rows ``word,coefficient``, optional header, ``#``
  comments; coefficients are integers, ``num/den`` rationals, decimals or
  complex numbers such as ``1+2j``
* multiplication tables: a ``generators:`` line listing the generator
  elements, then one whitespace separated row per element
* certificates: ``key: value`` records
* experiment manifests: ``key = value`` lines, ``#`` comments, repeated
  keys allowed
"""

import csv
import io
import logging
import os
from fractions import Fraction

from redgrp.algebra import AlgebraElement
from redgrp.exc import (
    ManifestError,
    ParseError
)
from redgrp.oracles.finite import FiniteOracle
from redgrp.util import format_scalar
from redgrp.words import parse_word


logger = logging.getLogger(__name__)

ELEMENT_HEADER = ('word', 'coefficient')

COMMANDS = ('ball', 'norm', 'srf', 'compress', 'mean-certify', 'modulus',
            'converge', 'sandwich')


def _lines(source):
    if isinstance(source, str):
        return source.splitlines()
    return source.read().splitlines()


def parse_scalar(text, line=None, column=None):
    """An exact rational when possible, else a complex number"""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        value = complex(text.replace('i', 'j'))
    except ValueError:
        raise ParseError("bad coefficient {!r}".format(text), line=line,
                         column=column)
    return value.real if value.imag == 0 else value


def read_element(source, oracle):
    """Read an algebra element

    :param source: Text or a readable stream
    :param oracle: The group the words are read in
    :returns: An :class:`redgrp.algebra.AlgebraElement`
    :raise:
        :ParseError: With line and column of the offending cell
    """
    pairs = []
    for number, row in enumerate(csv.reader(_lines(source)), start=1):
        if not row or not ''.join(row).strip() or \
                row[0].lstrip().startswith('#'):
            continue
        if tuple(c.strip().lower() for c in row) == ELEMENT_HEADER:
            continue
        if len(row) != 2:
            raise ParseError("expected word,coefficient", line=number,
                             column=1)
        word = parse_word(row[0], oracle.rank, line=number)
        pairs.append((word, parse_scalar(row[1], line=number,
                                         column=len(row[0]) + 2)))
    return AlgebraElement(oracle, pairs)


def read_element_file(path, oracle):
    with open(path) as stream:
        try:
            return read_element(stream, oracle)
        except ParseError as e:
            err = ParseError("{}: {}".format(path, e))
            err.line, err.column = e.line, e.column
            raise err


def write_element(f, stream):
    """Write an element in shortlex order of its support"""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(ELEMENT_HEADER)
    for w in f.support:
        writer.writerow((f.oracle.format(w), format_scalar(f[w])))


def read_table(source, name=None):
    """Read a multiplication table into a :class:`FiniteOracle`

    :raise:
        :ParseError: On malformed lines or a table that is not a group
    """
    generators, rows = None, []
    for number, text in enumerate(_lines(source), start=1):
        text = text.split('#', 1)[0].strip()
        if not text:
            continue
        if text.startswith('generators:'):
            if generators is not None:
                raise ParseError("duplicate generators line", line=number)
            body = text[len('generators:'):].replace(',', ' ').split()
            try:
                generators = [int(g) for g in body]
            except ValueError:
                raise ParseError("generators must be element indices",
                                 line=number)
            continue
        try:
            rows.append([int(x) for x in text.replace(',', ' ').split()])
        except ValueError:
            raise ParseError("table entries must be integers", line=number)
    if generators is None:
        raise ParseError("missing generators line", line=1)
    try:
        return FiniteOracle(rows, generators, name=name)
    except ValueError as e:
        raise ParseError(str(e))


def read_table_file(path):
    with open(path) as stream:
        return read_table(stream, name=path)


def format_cell(value):
    if isinstance(value, (int, float, complex, Fraction)) and \
            not isinstance(value, bool):
        return format_scalar(value)
    return '' if value is None else str(value)


def write_csv(stream, header, rows):
    """Write a table with a header row; numbers go through
    :func:`redgrp.util.format_scalar`"""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])


def format_record(pairs):
    """``key: value`` lines"""
    return ''.join('{}: {}\n'.format(k, format_cell(v)) for k, v in pairs)


def format_certificate(certificate):
    """A mean certificate as a text record"""
    oracle = certificate.oracle
    pairs = [
        ('group', oracle.spec),
        ('mean', certificate.mean.__class__.__name__),
        ('n', certificate.n),
        ('support_radius', certificate.support_radius),
        ('generating_set', ' '.join(oracle.format(s)
                                    for s in certificate.generating_set)),
        ('test_radius', certificate.radius),
        ('tested', certificate.tested),
        ('radius_sufficient', certificate.radius_sufficient),
        ('stabilized', certificate.stabilized),
        ('defect', certificate.defect),
        ('pointwise_defect', certificate.pointwise_defect),
    ]
    for s in certificate.generating_set:
        pairs.append(('defect[{}]'.format(oracle.format(s)),
                      certificate.per_generator[s]))
    if certificate.bound is not None:
        pairs.append(('bound', certificate.bound))
    pairs.append(('passed', certificate.passed))
    return format_record(pairs)


class ExperimentManifest(object):
    """A recorded command line

    ``values`` maps every key to the list of its values in file order.
    """

    def __init__(self, command, values, path=None):
        self.command = command
        self.values = values
        self.path = path

    def __repr__(self):
        return 'ExperimentManifest({!r}, {!r})'.format(self.command,
                                                       self.path)

    def get(self, key, default=None):
        values = self.values.get(key)
        return values[-1] if values else default

    @property
    def group(self):
        return self.get('group')

    @property
    def element(self):
        return self.get('element')

    @property
    def output(self):
        return self.get('output')

    @property
    def seed(self):
        return self.get('seed')

    def argv(self):
        """The equivalent command line, global options first"""
        front, back = [], [self.command]
        for key, values in self.values.items():
            option = '--' + key.replace('_', '-')
            target = front if key in ('jobs', 'seed', 'output') else back
            for value in values:
                if value.lower() == 'true':
                    target.append(option)
                elif value.lower() != 'false':
                    target.extend((option, value))
        return front + back


def read_manifest(source, path=None):
    """Read an experiment manifest

    Relative ``element`` and ``output`` paths are taken relative to the
    manifest's directory.

    :raise:
        :ManifestError: With the line of the offending entry, on unknown
                        commands or missing element files
    """
    command, values = None, {}
    base = os.path.dirname(path) if path else ''
    for number, text in enumerate(_lines(source), start=1):
        text = text.split('#', 1)[0]
        if not text.strip():
            continue
        key, sep, value = text.partition('=')
        if not sep:
            raise ManifestError("expected key = value", line=number,
                                column=1)
        key, value = key.strip().replace('-', '_'), value.strip()
        if not key:
            raise ManifestError("empty key", line=number, column=1)
        if key == 'command':
            if value not in COMMANDS:
                raise ManifestError("unknown command {!r}".format(value),
                                    line=number, column=text.index('=') + 2)
            command = value
            continue
        if key in ('element', 'output') and base and \
                not os.path.isabs(value):
            value = os.path.join(base, value)
        if key == 'element' and not os.path.exists(value):
            raise ManifestError("element file {} does not exist".format(
                value), line=number)
        values.setdefault(key, []).append(value)
    if command is None:
        raise ManifestError("the manifest names no command")
    logger.debug("manifest %s: %s %r", path, command, values)
    return ExperimentManifest(command, values, path=path)


def read_manifest_file(path):
    with io.open(path, encoding='utf-8') as stream:
        return read_manifest(stream, path=path)
