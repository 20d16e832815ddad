"""Letters and words of the free group

A letter is a nonzero integer: ``i + 1`` stands for the generator with
index ``i`` and ``-(i + 1)`` for its inverse. A word is a tuple of letters.
In text, generators are ``a`` .. ``z`` and upper case marks the inverse.
"""

import string

from redgrp.exc import (
    MalformedWordError,
    ParseError
)


MAX_RANK = len(string.ascii_lowercase)
IDENTITY = ()


def letter(index, sign=1):
    """The letter for generator ``index`` raised to ``sign``"""
    if index < 0:
        raise ValueError("generator index cannot be negative")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return sign * (index + 1)


def letter_index(l):
    return abs(l) - 1


def letter_sign(l):
    return 1 if l > 0 else -1


def letter_key(l):
    """Sort key of a letter: a < A < b < B < ..."""
    return 2 * (abs(l) - 1) + (0 if l > 0 else 1)


def alphabet(rank):
    """All 2 * rank letters in shortlex order"""
    return tuple(s * (i + 1) for i in range(rank) for s in (1, -1))


def shortlex_key(word):
    return (len(word), tuple(letter_key(l) for l in word))


def reduce(word):
    """Freely reduce a word

    :param word: An iterable of letters
    :returns: The unique reduced word representing the same element of the
              free group.
    """
    stack = []
    for l in word:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


def is_reduced(word):
    return all(word[i] != -word[i + 1] for i in range(len(word) - 1))


def invert(word):
    return tuple(-l for l in reversed(word))


def power(word, k):
    """``word`` raised to the integer ``k``, freely reduced"""
    if k < 0:
        word, k = invert(word), -k
    return reduce(tuple(word) * k)


def cyclic_reduce(word):
    """Strip cancelling letters from both ends of a reduced word"""
    word = reduce(word)
    i, j = 0, len(word)
    while j - i > 1 and word[i] == -word[j - 1]:
        i += 1
        j -= 1
    return word[i:j]


def cyclic_permutations(word):
    return [tuple(word[i:]) + tuple(word[:i]) for i in range(len(word))]


def check_word(word, rank):
    """Validate that every letter of ``word`` lives in the given rank

    :returns: the word as a tuple
    :raise:
        :MalformedWordError: On a zero letter or an index out of range
    """
    word = tuple(word)
    for l in word:
        if not isinstance(l, int) or l == 0 or abs(l) > rank:
            raise MalformedWordError(
                "letter {!r} is not valid in rank {}".format(l, rank))
    return word


def reduced_words(rank, length):
    """Yield every reduced word of length at most ``length``, in shortlex
    order"""
    letters = alphabet(rank)
    layer = [IDENTITY]
    yield IDENTITY
    for _ in range(length):
        nxt = []
        for w in layer:
            for l in letters:
                if w and w[-1] == -l:
                    continue
                nxt.append(w + (l,))
        for w in nxt:
            yield w
        layer = nxt


def count_reduced_words(rank, length):
    """The number of reduced words of length at most ``length``"""
    if rank == 0:
        return 1
    total, sphere = 1, 2 * rank
    for _ in range(length):
        total += sphere
        sphere *= 2 * rank - 1
    return total


def letter_name(l):
    name = string.ascii_lowercase[abs(l) - 1]
    return name if l > 0 else name.upper()


def identity_token(rank):
    """``e`` names the identity unless it is itself a generator"""
    return 'e' if rank is None or rank < 5 else '1'


def format_word(word, rank=None):
    """Render a word as text; the identity renders as ``e`` or ``1``"""
    if not word:
        return identity_token(rank)
    return ''.join(letter_name(l) for l in word)


def parse_word(text, rank=None, line=None, offset=0):
    """Parse a word written with letters ``a`` .. ``z``

    Upper case letters are inverses, whitespace is ignored and a letter may
    carry an integer exponent (``a^3``, ``b^-2``) or the suffix ``⁻¹``. The
    empty string and ``1`` denote the identity, as does ``e`` when ``rank``
    is below 5.

    :param text: The text to parse
    :param rank: When given, letters beyond the rank are rejected
    :param line: Line number reported in errors
    :param offset: Column offset of ``text`` within its line
    :returns: A word (not reduced)
    :raise:
        :ParseError: On anything that is not a word
    """
    stripped = text.strip()
    if stripped in ('', '1') or (stripped == 'e' and
                                 identity_token(rank) == 'e'):
        return IDENTITY
    letters = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == '^':
            j = i + 1
            if j < n and text[j] in '+-':
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j or not letters:
                raise ParseError("bad exponent", line=line,
                                 column=offset + i + 1)
            exp = int(text[i + 1:k])
            last = letters.pop()
            letters.extend(power((last,), exp))
            i = k
            continue
        if text.startswith(u'⁻¹', i):
            if not letters:
                raise ParseError("inverse without a letter", line=line,
                                 column=offset + i + 1)
            letters[-1] = -letters[-1]
            i += 2
            continue
        if ch not in string.ascii_letters:
            raise ParseError("unexpected character {!r}".format(ch),
                             line=line, column=offset + i + 1)
        index = string.ascii_lowercase.index(ch.lower())
        if rank is not None and index >= rank:
            raise ParseError(
                "letter {!r} is outside rank {}".format(ch, rank),
                line=line, column=offset + i + 1)
        letters.append(index + 1 if ch.islower() else -(index + 1))
        i += 1
    return tuple(letters)


def words_from_text(text, rank=None):
    """Parse a comma separated list of words"""
    words, offset = [], 0
    for chunk in text.split(','):
        words.append(parse_word(chunk, rank, offset=offset))
        offset += len(chunk) + 1
    return words
