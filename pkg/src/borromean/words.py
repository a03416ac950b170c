"""
Free-group words over named generators.

A word is an immutable, freely reduced tuple of letters.  Each letter is a
generator name together with a sign (+1 or -1).  The text form is

    X*Y^-1*X^-1*Y        (identity spelled ``1``)

Powers ``X^3`` and parenthesised groups ``(A^-1*B)^5`` are accepted on input;
the printer collapses runs of the same letter into powers, so
``parse(str(w)) == w`` always holds.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

__all__ = [
    "Letter",
    "Word",
    "ParseError",
    "reduce",
    "concat",
    "invert",
    "exponent_sum",
    "cyclically_reduce",
    "cyclic_normal_form",
    "parse_word",
    "is_generator_name",
    "IDENTITY",
]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Malformed text in one of the package's text formats."""


def is_generator_name(name: str) -> bool:
    return isinstance(name, str) and bool(_NAME.match(name))


class Letter(NamedTuple):
    generator: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def key(self):
        # ordering used for canonical relator forms: by name, positive first
        return (self.generator, 0 if self.sign > 0 else 1)

    def __str__(self):
        return self.generator if self.sign > 0 else f"{self.generator}^-1"


def _free_reduce(letters: Iterable[Letter]) -> tuple:
    out: list = []
    for letter in letters:
        if out and out[-1].generator == letter.generator and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


class Word:
    """An element of a free group, stored freely reduced."""

    __slots__ = ("_letters", "_hash")

    def __init__(self, letters: Iterable = ()):
        checked = []
        for item in letters:
            gen, sign = item
            if not is_generator_name(gen):
                raise ValueError(f"bad generator name {gen!r}")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
            checked.append(Letter(gen, sign))
        self._letters = _free_reduce(checked)
        self._hash = hash(self._letters)

    @classmethod
    def _trusted(cls, letters: tuple) -> "Word":
        w = object.__new__(cls)
        w._letters = letters
        w._hash = hash(letters)
        return w

    @classmethod
    def generator(cls, name: str, power: int = 1) -> "Word":
        sign = 1 if power >= 0 else -1
        return cls([(name, sign)] * abs(power))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    @property
    def letters(self) -> tuple:
        return self._letters

    def __len__(self):
        return len(self._letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self._letters)

    def __getitem__(self, index):
        return self._letters[index]

    def __bool__(self):
        return bool(self._letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self._letters == other._letters
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Word"):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple(letter.key() for letter in self._letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        a, b = self._letters, other._letters
        i = 0
        while i < len(a) and i < len(b) and a[-1 - i] == b[i].inverse():
            i += 1
        return Word._trusted(a[: len(a) - i] + b[i:])

    def __invert__(self) -> "Word":
        return self.inverse()

    def inverse(self) -> "Word":
        return Word._trusted(tuple(letter.inverse() for letter in reversed(self._letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = IDENTITY
        for _ in range(n):
            result = result * self
        return result

    def exponent_sum(self, generator: str) -> int:
        return sum(letter.sign for letter in self._letters if letter.generator == generator)

    def generators(self) -> set:
        return {letter.generator for letter in self._letters}

    def cyclically_reduce(self) -> "Word":
        letters = self._letters
        i, j = 0, len(letters) - 1
        while i < j and letters[i] == letters[j].inverse():
            i += 1
            j -= 1
        return Word._trusted(letters[i : j + 1])

    def substitute(self, mapping: Mapping[str, "Word"]) -> "Word":
        """Replace each generator by a word; unmapped generators are kept."""
        result = IDENTITY
        for letter in self._letters:
            image = mapping.get(letter.generator)
            if image is None:
                image = Word._trusted((letter,))
            elif letter.sign < 0:
                image = image.inverse()
            result = result * image
        return result

    def rename(self, names: Mapping[str, str]) -> "Word":
        return Word._trusted(
            tuple(Letter(names.get(l.generator, l.generator), l.sign) for l in self._letters)
        )

    def syllables(self) -> list:
        """Runs of a single generator as (name, exponent) pairs."""
        out: list = []
        for letter in self._letters:
            if out and out[-1][0] == letter.generator:
                out[-1][1] += letter.sign
            else:
                out.append([letter.generator, letter.sign])
        return [tuple(s) for s in out]

    def __str__(self):
        if not self._letters:
            return "1"
        parts = []
        for name, exp in self.syllables():
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(parts)

    def __repr__(self):
        return f"Word({str(self)!r})"


IDENTITY = Word._trusted(())


def reduce(raw: Sequence) -> Word:
    return Word(raw)


def concat(w1: Word, w2: Word) -> Word:
    return w1 * w2


def invert(w: Word) -> Word:
    return w.inverse()


def exponent_sum(w: Word, g: str) -> int:
    return w.exponent_sum(g)


def cyclically_reduce(w: Word) -> Word:
    return w.cyclically_reduce()


def cyclic_normal_form(w: Word) -> Word:
    """
    Canonical representative of ``w`` up to cyclic conjugation and inversion.

    The word is cyclically reduced, then the lexicographically least rotation
    of either it or its inverse is returned.
    """
    w = w.cyclically_reduce()
    if not w:
        return w
    best = None
    for candidate in (w.letters, w.inverse().letters):
        n = len(candidate)
        for i in range(n):
            rot = candidate[i:] + candidate[:i]
            key = tuple(l.key() for l in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return Word._trusted(best[1])


# --- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(-?\d+)|(\S))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected text at {pos}: {text[pos:]!r}")
        name, number, punct = m.groups()
        if name is not None:
            tokens.append(("name", name))
        elif number is not None:
            tokens.append(("int", int(number)))
        else:
            tokens.append(("punct", punct))
        pos = m.end()
    return tokens


class _WordParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind} in {self.text!r}, got {tok[1]!r}")
        self.pos += 1
        return tok[1]

    def word(self) -> Word:
        result = self.factor()
        while self.peek() == ("punct", "*"):
            self.pos += 1
            result = result * self.factor()
        return result

    def factor(self) -> Word:
        kind, value = self.peek()
        if kind == "name":
            self.pos += 1
            base = Word._trusted((Letter(value, 1),))
        elif kind == "int" and value == 1:
            self.pos += 1
            base = IDENTITY
        elif (kind, value) == ("punct", "("):
            self.pos += 1
            base = self.word()
            self.take("punct", ")")
        else:
            raise ParseError(f"unexpected {value!r} in word {self.text!r}")
        if self.peek() == ("punct", "^"):
            self.pos += 1
            base = base ** self.take("int")
        return base


def parse_word(text: str) -> Word:
    """Parse ``X*Y^-1*(A^-1*B)^5`` style text; ``1`` is the identity."""
    parser = _WordParser(text)
    if not parser.tokens:
        raise ParseError("empty word text (use '1' for the identity)")
    w = parser.word()
    if parser.pos != len(parser.tokens):
        raise ParseError(f"trailing text in word {text!r}")
    return w
