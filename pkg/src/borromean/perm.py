"""
Permutations of {1..n} in cycle notation.

Composition follows the usual function convention::

    compose(p, q) == p * q == p ∘ q      (q is applied first)

so that ``(135) ∘ (12)(34) == (12345)``.  Word evaluation is a
homomorphism for this product: the image of ``u*v`` is ``image(u) ∘ image(v)``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from typing import Iterable, Mapping, Sequence

from .words import ParseError, Word

__all__ = [
    "Permutation",
    "PermutationGroup",
    "RepeatedPoint",
    "OutOfRange",
    "DegreeMismatch",
    "MissingAssignment",
    "parse_cycles",
    "compose",
    "inverse",
    "power",
    "is_even",
    "closure",
    "evaluate_word",
    "check_relations",
    "alternating_group",
    "symmetric_group",
]


class RepeatedPoint(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class MissingAssignment(KeyError):
    pass


class Permutation:
    """Bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise OutOfRange(f"point {x} outside 1..{degree}")
                if x in seen:
                    raise RepeatedPoint(f"point {x} repeated")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its least point, sorted."""
        out, seen = [], set()
        for i in range(1, self.degree + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "(1)"
        sep = "" if self.degree < 10 else ","
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={self.degree})"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Parse disjoint cycles such as ``(12345)``, ``(23)(45)`` or ``(1,10)``.

    Without separators every digit is a point, the usual compact
    notation for degree below 10.  ``(1)`` is the identity.
    """
    stripped = re.sub(r"\s+", "", text) if "," in text else text.strip()
    if not stripped:
        raise ParseError("empty permutation text")
    if _CYCLE.sub("", stripped).strip():
        raise ParseError(f"malformed cycle notation {text!r}")
    cycles = []
    for body in _CYCLE.findall(stripped):
        body = body.strip()
        if "," in body or " " in body:
            items = [t for t in re.split(r"[,\s]+", body) if t]
        else:
            items = list(body)
        try:
            pts = [int(t) for t in items]
        except ValueError:
            raise ParseError(f"malformed cycle {body!r}") from None
        if not pts:
            raise ParseError(f"empty cycle in {text!r}")
        if len(pts) == 1:
            if not 1 <= pts[0] <= degree:
                raise OutOfRange(f"point {pts[0]} outside 1..{degree}")
            continue
        cycles.append(pts)
    return Permutation.from_cycles(cycles, degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p ∘ q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree}")
    return Permutation(tuple(p.images[x - 1] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        images[x - 1] = i
    return Permutation(images)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def is_even(p: Permutation) -> bool:
    return sum(len(c) - 1 for c in p.cycles()) % 2 == 0


class PermutationGroup:
    """A small permutation group with its elements listed explicitly."""

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._set = frozenset(self.elements)

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return p in self._set

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, order={self.order()})"


def closure(gens: Sequence[Permutation], degree: int | None = None) -> PermutationGroup:
    """Breadth-first closure of ``gens`` under composition."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
    e = Permutation.identity(degree)
    elements = [e]
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return PermutationGroup(degree, gens, elements)


def evaluate_word(w: Word, assignment: Mapping[str, Permutation], degree: int | None = None) -> Permutation:
    if degree is None:
        if not assignment:
            raise ValueError("degree is required with an empty assignment")
        degree = next(iter(assignment.values())).degree
    result = Permutation.identity(degree)
    inverses: dict = {}
    for letter in w:
        try:
            p = assignment[letter.generator]
        except KeyError:
            raise MissingAssignment(letter.generator) from None
        if letter.sign < 0:
            if letter.generator not in inverses:
                inverses[letter.generator] = inverse(p)
            p = inverses[letter.generator]
        result = compose(result, p)
    return result


def check_relations(P, assignment: Mapping[str, Permutation]) -> bool:
    """True iff every relator of ``P`` maps to the identity."""
    missing = [g for g in P.generators if g not in assignment]
    if missing:
        raise MissingAssignment(missing[0])
    if not P.relators:
        return True
    degree = next(iter(assignment.values())).degree
    return all(evaluate_word(r, assignment, degree).is_identity() for r in P.relators)


def symmetric_group(n: int) -> PermutationGroup:
    elements = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles([[1, 2]], n), Permutation.from_cycles([list(range(1, n + 1))], n)]
    return PermutationGroup(n, gens, elements)


def alternating_group(n: int) -> PermutationGroup:
    """A_n, generated by 3-cycles (1 2 k); elements in closure order."""
    gens = [Permutation.from_cycles([[1, 2, k]], n) for k in range(3, n + 1)]
    return closure(gens, n)
