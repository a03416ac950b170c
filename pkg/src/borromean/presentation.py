"""
Finitely presented groups and Tietze moves on them.

Text grammar::

    < X, Y | X*Y^-1*X^-1*Y, C^-1*D^2*C = D^3 >

A relation ``u = v`` is stored as the relator ``u*v^-1``; a chain
``u = v = w`` becomes ``u*v^-1, v*w^-1``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .words import ParseError, Word, cyclic_normal_form, is_generator_name, parse_word

__all__ = [
    "Presentation",
    "UnknownGenerator",
    "NoDefiningRelator",
    "SelfReference",
    "NotInverse",
    "parse_presentation",
    "eliminate_generator",
    "change_generators",
    "add_relators",
    "simplify",
    "equivalent_up_to_renaming",
]


class UnknownGenerator(ValueError):
    pass


class NoDefiningRelator(ValueError):
    pass


class SelfReference(ValueError):
    pass


class NotInverse(ValueError):
    pass


def _as_word(w) -> Word:
    return parse_word(w) if isinstance(w, str) else w


@dataclass(frozen=True)
class Presentation:
    """Generators (ordered, unique) and relators, each cyclically reduced."""

    generators: tuple
    relators: tuple = ()

    def __init__(self, generators: Iterable[str], relators: Iterable = ()):
        gens = tuple(generators)
        for g in gens:
            if not is_generator_name(g):
                raise ValueError(f"bad generator name {g!r}")
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        rels = tuple(_as_word(r).cyclically_reduce() for r in relators)
        known = set(gens)
        for r in rels:
            missing = r.generators() - known
            if missing:
                raise UnknownGenerator(f"relator {r} uses unlisted generator(s) {sorted(missing)}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        return parse_presentation(text)

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {gens} | {rels} >" if rels else f"< {gens} | >"

    def canonical(self) -> "Presentation":
        """Relators in cyclic normal form with identity relators dropped."""
        rels = [cyclic_normal_form(r) for r in self.relators]
        return Presentation(self.generators, [r for r in rels if r])

    def relator_multiset(self) -> Counter:
        return Counter(r for r in self.canonical().relators)

    def equivalent(self, other: "Presentation") -> bool:
        """Same generator set and same multiset of normalized relators."""
        return (
            set(self.generators) == set(other.generators)
            and self.relator_multiset() == other.relator_multiset()
        )

    def rename(self, names: Mapping[str, str]) -> "Presentation":
        return Presentation(
            [names.get(g, g) for g in self.generators],
            [r.rename(names) for r in self.relators],
        )

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [str(r) for r in self.relators],
        }


def parse_presentation(text: str) -> Presentation:
    body = text.strip()
    if not (body.startswith("<") and body.endswith(">")):
        raise ParseError(f"presentation must be enclosed in < ... >: {text!r}")
    body = body[1:-1]
    if body.count("|") != 1:
        raise ParseError(f"presentation needs exactly one '|': {text!r}")
    gen_part, rel_part = body.split("|")
    gens = [g.strip() for g in gen_part.split(",")] if gen_part.strip() else []
    for g in gens:
        if not is_generator_name(g):
            raise ParseError(f"bad generator name {g!r}")
    relators = []
    for item in rel_part.split(","):
        if not item.strip():
            if rel_part.strip():
                raise ParseError(f"empty relator in {text!r}")
            continue
        sides = [parse_word(side) for side in item.split("=")]
        if len(sides) == 1:
            relators.append(sides[0])
        else:
            relators.extend(u * v.inverse() for u, v in zip(sides, sides[1:]))
    return Presentation(gens, relators)


def _solve_for(relator: Word, g: str):
    """If ``g`` occurs exactly once in ``relator``, return w with g = w."""
    positions = [i for i, letter in enumerate(relator) if letter.generator == g]
    if len(positions) != 1:
        return None
    i = positions[0]
    before = Word._trusted(relator.letters[:i])
    after = Word._trusted(relator.letters[i + 1 :])
    if relator[i].sign > 0:
        return before.inverse() * after.inverse()
    return after * before


def eliminate_generator(P: Presentation, g: str, w=None) -> Presentation:
    """
    Tietze move removing ``g`` via the relation ``g = w``.

    ``P`` must contain a relator equal to ``g*w^-1`` up to cyclic conjugation
    and inversion; that relator is dropped and ``g`` is replaced by ``w``
    everywhere else.  With ``w=None`` the first relator in which ``g`` occurs
    exactly once is used.
    """
    if g not in P.generators:
        raise UnknownGenerator(g)
    rels = list(P.relators)
    if w is None:
        for k, r in enumerate(rels):
            w = _solve_for(r, g)
            if w is not None:
                break
        else:
            raise NoDefiningRelator(f"no relator defines {g}")
    else:
        w = _as_word(w)
        if g in w.generators():
            raise SelfReference(f"{g} = {w} mentions {g}")
        target = cyclic_normal_form(Word.generator(g) * w.inverse())
        for k, r in enumerate(rels):
            if cyclic_normal_form(r) == target:
                break
        else:
            raise NoDefiningRelator(f"no relator equivalent to {g}*({w})^-1")
    del rels[k]
    mapping = {g: w}
    return Presentation(
        [h for h in P.generators if h != g],
        [r.substitute(mapping) for r in rels],
    )


def change_generators(
    P: Presentation, new_in_old: Mapping[str, object], old_in_new: Mapping[str, object]
) -> Presentation:
    new_in_old = {k: _as_word(v) for k, v in new_in_old.items()}
    old_in_new = {k: _as_word(v) for k, v in old_in_new.items()}
    if set(old_in_new) != set(P.generators):
        raise NotInverse("old_in_new must express every old generator")
    for n, w in new_in_old.items():
        if w.substitute(old_in_new) != Word.generator(n):
            raise NotInverse(f"{n} = {w} does not round-trip")
    for o, w in old_in_new.items():
        if w.substitute(new_in_old) != Word.generator(o):
            raise NotInverse(f"{o} = {w} does not round-trip")
    return Presentation(list(new_in_old), [r.substitute(old_in_new) for r in P.relators])


def add_relators(P: Presentation, ws: Iterable) -> Presentation:
    return Presentation(P.generators, list(P.relators) + [_as_word(w) for w in ws])


def simplify(P: Presentation, keep: Sequence[str] = ()):
    """
    Eliminate generators greedily while some relator defines one of them.

    Later generators are eliminated first, and each is replaced by the
    candidate word whose generators come earliest (then shortest), so the
    generators listed first survive.  Returns ``(presentation, substitution)``
    where the substitution expresses every eliminated generator as a word in
    the surviving ones.
    """
    subs: dict = {}
    keep = set(keep)
    while True:
        index = {g: i for i, g in enumerate(P.generators)}
        choice = None
        for g in reversed(P.generators):
            if g in keep:
                continue
            options = []
            for r in P.relators:
                w = _solve_for(r, g)
                if w is not None:
                    top = max((index[h] for h in w.generators()), default=-1)
                    options.append((top, len(w), w.sort_key(), w))
            if options:
                choice = (g, min(options, key=lambda t: t[:3])[3])
                break
        if choice is None:
            return P, subs
        g, w = choice
        P = eliminate_generator(P, g, w)
        subs = {h: v.substitute({g: w}) for h, v in subs.items()}
        subs[g] = w


def equivalent_up_to_renaming(P: Presentation, Q: Presentation):
    """Return a renaming P-names -> Q-names making P equivalent to Q, or None."""
    if len(P.generators) != len(Q.generators):
        return None
    target = Q.relator_multiset()
    for perm in itertools.permutations(Q.generators):
        names = dict(zip(P.generators, perm))
        if P.rename(names).relator_multiset() == target:
            return names
    return None

