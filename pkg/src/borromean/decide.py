"""
Certificates for (non)triviality of finitely presented groups.

A group is certified nontrivial by a surjection onto a nontrivial finite
permutation group, and trivial by a coset table with a single coset.  The
homomorphism search is an exhaustive scan over assignments of generators to
group elements, pruned as soon as a relator whose generators are all
assigned evaluates to something other than the identity.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cosets import DEFAULT_MAX_COSETS, CosetTable, Exhausted, enumerate_cosets
from .perm import Permutation, PermutationGroup, alternating_group, closure, symmetric_group
from .presentation import Presentation

__all__ = [
    "Homomorphism",
    "TargetTooLarge",
    "find_homomorphisms",
    "count_homomorphisms",
    "cyclic_group",
    "small_targets",
    "Nontrivial",
    "Trivial",
    "Inconclusive",
    "prove_nontrivial",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_SEARCH_BUDGET = 10_000_000


class TargetTooLarge(ValueError):
    """More candidate assignments than the search budget allows."""


@dataclass(frozen=True)
class Homomorphism:
    source: Presentation
    target_degree: int
    assignment: dict = field(hash=False)
    surjective: bool
    target_name: str = ""

    def image(self, generator: str) -> Permutation:
        return self.assignment[generator]

    def __str__(self):
        return ", ".join(f"{g}->{self.assignment[g]}" for g in self.source.generators)

    def to_json(self) -> dict:
        return {
            "target": self.target_name,
            "degree": self.target_degree,
            "surjective": self.surjective,
            "assignment": {g: str(self.assignment[g]) for g in self.source.generators},
        }


class _Table:
    """Multiplication and inverse tables of a small group, elements as indices."""

    def __init__(self, group: PermutationGroup):
        self.elements = list(group.elements)
        index = {p: i for i, p in enumerate(self.elements)}
        self.mul = [[index[p * q] for q in self.elements] for p in self.elements]
        self.inv = [index[p.inverse()] for p in self.elements]
        self.identity = index[group.identity()]
        self.order = len(self.elements)

    def generated_order(self, gens: Sequence[int]) -> int:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                row = self.mul[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)


def _compile(P: Presentation):
    """Relators as (generator index, sign) lists, bucketed by the last generator they need."""
    index = {g: i for i, g in enumerate(P.generators)}
    buckets = [[] for _ in P.generators]
    for r in P.relators:
        if not r:
            continue
        word = [(index[l.generator], l.sign) for l in r]
        buckets[max(i for i, _ in word)].append(word)
    return buckets


def _scan_chunk(table: _Table, buckets, ngens: int, first: int, surjective_only: bool):
    """All satisfying assignments whose first generator maps to element ``first``."""
    mul, inv, e = table.mul, table.inv, table.identity
    found = []
    images = [0] * ngens

    def holds(word):
        x = e
        for i, s in word:
            g = images[i]
            x = mul[x][g if s > 0 else inv[g]]
        return x == e

    def extend(k):
        if k == ngens:
            full = table.generated_order(images) == table.order
            if full or not surjective_only:
                found.append((tuple(images), full))
            return
        for g in range(table.order):
            images[k] = g
            if all(holds(w) for w in buckets[k]):
                extend(k + 1)

    if ngens == 0:
        extend(0)
        return found
    images[0] = first
    if all(holds(w) for w in buckets[0]):
        extend(1)
    return found


def _search(P, target, surjective_only, budget, workers):
    ngens = len(P.generators)
    candidates = len(target.elements) ** ngens
    if candidates > budget:
        raise TargetTooLarge(
            f"{candidates} candidate assignments exceed the search budget of {budget}"
        )
    table = _Table(target)
    buckets = _compile(P)
    if ngens == 0:
        return table, _scan_chunk(table, buckets, 0, 0, surjective_only)
    firsts = range(table.order)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(
                _scan_chunk,
                itertools.repeat(table),
                itertools.repeat(buckets),
                itertools.repeat(ngens),
                firsts,
                itertools.repeat(surjective_only),
            )
            results = [hit for chunk in chunks for hit in chunk]
    else:
        results = [hit for g in firsts for hit in _scan_chunk(table, buckets, ngens, g, surjective_only)]
    return table, results


def find_homomorphisms(
    P: Presentation,
    target: PermutationGroup,
    surjective_only: bool = False,
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
    workers: int = 1,
    target_name: str = "",
) -> list:
    """
    Every homomorphism from ``P`` to ``target``, as generator assignments.

    The scan visits assignments in lexicographic order of element positions
    in ``target.elements``, so the result order is fixed.  ``workers > 1``
    splits the scan by the image of the first generator across processes;
    the merged list is the same as the sequential one.
    """
    table, hits = _search(P, target, surjective_only, budget, workers)
    out = []
    for images, full in hits:
        assignment = {g: table.elements[i] for g, i in zip(P.generators, images)}
        out.append(Homomorphism(P, target.degree, assignment, full, target_name))
    return out


def count_homomorphisms(P: Presentation, target: PermutationGroup, surjective_only: bool = False, **kw) -> int:
    return len(find_homomorphisms(P, target, surjective_only, **kw))


def cyclic_group(n: int) -> PermutationGroup:
    gen = Permutation.from_cycles([list(range(1, n + 1))], n) if n > 1 else Permutation.identity(1)
    return closure([gen], n)


def small_targets() -> list:
    """Nontrivial groups tried, in order, when looking for a surjection."""
    return [
        ("A5", alternating_group(5)),
        ("S4", symmetric_group(4)),
        ("A4", alternating_group(4)),
        ("S3", symmetric_group(3)),
    ] + [(f"C{n}", cyclic_group(n)) for n in (2, 3, 4, 5, 6, 7)]


@dataclass(frozen=True)
class Nontrivial:
    """A surjection onto a nontrivial group; ``order`` is set when it is known."""

    homomorphism: Homomorphism
    order: Optional[int] = None
    verdict: str = "nontrivial"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "order": self.order, "homomorphism": self.homomorphism.to_json()}


@dataclass(frozen=True)
class Trivial:
    """A complete coset table with one coset: the group has order 1."""

    table: CosetTable
    verdict: str = "trivial"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "order": 1, "coset_table": self.table.to_json()}


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    verdict: str = "inconclusive"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason}


def prove_nontrivial(
    P: Presentation,
    max_cosets: int = DEFAULT_MAX_COSETS,
    targets: Optional[Sequence] = None,
    budget: int = 1_000_000,
):
    """
    Look for a surjection onto a small nontrivial group first, then fall back
    on coset enumeration: one coset proves triviality, and more than one
    gives the (nontrivial, transitive) action on cosets as the certificate.
    """
    for name, group in targets if targets is not None else small_targets():
        try:
            homs = find_homomorphisms(P, group, surjective_only=True, budget=budget, target_name=name)
        except TargetTooLarge:
            continue
        if homs:
            return Nontrivial(homs[0])
    try:
        table = enumerate_cosets(P, max_cosets=max_cosets)
    except Exhausted as exc:
        return Inconclusive(str(exc))
    if table.index == 1:
        return Trivial(table)
    action = table.permutation_representation()
    hom = Homomorphism(P, table.index, action, True, f"coset action on {table.index} points")
    return Nontrivial(hom, order=table.index)
