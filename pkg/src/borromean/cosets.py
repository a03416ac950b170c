"""
Todd-Coxeter coset enumeration.

The default strategy is HLT (define along relators at every coset in turn)
with lookahead: when the coset limit is reached, every live coset is scanned
under every relator without making definitions, which often frees enough
space through coincidences to carry on.  The Felsch strategy (define one
entry at a time, then chase deductions through all cyclic conjugates of the
relators) is available with ``strategy="felsch"``.

Coincidences are merged with a union-find forest, always keeping the smaller
coset number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation
from .presentation import Presentation
from .words import Word, parse_word

__all__ = ["CosetTable", "Exhausted", "enumerate_cosets", "todd_coxeter", "DEFAULT_MAX_COSETS"]

DEFAULT_MAX_COSETS = 100_000


class Exhausted(RuntimeError):
    """The coset limit was hit.  This is inconclusive, not a proof of anything."""

    def __init__(self, max_cosets: int, total_defined: int):
        super().__init__(
            f"coset enumeration stopped at the limit of {max_cosets} live cosets "
            f"({total_defined} defined in total); result inconclusive"
        )
        self.max_cosets = max_cosets
        self.total_defined = total_defined


class _Full(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    """
    A completed coset table.

    ``rows[c][2*i]`` is the coset ``c * g_i`` and ``rows[c][2*i + 1]`` is
    ``c * g_i^-1`` (0-based coset numbers; coset 0 is the subgroup itself).
    """

    generators: tuple
    rows: tuple
    total_defined: int
    max_live: int

    @property
    def index(self) -> int:
        return len(self.rows)

    def act(self, coset: int, w: Word) -> int:
        col = {g: 2 * i for i, g in enumerate(self.generators)}
        for letter in w:
            coset = self.rows[coset][col[letter.generator] + (letter.sign < 0)]
        return coset

    def right_action(self, generator: str) -> Permutation:
        """Permutation of {1..index} sending coset c to c * generator."""
        col = 2 * self.generators.index(generator)
        return Permutation(row[col] + 1 for row in self.rows)

    def permutation_representation(self) -> dict:
        """
        Generator images under which ``evaluate_word`` is a homomorphism.

        Cosets are acted on from the right, while ``evaluate_word`` composes
        with the right-hand factor applied first, so each generator is sent
        to the inverse of its right action.  A relator then evaluates to the
        identity exactly when it fixes every coset.
        """
        col = {g: 2 * i + 1 for i, g in enumerate(self.generators)}
        return {g: Permutation(row[col[g]] + 1 for row in self.rows) for g in self.generators}

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "index": self.index,
            "total_defined": self.total_defined,
            "max_live": self.max_live,
        }


class _Enumerator:
    def __init__(self, ncols: int, relators: Sequence[list], max_cosets: int, felsch: bool):
        self.ncols = ncols
        self.relators = relators
        self.max_cosets = max_cosets
        self.felsch = felsch
        self.table = [[-1] * ncols]
        self.parent = [0]
        self.live = 1
        self.max_live = 1
        self.deductions: list = []
        if felsch:
            # every cyclic conjugate of every relator and its inverse, by first column
            self.conjugates = [[] for _ in range(ncols)]
            seen = set()
            for r in relators:
                for w in (r, [x ^ 1 for x in reversed(r)]):
                    for k in range(len(w)):
                        rot = tuple(w[k:] + w[:k])
                        if rot not in seen:
                            seen.add(rot)
                            self.conjugates[rot[0]].append(list(rot))

    # -- table primitives ---------------------------------------------------

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def new_coset(self) -> int:
        if self.live >= self.max_cosets:
            raise _Full
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        if self.live > self.max_live:
            self.max_live = self.live
        return d

    def define(self, c: int, x: int) -> None:
        d = self.new_coset()
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        if self.felsch:
            self.deductions.append((c, x))

    def deduce(self, f: int, x: int, b: int) -> None:
        self.table[f][x] = b
        self.table[b][x ^ 1] = f
        if self.felsch:
            self.deductions.append((f, x))

    def merge(self, a: int, b: int, queue: list) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list = []
        self.merge(a, b, queue)
        table = self.table
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            row = table[dead]
            for x in range(self.ncols):
                d = row[x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = self.rep(dead), self.rep(d)
                if table[mu][x] >= 0:
                    self.merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self.merge(mu, table[nu][x ^ 1], queue)
                else:
                    self.deduce(mu, x, nu)

    # -- scanning -----------------------------------------------------------

    def scan(self, c: int, w: list, fill: bool) -> None:
        """
        Trace ``w`` from ``c`` both ways.  A single gap is closed as a
        deduction and a collision is a coincidence; a longer gap is filled by
        new definitions when ``fill`` is set and left alone otherwise.
        """
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                self.deduce(f, w[i], b)
                return
            if not fill:
                return
            self.define(f, w[i])

    def process_deductions(self) -> None:
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            for w in self.conjugates[x]:
                self.scan(c, w, fill=False)
                if not self.alive(c):
                    break
            d = self.table[c][x]
            if d >= 0 and self.alive(d):
                for w in self.conjugates[x ^ 1]:
                    self.scan(d, w, fill=False)
                    if not self.alive(d):
                        break

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            if not self.alive(c):
                continue
            for w in self.relators:
                self.scan(c, w, fill=False)
                if not self.alive(c):
                    break

    # -- strategies ---------------------------------------------------------

    def run_hlt(self) -> None:
        c = 0
        while c < len(self.table):
            if not self.alive(c):
                c += 1
                continue
            try:
                for w in self.relators:
                    self.scan(c, w, fill=True)
                    if not self.alive(c):
                        break
                else:
                    row = self.table[c]
                    for x in range(self.ncols):
                        if row[x] < 0:
                            self.define(c, x)
            except _Full:
                self.lookahead()
                if self.live >= self.max_cosets:
                    raise
                continue  # redo coset c if it survived
            c += 1

    def run_felsch(self) -> None:
        self.process_deductions()
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for x in range(self.ncols):
                    if self.alive(c) and self.table[c][x] < 0:
                        self.define(c, x)
                        self.process_deductions()
            c += 1

    def compact(self) -> tuple:
        live = [c for c in range(len(self.table)) if self.alive(c)]
        number = {c: k for k, c in enumerate(live)}
        return tuple(tuple(number[self.rep(d)] for d in self.table[c]) for c in live)


def _columns(P: Presentation, w: Word) -> list:
    col = {g: 2 * i for i, g in enumerate(P.generators)}
    return [col[letter.generator] + (letter.sign < 0) for letter in w]


def enumerate_cosets(
    P: Presentation,
    subgroup: Iterable = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
    strategy: str = "hlt",
) -> CosetTable:
    """
    Enumerate the cosets of the subgroup generated by ``subgroup`` in the
    group presented by ``P``.  Raises ``Exhausted`` when more than
    ``max_cosets`` cosets would be live at once.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    subgroup = [parse_word(w) if isinstance(w, str) else w for w in subgroup]
    for w in subgroup:
        unknown = w.generators() - set(P.generators)
        if unknown:
            raise ValueError(f"subgroup word {w} uses unknown generators {sorted(unknown)}")
    ncols = 2 * len(P.generators)
    relators = [_columns(P, r) for r in P.relators if r]
    e = _Enumerator(ncols, relators, max_cosets, felsch=strategy == "felsch")
    try:
        for w in subgroup:
            if w:
                e.scan(0, _columns(P, w), fill=True)
        if strategy == "felsch":
            for r in relators:  # relators must hold at the subgroup coset too
                e.scan(0, r, fill=True)
            e.run_felsch()
        else:
            e.run_hlt()
    except _Full:
        raise Exhausted(max_cosets, len(e.table)) from None
    return CosetTable(tuple(P.generators), e.compact(), len(e.table), e.max_live)


def todd_coxeter(
    P: Presentation,
    subgroup: Iterable = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
    strategy: str = "hlt",
) -> int:
    """Index of the subgroup; with no subgroup words this is the group order."""
    return enumerate_cosets(P, subgroup, max_cosets, strategy).index
