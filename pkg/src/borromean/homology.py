"""Abelianization matrices, Smith normal form over Z, and first homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .presentation import Presentation

__all__ = [
    "IntegerMatrix",
    "SmithForm",
    "AbelianGroup",
    "abelianization_matrix",
    "smith_normal_form",
    "h1",
]


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple
    ncols: int

    def __init__(self, rows: Sequence[Sequence[int]], ncols: Optional[int] = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged integer matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def abelianization_matrix(P: Presentation) -> IntegerMatrix:
    """Entry (i, j) is the exponent sum of generator j in relator i."""
    return IntegerMatrix(
        [[r.exponent_sum(g) for g in P.generators] for r in P.relators],
        ncols=len(P.generators),
    )


@dataclass
class SmithForm:
    diagonal: list
    left: Optional[list] = None
    right: Optional[list] = None


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, transforms: bool = False) -> SmithForm:
    """
    Diagonal d1 | d2 | ... of the integer matrix ``M``.

    Pivots are the smallest nonzero absolute value in the remaining block.
    With ``transforms=True`` also returns unimodular ``left`` and ``right``
    with ``left @ M @ right == diag``.
    """
    if isinstance(M, IntegerMatrix):
        A = M.tolist()
        m, n = M.shape
    else:
        A = [list(map(int, r)) for r in M]
        m = len(A)
        n = len(A[0]) if A else 0
    L = _identity(m) if transforms else None
    R = _identity(n) if transforms else None

    def row_op(dst, src, k):  # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        if L is not None:
            L[dst] = [a + k * b for a, b in zip(L[dst], L[src])]

    def col_op(dst, src, k):  # col dst += k * col src
        for row in A:
            row[dst] += k * row[src]
        if R is not None:
            for row in R:
                row[dst] += k * row[src]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if L is not None:
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if R is not None:
            for row in R:
                row[i], row[j] = row[j], row[i]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        if L is not None:
            L[i] = [-a for a in L[i]]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    row_op(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    col_op(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            # divisibility: fold an offending row into row t and go again
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_op(t, bad, 1)
        if A[t][t] < 0:
            negate_row(t)
    diag = [A[i][i] for i in range(min(m, n))]
    return SmithForm(diag, L, R)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum of Z/d_i."""

    free_rank: int
    torsion: tuple = field(default=())

    def __post_init__(self):
        t = tuple(self.torsion)
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion must be a divisibility chain of factors >= 2: {t}")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "trivial"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


def h1(P: Presentation) -> AbelianGroup:
    M = abelianization_matrix(P)
    diag = smith_normal_form(M).diagonal
    rank = sum(1 for d in diag if d)
    return AbelianGroup(len(P.generators) - rank, tuple(d for d in diag if d > 1))

