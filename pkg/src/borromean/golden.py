"""
Exact arithmetic in Q(phi), phi = (1 + sqrt 5) / 2, with vectors and 3x3 matrices.

A number is stored as ``a + b*phi`` with rational a, b.  Coordinates of the
icosahedron are integral, but rotation matrices need halves, so the
coefficients are ``Fraction`` rather than ``int``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["GoldenNumber", "GoldenVector", "GoldenMatrix", "PHI", "ZERO", "ONE"]

_SQRT5 = math.sqrt(5)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GoldenNumber:
    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    @classmethod
    def coerce(cls, x) -> "GoldenNumber":
        return x if isinstance(x, GoldenNumber) else cls(x)

    def __add__(self, other):
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return GoldenNumber.coerce(other) - self

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other):
        other = GoldenNumber.coerce(other)
        # phi^2 = phi + 1
        bd = self.b * other.b
        return GoldenNumber(self.a * other.a + bd, self.a * other.b + self.b * other.a + bd)

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenNumber":
        """Image under phi -> 1 - phi."""
        return GoldenNumber(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> "GoldenNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(phi)")
        c = self.conjugate()
        return GoldenNumber(c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * GoldenNumber.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        # a + b*phi = (p + q*sqrt5) / 2 with p = 2a + b, q = b
        p, q = 2 * self.a + self.b, self.b
        if p >= 0 and q >= 0:
            return 0 if p == 0 and q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: compare p^2 with 5 q^2
        d = p * p - 5 * q * q
        return (1 if p > 0 else -1) if d > 0 else (1 if q > 0 else -1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GoldenNumber(other)
        if isinstance(other, GoldenNumber):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * (1 + _SQRT5) / 2

    def __str__(self):
        if not self.b:
            return str(self.a)
        phi = "phi" if self.b == 1 else "-phi" if self.b == -1 else f"{self.b}*phi"
        if not self.a:
            return phi
        return f"{self.a} + {phi}" if self.b > 0 else f"{self.a} - {phi.lstrip('-')}"

    def __repr__(self):
        return f"GoldenNumber({self.a}, {self.b})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
PHI = GoldenNumber(0, 1)


class GoldenVector:
    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z):
        self.x = GoldenNumber.coerce(x)
        self.y = GoldenNumber.coerce(y)
        self.z = GoldenNumber.coerce(z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, i):
        return (self.x, self.y, self.z)[i]

    def __add__(self, other):
        return GoldenVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return GoldenVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return GoldenVector(-self.x, -self.y, -self.z)

    def scale(self, k) -> "GoldenVector":
        return GoldenVector(self.x * k, self.y * k, self.z * k)

    def dot(self, other) -> GoldenNumber:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other) -> "GoldenVector":
        return GoldenVector(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> GoldenNumber:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def same_direction(self, other) -> bool:
        """True when ``other`` is a positive multiple of ``self``."""
        return self.cross(other).is_zero() and self.dot(other).sign() > 0

    def __eq__(self, other):
        if isinstance(other, GoldenVector):
            return self.x == other.x and self.y == other.y and self.z == other.z
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y, self.z))

    def to_floats(self) -> tuple:
        return (float(self.x), float(self.y), float(self.z))

    def __repr__(self):
        return f"GoldenVector({self.x}, {self.y}, {self.z})"

    def to_json(self) -> list:
        return [c.to_json() for c in self]


class GoldenMatrix:
    """A 3x3 matrix over Q(phi), acting on column vectors."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(GoldenNumber.coerce(x) for x in r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("a 3x3 matrix is required")
        self.rows = rows

    @classmethod
    def identity(cls) -> "GoldenMatrix":
        return cls([[int(i == j) for j in range(3)] for i in range(3)])

    @classmethod
    def from_columns(cls, cols: Iterable[GoldenVector]) -> "GoldenMatrix":
        cols = list(cols)
        return cls([[cols[j][i] for j in range(3)] for i in range(3)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> GoldenVector:
        return GoldenVector(*(self.rows[i][j] for i in range(3)))

    def transpose(self) -> "GoldenMatrix":
        return GoldenMatrix([[self.rows[j][i] for j in range(3)] for i in range(3)])

    def __matmul__(self, other):
        if isinstance(other, GoldenVector):
            return GoldenVector(*(sum((r[k] * other[k] for k in range(3)), ZERO) for r in self.rows))
        return GoldenMatrix(
            [[sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), ZERO) for j in range(3)] for i in range(3)]
        )

    def __mul__(self, other):
        return self @ other

    def __sub__(self, other):
        return GoldenMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __add__(self, other):
        return GoldenMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def determinant(self) -> GoldenNumber:
        r = self.rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def inverse(self) -> "GoldenMatrix":
        r = self.rows
        det = self.determinant()
        if not det:
            raise ZeroDivisionError("singular matrix")
        inv_det = det.inverse()
        cof = [
            [
                r[(j + 1) % 3][(i + 1) % 3] * r[(j + 2) % 3][(i + 2) % 3]
                - r[(j + 1) % 3][(i + 2) % 3] * r[(j + 2) % 3][(i + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
        return GoldenMatrix([[c * inv_det for c in row] for row in cof])

    def trace(self) -> GoldenNumber:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def is_identity(self) -> bool:
        return self == GoldenMatrix.identity()

    def __eq__(self, other):
        if isinstance(other, GoldenMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def to_floats(self) -> list:
        return [[float(x) for x in r] for r in self.rows]

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    def __repr__(self):
        return "GoldenMatrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"
