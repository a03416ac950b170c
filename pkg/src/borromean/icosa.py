"""
The icosahedron built from three golden rectangles, its 60 rotations, and
their action on the compound of five octahedra.

Scale: the rectangles have short side 2 and long side 2*phi, so the twelve
vertices are the cyclic permutations of (0, +-1, +-phi) and every edge has
squared length 4.  All checks are exact identities in Q(phi).

Octahedra are numbered 1..5.  Octahedron 1 is the axis-aligned one, whose
vertices (+-phi, 0, 0), (0, +-phi, 0), (0, 0, +-phi) are the midpoints of
the rectangles' short edges.  With R the right-handed 1/5 turn about the
directed line from the bottom vertex (-1, 0, -phi) to the top vertex
(1, 0, phi), octahedron k + 1 is the
image of octahedron 1 under R^k; hence R acts as (12345).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .golden import ONE, PHI, ZERO, GoldenMatrix, GoldenNumber, GoldenVector
from .perm import Permutation, PermutationGroup, closure, is_even

__all__ = [
    "NotASymmetry",
    "Polyhedron",
    "Rotation",
    "three_rectangles",
    "icosahedron",
    "rotation_group",
    "census",
    "five_octahedra",
    "action_on_octahedra",
    "designated_rotations",
    "certify_A5_isomorphism",
    "A5Certificate",
    "to_off",
    "to_json",
    "TOP_VERTEX",
]


TOP_VERTEX = GoldenVector(ONE, ZERO, PHI)


class NotASymmetry(ValueError):
    """The matrix does not map the icosahedron to itself."""


@dataclass(frozen=True)
class Polyhedron:
    vertices: tuple
    edges: tuple
    faces: tuple

    def counts(self) -> tuple:
        return (len(self.vertices), len(self.edges), len(self.faces))


def three_rectangles() -> tuple:
    """Rectangles in the xy, yz and zx planes, long sides along x, y and z."""
    one, phi = ONE, PHI
    xy = [GoldenVector(sx * phi, sy * one, ZERO) for sx in (1, -1) for sy in (1, -1)]
    yz = [GoldenVector(ZERO, sy * phi, sz * one) for sy in (1, -1) for sz in (1, -1)]
    zx = [GoldenVector(sx * one, ZERO, sz * phi) for sz in (1, -1) for sx in (1, -1)]
    return (tuple(xy), tuple(yz), tuple(zx))


@lru_cache(maxsize=None)
def icosahedron() -> Polyhedron:
    vertices = tuple(v for rect in three_rectangles() for v in rect)
    n = len(vertices)
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if (vertices[i] - vertices[j]).norm2() == 4
    )
    adjacent = {frozenset(e) for e in edges}
    faces = []
    for i, j, k in itertools.combinations(range(n), 3):
        if {frozenset((i, j)), frozenset((j, k)), frozenset((i, k))} <= adjacent:
            a, b, c = vertices[i], vertices[j], vertices[k]
            # orient counterclockwise seen from outside
            if (b - a).cross(c - a).dot(a).sign() < 0:
                j, k = k, j
            faces.append((i, j, k))
    return Polyhedron(vertices, edges, tuple(faces))


def _edge_midpoints() -> list:
    P = icosahedron()
    return [(P.vertices[i] + P.vertices[j]).scale(GoldenNumber("1/2")) for i, j in P.edges]


class Rotation:
    """An exact rotation of space that maps the icosahedron to itself."""

    __slots__ = ("matrix", "kind", "axis")

    def __init__(self, matrix: GoldenMatrix):
        self.matrix = matrix
        self.kind = _classify(matrix)
        self.axis = _axis(matrix)

    def __matmul__(self, other):
        if isinstance(other, Rotation):
            return Rotation(self.matrix @ other.matrix)
        return self.matrix @ other

    def __call__(self, v: GoldenVector) -> GoldenVector:
        return self.matrix @ v

    def inverse(self) -> "Rotation":
        return Rotation(self.matrix.transpose())

    def order(self) -> int:
        return {"identity": 1, "edge": 2, "face": 3, "vertex": 5}[self.kind]

    def __eq__(self, other):
        return isinstance(other, Rotation) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Rotation({self.kind}, axis={self.axis})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order(),
            "matrix": self.matrix.to_json(),
            "axis": self.axis.to_json() if self.axis is not None else None,
        }


def _classify(M: GoldenMatrix) -> str:
    # trace = 1 + 2 cos(angle)
    t = M.trace()
    if t == 3:
        return "identity"
    if t == -1:
        return "edge"
    if t == 0:
        return "face"
    if t in (PHI, ONE - PHI):
        return "vertex"
    raise NotASymmetry(f"trace {t} is not that of an icosahedral rotation")


def _axis(M: GoldenMatrix) -> Optional[GoldenVector]:
    """
    A vector along the axis, pointing so that the rotation is right-handed
    by an angle below 180 degrees; for half turns any nonzero column of
    M + I (sign normalized to make the first nonzero coordinate positive).
    """
    skew = GoldenVector(M[2, 1] - M[1, 2], M[0, 2] - M[2, 0], M[1, 0] - M[0, 1])
    if not skew.is_zero():
        return skew
    if M.is_identity():
        return None
    S = M + GoldenMatrix.identity()
    for j in range(3):
        col = S.column(j)
        if not col.is_zero():
            first = next(c for c in col if c)
            return col if first.sign() > 0 else -col
    raise NotASymmetry("degenerate axis")


def _check_symmetry(M: GoldenMatrix) -> None:
    if not (M.transpose() @ M).is_identity() or M.determinant() != 1:
        raise NotASymmetry("not a proper orthogonal matrix")
    vertices = set(icosahedron().vertices)
    if any(M @ v not in vertices for v in vertices):
        raise NotASymmetry("does not map the vertex set to itself")


@lru_cache(maxsize=None)
def rotation_group() -> tuple:
    """
    All 60 rotations, found by sending one directed edge to each of the 60
    directed edges and keeping the matrices that preserve the vertex set.
    Ordered with the identity first, then by the image of the chosen edge.
    """
    P = icosahedron()
    V = P.vertices
    i0, j0 = P.edges[0]
    frame = GoldenMatrix.from_columns([V[i0], V[j0], V[i0].cross(V[j0])])
    frame_inv = frame.inverse()
    found = []
    for i, j in P.edges:
        for a, b in ((i, j), (j, i)):
            M = GoldenMatrix.from_columns([V[a], V[b], V[a].cross(V[b])]) @ frame_inv
            try:
                _check_symmetry(M)
            except NotASymmetry:
                continue
            found.append(Rotation(M))
    found.sort(key=lambda r: not r.matrix.is_identity())
    return tuple(found)


def census() -> dict:
    counts = {"vertex": 0, "edge": 0, "face": 0, "identity": 0}
    for r in rotation_group():
        counts[r.kind] += 1
    return counts


def _diagonals() -> list:
    """One midpoint from each of the 15 antipodal pairs."""
    seen, out = set(), []
    for m in _edge_midpoints():
        if m in seen:
            continue
        seen.update((m, -m))
        out.append(m)
    return out


def _designated_vertex_rotation() -> Rotation:
    axis = TOP_VERTEX - (-TOP_VERTEX)
    for r in rotation_group():
        if r.kind == "vertex" and r.matrix.trace() == PHI and r.axis.same_direction(axis):
            return r
    raise AssertionError("no 1/5 turn about the designated vertex axis")


@lru_cache(maxsize=None)
def five_octahedra() -> tuple:
    """
    The 30 edge midpoints split into five octahedra of six points each,
    numbered as described in the module docstring.  Each octahedron is a
    frozenset of vertices.
    """
    diagonals = _diagonals()
    triples = [
        t
        for t in itertools.combinations(diagonals, 3)
        if all(not u.dot(v) for u, v in itertools.combinations(t, 2))
    ]
    octahedra = [frozenset(p for d in t for p in (d, -d)) for t in triples]
    if len(octahedra) != 5 or len(frozenset().union(*octahedra)) != 30:
        raise AssertionError("edge midpoints do not split into five octahedra")
    # (phi, 0, 0) is the midpoint of the short edge (phi, 1, 0)-(phi, -1, 0)
    first = frozenset(
        GoldenVector(*(PHI * s if k == a else ZERO for k in range(3))) for a in range(3) for s in (1, -1)
    )
    if first not in octahedra:
        raise AssertionError("axis-aligned octahedron missing")
    R = _designated_vertex_rotation()
    ordered = [first]
    for _ in range(4):
        ordered.append(frozenset(R(v) for v in ordered[-1]))
    if set(ordered) != set(octahedra):
        raise AssertionError("the 1/5 turn does not cycle the octahedra")
    return tuple(ordered)


def action_on_octahedra(r) -> Permutation:
    """Permutation i -> j of octahedron labels with r(octahedron i) = octahedron j."""
    M = r.matrix if isinstance(r, Rotation) else r
    _check_symmetry(M)
    octs = five_octahedra()
    index = {o: k + 1 for k, o in enumerate(octs)}
    images = []
    for o in octs:
        moved = frozenset(M @ v for v in o)
        if moved not in index:
            raise NotASymmetry("octahedra not permuted")
        images.append(index[moved])
    return Permutation(images)


@lru_cache(maxsize=None)
def designated_rotations() -> dict:
    """
    The three labelled rotations.

    vertex: right-handed 1/5 turn about (1, 0, phi), acting as (12345)
        by the numbering of the octahedra.
    face: the first right-handed 1/3 turn about a face centre (faces in
        ``icosahedron().faces`` order) acting as (123).
    edge: the half turn about one of octahedron 1's diagonals (the x, y
        and z axes, tried in that order) acting as (23)(45).
    The face and edge choices are found by search and checked, not assumed.
    """
    P = icosahedron()
    group = rotation_group()
    face_target = Permutation.parse("(123)", 5)
    edge_target = Permutation.parse("(23)(45)", 5)
    vertex = _designated_vertex_rotation()
    face = None
    for f in P.faces:
        centre = P.vertices[f[0]] + P.vertices[f[1]] + P.vertices[f[2]]
        for r in group:
            if r.kind == "face" and r.axis.same_direction(centre) and action_on_octahedra(r) == face_target:
                face = (f, r)
                break
        if face:
            break
    edge = None
    for a in range(3):
        direction = GoldenVector(*(ONE if k == a else ZERO for k in range(3)))
        for r in group:
            if r.kind == "edge" and r.axis.cross(direction).is_zero() and action_on_octahedra(r) == edge_target:
                edge = (direction, r)
                break
        if edge:
            break
    if face is None or edge is None:
        raise AssertionError("designated face or edge rotation not found")
    return {
        "vertex": {"axis": TOP_VERTEX, "rotation": vertex},
        "face": {"face": face[0], "axis": face[1].axis, "rotation": face[1]},
        "edge": {"axis": edge[0], "rotation": edge[1]},
    }


@dataclass(frozen=True)
class A5Certificate:
    order: int
    kernel_size: int
    image: PermutationGroup
    all_even: bool
    homomorphism: bool
    table: tuple  # (rotation, permutation) pairs
    labels: dict

    @property
    def ok(self) -> bool:
        return (
            self.order == 60
            and self.kernel_size == 1
            and self.image.order() == 60
            and self.all_even
            and self.homomorphism
            and self.labels == {"vertex": "(12345)", "face": "(123)", "edge": "(23)(45)"}
        )

    def summary(self) -> str:
        labels = ", ".join(f"{k}-axis={v}" for k, v in self.labels.items())
        return f"rotation group ~ A5 (order {self.image.order()}); labels: {labels}"

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "order": self.order,
            "kernel_size": self.kernel_size,
            "image_order": self.image.order(),
            "all_even": self.all_even,
            "homomorphism": self.homomorphism,
            "labels": self.labels,
            "correspondence": [
                {"kind": r.kind, "matrix": r.matrix.to_json(), "permutation": str(p)} for r, p in self.table
            ],
        }


@lru_cache(maxsize=None)
def certify_A5_isomorphism() -> A5Certificate:
    """Check that the action on octahedra is an injective homomorphism onto A5."""
    group = rotation_group()
    images = {r: action_on_octahedra(r) for r in group}
    kernel = [r for r, p in images.items() if p.is_identity()]
    hom = all(images[g @ h] == images[g] * images[h] for g in group for h in group)
    image = closure(sorted(set(images.values())), 5)
    table = tuple((r, images[r]) for r in group)
    labels = {k: str(action_on_octahedra(v["rotation"])) for k, v in designated_rotations().items()}
    return A5Certificate(
        order=len(group),
        kernel_size=len(kernel),
        image=image,
        all_even=all(is_even(p) for p in images.values()),
        homomorphism=hom,
        table=table,
        labels=labels,
    )


def to_off(P: Optional[Polyhedron] = None) -> str:
    """OFF text with coordinates printed to 12 significant digits."""
    P = P or icosahedron()
    lines = ["OFF", f"{len(P.vertices)} {len(P.faces)} {len(P.edges)}"]
    for v in P.vertices:
        lines.append(" ".join(f"{c:.12g}" for c in v.to_floats()))
    for f in P.faces:
        lines.append(f"{len(f)} " + " ".join(map(str, f)))
    return "\n".join(lines) + "\n"


def to_json(P: Optional[Polyhedron] = None) -> dict:
    """Exact coordinates as {a, b} pairs meaning a + b*phi."""
    P = P or icosahedron()
    return {
        "vertices": [v.to_json() for v in P.vertices],
        "edges": [list(e) for e in P.edges],
        "faces": [list(f) for f in P.faces],
    }
