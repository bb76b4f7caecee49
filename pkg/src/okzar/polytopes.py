"""Exact polytopes arising as bounded slices of cones.

Vertex enumeration homogenizes the affine system A y + c >= 0 into the cone
{(y, t) : A y + c t >= 0, t >= 0} and reads vertices off the rays with t > 0;
rays with t = 0 (or surviving lineality) witness unboundedness exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .cones import ConeRep, IntVec, primitive
from .errors import InputError, UnboundedSliceError
from .linalg import Rat

Point = tuple[Rat, ...]

# an affine inequality (a_1, ..., a_d, c) means a.y + c >= 0
AffineRow = tuple[int, ...]


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    vertices: tuple[Point, ...]
    ineqs: tuple[AffineRow, ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def dim(self) -> int:
        if self.is_empty:
            return -1
        from .linalg import rank

        v0 = self.vertices[0]
        return rank([[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]])

    def contains(self, y: Sequence) -> bool:
        if len(y) != self.ambient_dim:
            raise InputError("point dimension mismatch")
        ys = [Fraction(x) for x in y]
        return not self.is_empty and all(
            sum(h[i] * ys[i] for i in range(self.ambient_dim)) + h[-1] >= 0 for h in self.ineqs
        )

    def translate(self, shift: Sequence) -> "Polytope":
        if len(shift) != self.ambient_dim:
            raise InputError("shift dimension mismatch")
        sh = [Fraction(x) for x in shift]
        verts = tuple(tuple(a + b for a, b in zip(v, sh)) for v in self.vertices)
        moved = []
        for h in self.ineqs:
            const = Fraction(h[-1]) - sum(h[i] * sh[i] for i in range(self.ambient_dim))
            moved.append(primitive(tuple(h[:-1]) + (const,)))
        return Polytope(self.ambient_dim, tuple(sorted(verts)), tuple(sorted(set(moved))))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for v in self.vertices for c in v)


def polytope_from_affine(rows: Sequence[Sequence], ambient_dim: int) -> Polytope:
    """Polytope {y : a.y + c >= 0 for each row (a, c)}; raises when unbounded."""
    canon = sorted({primitive(r) for r in rows if any(Fraction(x) != 0 for x in r)})
    hom = list(canon) + [tuple([0] * ambient_dim) + (1,)]
    cone = ConeRep.from_ineqs(hom, ambient_dim + 1)
    interior = [r for r in cone.rays if r[-1] > 0]
    if not interior:
        return Polytope(ambient_dim, (), tuple(canon))
    if cone.lineality_dim > 0 or len(interior) < len(cone.rays):
        raise UnboundedSliceError("slice is unbounded")
    verts = sorted(tuple(Fraction(x, r[-1]) for x in r[:-1]) for r in interior)
    return Polytope(ambient_dim, tuple(verts), tuple(canon))


def fiber_slice(c: ConeRep, fixed_coords: Sequence[int], values: Sequence) -> Polytope:
    """Slice a cone by fixing the listed coordinates to the given values.

    The result lives in the remaining coordinates (in their original order).
    Unbounded slices raise; empty slices come back as the empty polytope.
    """
    fixed = list(fixed_coords)
    if len(fixed) != len(set(fixed)) or any(i < 0 or i >= c.ambient_dim for i in fixed):
        raise InputError("bad coordinate index set")
    if len(values) != len(fixed):
        raise InputError("one value per fixed coordinate required")
    vals = {i: Fraction(v) for i, v in zip(fixed, values)}
    free = [i for i in range(c.ambient_dim) if i not in vals]
    rows = []
    for h in c.ineqs:
        const = sum(h[i] * vals[i] for i in fixed)
        rows.append(tuple(h[i] for i in free) + (const,))
    return polytope_from_affine(rows, len(free))


def hyperplane_slice(c: ConeRep, functional: Sequence, level: int = 1) -> Polytope:
    """Cone section {x in c : functional.x = level} as a polytope in R^ambient."""
    f = [Fraction(x) for x in functional]
    if len(f) != c.ambient_dim:
        raise InputError("functional dimension mismatch")
    rows = [tuple(h) + (0,) for h in c.ineqs]
    rows.append(primitive(tuple(f) + (-Fraction(level),)))
    rows.append(primitive(tuple(-x for x in f) + (Fraction(level),)))
    return polytope_from_affine(rows, c.ambient_dim)


def convex_hull_2d(points: Sequence[Sequence]) -> list[Point]:
    """Counterclockwise hull of exact 2D points (monotone chain)."""
    pts = sorted({(Fraction(p[0]), Fraction(p[1])) for p in points})
    if len(pts) <= 2:
        return list(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def bounding_box(vertices: Sequence[Point]) -> list[tuple[int, int]]:
    """Per-coordinate integer bounds [floor(min), ceil(max)]."""
    from math import ceil, floor

    dims = len(vertices[0])
    out = []
    for j in range(dims):
        vals = [v[j] for v in vertices]
        out.append((floor(min(vals)), ceil(max(vals))))
    return out


def integer_points(p: Polytope) -> list[IntVec]:
    """All lattice points of a (bounded, exact) polytope, in lexicographic order."""
    if p.is_empty:
        return []
    box = bounding_box(p.vertices)
    hits = []
    for cand in product(*(range(lo, hi + 1) for lo, hi in box)):
        if all(sum(h[i] * cand[i] for i in range(p.ambient_dim)) + h[-1] >= 0 for h in p.ineqs):
            hits.append(cand)
    return hits
