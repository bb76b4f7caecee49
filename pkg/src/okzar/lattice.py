"""Integer-point machinery: Hilbert bases, lattice counts, Ehrhart polynomials.

The Hilbert basis algorithm triangulates a pointed cone into simplicial
subcones spanned by its extremal rays, enumerates the lattice points of each
fundamental parallelepiped, and reduces the union (together with the primitive
rays) to the unique irreducible set by pairwise-sum elimination. The lattice
index of a parallelepiped is the gcd of the maximal minors of its ray matrix,
so the common unimodular pieces skip enumeration entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Sequence

from .cones import ConeRep, IntVec
from .errors import InputError, InternalError, UnsupportedError
from .linalg import Mat, Rat, determinant, solve_exact
from .polytopes import Polytope, bounding_box


@dataclass(frozen=True)
class HilbertBasis:
    cone: ConeRep
    elements: tuple[IntVec, ...]


@dataclass(frozen=True)
class EhrhartPoly:
    """Lattice-point counting polynomial, coefficients in ascending degree."""

    coefficients: tuple[Rat, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t) -> Rat:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc


def _simplicial_pieces(c: ConeRep) -> list[tuple[IntVec, ...]]:
    """Triangulate a pointed cone into simplicial subcones on its own rays."""
    d = c.dim
    rays = c.rays
    if d == 0:
        return []
    if len(rays) == d:
        return [tuple(rays)]
    pivot = rays[0]
    pieces: list[tuple[IntVec, ...]] = []
    for h in c.relative_facet_normals():
        if sum(a * b for a, b in zip(h, pivot)) == 0:
            continue  # facet contains the pivot
        facet_rays = [r for r in rays if sum(a * b for a, b in zip(h, r)) == 0]
        sub = ConeRep.from_rays(facet_rays, c.ambient_dim)
        for piece in _simplicial_pieces(sub):
            pieces.append((pivot,) + piece)
    return pieces


def _lattice_index(vectors: Sequence[IntVec]) -> int:
    """Index of the sublattice spanned by independent integer vectors
    inside (their span) ∩ Z^d: the gcd of all maximal minors."""
    k = len(vectors)
    d = len(vectors[0])
    g = 0
    for rows in combinations(range(d), k):
        m = Mat.from_rows([[vectors[i][r] for r in rows] for i in range(k)])
        g = gcd(g, abs(int(determinant(m))))
        if g == 1:
            return 1
    if g == 0:
        raise InternalError("dependent vectors in a simplicial piece")
    return g


def _parallelepiped_points(vectors: Sequence[IntVec]) -> list[IntVec]:
    """Lattice points of the half-open parallelepiped sum t_i v_i, 0 <= t_i < 1."""
    if _lattice_index(vectors) == 1:
        return []
    k = len(vectors)
    d = len(vectors[0])
    box = []
    for j in range(d):
        lo = sum(min(0, v[j]) for v in vectors)
        hi = sum(max(0, v[j]) for v in vectors)
        box.append((lo, hi))
    cols = Mat.from_columns(vectors)
    pts: list[IntVec] = []
    for cand in product(*(range(lo, hi + 1) for lo, hi in box)):
        t = solve_exact(cols, cand)
        if t is None:
            continue
        if all(0 <= ti < 1 for ti in t) and any(cand):
            pts.append(cand)
    return pts


def hilbert_basis(c: ConeRep) -> HilbertBasis:
    """The unique minimal generating set of the semigroup c ∩ Z^d."""
    if not c.is_pointed:
        raise UnsupportedError("Hilbert basis needs a pointed cone")
    candidates: set[IntVec] = set(c.rays)
    for piece in _simplicial_pieces(c):
        candidates.update(_parallelepiped_points(piece))
    candidates.discard(tuple([0] * c.ambient_dim))
    ordered = sorted(candidates, key=lambda v: (sum(abs(x) for x in v), v))
    irreducible: list[IntVec] = []
    for g in ordered:
        reducible = False
        for h in ordered:
            if h == g:
                continue
            diff = tuple(a - b for a, b in zip(g, h))
            if any(diff) and c.contains(diff):
                reducible = True
                break
        if not reducible:
            irreducible.append(g)
    return HilbertBasis(c, tuple(sorted(irreducible)))


def generators_are_hilbert_basis(c: ConeRep) -> bool:
    """True iff the primitive extremal rays already generate c ∩ Z^d."""
    return set(hilbert_basis(c).elements) == set(c.rays)


def lattice_point_count(p: Polytope, k: int) -> int:
    """Number of integer points of the k-th dilation of the polytope."""
    if k < 0:
        raise InputError("dilation factor must be nonnegative")
    if p.is_empty:
        return 0
    box = bounding_box([tuple(k * x for x in v) for v in p.vertices])
    count = 0
    for cand in product(*(range(lo, hi + 1) for lo, hi in box)):
        if all(
            sum(h[i] * cand[i] for i in range(p.ambient_dim)) + k * h[-1] >= 0
            for h in p.ineqs
        ):
            count += 1
    return count


def ehrhart_polynomial(p: Polytope) -> EhrhartPoly:
    """Interpolated counting polynomial of a lattice polytope, verified on
    twice as many dilations as interpolation needs."""
    if p.is_empty:
        raise InputError("empty polytope has no counting polynomial")
    if not p.is_integral():
        raise UnsupportedError("only lattice polytopes are supported")
    d = p.dim
    counts = [lattice_point_count(p, k) for k in range(2 * d + 1)]
    vander = Mat.from_rows([[Fraction(k) ** j for j in range(d + 1)] for k in range(d + 1)])
    coeffs = solve_exact(vander, counts[: d + 1])
    if coeffs is None:
        raise InternalError("interpolation system was singular")
    poly = EhrhartPoly(tuple(coeffs))
    for k in range(d + 1, 2 * d + 1):
        if poly(k) != counts[k]:
            raise InternalError(
                f"count at dilation {k} disagrees with the interpolated polynomial"
            )
    return poly
