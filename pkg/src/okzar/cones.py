"""Exact rational polyhedral cones in dual description.

A cone is carried as both its minimal extremal rays and its irredundant
supporting inequalities, all stored as primitive integer vectors. Conversion
between the two sides runs Motzkin's double description method with exact
integer arithmetic; adjacency of rays is decided by the algebraic rank test,
so intermediate redundancy can never lose a ray, and a final extremality
filter guarantees minimality of the output.

Non-pointed cones are representable: the span's equations appear in `ineqs`
as opposite pairs, and a basis of the lineality space is kept alongside the
rays so the generator side still describes the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError, UnsupportedError
from .linalg import Mat, Rat, rank, rref

IntVec = tuple[int, ...]


def primitive(v: Iterable) -> IntVec:
    """Scale a rational vector to a primitive integer vector, keeping direction."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        return tuple(0 for _ in fr)
    denom = 1
    for x in fr:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def _dot(a: IntVec, b: IntVec) -> int:
    return sum(x * y for x, y in zip(a, b))


def _scale_sub(ca: int, a: IntVec, cb: int, b: IntVec) -> IntVec:
    return primitive(tuple(ca * x - cb * y for x, y in zip(a, b)))


def _unit(i: int, dim: int) -> IntVec:
    return tuple(1 if j == i else 0 for j in range(dim))


def double_description(rows: Sequence[IntVec], dim: int) -> tuple[list[IntVec], list[IntVec]]:
    """Generators of {x : r.x >= 0 for all r in rows}.

    Returns (lineality basis, extremal rays). The rays are primitive, pairwise
    distinct, and each spans a minimal face; the lineality basis is in reduced
    echelon form.
    """
    lin: list[IntVec] = [_unit(i, dim) for i in range(dim)]
    rays: list[IntVec] = []
    inserted: list[IntVec] = []

    def refresh_active() -> list[set[int]]:
        return [{i for i, h in enumerate(inserted) if _dot(h, r) == 0} for r in rays]

    active: list[set[int]] = []
    for raw in rows:
        row = primitive(raw)
        if not any(row):
            continue
        idx = len(inserted)
        inserted.append(row)
        linvals = [_dot(row, v) for v in lin]
        if any(linvals):
            j0 = next(j for j, v in enumerate(linvals) if v != 0)
            v0, a0 = lin[j0], linvals[j0]
            if a0 < 0:
                v0, a0 = tuple(-x for x in v0), -a0
            lin = [
                _scale_sub(a0, w, b, v0)
                for j, (w, b) in enumerate(zip(lin, linvals))
                if j != j0
            ]
            rays = [_scale_sub(a0, r, _dot(row, r), v0) for r in rays]
            rays.append(v0)
        else:
            vals = [_dot(row, r) for r in rays]
            if all(v >= 0 for v in vals):
                for s, v in zip(active, vals):
                    if v == 0:
                        s.add(idx)
                continue
            keep = [r for r, v in zip(rays, vals) if v >= 0]
            pos = [(r, v, a) for r, v, a in zip(rays, vals, active) if v > 0]
            neg = [(r, v, a) for r, v, a in zip(rays, vals, active) if v < 0]
            fresh: list[IntVec] = []
            codim = dim - len(lin) - 2
            for rp, vp, ap in pos:
                for rm, vm, am in neg:
                    common = ap & am
                    # rank test: the minimal face containing both rays must
                    # have dimension lineality + 2
                    if rank([inserted[i] for i in sorted(common)]) != codim:
                        continue
                    fresh.append(_scale_sub(vp, rm, vm, rp))
            seen = set(keep)
            rays = keep + [r for r in fresh if not (r in seen or seen.add(r))]
        active = refresh_active()

    # final cleanup: dedupe and keep only rays spanning a minimal face
    uniq: list[IntVec] = []
    seen_set: set[IntVec] = set()
    for r in rays:
        if r not in seen_set and any(r):
            seen_set.add(r)
            uniq.append(r)
    result: list[IntVec] = []
    want = dim - len(lin) - 1
    for r in uniq:
        act = [h for h in inserted if _dot(h, r) == 0]
        if rank(act) == want:
            result.append(r)
    lin_canonical = [primitive(row) for row in rref(lin)] if lin else []
    return lin_canonical, sorted(result)


def _minimal_ineqs(generator_rows: Sequence[IntVec], dim: int) -> list[IntVec]:
    """Irredundant inequality description of the cone spanned by the rows.

    The dual cone {h : h.g >= 0} is computed by double description; its
    extremal rays are the facet normals and its lineality gives the span's
    equations, stored as opposite pairs.
    """
    lin, facets = double_description(generator_rows, dim)
    eqs = [v for row in lin for v in (row, tuple(-x for x in row))]
    return sorted(facets + eqs)


@dataclass(frozen=True)
class ConeRep:
    """Dual description of a rational polyhedral cone."""

    ambient_dim: int
    rays: tuple[IntVec, ...]
    ineqs: tuple[IntVec, ...]
    lineality_dim: int
    lineality_basis: tuple[IntVec, ...] = field(default=(), repr=False)

    @staticmethod
    def from_rays(rays: Sequence[Sequence], ambient_dim: int | None = None) -> "ConeRep":
        rays = [primitive(r) for r in rays]
        rays = [r for r in rays if any(r)]
        if ambient_dim is None:
            if not rays:
                raise InputError("ambient dimension required for the zero cone")
            ambient_dim = len(rays[0])
        if any(len(r) != ambient_dim for r in rays):
            raise InputError("rays of mixed ambient dimension")
        ineqs = _minimal_ineqs(rays, ambient_dim)
        lin, minimal_rays = double_description(ineqs, ambient_dim)
        return ConeRep(ambient_dim, tuple(minimal_rays), tuple(ineqs), len(lin), tuple(lin))

    @staticmethod
    def from_ineqs(ineqs: Sequence[Sequence], ambient_dim: int | None = None) -> "ConeRep":
        rows = [primitive(h) for h in ineqs]
        rows = [h for h in rows if any(h)]
        if ambient_dim is None:
            if not rows:
                raise InputError("ambient dimension required without inequalities")
            ambient_dim = len(rows[0])
        if any(len(h) != ambient_dim for h in rows):
            raise InputError("inequalities of mixed ambient dimension")
        lin, rays = double_description(rows, ambient_dim)
        gen_rows = list(rays) + [v for row in lin for v in (row, tuple(-x for x in row))]
        minimal = _minimal_ineqs(gen_rows, ambient_dim)
        return ConeRep(ambient_dim, tuple(rays), tuple(minimal), len(lin), tuple(lin))

    @staticmethod
    def zero(ambient_dim: int) -> "ConeRep":
        return ConeRep.from_rays([], ambient_dim)

    @staticmethod
    def orthant(ambient_dim: int) -> "ConeRep":
        return ConeRep.from_rays([_unit(i, ambient_dim) for i in range(ambient_dim)])

    # -- predicates ------------------------------------------------------

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.ambient_dim:
            raise InputError(f"point of length {len(x)} in ambient dimension {self.ambient_dim}")
        xs = [Fraction(v) for v in x]
        return all(sum(h[i] * xs[i] for i in range(self.ambient_dim)) >= 0 for h in self.ineqs)

    def contains_strict(self, x: Sequence) -> bool:
        """Interior membership: every non-equation inequality is strict."""
        if len(x) != self.ambient_dim:
            raise InputError(f"point of length {len(x)} in ambient dimension {self.ambient_dim}")
        xs = [Fraction(v) for v in x]
        neg = set(tuple(-c for c in h) for h in self.ineqs)
        for h in self.ineqs:
            val = sum(h[i] * xs[i] for i in range(self.ambient_dim))
            if h in neg:  # equation pair: equality required
                if val != 0:
                    return False
            elif val <= 0:
                return False
        return True

    @property
    def dim(self) -> int:
        return rank(list(self.rays) + list(self.lineality_basis))

    def facets(self) -> list["Face"]:
        if not self.is_pointed:
            raise UnsupportedError("facet enumeration needs a pointed cone")
        if self.dim != self.ambient_dim:
            raise UnsupportedError("facet enumeration needs a full-dimensional cone")
        return [
            Face(self, h, tuple(r for r in self.rays if _dot(h, r) == 0))
            for h in self.ineqs
        ]

    def relative_facet_normals(self) -> list[IntVec]:
        """Inequalities defining facets inside the span (equation pairs excluded)."""
        as_set = set(self.ineqs)
        return [h for h in self.ineqs if tuple(-c for c in h) not in as_set]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConeRep):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.rays == other.rays
            and self.ineqs == other.ineqs
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.rays, self.ineqs))


@dataclass(frozen=True)
class Face:
    """A facet of a pointed cone: supporting functional plus incident rays."""

    parent: ConeRep
    supporting_functional: IntVec
    generators: tuple[IntVec, ...]


# -- operations ----------------------------------------------------------


def cone_from_rays(rays: Sequence[Sequence], ambient_dim: int | None = None) -> ConeRep:
    return ConeRep.from_rays(rays, ambient_dim)


def cone_from_ineqs(ineqs: Sequence[Sequence], ambient_dim: int | None = None) -> ConeRep:
    return ConeRep.from_ineqs(ineqs, ambient_dim)


def intersect(a: ConeRep, b: ConeRep) -> ConeRep:
    if a.ambient_dim != b.ambient_dim:
        raise InputError("intersection of cones in different ambient spaces")
    return ConeRep.from_ineqs(list(a.ineqs) + list(b.ineqs), a.ambient_dim)


def minkowski_sum(a: ConeRep, b: ConeRep) -> ConeRep:
    if a.ambient_dim != b.ambient_dim:
        raise InputError("sum of cones in different ambient spaces")
    gens: list[IntVec] = []
    for c in (a, b):
        gens.extend(c.rays)
        for v in c.lineality_basis:
            gens.append(v)
            gens.append(tuple(-x for x in v))
    return ConeRep.from_rays(gens, a.ambient_dim)


def preimage_linear(c: ConeRep, lin_map: Mat) -> ConeRep:
    """Pull the cone back along a linear map into its ambient space."""
    if lin_map.rows != c.ambient_dim:
        raise InputError(
            f"map into dimension {lin_map.rows}, cone lives in {c.ambient_dim}"
        )
    pulled = []
    for h in c.ineqs:
        pulled.append(tuple(sum(Rat(h[i]) * lin_map.at(i, j) for i in range(lin_map.rows)) for j in range(lin_map.cols)))
    return ConeRep.from_ineqs([primitive(h) for h in pulled], lin_map.cols)


def contains(c: ConeRep, x: Sequence) -> bool:
    return c.contains(x)


def dim(c: ConeRep) -> int:
    return c.dim


def facets(c: ConeRep) -> list[Face]:
    return c.facets()


def product_with_free_space(free_dim: int, c: ConeRep) -> ConeRep:
    """The cone R^free_dim x c, used to constrain only trailing coordinates."""
    rows = [tuple([0] * free_dim) + h for h in c.ineqs]
    return ConeRep.from_ineqs(rows, free_dim + c.ambient_dim)
