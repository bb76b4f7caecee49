"""Global Newton-Okounkov bodies for the horizontal flag, built recursively.

The body of a level lives in valuation-space x Picard-space coordinates
(nu_1..nu_m, d_1..d_m), d in the effective basis. The recursion mirrors the
bundle tower: restrict the body one level down to the cone spanned by the
restricted nef generators, pull back through the map that forgets nu_1 and
restricts the divisor, intersect with {nu_1 = 0, nu >= 0, d nef}, and then
adjoin one ray per fixed extremal class carrying the valuation of its
canonical section.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import (
    ConeRep,
    IntVec,
    cone_from_ineqs,
    cone_from_rays,
    intersect,
    minkowski_sum,
    preimage_linear,
    primitive,
    product_with_free_space,
)
from .errors import InputError, InternalError, ModelViolationError
from .lattice import HilbertBasis, hilbert_basis
from .linalg import Mat, Rat
from .polytopes import Polytope, fiber_slice
from .variety import (
    VarietyData,
    ZariskiChamber,
    is_effective,
    nef_cone,
    zariski_decompose,
)


@dataclass(frozen=True)
class LevelStep:
    """Intermediate cones of one recursion level (innermost level first)."""

    level: int
    c_s1: ConeRep | None
    cone_s: ConeRep | None
    body: ConeRep


@dataclass(frozen=True)
class OkounkovBody:
    level_dim: int
    cone: ConeRep
    provenance: tuple[LevelStep, ...]

    def __post_init__(self) -> None:
        n = self.level_dim
        for r in self.cone.rays:
            if any(x < 0 for x in r[:n]):
                raise InternalError("body ray with negative valuation part")
            if any(x < 0 for x in r[n:]):
                raise InternalError("body ray with non-effective divisor part")
        if not self.cone.is_pointed:
            raise InternalError("body cone must be pointed")


def _restricted_nef_rays(v: VarietyData) -> list[IntVec]:
    rho = v.restriction_matrix(0)
    m = v.nef_matrix(0)
    return [primitive(rho.mul_vec(m.column(j))) for j in range(v.n)]


def _forget_and_restrict(v: VarietyData) -> Mat:
    """(nu_1..nu_n, d) -> (nu_2..nu_n, restricted d) as one linear map."""
    n = v.n
    rho = v.restriction_matrix(0)
    rows: list[list[int]] = []
    for i in range(1, n):  # drop nu_1
        rows.append([1 if j == i else 0 for j in range(2 * n)])
    for i in range(n - 1):
        rows.append([0] * n + [int(rho.at(i, j)) for j in range(n)])
    return Mat.from_rows(rows)


def _base_body() -> ConeRep:
    # degree-d classes on a line have sections vanishing to orders 0..d
    return cone_from_rays([(0, 1), (1, 1)])


def _build(v: VarietyData) -> tuple[ConeRep, tuple[LevelStep, ...]]:
    n = v.n
    if n == 1:
        body = _base_body()
        step = LevelStep(level=0, c_s1=None, cone_s=cone_from_rays([(0, 1)]), body=body)
        return body, (step,)
    below, steps = _build(v.level(1))
    c_s1 = intersect(
        below, product_with_free_space(n - 1, cone_from_rays(_restricted_nef_rays(v), n - 1))
    )
    pre = preimage_linear(c_s1, _forget_and_restrict(v))
    n_zero = [0] * n
    constraints = [tuple([1] + [0] * (2 * n - 1)), tuple([-1] + [0] * (2 * n - 1))]
    for i in range(1, n):
        constraints.append(tuple(1 if j == i else 0 for j in range(2 * n)))
    for h in nef_cone(v).ineqs:
        constraints.append(tuple(n_zero) + h)
    cone_s = intersect(pre, cone_from_ineqs(constraints, 2 * n))
    fixed_rays = []
    for i in range(2, n + 1):
        nu = [0] * n
        nu[n - i] = 1  # the class first meets the flag at depth n+1-i, to order 1
        d = [0] * n
        d[i - 1] = 1
        fixed_rays.append(tuple(nu + d))
    body = minkowski_sum(cone_s, cone_from_rays(fixed_rays, 2 * n))
    step = LevelStep(level=0, c_s1=c_s1, cone_s=cone_s, body=body)
    shifted = tuple(
        LevelStep(level=s.level + 1, c_s1=s.c_s1, cone_s=s.cone_s, body=s.body)
        for s in steps
    )
    return body, (step,) + shifted


def global_body(v: VarietyData) -> OkounkovBody:
    if v.n >= 2 and len(v.restriction) < v.n - 1:
        raise InputError("restriction data missing for a level")
    body, steps = _build(v)
    return OkounkovBody(v.n, body, steps)


def cone_of_S(v: VarietyData) -> ConeRep:
    """The slice semigroup cone before the fixed rays are adjoined."""
    b = global_body(v)
    cone = b.provenance[0].cone_s
    assert cone is not None
    return cone


def restrict_body(b: OkounkovBody, subcone: ConeRep) -> OkounkovBody:
    """Intersect the body with valuation-space x subcone (of the Picard space)."""
    n = b.level_dim
    if subcone.ambient_dim != n:
        raise InputError("subcone must live in the Picard space of the body")
    for r in subcone.rays:
        if any(x < 0 for x in r):
            raise InputError("subcone is not contained in the effective cone")
    restricted = intersect(b.cone, product_with_free_space(n, subcone))
    return OkounkovBody(n, restricted, b.provenance)


def divisor_body(b: OkounkovBody, divisor: Sequence) -> Polytope:
    """Exact slice of the body over one divisor class."""
    n = b.level_dim
    if len(divisor) != n:
        raise InputError("divisor has wrong length")
    if any(Fraction(x) < 0 for x in divisor):
        return Polytope(n, (), ())
    return fiber_slice(b.cone, range(n, 2 * n), divisor)


def canonical_section_valuation(v: VarietyData, divisor: Sequence) -> tuple[Fraction, ...]:
    """Valuation vector of the canonical section of an effective class:
    the class with index i first meets the flag at depth n+1-i."""
    n = v.n
    if not is_effective(v, divisor):
        raise InputError("canonical section exists only for effective classes")
    out = [Fraction(0)] * n
    for i, c in enumerate(Fraction(x) for x in divisor):
        out[n - 1 - i] += c
    return tuple(out)


@dataclass(frozen=True)
class SlabResult:
    a: Rat
    direct: Polytope
    via_formula: Polytope
    shift: tuple[Rat, ...]

    @property
    def matches(self) -> bool:
        expected = tuple(sorted((self.a,) + w for w in self.via_formula.vertices))
        return self.direct.vertices == expected


def slab(
    v: VarietyData,
    b: OkounkovBody,
    divisor: Sequence,
    a,
    chambers: Sequence[ZariskiChamber] | None = None,
    level1_body: OkounkovBody | None = None,
) -> SlabResult:
    """Slice the body of a divisor at a fixed first valuation, computed two
    ways: directly, and through the decomposition of the shifted class one
    level down. Both polytopes are returned; they must agree."""
    n = v.n
    a = Fraction(a)
    if not is_effective(v, divisor):
        raise InputError("divisor must be effective")
    d = tuple(Fraction(x) for x in divisor)
    reduced = fiber_slice(b.cone, [0] + list(range(n, 2 * n)), (a,) + d)
    if reduced.is_empty:
        raise InputError(f"the slice at first valuation {a} is empty")
    direct = Polytope(
        n,
        tuple(sorted((a,) + w for w in reduced.vertices)),
        tuple(sorted({primitive((1,) + (0,) * (n - 1) + (-a,)), primitive((-1,) + (0,) * (n - 1) + (a,))}
                     | {(0,) + h for h in reduced.ineqs})),
    )
    shifted = tuple(x - (a if i == n - 1 else 0) for i, x in enumerate(d))
    if any(x < 0 for x in shifted):
        raise ModelViolationError("shifted class is not effective despite a nonempty slab")
    dec = zariski_decompose(v, shifted, chambers)
    if n in dec.support:
        raise ModelViolationError(
            "negative part meets the flag divisor; the slab formula does not apply"
        )
    rho = v.restriction_matrix(0)
    rest_neg = rho.mul_vec(dec.negative)
    if any(c < 0 for c in rest_neg):
        raise ModelViolationError("restricted negative part has a negative coordinate")
    sub = v.level(1)
    shift = canonical_section_valuation(sub, rest_neg)
    if level1_body is None:
        level1_body = global_body(sub)
    rest_pos = rho.mul_vec(dec.positive)
    via = divisor_body(level1_body, rest_pos).translate(shift)
    result = SlabResult(a=a, direct=direct, via_formula=via, shift=shift)
    if not result.matches:
        raise InternalError("direct slab and decomposition route disagree")
    return result


def body_hilbert_basis(b: OkounkovBody) -> HilbertBasis:
    return hilbert_basis(b.cone)


@dataclass(frozen=True)
class CoxGenerator:
    valuation: IntVec
    divisor: IntVec
    label: str


def cox_report(v: VarietyData, b: OkounkovBody) -> list[CoxGenerator]:
    """Degrees and valuations of a generating set of the section ring, read
    off the Hilbert basis of the body."""
    from .expressions import divisor_label

    n = b.level_dim
    out = []
    for el in body_hilbert_basis(b).elements:
        nu, d = el[:n], el[n:]
        out.append(CoxGenerator(nu, d, divisor_label(v, d)))
    return out
