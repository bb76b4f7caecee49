"""Picard-lattice data of an iterated projective-line bundle and the chamber
structure of its effective cone.

The data model fixes, for every level of the bundle tower, the change of
basis from the nef generators D_1..D_m to the effective basis E_1..E_m and
the class of the restricted top divisor one level down. Everything else
(effective/nef cones, the pairing of fixed rays with nef facets, chamber
enumeration, Zariski decompositions, integrality checks) is computed from
these matrices exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .cones import ConeRep, Face, IntVec, cone_from_rays, intersect, primitive
from .errors import DataError, InputError, ModelViolationError
from .linalg import Mat, Rat, determinant, invert, is_lattice_basis, solve_exact

EVec = tuple[Rat, ...]


def _as_evec(v: Sequence) -> EVec:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class VarietyData:
    """Validated per-level basis and restriction data."""

    name: str
    n: int
    basis_change: tuple[Mat, ...]
    restriction: tuple[IntVec, ...]
    subcones: Mapping[str, tuple[EVec, ...]] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def level(self, k: int) -> "VarietyData":
        """The variety one obtains after truncating k times."""
        if not 0 <= k < self.n:
            raise InputError(f"level {k} outside 0..{self.n - 1}")
        if k == 0:
            return self
        return VarietyData(
            name=f"{self.name}/level{k}",
            n=self.n - k,
            basis_change=self.basis_change[k:],
            restriction=self.restriction[k:],
        )

    def nef_matrix(self, level: int = 0) -> Mat:
        return self.basis_change[level]

    def restriction_matrix(self, level: int = 0) -> Mat:
        """Map sending level-`level` classes to their restriction one level down:
        identity on E_1..E_{m-1}, with E_m mapped to the stored class."""
        m = self.n - level
        if m < 2:
            raise DataError("no restriction below a one-dimensional level")
        r = self.restriction[level]
        rows = [[1 if j == i else 0 for j in range(m)] for i in range(m - 1)]
        for i in range(m - 1):
            rows[i][m - 1] = r[i]
        return Mat.from_rows(rows)


def load_variety(doc: Mapping, name: str | None = None) -> VarietyData:
    """Validate a variety document (already parsed) into VarietyData."""
    from .expressions import parse_divisor

    if not isinstance(doc, Mapping):
        raise DataError("variety document must be a JSON object")
    try:
        n = int(doc["dim"])
    except (KeyError, TypeError, ValueError):
        raise DataError("missing or invalid 'dim'") from None
    if n < 1:
        raise DataError("'dim' must be at least 1")
    label = str(doc.get("name", name or "variety"))

    raw_mats = doc.get("basis_change")
    if not isinstance(raw_mats, Sequence) or len(raw_mats) != n:
        raise DataError(f"'basis_change' must list {n} matrices (level 0 first)")
    mats: list[Mat] = []
    for k, raw in enumerate(raw_mats):
        m = n - k
        try:
            mat = Mat.from_rows(raw)
        except Exception as exc:
            raise DataError(f"basis_change[{k}]: {exc}") from None
        if mat.rows != m or mat.cols != m:
            raise DataError(f"basis_change[{k}] must be {m}x{m}")
        if not mat.is_integral():
            raise DataError(f"basis_change[{k}] must be integral")
        mats.append(mat)

    raw_res = doc.get("restriction", [])
    if not isinstance(raw_res, Sequence) or len(raw_res) != max(n - 1, 0):
        raise DataError(f"'restriction' must list {n - 1} vectors (level 0 first)")
    res: list[IntVec] = []
    for k, raw in enumerate(raw_res):
        if len(raw) != n - k - 1:
            raise DataError(f"restriction[{k}] must have length {n - k - 1}")
        try:
            vec = tuple(int(x) for x in raw)
        except (TypeError, ValueError):
            raise DataError(f"restriction[{k}] must be integral") from None
        res.append(vec)

    warnings: list[str] = []
    for k, mat in enumerate(mats):
        d = determinant(mat)
        if abs(d) != 1:
            raise DataError(f"basis_change[{k}] is not unimodular (det = {d})")
        m = n - k
        e1 = tuple(Fraction(1 if i == 0 else 0) for i in range(m))
        if mat.column(0) != e1:
            warnings.append(
                f"level {k}: first nef generator is not the first effective class"
            )
        inv = invert(mat)
        if any(c < 0 for c in inv.mul_vec(e1)):
            raise DataError(f"level {k}: first effective class is not nef")
        for i in range(1, m):
            ei = [1 if j == i else 0 for j in range(m)]
            if all(c >= 0 for c in inv.mul_vec(ei)):
                raise DataError(f"level {k}: effective class {i + 1} is nef")

    data = VarietyData(label, n, tuple(mats), tuple(res), {}, tuple(warnings))
    for k in range(n - 1):
        rho = data.restriction_matrix(k)
        below = mats[k + 1]
        for i in range(n - k - 1):
            img = rho.mul_vec(mats[k].column(i))
            if img != below.column(i):
                raise DataError(
                    f"restriction[{k}] incompatible: nef generator {i + 1} does not "
                    f"restrict to its counterpart one level down"
                )

    subcones: dict[str, tuple[EVec, ...]] = {}
    raw_sub = doc.get("subcones") or {}
    if not isinstance(raw_sub, Mapping):
        raise DataError("'subcones' must map names to divisor expression lists")
    for key, exprs in raw_sub.items():
        vecs = []
        for expr in exprs:
            try:
                vecs.append(parse_divisor(str(expr), data))
            except InputError as exc:
                raise DataError(f"subcone {key!r}: {exc}") from None
        subcones[str(key)] = tuple(vecs)

    return VarietyData(label, n, tuple(mats), tuple(res), subcones, tuple(warnings))


# -- cones and membership --------------------------------------------------


def eff_cone(v: VarietyData, level: int = 0) -> ConeRep:
    return ConeRep.orthant(v.n - level)

def nef_cone(v: VarietyData, level: int = 0) -> ConeRep:
    m = v.nef_matrix(level)
    return cone_from_rays([m.column(j) for j in range(m.cols)], m.rows)


def d_coordinates(v: VarietyData, divisor: Sequence, level: int = 0) -> EVec:
    """Coordinates of a class in the nef basis (unique: the basis change is unimodular)."""
    sol = solve_exact(v.nef_matrix(level), list(divisor))
    if sol is None:
        raise InputError("divisor has wrong length for this level")
    return sol


def is_effective(v: VarietyData, divisor: Sequence, level: int = 0) -> bool:
    if len(divisor) != v.n - level:
        raise InputError("divisor has wrong length for this level")
    return all(Fraction(x) >= 0 for x in divisor)


def is_nef(v: VarietyData, divisor: Sequence, level: int = 0) -> bool:
    return all(c >= 0 for c in d_coordinates(v, divisor, level))


def fixed_support_test(v: VarietyData, support: Sequence[int]) -> bool:
    """True iff the span of the chosen effective classes meets the nef cone
    only at the origin (so their sum is a fixed divisor)."""
    s = sorted(set(support))
    if not s:
        raise InputError("support must be nonempty")
    if any(i < 2 or i > v.n for i in s):
        raise InputError(f"support indices must lie in 2..{v.n}")
    span = cone_from_rays([_e(i - 1, v.n) for i in s], v.n)
    return intersect(span, nef_cone(v)).dim == 0


def _e(i: int, n: int) -> IntVec:
    return tuple(1 if j == i else 0 for j in range(n))


# -- facet pairing and chambers ---------------------------------------------


@dataclass(frozen=True)
class FacetPairing:
    """The bijection between fixed extremal classes and separating nef facets,
    plus the one facet that separates nothing."""

    by_fixed_ray: Mapping[int, Face]
    non_separating: Face


def facet_pairing(v: VarietyData) -> FacetPairing:
    nef = nef_cone(v)
    all_facets = nef.facets()
    paired: dict[int, Face] = {}
    for i in range(2, v.n + 1):
        separating = [f for f in all_facets if f.supporting_functional[i - 1] < 0]
        if len(separating) != 1:
            raise ModelViolationError(
                f"effective class {i} is separated by {len(separating)} nef facets"
            )
        paired[i] = separating[0]
    neutral = [f for f in all_facets if all(c >= 0 for c in f.supporting_functional)]
    if len(neutral) != 1:
        raise ModelViolationError(
            f"{len(neutral)} nef facets are nonnegative on the whole effective cone"
        )
    seen = {f.supporting_functional for f in paired.values()}
    if len(seen) != v.n - 1 or neutral[0].supporting_functional in seen:
        raise ModelViolationError("facet pairing is not a bijection")
    return FacetPairing(paired, neutral[0])


@dataclass(frozen=True)
class ZariskiChamber:
    """A chamber of the effective cone: a simplicial cone spanned by the nef
    generators on a face of the nef cone together with fixed extremal classes."""

    support: tuple[int, ...]
    nef_indices: tuple[int, ...]
    nef_face_generators: tuple[IntVec, ...]
    cone: ConeRep

    @property
    def generators(self) -> tuple[IntVec, ...]:
        n = self.cone.ambient_dim
        return self.nef_face_generators + tuple(_e(i - 1, n) for i in self.support)

    def generator_labels(self) -> list[str]:
        return [f"E{i}" for i in self.support] + [f"D{j}" for j in self.nef_indices]


def zariski_chambers(v: VarietyData) -> list[ZariskiChamber]:
    """All chambers, sorted by support (the empty support is the nef cone)."""
    pairing = facet_pairing(v)
    nef = nef_cone(v)
    m = v.nef_matrix()
    columns = [primitive(m.column(j)) for j in range(v.n)]
    chambers: list[ZariskiChamber] = []
    supports = [()] + [
        s
        for size in range(1, v.n)
        for s in combinations(range(2, v.n + 1), size)
    ]
    for s in sorted(supports, key=lambda t: (len(t), t)):
        if s and not fixed_support_test(v, s):
            continue
        if s:
            idx = [
                j + 1
                for j, col in enumerate(columns)
                if all(
                    sum(a * b for a, b in zip(pairing.by_fixed_ray[i].supporting_functional, col)) == 0
                    for i in s
                )
            ]
        else:
            idx = list(range(1, v.n + 1))
        gens = [columns[j - 1] for j in idx] + [_e(i - 1, v.n) for i in s]
        if len(gens) != v.n or determinant(Mat.from_columns(gens)) == 0:
            raise ModelViolationError(
                f"chamber with support {set(s) or '{}'} is not an n-simplex"
            )
        chambers.append(
            ZariskiChamber(
                support=s,
                nef_indices=tuple(idx),
                nef_face_generators=tuple(columns[j - 1] for j in idx),
                cone=cone_from_rays(gens, v.n),
            )
        )
    if chambers[0].cone != nef:
        raise ModelViolationError("empty-support chamber does not match the nef cone")
    return chambers


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: EVec
    negative: EVec
    support: tuple[int, ...]
    chamber: ZariskiChamber

    @property
    def negative_is_zero(self) -> bool:
        return all(x == 0 for x in self.negative)


def zariski_decompose(
    v: VarietyData,
    divisor: Sequence,
    chambers: Sequence[ZariskiChamber] | None = None,
    check_all_chambers: bool = False,
) -> ZariskiDecomposition:
    """Split an effective class into its maximal nef part and fixed residue.

    Solves the class in each chamber's simplex basis (smallest support first)
    and accepts the first nonnegative solution; with `check_all_chambers`,
    every feasible chamber is verified to produce the identical split.
    """
    if not is_effective(v, divisor):
        bad = next(i for i, x in enumerate(divisor) if Fraction(x) < 0)
        raise InputError(f"class is not effective (coordinate {bad + 1} is negative)")
    d = _as_evec(divisor)
    if chambers is None:
        chambers = zariski_chambers(v)
    found: list[ZariskiDecomposition] = []
    for ch in chambers:
        basis = list(ch.nef_face_generators) + [_e(i - 1, v.n) for i in ch.support]
        coeffs = solve_exact(Mat.from_columns(basis), d)
        if coeffs is None or any(c < 0 for c in coeffs):
            continue
        k = len(ch.nef_face_generators)
        pos = [Fraction(0)] * v.n
        for c, g in zip(coeffs[:k], ch.nef_face_generators):
            for j in range(v.n):
                pos[j] += c * g[j]
        neg = [Fraction(0)] * v.n
        for c, i in zip(coeffs[k:], ch.support):
            neg[i - 1] = c
        dec = ZariskiDecomposition(
            positive=tuple(pos),
            negative=tuple(neg),
            support=tuple(i for i in ch.support if neg[i - 1] > 0),
            chamber=ch,
        )
        if not check_all_chambers:
            return dec
        found.append(dec)
    if not found:
        raise ModelViolationError("no chamber accepts the class")
    first = found[0]
    for other in found[1:]:
        if other.positive != first.positive or other.negative != first.negative:
            raise ModelViolationError("chambers disagree about a decomposition")
    return first


def chamber_of(
    v: VarietyData, divisor: Sequence, chambers: Sequence[ZariskiChamber] | None = None
) -> ZariskiChamber:
    return zariski_decompose(v, divisor, chambers).chamber


def integral_decomposition_check(v: VarietyData) -> bool:
    """True iff every chamber's generating set is a Z-basis, which makes the
    decomposition of every integral effective class integral."""
    return all(is_lattice_basis(ch.generators) for ch in zariski_chambers(v))
