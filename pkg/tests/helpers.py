"""Independent oracles used by the test suite.

Nothing here calls the double description code or the chamber solver: the
Fourier-Motzkin oracle, the brute-force vertex enumeration and the exact
linear program re-derive their answers from first principles so agreement is
meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import gcd


def primitive(v):
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


def frac_rank(rows) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def frac_solve(rows, rhs):
    """Unique solution of a square/overdetermined exact system, else None."""
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols + 1):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if ncols in pivots or len(pivots) < ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(aug, pivots):
        x[c] = row[-1]
    return tuple(x)


# -- Fourier-Motzkin oracle --------------------------------------------------


def _fm_combine(rows, col):
    pos = [r for r in rows if r[col] > 0]
    neg = [r for r in rows if r[col] < 0]
    zero = [r for r in rows if r[col] == 0]
    out = set(zero)
    for p in pos:
        for m in neg:
            comb = primitive(tuple(p[col] * mm - m[col] * pp for pp, mm in zip(p, m)))
            if any(comb):
                out.add(comb)
    return sorted(out)


def _fm_substitute(eq, rows, col):
    """Use the equality row to eliminate the variable from every row."""
    out = []
    for r in rows:
        if r[col] == 0:
            out.append(r)
            continue
        scale = eq[col]
        comb = tuple(scale * rr - r[col] * ee for rr, ee in zip(r, eq))
        if scale < 0:
            comb = tuple(-x for x in comb)
        comb = primitive(comb)
        if any(comb):
            out.append(comb)
    return out


def fourier_motzkin_facets(rays, dim):
    """Irredundant facet normals of a full-dimensional pointed cone spanned by
    the given integer rays: eliminate the coefficient variables from
    {x = sum_i lambda_i r_i, lambda >= 0} (equalities by substitution, the
    rest by sign-pair combination), then keep the rank-(dim-1) active sets."""
    m = len(rays)
    ineq_rows = [
        tuple(1 if j == i else 0 for j in range(m)) + tuple([0] * dim) for i in range(m)
    ]
    eq_rows = [
        tuple(-rays[i][j] for i in range(m)) + tuple(1 if k == j else 0 for k in range(dim))
        for j in range(dim)
    ]
    for col in range(m):
        pivot = next((e for e in eq_rows if e[col] != 0), None)
        if pivot is not None:
            eq_rows = [e for e in eq_rows if e is not pivot]
            eq_rows = _fm_substitute(pivot, eq_rows, col)
            ineq_rows = _fm_substitute(pivot, ineq_rows, col)
        else:
            ineq_rows = _fm_combine(ineq_rows, col)
    assert not eq_rows, "cone of full-dimensional rays should use up all equations"
    projected = set()
    for r in ineq_rows:
        assert all(c == 0 for c in r[:m])
        h = primitive(r[m:])
        if any(h):
            projected.add(h)
    facets = set()
    for h in projected:
        assert all(sum(a * b for a, b in zip(h, ray)) >= 0 for ray in rays)
        active = [ray for ray in rays if sum(a * b for a, b in zip(h, ray)) == 0]
        if frac_rank(active) == dim - 1:
            facets.add(h)
    return facets


# -- brute-force vertex enumeration ------------------------------------------


def brute_force_vertices(rows, dim):
    """Vertices of {y : a.y + c >= 0 for rows (a, c)} by basic-solution search."""
    verts = set()
    for idx in combinations(range(len(rows)), dim):
        sub = [rows[i][:dim] for i in idx]
        rhs = [-Fraction(rows[i][dim]) for i in idx]
        sol = frac_solve(sub, rhs)
        if sol is None:
            continue
        if all(
            sum(Fraction(r[j]) * sol[j] for j in range(dim)) + r[dim] >= 0 for r in rows
        ):
            verts.add(sol)
    return verts


# -- exact linear program for the decomposition ------------------------------


def lp_zariski_oracle(nef_matrix_inverse_rows, divisor):
    """(positive, negative) minimizing the coordinate sum of the negative part
    subject to `divisor - negative` nef and `negative >= 0`, by enumerating
    the basic feasible points of that polytope."""
    n = len(divisor)
    d = [Fraction(x) for x in divisor]
    rows = []
    for i in range(n):  # N_i >= 0
        rows.append(tuple(Fraction(1) if j == i else Fraction(0) for j in range(n)) + (Fraction(0),))
    for inv_row in nef_matrix_inverse_rows:  # (M^-1 (D - N))_i >= 0
        const = sum(Fraction(inv_row[j]) * d[j] for j in range(n))
        rows.append(tuple(-Fraction(inv_row[j]) for j in range(n)) + (const,))
    verts = brute_force_vertices(rows, n)
    assert verts, "decomposition polytope should contain N = D at least"
    best = min(sum(v) for v in verts)
    argmin = [v for v in verts if sum(v) == best]
    assert len(argmin) == 1, "minimal negative part must be unique"
    neg = argmin[0]
    pos = tuple(a - b for a, b in zip(d, neg))
    return pos, neg


# -- exact volume of a full-dimensional polytope (dim <= 3) -------------------


def exact_volume(poly):
    from okzar.polytopes import convex_hull_2d

    d = poly.dim
    assert d == poly.ambient_dim, "volume oracle needs a full-dimensional polytope"
    verts = poly.vertices
    if d == 0:
        return Fraction(1)
    if d == 1:
        xs = [v[0] for v in verts]
        return max(xs) - min(xs)
    if d == 2:
        hull = convex_hull_2d(verts)
        area = Fraction(0)
        for i in range(len(hull)):
            x1, y1 = hull[i]
            x2, y2 = hull[(i + 1) % len(hull)]
            area += x1 * y2 - x2 * y1
        return abs(area) / 2
    assert d == 3
    facets = {}
    for h in poly.ineqs:
        active = tuple(
            v for v in verts if sum(h[i] * v[i] for i in range(3)) + h[-1] == 0
        )
        if len(active) >= 3 and frac_rank([[a - b for a, b in zip(v, active[0])] for v in active[1:]]) == 2:
            facets[frozenset(active)] = (h, active)
    v0 = verts[0]
    vol = Fraction(0)
    for h, active in facets.values():
        if sum(h[i] * v0[i] for i in range(3)) + h[-1] == 0:
            continue  # base vertex on this facet
        drop = max(range(3), key=lambda i: (abs(h[i]), -i))
        keep = [i for i in range(3) if i != drop]
        flat = {(v[keep[0]], v[keep[1]]): v for v in active}
        ring = [flat[p] for p in convex_hull_2d(list(flat))]
        for i in range(1, len(ring) - 1):
            m = [
                [a - b for a, b in zip(ring[0], v0)],
                [a - b for a, b in zip(ring[i], v0)],
                [a - b for a, b in zip(ring[i + 1], v0)],
            ]
            det = (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )
            vol += abs(det)
    return vol / 6


# -- random instance generators ----------------------------------------------


def random_pointed_cone_rays(rng: random.Random, dim: int, count: int):
    """Integer rays with positive coordinate sums (hence a pointed cone)
    spanning the whole space."""
    while True:
        rays = []
        while len(rays) < count:
            r = tuple(rng.randint(-2, 4) for _ in range(dim))
            if sum(r) > 0 and any(r):
                rays.append(primitive(r))
        if frac_rank(rays) == dim:
            return rays


def random_rational_point(rng: random.Random, dim: int, span=6):
    return tuple(Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(dim))


def random_cone_point(rng: random.Random, rays, scale=5):
    """A random nonnegative rational combination of the given rays."""
    dim = len(rays[0])
    out = [Fraction(0)] * dim
    for r in rays:
        c = Fraction(rng.randint(0, scale), rng.randint(1, 3))
        for j in range(dim):
            out[j] += c * r[j]
    return tuple(out)


# -- semigroup membership -----------------------------------------------------


def representable(target, elements):
    """Is `target` a nonnegative integer combination of `elements`?
    All vectors must be componentwise nonnegative."""
    target = tuple(target)
    assert all(x >= 0 for x in target)
    elements = [e for e in elements if all(x >= 0 for x in e) and any(e)]
    memo = {}

    def go(t):
        if all(x == 0 for x in t):
            return True
        if t in memo:
            return memo[t]
        ok = False
        for e in elements:
            if all(a >= b for a, b in zip(t, e)):
                if go(tuple(a - b for a, b in zip(t, e))):
                    ok = True
                    break
        memo[t] = ok
        return ok

    return go(target)
