"""Acceptance criteria, one test per criterion, all at tolerance zero.

Each test prints one PASS line when its assertions hold (run with `-s` or
read the captured output); a failed assertion fails the pytest node, which is
the FAIL signal.
"""

from fractions import Fraction

from helpers import exact_volume
from test_cones import run_fourier_motzkin_suite, run_membership_suite, run_roundtrip_suite
from test_okounkov import run_slab_suite
from test_variety import run_lp_oracle_suite, run_tiling_suite

from okzar.cones import cone_from_rays
from okzar.lattice import ehrhart_polynomial, generators_are_hilbert_basis, lattice_point_count
from okzar.linalg import is_lattice_basis
from okzar.okounkov import (
    body_hilbert_basis,
    cone_of_S,
    divisor_body,
    global_body,
    restrict_body,
)
from okzar.variety import (
    facet_pairing,
    fixed_support_test,
    integral_decomposition_check,
    nef_cone,
    zariski_chambers,
)

D1, D2, D3 = (1, 0, 0), (1, 1, 0), (0, 1, 1)
E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
F1, F2, F3, F4 = (1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 1, 1)  # D-basis, 4-dim


def _ok(n: int, text: str) -> None:
    print(f"[acceptance] criterion {n:2d}: PASS ({text})")


def test_criterion_01_nef_dual_description(v4):
    assert set(nef_cone(v4).ineqs) == {
        (0, 0, 0, 1),
        (0, 0, 1, -1),
        (0, 1, -1, 0),
        (1, -1, 1, 0),
    }
    _ok(1, "4-dim nef cone has exactly the four published inequalities")


def test_criterion_02_facet_pairing(v4):
    pairing = facet_pairing(v4)
    gens = {i: set(f.generators) for i, f in pairing.by_fixed_ray.items()}
    assert gens[4] == {F1, F2, F4}
    assert gens[3] == {F1, F3, F4}
    assert gens[2] == {F2, F3, F4}
    assert set(pairing.non_separating.generators) == {F1, F2, F3}
    assert all(c >= 0 for c in pairing.non_separating.supporting_functional)
    _ok(2, "E4/E3/E2 pair with their facets; {D1,D2,D3} separates nothing")


def test_criterion_03_chamber_enumeration(v3, v4):
    three = {ch.support: set(ch.generators) for ch in zariski_chambers(v3)}
    assert set(three) == {(), (2,), (3,)}
    assert three[()] == {D1, D2, D3}
    assert three[(2,)] == {E2, D2, D3}
    assert three[(3,)] == {E3, D1, D3}
    four = {ch.support: set(ch.generators) for ch in zariski_chambers(v4)}
    e = {i: tuple(1 if j == i - 1 else 0 for j in range(4)) for i in range(1, 5)}
    assert set(four) == {(), (2,), (3,), (4,), (2, 4), (3, 4)}
    assert four[()] == {F1, F2, F3, F4}
    assert four[(2,)] == {e[2], F2, F3, F4}
    assert four[(3,)] == {e[3], F1, F3, F4}
    assert four[(4,)] == {e[4], F1, F2, F4}
    assert four[(2, 4)] == {e[2], e[4], F2, F4}
    assert four[(3, 4)] == {e[3], e[4], F1, F4}
    _ok(3, "3 chambers (3-dim) and the six published chambers (4-dim)")


def test_criterion_04_fixed_supports(v4):
    assert fixed_support_test(v4, [2, 4])
    assert fixed_support_test(v4, [3, 4])
    assert not fixed_support_test(v4, [2, 3])
    _ok(4, "{2,4} and {3,4} are fixed, {2,3} is not")


def test_criterion_05_integrality(v3, v4):
    assert integral_decomposition_check(v3)
    assert integral_decomposition_check(v4)
    assert is_lattice_basis([D3, D2, E2])
    assert is_lattice_basis([D1, D2, D3])
    assert is_lattice_basis([D3, E3, E1])
    _ok(5, "integral decompositions on both fixtures; the three triples are Z-bases")


def test_criterion_06_surface_body(v3):
    b = global_body(v3.level(1))
    assert set(b.cone.rays) == {(1, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1), (0, 1, 1, 0)}
    _ok(6, "surface body rays are (1,0|E2), (0,0|D1), (0,0|D2), (0,1|D1)")


def test_criterion_07_cs1(v3, body3):
    cs1 = body3.provenance[0].c_s1
    assert set(cs1.rays) == {
        (0, 0) + (1, 0),
        (0, 0) + (1, 1),
        (0, 1) + (1, 0),
        (1, 0) + (1, 1),
        (1, 1) + (1, 1),
    }
    assert set(cs1.ineqs) == {
        (-1, 0, 0, 1),
        (1, 0, 0, 0),
        (0, 0, 1, -1),
        (0, 1, 0, 0),
        (1, -1, 1, -1),
    }
    _ok(7, "C(S1) has the five published generators and inequalities")


def test_criterion_08_cone_of_s(v3, body3):
    from okzar.cones import preimage_linear
    from okzar.okounkov import _forget_and_restrict

    cs = cone_of_S(v3)
    assert set(cs.rays) == {
        (0, 0, 0) + D3,
        (0, 0, 0) + D1,
        (0, 0, 0) + D2,
        (0, 0, 1) + D3,
        (0, 0, 1) + D1,
        (0, 1, 0) + D2,
        (0, 1, 1) + D2,
    }
    pre = preimage_linear(body3.provenance[0].c_s1, _forget_and_restrict(v3))
    assert set(pre.ineqs) == {
        (0, -1, 0, 0, 1, -1),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 0, 1, -1, 2),
        (0, 0, 1, 0, 0, 0),
        (0, 1, -1, 1, -1, 2),
    }
    _ok(8, "Cone(S) has the seven published rays; pulled-back inequalities exact")


def test_criterion_09_global_body_and_hilbert(v3, body3):
    expected = {
        (0, 0, 0) + D3,
        (0, 0, 0) + D1,
        (0, 0, 0) + D2,
        (0, 0, 1) + D3,
        (0, 0, 1) + D1,
        (0, 1, 0) + E2,
        (1, 0, 0) + E3,
    }
    assert set(body3.cone.rays) == expected
    assert set(body_hilbert_basis(body3).elements) == expected
    assert generators_are_hilbert_basis(body3.cone)
    _ok(9, "global body has the seven published generators; they are a Hilbert basis")


def test_criterion_10_schubert_restriction(v3, body3):
    sub = cone_from_rays(v3.subcones["flag"], 3)
    rb = restrict_body(body3, sub)
    assert set(rb.cone.rays) == {
        (0, 0, 0) + D2,
        (0, 0, 0) + D3,
        (0, 1, 1) + D2,
        (0, 0, 1) + D3,
        (1, 1, 0) + D3,
        (0, 1, 0) + D2,
    }
    assert generators_are_hilbert_basis(rb.cone)
    _ok(10, "restricted body has the six published generators, a Hilbert basis")


def test_criterion_11_divisor_slice_and_ehrhart(v3, body3):
    poly = divisor_body(body3, (2, 2, 1))  # D1+D2+D3
    assert {tuple(int(x) for x in v) for v in poly.vertices} == {
        (1, 0, 0),
        (1, 2, 0),
        (1, 2, 2),
        (0, 1, 3),
        (0, 1, 0),
        (0, 0, 2),
        (0, 0, 0),
    }
    eh = ehrhart_polynomial(poly)
    assert eh.coefficients == (1, 4, Fraction(11, 2), Fraction(5, 2))
    assert lattice_point_count(poly, 1) == 13
    assert lattice_point_count(poly, 2) == 51
    assert eh.coefficients[-1] == exact_volume(poly)
    _ok(11, "slice vertices, Ehrhart polynomial 5/2t^3+11/2t^2+4t+1, counts 13 and 51")


def test_criterion_12_property_suites(v3, v4, body3, body4):
    cones = run_roundtrip_suite(50, seed=1201)
    fm = run_fourier_motzkin_suite(50, seed=1202)
    checks = run_membership_suite(12, 30, seed=1203)
    lp3 = run_lp_oracle_suite(v3, 200, seed=1204)
    lp4 = run_lp_oracle_suite(v4, 200, seed=1205)
    tiles3 = run_tiling_suite(v3, 1000, seed=1206)
    tiles4 = run_tiling_suite(v4, 1000, seed=1207)
    slabs3 = run_slab_suite(v3, body3, 60, seed=1208)
    slabs4 = run_slab_suite(v4, body4, 60, seed=1209)
    assert cones == 50 and fm == 50
    assert checks >= 100
    assert lp3 == 200 and lp4 == 200
    assert tiles3 == 1000 and tiles4 == 1000
    assert slabs3 >= 60 and slabs4 >= 60
    _ok(
        12,
        f"{cones} round trips, {fm} elimination-oracle cones, {checks} membership "
        f"checks, {lp3}+{lp4} decomposition-oracle classes (with maximality), "
        f"{tiles3}+{tiles4} tiling samples, {slabs3}+{slabs4} slab pairs",
    )
