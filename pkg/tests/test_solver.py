import cmath
import math
from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import harmonic
from harmonic_zeros import (
    AnalyticPoly,
    HarmonicPoly,
    HarmonicTrinomial,
    Orientation,
    RootRecord,
    SolverConfig,
    alpha_ring,
    evaluate_harmonic,
    find_all_zeros,
    harmonic_disk,
    newton_refine,
    region_contains,
    signed_count_consistency,
    winding_number,
)
from harmonic_zeros.errors import CapacityExceeded, CountMismatch, SingularZeroPresent, ZeroOnContour
from harmonic_zeros.solver import FailureReason, NewtonFailure, orientation_counts, search_radius, seed_grid
from oracles import bisect, grid_misses, poly, uniform_winding

CFG = SolverConfig()
ALPHA1 = 0.9098248906379158
ALPHA2 = 1.1097834945558063

Z5_MINUS_1 = harmonic([1, 0, 0, 0, 0, -1], [0])
CONJ_Z_MINUS_HALF = harmonic([-0.5], [1, 0], general=True)


def random_harmonic(rng, max_degree=8):
    n = int(rng.integers(1, max_degree + 1))
    m = int(rng.integers(0, n))
    phase = lambda size: np.exp(2j * np.pi * rng.uniform(size=size))
    h = rng.uniform(0, 3, n) * phase(n)
    lead = rng.uniform(1, 3) * phase(1)[0]
    g = rng.uniform(0, 3, m + 1) * phase(m + 1)
    return HarmonicPoly(AnalyticPoly(tuple(h) + (lead,)), AnalyticPoly(tuple(g)))


@lru_cache(maxsize=None)
def random_instances(count=24, seed=2024, max_degree=6):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        p = random_harmonic(rng, max_degree)
        out.append((p, find_all_zeros(p, CFG)))
    return tuple(out)


def pc(n, k, c):
    return HarmonicTrinomial(n, k, c).to_harmonic()


# -- Newton ------------------------------------------------------------------


def test_newton_root_of_unity():
    r = newton_refine(Z5_MINUS_1, 1.1)
    assert r.z == pytest.approx(1.0, abs=1e-12)
    assert r.orientation is Orientation.SENSE_PRESERVING


def test_newton_anti_analytic():
    r = newton_refine(CONJ_Z_MINUS_HALF, 0.4)
    assert r.z == pytest.approx(0.5, abs=1e-12)
    assert r.orientation is Orientation.SENSE_REVERSING
    assert r.jacobian_det == pytest.approx(-1.0)


def test_newton_real_zero_matches_bisection_oracle():
    r = newton_refine(pc(5, 3, 0.5), 0.95)
    oracle = bisect(poly([1, 0, 0.5, 0, 0, -1]), 0, 1)
    assert abs(r.z - oracle) < 1e-8
    assert r.residual < 1e-10


def test_newton_failure_reports_reason():
    with pytest.raises(NewtonFailure) as info:
        newton_refine(Z5_MINUS_1, 0j)
    assert info.value.reason is FailureReason.SINGULAR_JACOBIAN


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(grid_density=0)
    with pytest.raises(ValueError):
        SolverConfig(search_radius_factor=0.5)


def test_seed_grid_covers_square():
    g = seed_grid(2.0, 10)
    assert g.real.min() == -2.0 and g.imag.max() == 2.0
    assert g.size == 41 * 41


# -- find_all_zeros ----------------------------------------------------------


def test_roots_of_unity():
    roots = find_all_zeros(Z5_MINUS_1)
    assert len(roots) == 5
    found = sorted(cmath.phase(r.z) % (2 * math.pi) for r in roots)
    np.testing.assert_allclose(found, [2 * math.pi * j / 5 for j in range(5)], atol=1e-10)
    assert all(r.orientation is Orientation.SENSE_PRESERVING for r in roots)


def test_trinomial_half_has_five_zeros_in_alpha_ring(pc_half):
    roots = find_all_zeros(pc_half.to_harmonic())
    assert len(roots) == 5
    a = alpha_ring(pc_half).intermediate
    assert a["alpha1"] == pytest.approx(ALPHA1, abs=1e-10)
    for r in roots:
        assert ALPHA1 - 1e-6 <= abs(r.z) <= ALPHA2 + 1e-6


def test_trinomial_two_count_envelope(pc_two):
    roots = find_all_zeros(pc_two.to_harmonic())
    sp, sr, sing = orientation_counts(roots)
    assert 5 <= len(roots) <= 11
    assert sing == 0
    assert sp - sr == 5
    assert sr == (len(roots) - 5) // 2 and (len(roots) - 5) % 2 == 0


def test_output_sorted_and_deterministic(pc_two):
    p = pc_two.to_harmonic()
    a, b = find_all_zeros(p), find_all_zeros(p)
    assert a == b
    keys = [(r.z.real, r.z.imag) for r in a]
    assert keys == sorted(keys)


def test_capacity_guard():
    # a vanishing dedup radius keeps every converged seed as its own zero
    with pytest.raises(CapacityExceeded):
        find_all_zeros(pc(5, 3, 0.5), SolverConfig(dedup_radius=1e-300))


def test_fold_zero_is_not_silently_counted():
    # z^2 + 2 conj(z) - 3 vanishes at 1 where |h'| = |g'|
    with pytest.raises((CapacityExceeded, SingularZeroPresent)):
        signed_count_consistency(harmonic([1, 0, -3], [2, 0]))


def test_random_instances_residual_bound():
    for p, roots in random_instances():
        for r in roots:
            assert r.residual <= CFG.newton_tol * p.scale()
            assert abs(evaluate_harmonic(p, r.z)) <= CFG.newton_tol * p.scale() * (1 + 1e-9)


def test_random_instances_distinct():
    for _, roots in random_instances():
        for i, a in enumerate(roots):
            for b in roots[i + 1 :]:
                assert abs(a.z - b.z) > CFG.dedup_radius * max(1.0, min(abs(a.z), abs(b.z)))


def test_random_instances_capacity_and_containment():
    for p, roots in random_instances():
        assert 1 <= len(roots) <= p.n**2
        disk = harmonic_disk(p).region
        assert all(region_contains(disk, r.z, 1e-6) for r in roots)


def test_random_instances_complete_against_grid_oracle():
    for p, roots in random_instances()[:8]:
        _, missed = grid_misses(p.h.coeffs, p.g.coeffs, [r.z for r in roots], search_radius(p, CFG), p.scale())
        assert missed == []


@pytest.mark.parametrize("n, k", [(3, 1), (3, 2), (4, 3), (5, 2), (7, 3)])
@pytest.mark.parametrize("c", [0.3, 0.9, 1.0, 2.5])
def test_trinomial_capacity(n, k, c):
    assert n <= len(find_all_zeros(pc(n, k, c))) <= n + 2 * k


# -- winding -----------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_winding_of_monomial(n):
    assert winding_number(harmonic([1] + [0] * n, [0]), 1.0).winding == n


def test_winding_of_conjugate():
    assert winding_number(harmonic([0], [1, 0], general=True), 1.0).winding == -1


def test_winding_of_trinomial_matches_uniform_sampling(pc_half):
    p = pc_half.to_harmonic()
    assert round(uniform_winding(p, 2.0)) == 5
    assert winding_number(p, 2.0).winding == 5


def test_winding_refines_fast_turning_contours():
    p = harmonic([1] + [0] * 40, [0], general=True)
    w = winding_number(p, 1.0)
    assert w.winding == 40
    assert w.samples_used > 256


def test_winding_rejects_zero_on_contour():
    with pytest.raises(ZeroOnContour):
        winding_number(Z5_MINUS_1, 1.0)
    with pytest.raises(ValueError):
        winding_number(Z5_MINUS_1, 0.0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_dominance_at_infinity(seed):
    p = random_harmonic(np.random.default_rng(seed))
    R = harmonic_disk(p).intermediate["R"]
    assert winding_number(p, 2 * R).winding == p.n


# -- signed count ------------------------------------------------------------


@pytest.mark.parametrize("p, expected", [(Z5_MINUS_1, (5, 0)), (pc(5, 3, 0.5), (5, 0))])
def test_signed_count_examples(p, expected):
    rep = signed_count_consistency(p)
    assert (rep.sense_preserving, rep.sense_reversing) == expected
    assert rep.winding.winding == rep.signed_count == 5


def test_signed_count_with_reversing_zeros(pc_two):
    rep = signed_count_consistency(pc_two.to_harmonic())
    assert rep.signed_count == rep.winding.winding == 5
    assert rep.sense_reversing > 0


def test_anti_analytic_signed_count():
    rep = signed_count_consistency(CONJ_Z_MINUS_HALF)
    assert (rep.sense_preserving, rep.sense_reversing, rep.winding.winding) == (0, 1, -1)


def test_signed_count_flags_singular_and_mismatch():
    singular = [RootRecord(1 + 0j, 0.0, Orientation.SINGULAR, 0.0)]
    with pytest.raises(SingularZeroPresent):
        signed_count_consistency(Z5_MINUS_1, roots=singular)
    one = find_all_zeros(Z5_MINUS_1)[:1]
    with pytest.raises(CountMismatch):
        signed_count_consistency(Z5_MINUS_1, roots=one)
    rep = signed_count_consistency(Z5_MINUS_1, roots=one, strict=False)
    assert rep.signed_count == 1 and rep.winding.winding == 5


def test_random_instances_signed_count():
    for p, roots in random_instances():
        rep = signed_count_consistency(p, roots=roots)
        assert rep.winding.winding == p.n
