import math

import numpy as np
import pytest

from bohrqed.bohr import BohrInput, solve_bohr
from bohrqed.ensemble import (
    InfeasibleCoverage,
    NotOnBoundary,
    Roundel,
    assign_boundary_point,
    boundary_fill_distance,
    count_interactions,
    partition_regions,
    scaling_sweep,
    tile,
    total_charge,
    verify_ensemble,
)

UNIT_SQUARE = [(0.0, 1.0), (0.0, 1.0)]
UNIT_CUBE = [(0.0, 1.0)] * 3


class TestTile:
    def test_unit_square_four_circles(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure")
        centers = sorted(r.center for r in ens.roundels)
        assert centers == [(0.25, 0.25), (0.25, 0.75),
                           (0.75, 0.25), (0.75, 0.75)]

    def test_unit_cube_single_sphere(self):
        ens = tile(UNIT_CUBE, 0.5, kind="superposition")
        assert len(ens.roundels) == 1
        assert ens.roundels[0].center == (0.5, 0.5, 0.5)

    def test_non_overlap(self):
        ens = tile(UNIT_SQUARE, 0.125, kind="pure")
        assert verify_ensemble(ens)["max_overlap"] <= 1e-12

    def test_coverage_within_default_c(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure")
        stats = verify_ensemble(ens)
        assert stats["max_coverage_ratio"] <= math.sqrt(2.0)
        # centers alone force c >= 1
        assert stats["max_coverage_ratio"] >= 1.0 - 1e-9

    def test_infeasible_c(self):
        with pytest.raises(InfeasibleCoverage):
            tile(UNIT_SQUARE, 0.25, kind="pure", c=0.5)

    def test_radius_field_quadtree(self):
        field = lambda p: 0.08 + 0.2 * p[0]  # finer roundels near x1 = 0
        ens = tile(UNIT_SQUARE, field, kind="pure")
        radii = sorted({r.R for r in ens.roundels})
        assert len(radii) > 1
        assert max(radii) / min(radii) <= 4.0
        stats = verify_ensemble(ens)
        assert stats["max_overlap"] <= 1e-12
        assert stats["max_coverage_ratio"] <= ens.c

    def test_radius_field_needs_square_domain(self):
        with pytest.raises(ValueError):
            tile([(0, 1), (0, 2)], lambda p: 0.2, kind="pure")

    def test_single_region_by_default(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure")
        assert len(ens.regions) == 1
        assert ens.regions[0].roundel_ids == frozenset(range(4))

    def test_boundary_points_sampled(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure", boundary_samples=8)
        assert len(ens.boundary) == 4 * 8
        for bp in ens.boundary:
            r = ens.roundels[bp.owner]
            d = math.dist(bp.point, r.center)
            assert abs(d - r.R) < 1e-9


class TestAssignment:
    def test_smaller_x1_wins(self):
        a = Roundel(id=0, center=(0.0, 0.0), R=1.0)
        b = Roundel(id=1, center=(2.0, 0.0), R=1.0)
        assert assign_boundary_point((1.0, 0.0), [a, b]) == 0
        assert assign_boundary_point((1.0, 0.0), [b, a]) == 0

    def test_x2_tiebreak(self):
        a = Roundel(id=0, center=(0.0, 0.0), R=1.0)
        b = Roundel(id=1, center=(0.0, 2.0), R=1.0)
        assert assign_boundary_point((0.0, 1.0), [b, a]) == 0

    def test_x3_tiebreak(self):
        a = Roundel(id=5, center=(0.0, 0.0, 0.0), R=1.0)
        b = Roundel(id=6, center=(0.0, 0.0, 2.0), R=1.0)
        assert assign_boundary_point((0.0, 0.0, 1.0), [b, a]) == 5

    def test_single_candidate(self):
        a = Roundel(id=3, center=(0.0, 0.0), R=1.0)
        assert assign_boundary_point((1.0, 0.0), [a]) == 3

    def test_not_on_boundary(self):
        a = Roundel(id=0, center=(0.0, 0.0), R=1.0)
        with pytest.raises(NotOnBoundary):
            assign_boundary_point((0.5, 0.0), [a])

    def test_permutation_invariance(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            k = int(rng.integers(2, 6))
            point = (1.0, 0.0, 0.0)
            cands = []
            for i in range(k):
                # every candidate passes through the shared point
                direction = rng.normal(size=3)
                direction /= np.linalg.norm(direction)
                R = rng.uniform(0.5, 2.0)
                center = np.array(point) - R * direction
                cands.append(Roundel(id=i, center=tuple(center), R=R))
            owner = assign_boundary_point(point, cands)
            for _ in range(5):
                perm = list(rng.permutation(k))
                assert assign_boundary_point(
                    point, [cands[j] for j in perm]) == owner


class TestRegions:
    def test_one_region(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure")
        out = partition_regions(ens, 1)
        assert len(out.regions) == 1

    def test_two_by_two(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure")
        out = partition_regions(ens, 2)
        assert len(out.regions) == 4
        for region in out.regions:
            assert len(region.roundel_ids) == 1

    def test_every_roundel_exactly_once(self):
        ens = tile(UNIT_SQUARE, 0.125, kind="pure")
        out = partition_regions(ens, 2)
        seen = [rid for reg in out.regions for rid in reg.roundel_ids]
        assert sorted(seen) == [r.id for r in ens.roundels]

    def test_boundary_points_follow_owner(self):
        ens = partition_regions(tile(UNIT_SQUARE, 0.25, kind="pure"), 2)
        for bp in ens.boundary:
            assert bp.region == ens.region_of(bp.owner)


class TestCounts:
    def test_pure_count(self):
        assert count_interactions(2.0, 0.5, "pure") == 4

    def test_superposition_count(self):
        assert count_interactions(2.0, 0.5, "superposition") == 8

    def test_fine_count(self):
        assert count_interactions(1.0, 0.05, "pure") == 100

    def test_requires_room(self):
        with pytest.raises(ValueError):
            count_interactions(1.0, 0.5, "pure")


class TestTotalCharge:
    def test_uniform_sum(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure", charge=0.1)
        assert total_charge(ens) == pytest.approx(0.4, rel=1e-12)

    def test_matches_interaction_count(self):
        ens = tile([(0.0, 2.0), (0.0, 2.0)], 0.25, kind="pure", charge=0.3)
        nl = count_interactions(2.0, 0.25, "pure")
        assert total_charge(ens) == pytest.approx(nl * 0.3, rel=1e-12)

    def test_missing_region_contributes_zero(self):
        ens = tile(UNIT_SQUARE, 0.25, kind="pure", charge=0.1)
        assert total_charge(ens, region_id=99) == 0.0


def test_boundary_set_fills_domain():
    # halving the radius halves the worst distance to a boundary
    dists = []
    for k in range(5):
        ens = tile(UNIT_SQUARE, 0.25 / 2**k, kind="pure",
                   boundary_samples=4, verify=False)
        dists.append(boundary_fill_distance(ens))
    assert all(b < a - 1e-9 for a, b in zip(dists, dists[1:]))
    assert dists[-1] < 0.02


class TestScalingSweep:
    def test_expected_exponents(self):
        template = BohrInput(e=1.0, f=-0.01, n=1, m=1.0)
        radii = np.geomspace(1e-3, 1e-1, 9)
        res = scaling_sweep(template, radii, T=10.0, kind="pure")
        for name, expected in res.expected.items():
            assert res.slopes[name].slope == pytest.approx(
                expected, abs=0.02), name
        assert not res.low_confidence

    def test_superposition_interaction_slope(self):
        template = BohrInput(e=1.0, f=-0.01, n=1, m=1.0)
        radii = np.geomspace(1e-3, 1e-1, 7)
        res = scaling_sweep(template, radii, T=10.0, kind="superposition")
        assert res.slopes["nl"].slope == pytest.approx(-3.0, abs=0.02)

    def test_orbit_equations_stay_valid(self):
        template = BohrInput(e=1.0, f=-0.01, n=2, m=0.5)
        res = scaling_sweep(template, np.geomspace(1e-3, 1e-1, 5), T=10.0)
        assert res.closure < 1e-12

    def test_speed_is_radius_independent(self):
        template = BohrInput(e=1.0, f=-0.01, n=1, m=1.0)
        res = scaling_sweep(template, np.geomspace(1e-3, 1e-1, 5), T=10.0)
        speeds = [solve_bohr(BohrInput(e=r.eB, f=-r.f, n=1, m=r.mB)).v
                  for r in res.rows]
        assert np.ptp(speeds) < 1e-12

    def test_two_points_flagged(self):
        template = BohrInput(e=1.0, f=-0.01, n=1, m=1.0)
        res = scaling_sweep(template, [0.01, 0.1], T=10.0)
        assert res.low_confidence

    def test_rows_all_positive(self):
        template = BohrInput(e=-1.0, f=0.01, n=1, m=1.0)
        res = scaling_sweep(template, np.geomspace(1e-2, 1e-1, 5), T=10.0)
        for row in res.rows:
            for name in ("R", "mB", "eB", "eBa", "f", "A", "rho", "nl"):
                assert getattr(row, name) > 0


def test_randomized_tilings_hold_invariants():
    rng = np.random.default_rng(61)
    for _ in range(25):
        kind = rng.choice(["pure", "superposition"])
        dim = 2 if kind == "pure" else 3
        side = float(rng.choice([1.0, 2.0]))
        k = int(rng.integers(1, 4 if dim == 3 else 5))
        R = side / (2.0 * k)
        ens = tile([(0.0, side)] * dim, R, kind=kind, boundary_samples=4)
        stats = verify_ensemble(ens, samples_per_axis=9)
        assert stats["max_overlap"] <= 1e-12
        assert stats["max_coverage_ratio"] <= ens.c
