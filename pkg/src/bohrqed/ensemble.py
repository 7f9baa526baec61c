"""Ensembles of non-overlapping touching roundels and their scaling laws.

A tiling covers a box with circles (pure state, 2-d) or spheres
(superposition, 3-d) packed on a square/cubic grid of interval twice the
radius; a quadtree/octree refinement handles position-dependent radii.
Every point of the box must lie within ``c`` local radii of some roundel
boundary, boundary points shared by several roundels are owned by the
lexicographically smallest center, and as radii shrink the boundary set
fills the box.  Driving the orbit equations while the bare mass and
charge scale inversely with the radius produces the limit power laws
measured by :func:`scaling_sweep`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .algebra import LorentzTransform
from .bohr import BohrInput, solve_bohr
from .fitting import PowerFit, fit_loglog

__all__ = [
    "InfeasibleCoverage",
    "NotOnBoundary",
    "Roundel",
    "Region",
    "BoundaryPoint",
    "Ensemble",
    "tile",
    "assign_boundary_point",
    "partition_regions",
    "count_interactions",
    "total_charge",
    "verify_ensemble",
    "boundary_fill_distance",
    "ScalingSweepRow",
    "ScalingSweepResult",
    "scaling_sweep",
    "SCALING_EXPONENTS",
]

_OVERLAP_TOL = 1e-12
_BOUNDARY_TOL = 1e-9
_MAX_DEPTH = 16


class InfeasibleCoverage(ValueError):
    """The requested coverage slack c cannot be met by the tiling."""


class NotOnBoundary(ValueError):
    """A point handed to the ownership rule is not on every candidate boundary."""


@dataclass(frozen=True)
class Roundel:
    id: int
    center: tuple[float, ...]  # spatial (x1, x2) or (x1, x2, x3)
    R: float
    f: float = 0.0
    frame: LorentzTransform = field(default_factory=LorentzTransform.identity)

    def __post_init__(self):
        if self.R <= 0:
            raise ValueError("roundel radius must be positive")


@dataclass(frozen=True)
class Region:
    id: int
    roundel_ids: frozenset[int]

    def __post_init__(self):
        if not self.roundel_ids:
            raise ValueError("a region must contain at least one roundel")


@dataclass(frozen=True)
class BoundaryPoint:
    point: tuple[float, ...]
    owner: int
    region: int


@dataclass(frozen=True)
class Ensemble:
    roundels: tuple[Roundel, ...]
    regions: tuple[Region, ...]
    kind: str  # "pure" | "superposition"
    c: float
    boundary: tuple[BoundaryPoint, ...]
    domain: tuple[tuple[float, float], ...]

    @property
    def dim(self) -> int:
        return 2 if self.kind == "pure" else 3

    def region_of(self, roundel_id: int) -> int:
        for region in self.regions:
            if roundel_id in region.roundel_ids:
                return region.id
        raise KeyError(f"roundel {roundel_id} not in any region")


def _check_kind(kind: str) -> int:
    if kind == "pure":
        return 2
    if kind == "superposition":
        return 3
    raise ValueError(f"unknown ensemble kind {kind!r}")


def _circle_points(center, R, count):
    angles = 2.0 * math.pi * np.arange(count) / count
    pts = np.tile(np.asarray(center, dtype=float), (count, 1))
    pts[:, 0] += R * np.cos(angles)
    pts[:, 1] += R * np.sin(angles)
    return pts


def _sphere_points(center, R, count, seed):
    golden = math.pi * (3.0 - math.sqrt(5.0))
    offset = (seed * golden) % (2.0 * math.pi)
    k = np.arange(count)
    zu = 1.0 - 2.0 * (k + 0.5) / count
    ring = np.sqrt(np.maximum(0.0, 1.0 - zu * zu))
    lon = offset + golden * k
    pts = np.tile(np.asarray(center, dtype=float), (count, 1))
    pts[:, 0] += R * ring * np.cos(lon)
    pts[:, 1] += R * ring * np.sin(lon)
    pts[:, 2] += R * zu
    return pts


def _sample_boundary(roundels: Sequence[Roundel], kind: str,
                     samples: int, seed: int) -> tuple[BoundaryPoint, ...]:
    pts = np.concatenate([
        _circle_points(r.center, r.R, samples) if kind == "pure"
        else _sphere_points(r.center, r.R, samples, seed)
        for r in roundels])
    owners = _owners_of(pts, roundels)
    return tuple(BoundaryPoint(point=tuple(p), owner=int(o), region=0)
                 for p, o in zip(pts, owners))


def _lex_ranks(roundels: Sequence[Roundel]) -> np.ndarray:
    """Rank of each roundel under lexicographic center order."""
    centers = np.array([r.center for r in roundels])
    order = np.lexsort(centers.T[::-1])
    ranks = np.empty(len(roundels), dtype=int)
    ranks[order] = np.arange(len(roundels))
    return ranks


def _owners_of(points: np.ndarray, roundels: Sequence[Roundel],
               chunk: int = 2048) -> np.ndarray:
    """Owning roundel id per point; ties go to the smallest center."""
    centers = np.array([r.center for r in roundels])
    radii = np.array([r.R for r in roundels])
    ids = np.array([r.id for r in roundels])
    ranks = _lex_ranks(roundels)
    owners = np.empty(len(points), dtype=int)
    for start in range(0, len(points), chunk):
        block = points[start:start + chunk]
        d = np.sqrt(np.sum((block[:, None, :] - centers[None, :, :]) ** 2,
                           axis=-1))
        on = np.abs(d - radii[None, :]) <= _BOUNDARY_TOL
        if not on.any(axis=1).all():
            bad = block[~on.any(axis=1)][0]
            raise NotOnBoundary(f"point {tuple(bad)} lies on no roundel boundary")
        ranked = np.where(on, ranks[None, :], np.iinfo(int).max)
        owners[start:start + chunk] = ids[np.argmin(ranked, axis=1)]
    return owners


def _dist(a, b) -> float:
    return math.dist(a, b)


def tile(domain: Sequence[tuple[float, float]],
         R: float | Callable[[np.ndarray], float],
         kind: str = "pure",
         c: float | None = None,
         charge: float = 0.0,
         boundary_samples: int = 8,
         seed: int = 0,
         max_ratio: float = 4.0,
         verify: bool = True) -> Ensemble:
    """Tile a box with touching roundels on a square/cubic packing.

    ``R`` may be a constant radius or a callable radius field evaluated at
    cell centers; the callable case subdivides quadtree/octree style until
    each leaf's inscribed roundel respects the requested local radius,
    keeping the global radius ratio at most ``max_ratio``.  Raises
    :class:`InfeasibleCoverage` when the result leaves some sampled point
    farther than ``c`` local radii from every boundary.
    """
    dim = _check_kind(kind)
    domain = tuple((float(lo), float(hi)) for lo, hi in domain)
    if len(domain) != dim:
        raise ValueError(f"{kind} tiling needs a {dim}-d domain")
    if any(hi <= lo for lo, hi in domain):
        raise ValueError("domain must have positive extent on every axis")
    if c is None:
        c = math.sqrt(dim)

    if callable(R):
        cells = _refine_cells(domain, R, dim)
    else:
        if R <= 0:
            raise ValueError("radius must be positive")
        cells = _grid_cells(domain, float(R), dim)
    radii = np.array([h for _, h in cells])
    while radii.max() / radii.min() > max_ratio:
        cells = [child for center, h in cells for child in
                 (_split_cell(center, h, dim)
                  if h > max_ratio * radii.min() else [(center, h)])]
        radii = np.array([h for _, h in cells])

    roundels = tuple(Roundel(id=i, center=tuple(ctr), R=h, f=charge)
                     for i, (ctr, h) in enumerate(cells))
    region = Region(id=0, roundel_ids=frozenset(r.id for r in roundels))
    boundary = _sample_boundary(roundels, kind, boundary_samples, seed)
    ens = Ensemble(roundels=roundels, regions=(region,), kind=kind, c=c,
                   boundary=boundary, domain=domain)
    if verify:
        report = verify_ensemble(ens)
        if report["max_overlap"] > _OVERLAP_TOL:
            raise InfeasibleCoverage(
                f"tiling overlaps by {report['max_overlap']:.3e}")
        if report["max_coverage_ratio"] > c:
            raise InfeasibleCoverage(
                f"coverage needs c >= {report['max_coverage_ratio']:.6f}, "
                f"got c = {c}")
    return ens


def _grid_cells(domain, R, dim):
    counts = []
    for lo, hi in domain:
        n = int(math.floor((hi - lo) / (2.0 * R) + 1e-9))
        counts.append(max(n, 1))
    axes = [lo + R + 2.0 * R * np.arange(n) for (lo, _), n in zip(domain, counts)]
    grids = np.meshgrid(*axes, indexing="ij")
    centers = np.stack([g.ravel() for g in grids], axis=-1)
    return [(tuple(ctr), R) for ctr in centers]


def _refine_cells(domain, radius_field, dim):
    sides = [hi - lo for lo, hi in domain]
    if max(sides) - min(sides) > 1e-9 * max(sides):
        raise ValueError("radius-field tilings require a square/cubic domain")
    root_center = np.array([(lo + hi) / 2.0 for lo, hi in domain])
    root_h = sides[0] / 2.0
    leaves: list[tuple[tuple, float]] = []
    stack = [(root_center, root_h, 0)]
    while stack:
        center, h, depth = stack.pop()
        want = float(radius_field(np.asarray(center)))
        if want <= 0:
            raise ValueError("radius field must be positive everywhere")
        if h <= want + 1e-12:
            leaves.append((tuple(center), h))
            continue
        if depth >= _MAX_DEPTH:
            raise InfeasibleCoverage(
                "radius field demands subdivision beyond the depth limit")
        stack.extend((np.asarray(ctr), hh, depth + 1)
                     for ctr, hh in _split_cell(center, h, dim))
    return leaves


def _split_cell(center, h, dim):
    center = np.asarray(center, dtype=float)
    half = h / 2.0
    out = []
    for signs in np.ndindex(*(2,) * dim):
        offset = np.array([half if s else -half for s in signs])
        out.append((tuple(center + offset), half))
    return out


def verify_ensemble(ensemble: Ensemble, samples_per_axis: int = 17) -> dict:
    """Measure the two tiling invariants.

    Returns ``max_overlap`` (positive means interiors intersect) and
    ``max_coverage_ratio`` (the least c that would cover the sampled box).
    """
    centers = np.array([r.center for r in ensemble.roundels])
    radii = np.array([r.R for r in ensemble.roundels])
    n = len(centers)
    max_overlap = -math.inf
    chunk = 1024
    for start in range(0, n, chunk):
        cb, rb = centers[start:start + chunk], radii[start:start + chunk]
        dist = np.sqrt(np.sum((cb[:, None, :] - centers[None, :, :]) ** 2,
                              axis=-1))
        gap = (rb[:, None] + radii[None, :]) - dist
        rows = np.arange(start, min(start + chunk, n))
        gap[rows - start, rows] = -np.inf
        max_overlap = max(max_overlap, float(gap.max()))
    if n == 1:
        max_overlap = 0.0

    axes = [np.linspace(lo, hi, samples_per_axis) for lo, hi in ensemble.domain]
    grids = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=-1)
    max_cov = 0.0
    for start in range(0, len(pts), chunk):
        block = pts[start:start + chunk]
        d = np.sqrt(np.sum((block[:, None, :] - centers[None, :, :]) ** 2,
                           axis=-1))
        ratio = np.abs(d - radii[None, :]) / radii[None, :]
        max_cov = max(max_cov, float(ratio.min(axis=1).max()))
    return {"max_overlap": max_overlap, "max_coverage_ratio": max_cov}


def boundary_fill_distance(ensemble: Ensemble, samples_per_axis: int = 33) -> float:
    """Greatest distance from a sampled box point to the union of boundaries."""
    centers = np.array([r.center for r in ensemble.roundels])
    radii = np.array([r.R for r in ensemble.roundels])
    axes = [np.linspace(lo, hi, samples_per_axis) for lo, hi in ensemble.domain]
    grids = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=-1)
    worst = 0.0
    for start in range(0, len(pts), 1024):
        block = pts[start:start + 1024]
        d = np.sqrt(np.sum((block[:, None, :] - centers[None, :, :]) ** 2,
                           axis=-1))
        worst = max(worst, float(np.abs(d - radii[None, :]).min(axis=1).max()))
    return worst


def assign_boundary_point(point, candidates: Sequence[Roundel]) -> int:
    """Owner of a shared boundary point: lexicographically smallest center.

    The point must lie on the boundary of every candidate to 1e-9;
    ordering of the candidate list never affects the result.
    """
    if not candidates:
        raise ValueError("need at least one candidate roundel")
    point = tuple(float(p) for p in point)
    for r in candidates:
        if abs(_dist(point, r.center) - r.R) > _BOUNDARY_TOL:
            raise NotOnBoundary(
                f"point {point} is off the boundary of roundel {r.id}")
    return min(candidates, key=lambda r: r.center).id


def partition_regions(ensemble: Ensemble, regions_per_axis: int) -> Ensemble:
    """Split the ensemble into an axis-aligned grid of regions.

    Each roundel joins the region containing its center; boundary points
    follow their owning roundel's region.
    """
    if regions_per_axis < 1:
        raise ValueError("regions_per_axis must be >= 1")
    los = np.array([lo for lo, _ in ensemble.domain])
    his = np.array([hi for _, hi in ensemble.domain])
    span = his - los

    def region_index(point) -> int:
        frac = (np.asarray(point) - los) / span
        cell = np.clip((frac * regions_per_axis).astype(int), 0,
                       regions_per_axis - 1)
        flat = 0
        for c in cell:
            flat = flat * regions_per_axis + int(c)
        return flat

    assignment = {r.id: region_index(r.center) for r in ensemble.roundels}
    grouped: dict[int, set[int]] = {}
    for rid, region in assignment.items():
        grouped.setdefault(region, set()).add(rid)
    regions = tuple(Region(id=region, roundel_ids=frozenset(ids))
                    for region, ids in sorted(grouped.items()))
    boundary = tuple(replace(bp, region=assignment[bp.owner])
                     for bp in ensemble.boundary)
    return replace(ensemble, regions=regions, boundary=boundary)


def count_interactions(T: float, R: float, kind: str) -> int:
    """Local interactions inside a box of side T tiled at radius R."""
    dim = _check_kind(kind)
    if T <= 2.0 * R:
        raise ValueError("box side T must exceed one roundel diameter")
    return int(math.floor((T / (2.0 * R)) ** dim + 1e-9))


def total_charge(ensemble: Ensemble, region_id: int | None = None) -> float:
    """Sum of roundel charges, optionally restricted to one region."""
    if region_id is None:
        return float(sum(r.f for r in ensemble.roundels))
    for region in ensemble.regions:
        if region.id == region_id:
            ids = region.roundel_ids
            return float(sum(r.f for r in ensemble.roundels if r.id in ids))
    return 0.0


# ---------------------------------------------------------------------------
# Limit scaling of the bare variables
# ---------------------------------------------------------------------------

#: Expected log-log slopes against the roundel radius.
SCALING_EXPONENTS = {
    "mB": -1.0, "eB": -1.0, "eBa": -1.0, "f": 1.0,
    "A": 0.0, "rho": -2.0,
}


@dataclass(frozen=True)
class ScalingSweepRow:
    """Magnitudes of one radius step of the limit sweep."""

    R: float
    mB: float
    eB: float
    eBa: float
    f: float
    A: float
    rho: float
    nl: int


@dataclass(frozen=True)
class ScalingSweepResult:
    rows: tuple[ScalingSweepRow, ...]
    slopes: dict[str, PowerFit]
    expected: dict[str, float]
    closure: float  # worst relative deviation of the re-solved orbit radius
    low_confidence: bool


def scaling_sweep(template: BohrInput, radii: Sequence[float], T: float,
                  kind: str = "pure", reference_R: float = 1.0) -> ScalingSweepResult:
    """Shrink the roundels while the orbit equations stay exactly valid.

    The bare mass and charge are pinned to ``m*reference_R/R`` and
    ``e*reference_R/R``; the central charge then follows from the orbit
    condition ``|eB*f| = n² / sqrt((mB*R)² + n²)``, which keeps every row
    sub-critical and the orbital speed radius-independent.  Each row is
    re-solved through :func:`bohrqed.bohr.solve_bohr` and the recovered
    radius compared with the imposed one.
    """
    dim = _check_kind(kind)
    radii = sorted(float(R) for R in radii)
    if len(radii) < 2:
        raise ValueError("need at least two radii")
    if any(R <= 0 for R in radii):
        raise ValueError("radii must be positive")
    n = template.n
    sign_e = math.copysign(1.0, template.e)
    rows = []
    closure = 0.0
    for R in radii:
        mB = template.m * reference_R / R
        eB = abs(template.e) * reference_R / R
        u = n * n / math.sqrt((mB * R) ** 2 + n * n)  # |eB * f|
        f = u / eB
        A = f / R
        rho = 3.0 * A / (4.0 * math.pi * R * R)
        nl = count_interactions(T, R, kind)
        eBa = nl * f
        state = solve_bohr(
            BohrInput(e=sign_e * eB, f=-sign_e * f, n=n, m=mB))
        closure = max(closure, abs(state.R - R) / R)
        rows.append(ScalingSweepRow(R=R, mB=mB, eB=eB, eBa=eBa, f=f,
                                    A=A, rho=rho, nl=nl))

    expected = dict(SCALING_EXPONENTS)
    expected["nl"] = -float(dim)
    slopes = {}
    rv = np.array([r.R for r in rows])
    for name in expected:
        vals = np.array([float(getattr(r, name)) for r in rows])
        slopes[name] = fit_loglog(rv, vals)
    low = any(fit.low_confidence for fit in slopes.values())
    return ScalingSweepResult(rows=tuple(rows), slopes=slopes,
                              expected=expected, closure=closure,
                              low_confidence=low)
