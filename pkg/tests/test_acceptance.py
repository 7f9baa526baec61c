"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
appear; tolerances are pinned here and nowhere else.
"""

import math
import time

import numpy as np
import pytest

from bohrqed.algebra import (
    I1,
    I2,
    I3,
    ONE,
    Biquaternion,
    LorentzTransform,
)
from bohrqed.bohr import (
    BohrInput,
    cubic_residual,
    local_solve_rho,
    mass_shell_residual,
    roundtrip_consistency,
    solve_bohr,
)
from bohrqed.cli import main as cli_main
from bohrqed.ensemble import (
    Roundel,
    assign_boundary_point,
    boundary_fill_distance,
    scaling_sweep,
    tile,
    verify_ensemble,
)
from bohrqed.fitting import fit_loglog
from bohrqed.lattice import (
    HypercubicLattice,
    LatticeField,
    bohr_phi_field,
    bohr_potential_field,
    build_lattices,
    charge_conjugate_field,
    dirac_residual,
    equivalence_check,
    limit_sweep,
    photon_residual,
    wave_apply,
)

ALPHA = 1.0 / 137.035999


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[acceptance] {criterion}: {status}{suffix}")


def random_bq(rng) -> Biquaternion:
    return Biquaternion(*(rng.normal(size=4) + 1j * rng.normal(size=4)))


def random_subcritical(rng) -> BohrInput:
    n = int(rng.integers(1, 9))
    coupling = rng.uniform(0.01, 0.995) * n
    e = rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0])
    return BohrInput(e=e, f=-coupling / e, n=n, m=rng.uniform(0.1, 10.0))


def test_criterion_1_algebra_suite():
    t0 = time.perf_counter()
    units = [ONE, I1, I2, I3]
    table = [[ONE, I1, I2, I3],
             [I1, -ONE, I3, -I2],
             [I2, -I3, -ONE, I1],
             [I3, I2, -I1, -ONE]]
    table_ok = all((units[i] * units[j]) == table[i][j]
                   for i in range(4) for j in range(4))

    rng = np.random.default_rng(2024)
    worst_conj = worst_norm = worst_comp = 0.0
    for _ in range(1000):
        a, b = random_bq(rng), random_bq(rng)
        scale = max(a.frobenius() * b.frobenius(), 1.0)
        worst_conj = max(
            worst_conj,
            ((a * b).quat_conj() - b.quat_conj() * a.quat_conj()).frobenius()
            / scale,
            ((a * b).dagger() - b.dagger() * a.dagger()).frobenius() / scale)
        axis, baxis = rng.normal(size=3), rng.normal(size=3)
        Z1 = LorentzTransform.from_parts(axis, rng.uniform(-np.pi, np.pi),
                                         baxis, rng.uniform(-3, 3))
        Z2 = LorentzTransform.rotation(rng.normal(size=3),
                                       rng.uniform(-np.pi, np.pi))
        q = random_bq(rng)
        worst_norm = max(worst_norm,
                         abs(Z1.apply(q).norm_form() - q.norm_form())
                         / max(abs(q.norm_form()), 1.0))
        comp = (Z2.compose(Z1).apply(q) - Z2.apply(Z1.apply(q))).frobenius()
        worst_comp = max(worst_comp, comp / max(q.frobenius(), 1.0))
    elapsed = time.perf_counter() - t0
    ok = (table_ok and worst_conj < 1e-10 and worst_norm < 1e-10
          and worst_comp < 1e-10 and elapsed < 1.0)
    report("C1 algebra-suite", ok,
           f"conj={worst_conj:.2e} norm={worst_norm:.2e} "
           f"comp={worst_comp:.2e} t={elapsed:.2f}s")
    assert table_ok
    assert worst_conj < 1e-10
    assert worst_norm < 1e-10
    assert worst_comp < 1e-10
    assert elapsed < 1.0


@pytest.fixture(scope="module")
def bohr_sweep():
    rng = np.random.default_rng(4242)
    return [solve_bohr(random_subcritical(rng)) for _ in range(1000)]


def test_criterion_2_quantization(bohr_sweep):
    t0 = time.perf_counter()
    worst = max(abs(s.mu * s.R - s.input.n) / s.input.n for s in bohr_sweep)
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-12 and elapsed < 1.0
    report("C2 bohr-quantization", ok, f"worst={worst:.2e} t={elapsed:.2f}s")
    assert worst < 1e-12
    assert elapsed < 1.0


def test_criterion_3_mass_shell(bohr_sweep):
    worst = max(mass_shell_residual(s) for s in bohr_sweep)
    ok = worst < 1e-12
    report("C3 mass-shell", ok, f"worst={worst:.2e}")
    assert worst < 1e-12


def test_criterion_4_energy_oracle(bohr_sweep):
    worst = 0.0
    for s in bohr_sweep:
        closed = s.input.m * math.sqrt(
            1.0 - (s.input.e * s.input.f / s.input.n) ** 2)
        worst = max(worst, abs(s.E - closed) / s.input.m)
        assert s.E < s.input.m
    # independent nonrelativistic oracle, computed before the main build:
    # E - m = -m (e f)^2 / (2 n^2) for weak coupling
    rng = np.random.default_rng(777)
    worst_nr = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 5))
        ef = rng.uniform(1e-5, 1e-3)
        m = rng.uniform(0.5, 2.0)
        st = solve_bohr(BohrInput(e=1.0, f=-ef, n=n, m=m))
        textbook = -m * ef * ef / (2.0 * n * n)
        worst_nr = max(worst_nr, abs((st.E - m) - textbook) / abs(textbook))
    ok = worst < 1e-12 and worst_nr < 1e-5
    report("C4 energy-oracle", ok,
           f"identity={worst:.2e} nonrel={worst_nr:.2e}")
    assert worst < 1e-12
    assert worst_nr < 1e-5


def test_criterion_5_cubic_closure():
    rng = np.random.default_rng(555)
    worst_resid = 0.0
    sign_ok = True
    monotone_ok = True
    for branch in (+1.0, -1.0):
        grid = branch * np.geomspace(1e-3, 5.0, 1000)
        grid = np.sort(grid)
        prev = None
        for A in grid:
            e, m, n = 1.3, 0.7, 1
            res = local_solve_rho(float(A), e, m, n)
            worst_resid = max(worst_resid, cubic_residual(res, e, m))
            sign_ok &= res.rho * res.A > 0 and res.f * res.A < 0
            if prev is not None and res.rho <= prev:
                monotone_ok = False
            prev = res.rho
    worst_round = 0.0
    for _ in range(200):
        worst_round = max(worst_round,
                          roundtrip_consistency(random_subcritical(rng)))
    near = roundtrip_consistency(BohrInput(e=1.0, f=-0.99, n=1, m=1.0))
    ok = (worst_resid < 1e-10 and worst_round < 1e-9 and near < 1e-7
          and sign_ok and monotone_ok)
    report("C5 cubic-closure", ok,
           f"resid={worst_resid:.2e} roundtrip={worst_round:.2e} "
           f"near-critical={near:.2e}")
    assert worst_resid < 1e-10
    assert worst_round < 1e-9
    assert near < 1e-7
    assert sign_ok and monotone_ok


def test_criterion_6_ensemble_geometry():
    rng = np.random.default_rng(66)
    # 100 randomized tilings: uniform and radius-field, both kinds
    for i in range(100):
        kind = "pure" if i % 2 == 0 else "superposition"
        dim = 2 if kind == "pure" else 3
        side = float(rng.choice([1.0, 2.0]))
        if i % 5 == 0:
            base = side / float(rng.integers(4, 8))
            amp = rng.uniform(0.0, 0.4)
            field = (lambda b, a: lambda p: b * (1.0 + a * math.sin(3.0 * p[0]))
                     )(base, amp)
            ens = tile([(0.0, side)] * dim, field, kind=kind,
                       boundary_samples=4, verify=False)
        else:
            k = int(rng.integers(1, 4 if dim == 3 else 6))
            ens = tile([(0.0, side)] * dim, side / (2.0 * k), kind=kind,
                       boundary_samples=4, verify=False)
        stats = verify_ensemble(ens, samples_per_axis=7)
        assert stats["max_overlap"] <= 1e-12, f"tiling {i}"
        assert stats["max_coverage_ratio"] <= ens.c + 1e-12, f"tiling {i}"

    # ownership never depends on candidate order
    determinism_ok = True
    for _ in range(200):
        k = int(rng.integers(2, 6))
        point = (0.5, -0.25, 1.0)
        cands = []
        for j in range(k):
            d = rng.normal(size=3)
            d /= np.linalg.norm(d)
            R = rng.uniform(0.5, 2.0)
            cands.append(Roundel(id=j, center=tuple(np.array(point) - R * d),
                                 R=R))
        owner = assign_boundary_point(point, cands)
        for _ in range(4):
            perm = list(rng.permutation(k))
            if assign_boundary_point(point, [cands[j] for j in perm]) != owner:
                determinism_ok = False

    # boundary set approaches every point of the box as radii halve
    dists = []
    for kk in range(5):
        ens = tile([(0.0, 1.0)] * 2, 0.25 / 2**kk, kind="pure",
                   boundary_samples=4, verify=False)
        dists.append(boundary_fill_distance(ens))
    monotone = all(b < a - 1e-9 for a, b in zip(dists, dists[1:]))
    ok = determinism_ok and monotone
    report("C6 ensemble-geometry", ok,
           f"fill-dists={['%.3f' % d for d in dists]}")
    assert determinism_ok
    assert monotone


def test_criterion_7_roundel_scaling():
    t0 = time.perf_counter()
    template = BohrInput(e=1.0, f=-0.01, n=1, m=1.0)
    res = scaling_sweep(template, np.geomspace(1e-3, 1e-1, 9), T=10.0,
                        kind="pure")
    expected = {"mB": -1.0, "eB": -1.0, "f": 1.0, "A": 0.0, "rho": -2.0}
    devs = {name: abs(res.slopes[name].slope - want)
            for name, want in expected.items()}
    elapsed = time.perf_counter() - t0
    ok = all(d < 0.02 for d in devs.values()) and elapsed < 10.0
    report("C7 roundel-scaling", ok,
           " ".join(f"{k}={res.slopes[k].slope:+.3f}" for k in expected)
           + f" t={elapsed:.2f}s")
    for name, d in devs.items():
        assert d < 0.02, name
    assert elapsed < 10.0


def test_criterion_8_lattice_solution_check():
    t0 = time.perf_counter()
    state = solve_bohr(BohrInput(e=1.0, f=-ALPHA, n=1, m=1.0))
    spacings = [0.2, 0.1, 0.05, 0.025]

    def orders(mode):
        residuals = []
        for h in spacings:
            lat = HypercubicLattice(spacing=h, extent=(32, 32, 3, 3))
            phi = bohr_phi_field(lat, state)
            pot = bohr_potential_field(lat, state)
            rep = dirac_residual(phi, pot, e=state.input.e,
                                 mass=state.input.m, mode=mode)
            residuals.append(rep.max_residual)
        return residuals, fit_loglog(spacings, residuals).slope

    res_b, order_b = orders("backward")
    res_c, order_c = orders("central")

    # uniform-sphere interior: the 8*pi/3 source is reproduced to machine
    # precision at every spacing (the stencil is exact on quadratics)
    rho = 0.02
    sphere_resids = []
    for h in (0.2, 0.1, 0.05):
        lat = HypercubicLattice(spacing=h, extent=(8, 8, 8, 8))
        grids = lat.coordinate_grids()
        vals = np.zeros(lat.extent + (4,), dtype=complex)
        vals[..., 0] = 1j * (4 * math.pi / 3) * rho * grids[2] ** 2
        src = np.zeros_like(vals)
        src[..., 0] = 1j * (8 * math.pi / 3) * rho
        rep = photon_residual(LatticeField(lat, vals), LatticeField(lat, src))
        sphere_resids.append(rep.max_residual)
    sphere_exact = max(sphere_resids) < 1e-12

    # a smooth non-polynomial potential demonstrates a genuine order >= 1
    ph_res = []
    for h in spacings:
        lat = HypercubicLattice(spacing=h, extent=(16, 16, 3, 3))
        grids = lat.coordinate_grids()
        vals = np.zeros(lat.extent + (4,), dtype=complex)
        vals[..., 0] = np.exp(1j * (0.9 * grids[1] - 0.5 * grids[0]))
        src = (0.5**2 - 0.9**2) * vals
        rep = photon_residual(LatticeField(lat, vals), LatticeField(lat, src))
        ph_res.append(rep.max_residual)
    ph_order = fit_loglog(spacings, ph_res).slope

    elapsed = time.perf_counter() - t0
    # one-sided stencils approach their asymptotic rate from below; the
    # 0.05 slack covers the measured pre-asymptotic bias only
    ok = (order_b >= 1.0 - 0.05 and order_c >= 2.0 - 0.05 and sphere_exact
          and ph_order >= 1.0 - 0.05 and res_b[-1] < res_b[0] / 6
          and elapsed < 60.0)
    report("C8 lattice-solution-check", ok,
           f"dirac-order={order_b:.3f} central={order_c:.3f} "
           f"sphere-max={max(sphere_resids):.1e} photon-order={ph_order:.2f} "
           f"t={elapsed:.1f}s")
    assert order_b >= 0.95
    assert order_c >= 1.95
    assert sphere_exact
    assert ph_order >= 0.95
    assert res_b[-1] < res_b[0] / 6
    assert elapsed < 60.0


def test_criterion_9_frame_equivalence():
    lat_extent = (6, 6, 6, 6)
    worst = 0.0
    for Z in (LorentzTransform.identity(),
              LorentzTransform.rotation([0, 0, 1], math.pi / 2),
              LorentzTransform.boost([1, 0, 0], 1.0)):
        _, latk, binding = build_lattices(a=0.1, R_k=0.2, extent=lat_extent,
                                          Z=Z)
        grids = latk.coordinate_grids()
        vals = np.zeros(latk.extent + (4,), dtype=complex)
        vals[..., 0] = 1j * np.sin(0.8 * grids[1]) * np.cos(0.3 * grids[0])
        vals[..., 2] = 0.5 * np.cos(0.6 * grids[3])
        A = LatticeField(latk, vals)
        J = LatticeField(latk, np.nan_to_num(wave_apply(vals, latk)))
        eq = equivalence_check(binding, A, J)
        worst = max(worst, eq.commutation_residual,
                    eq.lp_residual / eq.scale_factor)
    ok = worst < 1e-10
    report("C9 frame-equivalence", ok, f"worst={worst:.2e}")
    assert worst < 1e-10


def test_criterion_10_lattice_scaling():
    t0 = time.perf_counter()
    devs = {}
    for p in (0.5, 1.0, 2.0):
        res = limit_sweep(p, np.geomspace(1e-3, 1e-1, 9))
        for name, want in (("A", 2.0), ("f", 3.0), ("eB", 0.0),
                           ("M", -(3.0 + p))):
            devs[f"p={p}:{name}"] = abs(res.slopes[name].slope - want)
    elapsed = time.perf_counter() - t0
    ok = all(d < 0.02 for d in devs.values()) and elapsed < 10.0
    report("C10 lattice-scaling", ok,
           f"max-dev={max(devs.values()):.2e} t={elapsed:.2f}s")
    for name, d in devs.items():
        assert d < 0.02, name
    assert elapsed < 10.0


def test_criterion_11_charge_conjugation():
    state = solve_bohr(BohrInput(e=1.0, f=-ALPHA, n=1, m=1.0))
    worst = 0.0
    for h in (0.1, 0.05):
        lat = HypercubicLattice(spacing=h, extent=(16, 16, 3, 3))
        phi = bohr_phi_field(lat, state)
        pot = bohr_potential_field(lat, state)
        base = dirac_residual(phi, pot, e=state.input.e, mass=state.input.m)
        conj = dirac_residual(charge_conjugate_field(phi), pot,
                              e=-state.input.e, mass=state.input.m)
        worst = max(worst, abs(conj.max_residual - base.max_residual)
                    / base.max_residual)
    ok = worst < 1e-12
    report("C11 charge-conjugation", ok, f"worst={worst:.2e}")
    assert worst < 1e-12


def test_criterion_12_cli_determinism(tmp_path):
    commands = [
        ["solve-bohr"],
        ["local-solve", "--include-zero"],
        ["tile", "--kind", "superposition", "--radius", "0.25", "--seed", "3"],
        ["scaling-sweep", "--r-count", "6", "--a-count", "6"],
        ["lattice-verify", "--extent", "8", "--spacings", "0.2", "0.1",
         "--conjugate-charge"],
    ]
    all_ok = True
    for argv in commands:
        d1 = tmp_path / ("a-" + argv[0])
        d2 = tmp_path / ("b-" + argv[0])
        rc1 = cli_main(argv + ["--out", str(d1), "--seed", "11"])
        rc2 = cli_main(argv + ["--out", str(d2), "--seed", "11"])
        same = ({p.name: p.read_bytes() for p in sorted(d1.iterdir())}
                == {p.name: p.read_bytes() for p in sorted(d2.iterdir())})
        all_ok &= (rc1 == 0 and rc2 == 0 and same)
        assert rc1 == 0 and rc2 == 0
        assert same, argv[0]
    report("C12 cli-determinism", all_ok)
