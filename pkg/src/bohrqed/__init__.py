"""Numerical laboratory for quaternionic electrodynamics built from
two-body Bohr orbits, roundel ensembles, and lattice renditions."""

from .algebra import (
    Biquaternion,
    DiagonalMatrix,
    LorentzTransform,
    Reflector,
    reflector_mul,
)
from .bohr import (
    BohrInput,
    BohrState,
    LocalSolveResult,
    NonPositiveMass,
    SupercriticalCoupling,
    WaveSample,
    assemble_wavefunction,
    charge_conjugate,
    local_solve_rho,
    mass_shell_residual,
    roundtrip_consistency,
    solve_bohr,
    total_energy,
)
from .ensemble import (
    Ensemble,
    InfeasibleCoverage,
    NotOnBoundary,
    Roundel,
    assign_boundary_point,
    count_interactions,
    partition_regions,
    scaling_sweep,
    tile,
    total_charge,
)
from .lattice import (
    BoundarySite,
    HypercubicLattice,
    LatticeField,
    MassTerm,
    ReflectorField,
    RegionBinding,
    build_lattices,
    dirac_residual,
    equivalence_check,
    limit_sweep,
    photon_residual,
    renormalize_mass,
    transform_field,
)
from .mspace import LPoint, MPoint, RoundelSpec, boundary_points, l_to_m, m_to_l, map_potential

__version__ = "0.1.0"
