"""Two-body circular-orbit bound states and the local charge-density solve.

Natural units throughout: hbar = 1, c = 1, so Planck's constant is 2*pi
wherever it appears literally.  All stored quantities are real; the
factor-of-i bookkeeping of the underlying quaternionic formalism is
applied only when biquaternion-valued fields are assembled.

Sign conventions (fixed once, used everywhere):

* attraction means ``e*f < 0``; the potential-energy term of the orbiting
  particle is then ``U = e*f/R < 0``, so the total frequency
  ``nu = eta + U`` sits below the rest mass (a bound state).
* the real potential variable of the local solve carries the sign of
  ``-f`` (so ``f = -A*R`` recovers the central charge).
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

from .algebra import Biquaternion

__all__ = [
    "SupercriticalCoupling",
    "NonPositiveMass",
    "BohrInput",
    "BohrState",
    "LocalSolveResult",
    "WaveSample",
    "solve_bohr",
    "total_energy",
    "assemble_wavefunction",
    "mass_shell_residual",
    "local_solve_rho",
    "cubic_residual",
    "roundtrip_consistency",
    "charge_conjugate",
]


class SupercriticalCoupling(ValueError):
    """|e*f| >= n: the orbital square root vanishes or turns imaginary."""


class NonPositiveMass(ValueError):
    """Rest mass must be strictly positive."""


@dataclass(frozen=True)
class BohrInput:
    """Couplings of the two-body interaction.

    ``e``: charge of the orbiting particle; ``f``: charge of the central
    particle; ``n``: positive integer quantum number; ``m``: rest-mass
    magnitude of the orbiting particle (inverse length).
    """

    e: float
    f: float
    n: int
    m: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if self.m <= 0:
            raise NonPositiveMass(f"m must be positive, got {self.m}")
        if abs(self.e * self.f) >= self.n:
            raise SupercriticalCoupling(
                f"|e*f| = {abs(self.e * self.f)} >= n = {self.n}")

    @property
    def coupling(self) -> float:
        return self.e * self.f

    @property
    def attractive(self) -> bool:
        return self.e * self.f < 0


@dataclass(frozen=True)
class BohrState:
    """Solved circular orbit.

    ``v``: orbital speed; ``R``: orbit radius; ``mu``: wave number;
    ``nu``: total frequency; ``eta``: kinetic frequency; ``A``: potential
    magnitude ``|f|/R`` at the orbit; ``E``: total energy (= nu).
    """

    v: float
    R: float
    mu: float
    nu: float
    eta: float
    A: float
    E: float
    input: BohrInput

    @property
    def gamma(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.v * self.v)

    @property
    def potential_energy(self) -> float:
        """Signed potential-energy term ``U = e*f/R`` (negative when bound)."""
        return self.input.e * self.input.f / self.R

    @property
    def A_signed(self) -> float:
        """Real potential with the sign of ``-f`` (local-solve convention)."""
        return -self.input.f / self.R

    @property
    def rho_signed(self) -> float:
        """Uniform charge density producing ``A_signed`` at radius R."""
        return 3.0 * self.A_signed / (4.0 * math.pi * self.R**2)


@dataclass(frozen=True)
class WaveSample:
    """Wave-function bispinor entries at one point of the orbit space."""

    phi1: Biquaternion
    phi2: Biquaternion
    at: tuple[float, float]  # (x0, s)


@dataclass(frozen=True)
class LocalSolveResult:
    """Solution of the pointwise simultaneous equations.

    ``branch`` is ``"positive-root"`` for A > 0, ``"negative-root"``
    for A < 0 and ``None`` in the degenerate A = 0 case, where ``R``
    and ``f`` are undefined (NaN) and ``degenerate`` is set.
    """

    rho: float
    A: float
    R: float
    f: float
    branch: str | None
    d: float
    degenerate: bool = False


def solve_bohr(inp: BohrInput, allow_repulsive: bool = False) -> BohrState:
    """Solve the two orbit equations for the given couplings.

    The orbital speed is ``v = |e*f|/n`` and the radius follows from the
    angular-momentum quantization ``mu*R = n``, which this construction
    satisfies to the last bit.  Repulsive couplings (``e*f > 0``) are
    rejected unless ``allow_repulsive`` is set; they satisfy the same
    algebra but describe no bound state.
    """
    ef = inp.e * inp.f
    if ef == 0:
        raise ValueError("coupling e*f must be nonzero")
    if ef > 0 and not allow_repulsive:
        raise ValueError(
            "repulsive coupling (e*f > 0); pass allow_repulsive=True to override")
    v = abs(ef) / inp.n
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    eta = inp.m * gamma
    mu = inp.m * v * gamma
    R = inp.n / mu
    A = abs(inp.f) / R
    nu = eta + ef / R
    return BohrState(v=v, R=R, mu=mu, nu=nu, eta=eta, A=A, E=nu, input=inp)


def total_energy(state: BohrState) -> float:
    """Total energy; equals ``m*sqrt(1 - (e*f/n)**2)`` for attraction."""
    return state.E


def mass_shell_residual(state: BohrState) -> float:
    """Relative residual of the mass-shell identity.

    Checked in the tilde (complex) rendition ``m~² = (nu~ - eA~)² + mu²``
    with ``q~ = q/i``; collapsing the i-factors gives the real form
    ``m² = (nu - U)² - mu²``.
    """
    m = state.input.m
    mt = -1j * m
    nut = -1j * state.nu
    eAt = -1j * state.potential_energy
    lhs = mt * mt
    rhs = (nut - eAt) ** 2 + state.mu**2
    return abs(lhs - rhs) / abs(lhs)


def assemble_wavefunction(state: BohrState, x0: float, s: float) -> WaveSample:
    """Evaluate the closed-form bispinor pair at time ``x0``, arc ``s``.

    ``phi1`` is the unit phase ``exp(i(mu*s - nu*x0))``; ``phi2`` is the
    constant ``(i*eta + mu*i1)/m`` times the same phase.  The arc axis is
    housed on the ``i1`` basis element.
    """
    phase = state.mu * s - state.nu * x0
    p1 = cmath.exp(1j * phase)
    m = state.input.m
    phi1 = Biquaternion(p1)
    phi2 = Biquaternion(1j * state.eta / m, state.mu / m) * phi1
    return WaveSample(phi1=phi1, phi2=phi2, at=(x0, s))


def local_solve_rho(A: float, e: float, m: float, n: int) -> LocalSolveResult:
    """Solve the pointwise equations for the charge density at potential A.

    The density satisfies ``rho²/(d e²) - A³ rho - m² d A⁴ = 0`` with
    ``d = 3/(4 pi n²)``; of the two roots
    ``rho = (A² e² d / 2)(A ± sqrt(A² + 4m²/e²))``
    the branch with ``sign(rho) = sign(A)`` is taken (positive root for
    A > 0, negative root for A < 0), which avoids subtractive
    cancellation on either side.  A = 0 yields the degenerate rho = 0
    result with radius and central charge flagged undefined.
    """
    if e == 0:
        raise ValueError("e must be nonzero (the density equation divides by e**2)")
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    d = 3.0 / (4.0 * math.pi * n * n)
    if A == 0:
        return LocalSolveResult(rho=0.0, A=0.0, R=math.nan, f=math.nan,
                                branch=None, d=d, degenerate=True)
    root = math.sqrt(A * A + 4.0 * m * m / (e * e))
    sign = 1.0 if A > 0 else -1.0
    rho = (A * A * e * e * d / 2.0) * (A + sign * root)
    R = math.sqrt(3.0 * A / (4.0 * math.pi * rho))
    f = -A * R
    branch = "positive-root" if A > 0 else "negative-root"
    return LocalSolveResult(rho=rho, A=A, R=R, f=f, branch=branch, d=d)


def cubic_residual(result: LocalSolveResult, e: float, m: float) -> float:
    """Relative back-substitution residual of the density equation."""
    if result.degenerate:
        return 0.0
    A, rho, d = result.A, result.rho, result.d
    terms = (rho * rho / (d * e * e), -(A**3) * rho, -(m * m * d * A**4))
    scale = max(abs(t) for t in terms)
    return abs(sum(terms)) / scale


def roundtrip_consistency(inp: BohrInput) -> float:
    """Close the loop orbit-solve -> (A, rho) -> local solve -> (R, f).

    Returns the maximum relative deviation between the original orbit
    radius / central charge / density and their recovered values.
    """
    state = solve_bohr(inp, allow_repulsive=True)
    A = state.A_signed
    rho = state.rho_signed
    rec = local_solve_rho(A, inp.e, inp.m, inp.n)
    devs = (
        abs(rec.rho - rho) / abs(rho),
        abs(rec.R - state.R) / state.R,
        abs(rec.f - inp.f) / abs(inp.f),
    )
    return max(devs)


def charge_conjugate(inp: BohrInput) -> BohrInput:
    """Flip the sign of the orbiting particle's charge."""
    return BohrInput(e=-inp.e, f=inp.f, n=inp.n, m=inp.m)
