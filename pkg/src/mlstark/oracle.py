"""Independent numerical verification engine.

Everything here deliberately avoids the closed forms it is meant to check:
radial integrals are done by adaptive panel Gauss-Legendre quadrature (with
forced subdivision at the regularization scale b and at a0), operator matrix
elements use either the bound-state substitution identity
p^2 psi = 2 (E_n + 1/r) psi or explicit analytic radial derivatives, and the
deformed-algebra representation is checked with finite-difference stencils on
a momentum grid.

All oracle runs are deterministic: fixed probe functions, fixed grids, no
randomness.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import hydrogen
from .hydrogen import QuantumNumbers
from .units import (DeformationParams, Dimension, PhenomenologyParams, Quantity,
                    UnitSystem, constants, field_to_atomic, from_phenomenology)

SQRT3 = math.sqrt(3.0)

_GL_LO = leggauss(15)
_GL_HI = leggauss(31)
_GL_FIXED_LO = leggauss(48)
_GL_FIXED_HI = leggauss(64)


class QuadratureRule(Enum):
    ADAPTIVE_SUBDIVISION = "adaptive-subdivision"
    FIXED_HIGH_ORDER = "fixed high-order"


@dataclass(frozen=True)
class QuadratureSpec:
    rule: QuadratureRule = QuadratureRule.ADAPTIVE_SUBDIVISION
    abs_tol: float = 1e-14
    rel_tol: float = 1e-13
    max_subdivisions: int = 6000

    def __post_init__(self):
        if self.abs_tol <= 0.0 or self.rel_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_SPEC = QuadratureSpec()


class QuadratureToleranceError(RuntimeError):
    """Requested tolerance not reached; carries the achieved estimate."""

    def __init__(self, message: str, estimate: float, error_estimate: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class GridResolutionError(RuntimeError):
    """Finite-difference grid too coarse to separate signal from stencil error."""


def _panel(f, a: float, b: float, rule) -> float:
    nodes, weights = rule
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * nodes
    return half * float(np.dot(weights, f(x)))


def _integrate(f, points, spec: QuadratureSpec) -> float:
    """Integrate a vectorized integrand over the panel decomposition ``points``."""
    pts = sorted(set(float(p) for p in points))
    if len(pts) < 2:
        raise ValueError("need at least two panel boundaries")
    if spec.rule is QuadratureRule.FIXED_HIGH_ORDER:
        total = err = 0.0
        for a, b in zip(pts[:-1], pts[1:]):
            hi = _panel(f, a, b, _GL_FIXED_HI)
            total += hi
            err += abs(hi - _panel(f, a, b, _GL_FIXED_LO))
        if err > max(spec.abs_tol, spec.rel_tol * abs(total)):
            raise QuadratureToleranceError(
                f"fixed-order rule reached error {err:.3e} on estimate {total:.6e}",
                total, err)
        return total

    heap = []
    counter = 0
    for a, b in zip(pts[:-1], pts[1:]):
        hi = _panel(f, a, b, _GL_HI)
        err = abs(hi - _panel(f, a, b, _GL_LO))
        heapq.heappush(heap, (-err, counter, a, b, hi))
        counter += 1
    for splits in range(spec.max_subdivisions + 1):
        total = sum(item[4] for item in heap)
        err = sum(-item[0] for item in heap)
        if err <= max(spec.abs_tol, spec.rel_tol * abs(total)):
            return total
        if splits == spec.max_subdivisions:
            raise QuadratureToleranceError(
                f"adaptive quadrature exhausted {spec.max_subdivisions} subdivisions "
                f"at error {err:.3e} on estimate {total:.6e}", total, err)
        _, _, a, b, _ = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        for lo_edge, hi_edge in ((a, mid), (mid, b)):
            hi = _panel(f, lo_edge, hi_edge, _GL_HI)
            sub_err = abs(hi - _panel(f, lo_edge, hi_edge, _GL_LO))
            heapq.heappush(heap, (-sub_err, counter, lo_edge, hi_edge, hi))
            counter += 1
    raise AssertionError("unreachable")


def _seed_points(n: int, breakpoints=()) -> list[float]:
    """Panel seeds for hydrogen-weight integrands: origin, scale points, tail."""
    rmax = 45.0 * n
    pts = {0.0, 0.5, 1.0, 2.0, float(n * n), float(2 * n * n), rmax}
    for bp in breakpoints:
        x = float(bp)
        while 0.0 < x < rmax:
            pts.add(x)
            x *= 4.0
    return sorted(p for p in pts if 0.0 <= p <= rmax)


def radial_integral(integrand, qn: QuantumNumbers, spec: QuadratureSpec = DEFAULT_SPEC,
                    breakpoints=()) -> float:
    """integral_0^inf integrand(r) R_nl(r)^2 r^2 dr by panel quadrature.

    ``breakpoints`` forces panel boundaries; the integrable
    1/sqrt(r^2 + b^2) - 1/r class needs one at r ~ b, where adaptive rules
    otherwise under-resolve the log-generating region.
    """
    state = hydrogen.radial_state(qn)

    def weighted(r):
        return np.asarray(integrand(r)) * state(r) ** 2 * r * r

    return _integrate(weighted, _seed_points(qn.n, breakpoints), spec)


def _regularized_coulomb_diff(qn: QuantumNumbers, b_au: float, spec: QuadratureSpec) -> float:
    """< 1/sqrt(r^2 + b^2) - 1/r > on the given state; 0 at b = 0."""
    if b_au == 0.0:
        return 0.0
    return radial_integral(lambda r: 1.0 / np.sqrt(r * r + b_au * b_au) - 1.0 / r,
                           qn, spec, breakpoints=(b_au,))


def _shift_numeric(qn: QuantumNumbers, d: DeformationParams, spec: QuadratureSpec) -> float:
    """Exact <nl| V |nl> for the regularized s-state perturbation, hartree.

    The p^4 and (1/r) p^2 + p^2 (1/r) pieces use the substitution identity on
    the eigenstate, with <1/r> and <1/r^2> evaluated by quadrature rather
    than taken from the closed forms; the regularized Coulomb difference is
    quadrature with a forced breakpoint at b.
    """
    beta, beta_p = d.atomic()
    bsq = max(0.0, 2.0 * beta - beta_p)
    energy = hydrogen.energy_level(qn.n).value
    inv_r = radial_integral(lambda r: 1.0 / r, qn, spec)
    inv_r2 = radial_integral(lambda r: 1.0 / (r * r), qn, spec)
    p4 = 4.0 * (energy ** 2 + 2.0 * energy * inv_r + inv_r2)
    coulomb_p2 = 4.0 * (energy * inv_r + inv_r2)
    return (0.5 * beta_p * p4 + 0.25 * bsq * coulomb_p2
            - _regularized_coulomb_diff(qn, math.sqrt(bsq), spec))


def shift_1s_numeric(d: DeformationParams, spec: QuadratureSpec = DEFAULT_SPEC) -> Quantity:
    """Ground-state shift evaluated exactly (not asymptotically), hartree."""
    value = _shift_numeric(QuantumNumbers(1, 0, 0), d, spec)
    return Quantity(value, Dimension.ENERGY, UnitSystem.ATOMIC)


def shift_2s_numeric(d: DeformationParams, spec: QuadratureSpec = DEFAULT_SPEC) -> Quantity:
    """2s shift evaluated exactly (not asymptotically), hartree."""
    value = _shift_numeric(QuantumNumbers(2, 0, 0), d, spec)
    return Quantity(value, Dimension.ENERGY, UnitSystem.ATOMIC)


def shift_2p_numeric(d: DeformationParams, spec: QuadratureSpec = DEFAULT_SPEC) -> Quantity:
    """2p shift by direct quadrature of the deformed-Hamiltonian perturbation.

    For l >= 1 no Coulomb regularization is needed; the perturbation is
    beta' p^4 / 2 + ((2 beta - beta')/4) [(1/r) p^2 + p^2 (1/r) + 2/r^3],
    with the p^2 pieces reduced by the substitution identity and every moment
    evaluated by quadrature.
    """
    qn = QuantumNumbers(2, 1, 0)
    beta, beta_p = d.atomic()
    energy = hydrogen.energy_level(2).value
    inv_r = radial_integral(lambda r: 1.0 / r, qn, spec)
    inv_r2 = radial_integral(lambda r: 1.0 / (r * r), qn, spec)
    inv_r3 = radial_integral(lambda r: r ** -3.0, qn, spec)
    p4 = 4.0 * (energy ** 2 + 2.0 * energy * inv_r + inv_r2)
    coulomb_p2 = 4.0 * (energy * inv_r + inv_r2)
    value = 0.5 * beta_p * p4 + 0.25 * (2.0 * beta - beta_p) * (coulomb_p2 + 2.0 * inv_r3)
    return Quantity(value, Dimension.ENERGY, UnitSystem.ATOMIC)


def z_sq_numeric(d: DeformationParams, spec: QuadratureSpec = DEFAULT_SPEC) -> Quantity:
    """<1s| Z^2 |1s> to first order in (beta, beta'), units a0^2.

    Z = z + lam (z p^2 + p^2 z) with lam = (2 beta - beta')/4.  Cross terms
    use the substitution identity where p^2 hits the eigenstate, plus the
    explicit-derivative term from [p^2, z] = -2 i p_z acting inside
    <z p^2 z>: -2 i <z p_z> = -(2/3) integral R R' r^3 dr.  The
    quadratic-in-lam term is discarded by construction.
    """
    qn = QuantumNumbers(1, 0, 0)
    beta, beta_p = d.atomic()
    lam = 0.25 * (2.0 * beta - beta_p)
    energy = hydrogen.energy_level(1).value
    z2 = radial_integral(lambda r: r * r, qn, spec) / 3.0
    z2_over_r = radial_integral(lambda r: r, qn, spec) / 3.0
    state = hydrogen.radial_state(qn)
    d_state = state.derivative()
    pz_term = -(2.0 / 3.0) * _integrate(lambda r: state(r) * d_state(r) * r ** 3,
                                        _seed_points(1), spec)
    z2p2 = 2.0 * energy * z2 + 2.0 * z2_over_r          # <z^2 p^2> = <p^2 z^2>
    zp2z = z2p2 + pz_term                               # <z p^2 z>
    cross = 2.0 * z2p2 + 2.0 * zp2z
    return Quantity(z2 + lam * cross, Dimension.LENGTH_SQUARED, UnitSystem.ATOMIC)


def _ml_coupling_parts(d: DeformationParams, spec: QuadratureSpec) -> tuple[float, float]:
    """(z element, deformation term) of <2,1,0| Z |2,0,0> in a0, by quadrature.

    The p^2 action on the 2s state uses its explicit analytic radial
    derivatives rather than the substitution identity, keeping this route
    independent of the algebra used elsewhere:
    (z p^2 + p^2 z) psi_2s = -2 z lap(psi_2s) - 2 d/dz psi_2s.
    """
    beta, beta_p = d.atomic()
    lam = 0.25 * (2.0 * beta - beta_p)
    s20 = hydrogen.radial_state(QuantumNumbers(2, 0, 0))
    s21 = hydrogen.radial_state(QuantumNumbers(2, 1, 0))
    d1 = s20.derivative()
    d2 = s20.derivative(2)
    seeds = _seed_points(2)
    z_elem = _integrate(lambda r: s21(r) * s20(r) * r ** 3, seeds, spec) / SQRT3
    lap_term = _integrate(lambda r: s21(r) * (d2(r) + 2.0 * d1(r) / r) * r ** 3, seeds, spec)
    dz_term = _integrate(lambda r: s21(r) * d1(r) * r * r, seeds, spec)
    w = (-2.0 * lap_term - 2.0 * dz_term) / SQRT3
    return z_elem, lam * w


def ml_stark_element_numeric(f, d: DeformationParams,
                             spec: QuadratureSpec = DEFAULT_SPEC) -> Quantity:
    """<2,1,0| V_Stark^ML |2,0,0> by quadrature, hartree.

    ``f`` is any object with a ``magnitude`` attribute in V/m (a FieldSpec).
    The sign convention matches the closed-form coupling matrices (leading
    term -3 e a0 |E|).  Note: the quadrature yields
    -e|E| (3 a0 + (2 beta - beta')/(8 a0)); the closed form carries the
    deformation term with the opposite sign.
    """
    z_elem, corr = _ml_coupling_parts(d, spec)
    field_au = field_to_atomic(f.magnitude)
    return Quantity(field_au * (z_elem + corr), Dimension.ENERGY, UnitSystem.ATOMIC)


def ml_stark_correction_numeric(f, d: DeformationParams,
                                spec: QuadratureSpec = DEFAULT_SPEC) -> Quantity:
    """Deformation part alone of the coupling element (no cancellation), hartree."""
    _, corr = _ml_coupling_parts(d, spec)
    return Quantity(field_to_atomic(f.magnitude) * corr, Dimension.ENERGY, UnitSystem.ATOMIC)


# ---------------------------------------------------------------------------
# finite-difference commutator verification on a momentum grid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TestFunction:
    """Probe function: polynomial in (px, py, pz) times an isotropic Gaussian.

    ``terms`` is a tuple of (ix, iy, iz, coefficient) monomials; the Gaussian
    factor exp(-p^2 / (2 width^2)) is mandatory, keeping every probe
    square-integrable.
    """

    terms: tuple[tuple[int, int, int, float], ...]
    width: float

    def __post_init__(self):
        if self.width <= 0.0:
            raise ValueError("probe width must be positive")
        if not self.terms:
            raise ValueError("probe needs at least one polynomial term")

    def values(self, px, py, pz):
        poly = sum(c * px ** ix * py ** iy * pz ** iz for ix, iy, iz, c in self.terms)
        p2 = px * px + py * py + pz * pz
        return poly * np.exp(-p2 / (2.0 * self.width ** 2))


# deterministic probe set used by the verification suite
PROBES = (
    TestFunction(((0, 0, 0, 1.0),), 1.0),
    TestFunction(((1, 0, 0, 1.0),), 0.9),
    TestFunction(((1, 1, 0, 0.7), (0, 0, 2, 0.5)), 1.1),
)


@dataclass(frozen=True)
class CommutatorResiduals:
    """Residual norms of the two deformed-algebra relations, floor-corrected.

    ``position_momentum``: || ([X_i, P_j] - i(delta_ij (1 + beta p^2)
    + beta' p_i p_j)) probe ||, expected O(beta^2).
    ``position_position``: first-order residual of
    [X_i, X_j] = i (2 beta - beta') (P_i X_j - P_j X_i) + O(beta^2).
    The floors estimate the finite-difference error remaining after
    Richardson extrapolation across a step halving.
    """

    position_momentum: float
    position_position: float
    pm_floor: float
    pp_floor: float


def _derivative(field, axis: int, step: float):
    """Fourth-order centered stencil; fields decay to ~0 before the edges."""
    return (-np.roll(field, -2, axis) + 8.0 * np.roll(field, -1, axis)
            - 8.0 * np.roll(field, 1, axis) + np.roll(field, 2, axis)) / (12.0 * step)


def _residual_fields(i: int, j: int, beta: float, beta_p: float,
                     probe: TestFunction, extent: float, npts: int):
    """Residual fields of both algebra relations on one momentum grid."""
    axis_1d = np.linspace(-extent, extent, npts)
    step = axis_1d[1] - axis_1d[0]
    grids = np.meshgrid(axis_1d, axis_1d, axis_1d, indexing="ij")
    p2 = grids[0] ** 2 + grids[1] ** 2 + grids[2] ** 2
    phi = probe.values(*grids).astype(complex)
    phi /= math.sqrt(float(np.sum(np.abs(phi) ** 2)) * step ** 3)
    lam = 0.25 * (2.0 * beta - beta_p)

    def x_canon(field, axis):
        return 1j * _derivative(field, axis, step)

    def x_deformed(field, axis):
        base = x_canon(field, axis)
        if lam == 0.0:
            return base
        return base + lam * (x_canon(p2 * field, axis) + p2 * base)

    def p_deformed(field, axis):
        return grids[axis] * (field + 0.5 * beta_p * p2 * field)

    xi_phi = x_deformed(phi, i)
    xj_phi = x_deformed(phi, j)

    comm_xp = x_deformed(p_deformed(phi, j), i) - p_deformed(xi_phi, j)
    target_xp = beta_p * grids[i] * grids[j] * phi
    if i == j:
        target_xp = target_xp + (1.0 + beta * p2) * phi
    res_xp = comm_xp - 1j * target_xp

    comm_xx = x_deformed(xj_phi, i) - x_deformed(xi_phi, j)
    target_xx = (2.0 * beta - beta_p) * (p_deformed(xj_phi, i) - p_deformed(xi_phi, j))
    res_xx = comm_xx - 1j * target_xx
    return res_xp, res_xx, step


def commutator_residual(i: int, j: int, d: DeformationParams, probe: TestFunction,
                        grid_step: float, *, strict: bool = False) -> CommutatorResiduals:
    """First-order residuals of the deformed algebra under the representation.

    The position operator acts as a fourth-order derivative stencil on a
    momentum grid sized from the probe width; a step halving provides a
    Richardson extrapolation of each residual field, whose norm is reported
    together with an estimate of the remaining discretization floor.

    (beta, beta') are read as dimensionless numbers in grid units: the
    algebra check is scale-free.  With ``strict=True`` the function raises
    :class:`GridResolutionError` when the floor swamps a nonzero signal.
    """
    if not (0 <= i <= 2 and 0 <= j <= 2):
        raise ValueError("axes must be in {0, 1, 2}")
    if grid_step <= 0.0:
        raise ValueError("grid_step must be positive")
    beta, beta_p = d.beta, d.beta_prime
    half = max(8, math.ceil(8.5 * probe.width / grid_step))
    extent = half * grid_step
    n_coarse = 2 * half + 1
    n_fine = 2 * n_coarse - 1

    xp_c, xx_c, step_c = _residual_fields(i, j, beta, beta_p, probe, extent, n_coarse)
    xp_f, xx_f, _ = _residual_fields(i, j, beta, beta_p, probe, extent, n_fine)
    sel = (slice(None, None, 2),) * 3
    cell = step_c ** 3

    def extrapolate(coarse, fine):
        fine_on_coarse = fine[sel]
        best = (16.0 * fine_on_coarse - coarse) / 15.0
        signal = math.sqrt(float(np.sum(np.abs(best) ** 2)) * cell)
        floor = math.sqrt(float(np.sum(np.abs(fine_on_coarse - best) ** 2)) * cell)
        return signal, floor

    pm, pm_floor = extrapolate(xp_c, xp_f)
    pp, pp_floor = extrapolate(xx_c, xx_f)
    if strict and (beta > 0.0 or beta_p > 0.0):
        if pm_floor > 0.5 * pm or pp_floor > 0.5 * pp:
            raise GridResolutionError(
                f"discretization floor (pm {pm_floor:.2e}, pp {pp_floor:.2e}) is not "
                f"small against the residual signal (pm {pm:.2e}, pp {pp:.2e}); "
                "refine grid_step")
    return CommutatorResiduals(pm, pp, pm_floor, pp_floor)


def commutator_scaling_exponents(i: int, j: int, d: DeformationParams,
                                 grid_step: float, scales=(1.0, 0.5, 0.25),
                                 probes=PROBES) -> list[float]:
    """Fitted log-log slopes of the [X, P] residual vs joint (beta, beta') scale.

    One exponent per probe; the first-order representation leaves a
    second-order defect, so healthy values sit near 2.
    """
    exponents = []
    for probe in probes:
        norms = []
        for t in scales:
            scaled = DeformationParams(d.beta * t, d.beta_prime * t)
            res = commutator_residual(i, j, scaled, probe, grid_step)
            norms.append(res.position_momentum)
        slope = np.polyfit(np.log(scales), np.log(norms), 1)[0]
        exponents.append(float(slope))
    return exponents


# ---------------------------------------------------------------------------
# verification suite (surfaced through the CLI `verify` subcommand)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str          # "pass" | "fail" | "flag"
    measured: float
    threshold: float
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _check(name: str, measured: float, threshold: float, note: str = "") -> CheckResult:
    status = "pass" if measured <= threshold else "fail"
    return CheckResult(name, status, measured, threshold, note)


def deformation_from_atomic(beta_au: float, beta_prime_au: float) -> DeformationParams:
    """Deformation parameters given in a0^2 (convenience for checks and tests)."""
    a0sq = constants().bohr_radius ** 2
    return DeformationParams(beta_au * a0sq, beta_prime_au * a0sq)


def run_checks(profile: str = "fast") -> list[CheckResult]:
    """Run the oracle suite; ``profile`` is 'fast' or 'thorough'."""
    if profile not in ("fast", "thorough"):
        raise ValueError(f"unknown profile {profile!r}")
    from . import ml_corrections, stark  # runtime import keeps layering one-way

    checks: list[CheckResult] = []
    spec = DEFAULT_SPEC
    field = stark.FieldSpec(1e7)

    worst = 0.0
    for n in range(1, 4):
        for l in range(n):
            qn = QuantumNumbers(n, l, 0)
            worst = max(worst, abs(radial_integral(lambda r: np.ones_like(r), qn, spec) - 1.0))
    checks.append(_check("radial-normalization(n<=3)", worst, 1e-10))

    worst = 0.0
    for qn in (QuantumNumbers(1, 0, 0), QuantumNumbers(2, 0, 0), QuantumNumbers(2, 1, 0)):
        for k in (-3, -2, -1, 1, 2):
            if k == -3 and qn.l == 0:
                continue
            closed = hydrogen.expectation_r_power(qn, k)
            numeric = radial_integral(lambda r, kk=k: r ** float(kk), qn, spec)
            worst = max(worst, abs(numeric - closed) / abs(closed))
    checks.append(_check("radial-moments-vs-closed-forms", worst, 1e-8))

    z_closed = hydrogen.z_matrix_element(QuantumNumbers(2, 1, 0), QuantumNumbers(2, 0, 0)).value
    z_num, _ = _ml_coupling_parts(DeformationParams(0.0, 0.0), spec)
    checks.append(_check("z-element-2s-2p0", abs(z_num - z_closed), 1e-10,
                         f"quadrature {z_num:.12f} vs closed form {z_closed:.12f} a0"))

    beta_au, beta_prime_au = 8e-5, 4e-5
    bsq_au = 2.0 * beta_au - beta_prime_au
    d_ref = deformation_from_atomic(beta_au, beta_prime_au)
    z2 = z_sq_numeric(d_ref, spec).value
    checks.append(_check("z-sq-ml-correction",
                         abs((z2 - 1.0) - 0.5 * bsq_au) / (0.5 * bsq_au), 1e-6,
                         "first-order <Z^2> excess vs (2 beta - beta')/2"))

    lead = ml_stark_element_numeric(field, DeformationParams(0.0, 0.0), spec).value
    lead_ref = -3.0 * field_to_atomic(field.magnitude)
    checks.append(_check("ml-stark-element-leading",
                         abs(lead - lead_ref) / abs(lead_ref), 1e-10))

    corr = ml_stark_correction_numeric(field, d_ref, spec).value
    corr_mag_ref = field_to_atomic(field.magnitude) * bsq_au / 8.0
    checks.append(_check("ml-stark-element-correction-magnitude",
                         abs(abs(corr) - corr_mag_ref) / corr_mag_ref, 1e-6))
    # closed form -e|E|[3a0 - b^2/(8a0)] puts the correction at +|corr| relative
    # to the -3 e a0 |E| leading term; the quadrature puts it at -|corr|.
    # Permanent finding, reported on every run, not a machinery failure.
    corr_closed = corr_mag_ref
    checks.append(CheckResult(
        "ml-stark-element-correction-signed", "flag",
        abs(corr - corr_closed) / abs(corr_closed), 1e-6,
        f"quadrature {corr:.6e} vs closed form {corr_closed:.6e} hartree "
        "(opposite relative sign, equal magnitude)"))

    d_small = deformation_from_atomic(5e-5, 0.0)
    closed_small = ml_corrections.shift_1s(d_small).value.value
    numeric_small = shift_1s_numeric(d_small, spec).value
    checks.append(_check("shift-1s-closed-vs-numeric(b~1e-2)",
                         abs(numeric_small - closed_small) / abs(closed_small), 2e-2,
                         "asymptotic regime, loose tolerance"))

    closed_2p = ml_corrections.shift_general(QuantumNumbers(2, 1, 0), 3, d_ref).value.value
    numeric_2p = shift_2p_numeric(d_ref, spec).value
    checks.append(_check("shift-2p-general-vs-quadrature",
                         abs(numeric_2p - closed_2p) / abs(closed_2p), 1e-6))

    zero = DeformationParams(0.0, 0.0)
    eta_third = PhenomenologyParams(delta_x_min=2.86e-17, eta=1.0 / 3.0)
    bound = stark.quadratic_shift_bound(field).value
    bound_ml = stark.quadratic_shift_bound_ml(field, from_phenomenology(eta_third)).value
    limits = max(
        abs(ml_corrections.shift_1s(zero).value.value),
        abs(ml_corrections.shift_2s(zero).value.value),
        abs(shift_1s_numeric(zero, spec).value),
        abs(stark.sigma_correction(field, eta_third).value),
        abs(bound_ml - bound) / abs(bound),
    )
    checks.append(_check("undeformed-and-eta-third-limits", limits, 0.0,
                         "all must vanish exactly"))

    res0 = commutator_residual(0, 0, zero, PROBES[0], grid_step=0.30)
    checks.append(_check("commutator-canonical-limit", res0.position_momentum,
                         max(4.0 * res0.pm_floor, 1e-10),
                         "undeformed-algebra residual within the stencil floor"))

    if profile == "thorough":
        for label, closed_fn, numeric_fn in (
                ("1s", ml_corrections.shift_1s, shift_1s_numeric),
                ("2s", ml_corrections.shift_2s, shift_2s_numeric)):
            rhos = []
            for b_over_a0 in (1e-2, 1e-3, 1e-4):
                d_b = deformation_from_atomic(0.5 * b_over_a0 ** 2, 0.0)  # eta = 1
                closed = closed_fn(d_b).value.value
                numeric = numeric_fn(d_b, spec).value
                rhos.append(abs(numeric - closed) / abs(closed))
            ok = all(rhos[k + 1] < rhos[k] / 5.0 for k in range(len(rhos) - 1))
            worst_ratio = max(rhos[k + 1] / rhos[k] for k in range(len(rhos) - 1))
            checks.append(CheckResult(f"shift-{label}-asymptotic-rate",
                                      "pass" if ok else "fail", worst_ratio, 0.2,
                                      "residuals " + ", ".join(f"{r:.3e}" for r in rhos)))

        exponents = commutator_scaling_exponents(
            0, 1, DeformationParams(0.05, 0.04), grid_step=0.30)
        off = max(abs(e - 2.0) for e in exponents)
        checks.append(_check("commutator-scaling-exponent", off, 0.2,
                             "fitted exponents " + ", ".join(f"{e:.3f}" for e in exponents)))

        tight = QuadratureSpec(abs_tol=spec.abs_tol / 2.0, rel_tol=spec.rel_tol / 2.0,
                               max_subdivisions=spec.max_subdivisions)
        drift = 0.0
        for k in (-1, 1, 2):
            qn = QuantumNumbers(2, 1, 0)
            coarse_val = radial_integral(lambda r, kk=k: r ** float(kk), qn, spec)
            tight_val = radial_integral(lambda r, kk=k: r ** float(kk), qn, tight)
            drift = max(drift, abs(coarse_val - tight_val) / abs(tight_val))
        checks.append(_check("quadrature-convergence", drift, spec.rel_tol * 10.0,
                             "halving tolerances must not move reported digits"))

    return checks
