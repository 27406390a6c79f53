"""Ordinary and minimum-length Stark effect for hydrogen.

Quadratic-effect lower bounds and the polarizability bound, the degenerate
n = 2 coupling matrices and their diagonalization, and the estimators
sigma(eta), chi(eta) for the minimum-length corrections to the quadratic and
linear effects.

Sign conventions
----------------
The off-diagonal n = 2 coupling element is fixed to -3 e a0 |E| in the basis
order |2,0,0>, |2,1,0>, |2,1,1>, |2,1,-1>.  The element's overall sign
depends on the relative phase chosen for the 2s/2p basis vectors, so only
its magnitude and the +/- eigenvalue pairing are convention-free; those are
what the tests pin.

chi(eta) is linear in |E|.  The corrected coupling element is linear in the
field, and only the linear form reproduces the reference estimate of order
1e-35 J at 1e7 V/m; a quadratic form would be seven orders of magnitude
smaller.  chi is reported for the upper branch of the eigenvalue pair (the
branch whose unperturbed eigenvalue is -3 e a0 |E|), as the change in the
eigenvalue magnitude.

All bound-type results are bounds, not shifts; report rows derived from them
carry kind="bound".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ml_corrections, units
from .matrices import EigenDecomposition, PerturbationMatrix, diagonalize
from .ml_corrections import N2_BASIS
from .units import (DeformationParams, Dimension, PhenomenologyParams, Quantity,
                    UnitSystem, quadratic_energy_si)

__all__ = [
    "FieldSpec", "PerturbationMatrix", "EigenDecomposition", "diagonalize",
    "quadratic_shift_bound", "polarizability_bound", "z_sq_expectation_ml",
    "quadratic_shift_bound_ml", "stark_matrix_n2", "stark_matrix_n2_ml",
    "sigma_correction", "chi_correction", "simultaneity_check",
]


@dataclass(frozen=True)
class FieldSpec:
    """Uniform electric field along +z, magnitude in V/m."""

    magnitude: float

    def __post_init__(self):
        if self.magnitude < 0.0:
            raise ValueError(f"field magnitude must be nonnegative, got {self.magnitude}")

    def quantity(self) -> Quantity:
        return Quantity(self.magnitude, Dimension.FIELD, UnitSystem.SI)


def polarizability_bound() -> Quantity:
    """Upper bound on the ground-state polarizability: 16/3 in units of a0^3."""
    return Quantity(16.0 / 3.0, Dimension.POLARIZABILITY_VOLUME, UnitSystem.ATOMIC)


def quadratic_shift_bound(f: FieldSpec) -> Quantity:
    """Lower bound on the n = 1 quadratic Stark shift: -(8/3) a0^3 |E|^2, joules.

    A bound, not the shift itself: the exact shift lies above this value.
    """
    expr = Quantity(-8.0 / 3.0, Dimension.POLARIZABILITY_VOLUME, UnitSystem.ATOMIC)
    return quadratic_energy_si(expr, f.quantity())


def _b_squared_atomic(d: DeformationParams) -> float:
    return d.b_squared / units.constants().bohr_radius ** 2


def z_sq_expectation_ml(d: DeformationParams) -> Quantity:
    """<1s| Z^2 |1s> with the deformed position operator: a0^2 + (2b - b')/2."""
    return Quantity(1.0 + 0.5 * _b_squared_atomic(d),
                    Dimension.LENGTH_SQUARED, UnitSystem.ATOMIC)


def quadratic_shift_bound_ml(f: FieldSpec, d: DeformationParams) -> Quantity:
    """Minimum-length quadratic bound: -(8/3) a0 [a0^2 + (2b - b')/2] |E|^2, joules."""
    expr = Quantity(-(8.0 / 3.0) * (1.0 + 0.5 * _b_squared_atomic(d)),
                    Dimension.POLARIZABILITY_VOLUME, UnitSystem.ATOMIC)
    return quadratic_energy_si(expr, f.quantity())


def _coupling_matrix(element_joules: float) -> PerturbationMatrix:
    entries = np.zeros((4, 4))
    entries[0, 1] = entries[1, 0] = element_joules
    return PerturbationMatrix(N2_BASIS, entries, UnitSystem.SI)


def stark_matrix_n2(f: FieldSpec) -> PerturbationMatrix:
    """n = 2 coupling matrix of the ordinary Stark perturbation, entries in J.

    Only the 2s <-> 2p(m=0) element survives parity and m selection; its
    value is -3 e a0 |E|.
    """
    c = units.constants()
    element = -3.0 * c.electron_charge * c.bohr_radius * f.magnitude
    return _coupling_matrix(element)


def stark_matrix_n2_ml(f: FieldSpec, d: DeformationParams) -> PerturbationMatrix:
    """n = 2 coupling matrix with the deformed position operator, entries in J.

    Same sparsity as the ordinary matrix with the corrected element
    -e |E| [3 a0 - (2 beta - beta')/(8 a0)] (the reference closed form; the
    quadrature oracle finds the correction with the opposite relative sign,
    see the oracle module).
    """
    c = units.constants()
    element = -c.electron_charge * f.magnitude * (
        3.0 * c.bohr_radius - d.b_squared / (8.0 * c.bohr_radius))
    return _coupling_matrix(element)


def sigma_correction(f: FieldSpec, p: PhenomenologyParams) -> Quantity:
    """Minimum-length correction to the quadratic Stark bound, joules.

    sigma(eta) = -(4/3) * 4 pi eps0 * a0 * |E|^2 * dx^2 * (3 eta - 1);
    zero at eta = 1/3, maximal in magnitude at eta = 1.
    """
    expr = Quantity(-(4.0 / 3.0) * units.constants().bohr_radius
                    * p.delta_x_min ** 2 * (3.0 * p.eta - 1.0),
                    Dimension.POLARIZABILITY_VOLUME, UnitSystem.SI)
    return quadratic_energy_si(expr, f.quantity())


def chi_correction(f: FieldSpec, p: PhenomenologyParams) -> Quantity:
    """Minimum-length correction to the linear Stark eigenvalue magnitude, joules.

    chi(eta) = -(e / (8 a0)) * |E| * dx^2 * (3 eta - 1), linear in the field.
    Equals the ML-minus-ordinary eigenvalue magnitude for the upper branch of
    the coupled 2x2 block.
    """
    c = units.constants()
    value = -(c.electron_charge / (8.0 * c.bohr_radius)) * f.magnitude \
        * p.delta_x_min ** 2 * (3.0 * p.eta - 1.0)
    return Quantity(value, Dimension.ENERGY, UnitSystem.SI)


def simultaneity_check(f: FieldSpec, d: DeformationParams) -> float:
    """Frobenius norm of [V_ML, V_Stark^ML] on the n = 2 level, hartree^2.

    Strictly positive whenever |E| > 0 and the 2s/2p diagonal entries of
    V_ML differ; zero in either trivial limit.  A nonzero value means the
    pure minimum-length perturbation and the minimum-length Stark coupling
    cannot be diagonalized simultaneously.
    """
    c = units.constants()
    vml = ml_corrections.vml_matrix_n2(d).entries
    stark_si = stark_matrix_n2_ml(f, d).entries
    stark_au = stark_si / c.hartree
    comm = vml @ stark_au - stark_au @ vml
    return float(np.linalg.norm(comm))
