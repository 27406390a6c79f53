"""Minimum-length corrections to hydrogen levels.

Implements the first-order level shifts induced by the deformed algebra: the
general D-dimensional formula (singular at D = 3, l = 0), the regularized
closed forms for the 1s and 2s levels, and the matrix elements of the pure
minimum-length perturbation V_ML that the degenerate n = 2 analysis uses.

All shift formulas are evaluated in atomic units with (beta, beta') converted
from m^2 to a0^2 at entry.  The x*ln(x) terms of the s-state closed forms are
assigned their limit value 0 at b = 0 (eta = 1/3), keeping eta scans
continuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad

from . import hydrogen
from .hydrogen import QuantumNumbers
from .matrices import PerturbationMatrix
from .units import DeformationParams, Dimension, Quantity, UnitSystem

EULER_GAMMA = 0.5772156649015329

N2_BASIS = ("|2,0,0>", "|2,1,0>", "|2,1,1>", "|2,1,-1>")


class SingularCaseError(ValueError):
    """The general shift formula is singular for the requested state."""


class ShiftFormula(Enum):
    GENERAL_D = "general_D"
    REGULARIZED_1S = "regularized_1s"
    REGULARIZED_2S = "regularized_2s"
    VML_ELEMENT = "vml_element"


@dataclass(frozen=True)
class ShiftResult:
    """A first-order energy shift together with the formula and inputs used."""

    value: Quantity
    formula: ShiftFormula
    state: QuantumNumbers | None
    params: DeformationParams
    space_dim: int = 3


def _shift_quantity(value_au: float) -> Quantity:
    return Quantity(value_au, Dimension.ENERGY, UnitSystem.ATOMIC)


def shift_general(qn: QuantumNumbers, space_dim: int, d: DeformationParams) -> ShiftResult:
    """General first-order shift in D >= 3 spatial dimensions.

    Delta E = (1/n^3) [ (D-1)(2b - b') / (4 lb (lb+1)(lb+1/2))
                        + (2b + b') / (lb + 1/2) - (b + b') / nb ]
    with lb = l + (D-3)/2, nb = n + (D-3)/2, in hartree (beta in a0^2).

    Raises :class:`SingularCaseError` for D = 3, l = 0; use
    :func:`shift_1s` / :func:`shift_2s` for s states there.
    """
    if space_dim < 3:
        raise ValueError(f"space_dim must be >= 3, got {space_dim}")
    if space_dim == 3 and qn.l == 0:
        raise SingularCaseError(
            "the general shift formula is singular in D=3 for l=0; "
            "use shift_1s or shift_2s for the regularized s-state values"
        )
    beta, beta_p = d.atomic()
    n = qn.n
    lbar = qn.l + (space_dim - 3) / 2.0
    nbar = n + (space_dim - 3) / 2.0
    value = (1.0 / n ** 3) * (
        (space_dim - 1) * (2 * beta - beta_p) / (4.0 * lbar * (lbar + 1.0) * (lbar + 0.5))
        + (2 * beta + beta_p) / (lbar + 0.5)
        - (beta + beta_p) / nbar
    )
    return ShiftResult(_shift_quantity(value), ShiftFormula.GENERAL_D, qn, d, space_dim)


def _xlogx(x: float, log_arg: float) -> float:
    """x * log(log_arg) with the x -> 0 limit value 0."""
    return 0.0 if x == 0.0 else x * math.log(log_arg)


def shift_1s(d: DeformationParams) -> ShiftResult:
    """Regularized ground-state shift, hartree.

    Delta E_1s = 3 beta + beta' - (2 beta - beta') [ln((2 beta - beta')/a0^2)
                 + 2 gamma + 1], with the b = 0 case taking the x ln x
    limit value 0.
    """
    beta, beta_p = d.atomic()
    bsq = max(0.0, 2.0 * beta - beta_p)
    value = 3.0 * beta + beta_p - _xlogx(bsq, bsq) - bsq * (2.0 * EULER_GAMMA + 1.0)
    return ShiftResult(_shift_quantity(value), ShiftFormula.REGULARIZED_1S,
                       QuantumNumbers(1, 0, 0), d)


def shift_2s(d: DeformationParams) -> ShiftResult:
    """Regularized 2s shift, hartree.

    Delta E_2s = (1/8) { (7 beta + 3 beta')/2 - (2 beta - beta')
                 [ln((2 beta - beta')/(4 a0^2)) + 2 gamma + 5/2] }.
    """
    beta, beta_p = d.atomic()
    bsq = max(0.0, 2.0 * beta - beta_p)
    value = 0.125 * ((7.0 * beta + 3.0 * beta_p) / 2.0
                     - _xlogx(bsq, bsq / 4.0) - bsq * (2.0 * EULER_GAMMA + 2.5))
    return ShiftResult(_shift_quantity(value), ShiftFormula.REGULARIZED_2S,
                       QuantumNumbers(2, 0, 0), d)


def _p4_element(a: QuantumNumbers, b: QuantumNumbers) -> float:
    """<a| p^4 |b> between bound states with equal (l, m), atomic units.

    Uses p^2 psi_n = 2 (E_n + 1/r) psi_n on both sides:
    <a|p^4|b> = 4 [E_a E_b delta_ab + (E_a + E_b) <1/r>_ab + <1/r^2>_ab].
    """
    sa, sb = hydrogen.radial_state(a), hydrogen.radial_state(b)
    ea = hydrogen.energy_level(a.n).value
    eb = hydrogen.energy_level(b.n).value
    overlap = 1.0 if a.n == b.n else 0.0
    inv_r = hydrogen.radial_overlap(sa, sb, -1)
    inv_r2 = hydrogen.radial_overlap(sa, sb, -2)
    return 4.0 * (ea * eb * overlap + (ea + eb) * inv_r + inv_r2)


def _coulomb_p2_element(a: QuantumNumbers, b: QuantumNumbers) -> float:
    """<a| (1/r) p^2 + p^2 (1/r) |b> between bound states with equal (l, m)."""
    sa, sb = hydrogen.radial_state(a), hydrogen.radial_state(b)
    ea = hydrogen.energy_level(a.n).value
    eb = hydrogen.energy_level(b.n).value
    inv_r = hydrogen.radial_overlap(sa, sb, -1)
    inv_r2 = hydrogen.radial_overlap(sa, sb, -2)
    return 2.0 * ((ea + eb) * inv_r + 2.0 * inv_r2)


def _regularized_coulomb_element(a: QuantumNumbers, b: QuantumNumbers, b_au: float) -> float:
    """<a| 1/sqrt(r^2 + b^2) - 1/r |b>, adaptive quadrature, atomic units."""
    if b_au == 0.0:
        return 0.0
    sa, sb = hydrogen.radial_state(a), hydrogen.radial_state(b)

    def integrand(r):
        return sa(r) * sb(r) * r * r * (1.0 / math.sqrt(r * r + b_au * b_au) - 1.0 / r)

    cut = 40.0 * max(a.n, b.n)
    head, _ = quad(integrand, 0.0, 1.0, points=[min(b_au, 1.0)], limit=300,
                   epsabs=1e-15, epsrel=1e-13)
    tail, _ = quad(integrand, 1.0, cut, limit=300, epsabs=1e-15, epsrel=1e-13)
    return head + tail


def vml_matrix_element(a: QuantumNumbers, b: QuantumNumbers, d: DeformationParams) -> Quantity:
    """<a| V_ML |b> for n, n' <= 2, hartree.

    V_ML is diagonal in (l, m).  Diagonal s-state entries reproduce the
    regularized closed forms (shift_1s / shift_2s); the 2p diagonal equals
    the general-formula shift.  The 1s-2s cross element evaluates the
    operator directly: beta' p^4 / 2 plus the (1/r) p^2 + p^2 (1/r) term via
    the bound-state substitution identity, plus the regularized Coulomb
    difference by quadrature.
    """
    if max(a.n, b.n) > 2:
        raise ValueError("V_ML elements are supported for n, n' <= 2 only")
    if a.l != b.l or a.m != b.m:
        return _shift_quantity(0.0)
    if a.n == b.n:
        if a.l == 0:
            closed = shift_1s(d) if a.n == 1 else shift_2s(d)
            return closed.value
        return shift_general(a, 3, d).value
    # cross element: only the (1,0,0)-(2,0,0) pair survives the l = m rule
    beta, beta_p = d.atomic()
    lam4 = (2.0 * beta - beta_p) / 4.0
    value = (0.5 * beta_p * _p4_element(a, b)
             + lam4 * _coulomb_p2_element(a, b)
             - _regularized_coulomb_element(a, b, math.sqrt(max(0.0, 2 * beta - beta_p))))
    return _shift_quantity(value)


def vml_matrix_n2(d: DeformationParams) -> PerturbationMatrix:
    """V_ML restricted to the n = 2 level: diagonal in the labeled basis.

    Entries (2s, 2p, 2p, 2p) in hartree, basis order |2,0,0>, |2,1,0>,
    |2,1,1>, |2,1,-1>.
    """
    s2s = shift_2s(d).value.value
    s2p = shift_general(QuantumNumbers(2, 1, 0), 3, d).value.value
    entries = np.diag([s2s, s2p, s2p, s2p])
    return PerturbationMatrix(N2_BASIS, entries, UnitSystem.ATOMIC)
