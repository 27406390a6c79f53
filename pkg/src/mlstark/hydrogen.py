"""Unperturbed hydrogen data in atomic units.

Bound-state energies, radial wavefunctions R_nl (real, positive near r -> 0+,
which fixes the sign of every off-diagonal matrix element used downstream),
closed-form radial moments <r^k>, and the z matrix elements consumed by the
degenerate n = 2 Stark analysis.

Radial functions are represented exactly as polynomial * exp(-r/n), with the
associated Laguerre part generated by the stable three-term forward
recurrence.  Matrix elements between bound states therefore reduce to exact
Gamma-function sums, independent of any quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .units import Dimension, Quantity, UnitSystem

_MOMENT_POWERS = (-3, -2, -1, 1, 2)


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    """Hydrogen state labels (n, l, m) with 0 <= l <= n-1 and |m| <= l."""

    n: int
    l: int
    m: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"principal quantum number must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError(f"orbital quantum number l={self.l} invalid for n={self.n}")
        if abs(self.m) > self.l:
            raise ValueError(f"magnetic quantum number m={self.m} invalid for l={self.l}")


def _laguerre_coeffs(k: int, alpha: float) -> np.ndarray:
    """Coefficients of the generalized Laguerre polynomial L_k^alpha.

    Forward three-term recurrence on coefficient arrays (index = power of x):
    (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}.
    """
    prev = np.array([1.0])
    if k == 0:
        return prev
    cur = np.array([1.0 + alpha, -1.0])
    for j in range(1, k):
        nxt = np.zeros(j + 2)
        nxt[: j + 1] += (2 * j + 1 + alpha) * cur
        nxt[1: j + 2] -= cur
        nxt[: j] -= (j + alpha) * prev
        prev, cur = cur, nxt / (j + 1)
    return cur


@dataclass(frozen=True)
class RadialState:
    """Radial factor R_nl(r) = sum_k coeffs[k] r^k * exp(-r/n), r in a0.

    ``normalization`` is the overall positive constant already folded into
    ``coeffs``; it is kept for inspection.
    """

    qn: QuantumNumbers
    normalization: float
    coeffs: np.ndarray = field(repr=False)  # power-of-r coefficients, index 0 -> r^0
    decay: float                             # exponential rate, 1/n

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    def __call__(self, r):
        return np.polynomial.polynomial.polyval(r, self.coeffs) * np.exp(-self.decay * np.asarray(r, dtype=float))

    def derivative(self, order: int = 1) -> "RadialState":
        """Exact derivative, still in polynomial * exp(-r/n) form."""
        state = self
        for _ in range(order):
            poly_d = np.polynomial.polynomial.polyder(state.coeffs)
            c = np.zeros(len(state.coeffs) + 1)
            c[: len(poly_d)] += poly_d
            c[: len(state.coeffs)] -= state.decay * state.coeffs
            # trailing zero from the +1 sizing is harmless; trim it
            while len(c) > 1 and c[-1] == 0.0:
                c = c[:-1]
            state = RadialState(state.qn, state.normalization, c, state.decay)
        return state


def radial_state(qn: QuantumNumbers) -> RadialState:
    """Build R_nl with the positive-near-origin phase convention."""
    n, l = qn.n, qn.l
    norm = math.sqrt((2.0 / n) ** 3 * math.factorial(n - l - 1)
                     / (2.0 * n * math.factorial(n + l)))
    lag = _laguerre_coeffs(n - l - 1, 2 * l + 1)
    # substitute x = 2r/n and attach the (2r/n)^l prefactor
    scale = 2.0 / n
    coeffs = np.zeros(l + len(lag))
    for j, cj in enumerate(lag):
        coeffs[l + j] = norm * cj * scale ** (l + j)
    return RadialState(qn, norm, coeffs, 1.0 / n)


def poly_exp_integral(coeffs: np.ndarray, decay: float) -> float:
    """Exact value of integral_0^inf (sum_k coeffs[k] r^k) exp(-decay*r) dr."""
    return sum(c * math.gamma(k + 1) / decay ** (k + 1)
               for k, c in enumerate(coeffs) if c != 0.0)


def radial_overlap(a: RadialState, b: RadialState, power: int) -> float:
    """Exact integral_0^inf R_a R_b r^(2+power) dr (atomic units).

    ``power`` is the radial operator power; the r^2 measure is included.
    Requires the combined polynomial power to stay nonnegative.
    """
    prod = np.convolve(a.coeffs, b.coeffs)
    shifted = np.zeros(max(1, len(prod) + 2 + power))
    for k, c in enumerate(prod):
        idx = k + 2 + power
        if idx < 0:
            if c != 0.0:
                raise ValueError(f"divergent radial integral for power {power}")
            continue
        shifted[idx] += c
    return poly_exp_integral(shifted, a.decay + b.decay)


def energy_level(n: int) -> Quantity:
    """Bound-state energy E_n = -1/(2 n^2) hartree."""
    if n < 1:
        raise ValueError(f"principal quantum number must be >= 1, got {n}")
    return Quantity(-0.5 / n ** 2, Dimension.ENERGY, UnitSystem.ATOMIC)


def expectation_r_power(qn: QuantumNumbers, k: int) -> float:
    """Closed-form <r^k> for k in {-3, -2, -1, 1, 2}, in units of a0^k.

    k = -3 requires l >= 1 (the integral diverges for s states).
    """
    if k not in _MOMENT_POWERS:
        raise ValueError(f"power {k} not supported; choose from {_MOMENT_POWERS}")
    n, l = qn.n, qn.l
    if k == -3 and l == 0:
        raise ValueError("<r^-3> diverges for l = 0")
    if k == 1:
        return 0.5 * (3 * n * n - l * (l + 1))
    if k == 2:
        return 0.5 * n * n * (5 * n * n + 1 - 3 * l * (l + 1))
    if k == -1:
        return 1.0 / n ** 2
    if k == -2:
        return 1.0 / (n ** 3 * (l + 0.5))
    return 1.0 / (n ** 3 * l * (l + 0.5) * (l + 1))


def _cos_theta_factor(l_low: int, m: int) -> float:
    """<Y_{l_low+1, m} | cos(theta) | Y_{l_low, m}>."""
    l_up = l_low + 1
    return math.sqrt((l_up * l_up - m * m) / ((2.0 * l_low + 1) * (2.0 * l_up + 1)))


def z_matrix_element(a: QuantumNumbers, b: QuantumNumbers) -> Quantity:
    """<a| z |b> in units of a0.

    Zero unless m_a = m_b and l_a = l_b +- 1 (parity and m selection).  Signs
    follow the positive-near-origin radial phase; in particular
    <2,1,0| z |2,0,0> = -3 a0.
    """
    if a.m != b.m or abs(a.l - b.l) != 1:
        return Quantity(0.0, Dimension.LENGTH, UnitSystem.ATOMIC)
    radial = radial_overlap(radial_state(a), radial_state(b), 1)
    angular = _cos_theta_factor(min(a.l, b.l), a.m)
    return Quantity(radial * angular, Dimension.LENGTH, UnitSystem.ATOMIC)
