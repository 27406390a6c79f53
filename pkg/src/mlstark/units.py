"""Physical constants, unit-tagged quantities, and deformation parameterizations.

Unit convention
---------------
Internally every spectroscopic formula is evaluated in Gaussian-style atomic
units (hbar = m_e = 1, e^2 = q^2/(4 pi eps0) = 1, a0 = 1), where the hydrogen
levels are E_n = -1/(2 n^2) hartree.  Conversion to SI happens at the API
boundary only.

The quadratic Stark expressions produced by the bound chain have the shape
c * length^3 * |E|^2.  Those are energies (joules) only after multiplying by
4 pi eps0 once |E| is expressed in V/m; that single factor is the central
unit contract of this module (see :func:`quadratic_energy_si`).  Linear Stark
expressions e * length * |E| are already joules in SI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Dimension(Enum):
    ENERGY = "energy"
    LENGTH = "length"
    LENGTH_SQUARED = "length^2"
    FIELD = "field"
    CHARGE = "charge"
    POLARIZABILITY_VOLUME = "polarizability-volume"
    DIMENSIONLESS = "dimensionless"


class UnitSystem(Enum):
    SI = "SI"
    ATOMIC = "atomic"


class DimensionError(TypeError):
    """Arithmetic attempted between incompatible dimensions or unit systems."""


_UNIT_LABELS = {
    (Dimension.ENERGY, UnitSystem.SI): "J",
    (Dimension.ENERGY, UnitSystem.ATOMIC): "hartree",
    (Dimension.LENGTH, UnitSystem.SI): "m",
    (Dimension.LENGTH, UnitSystem.ATOMIC): "a0",
    (Dimension.LENGTH_SQUARED, UnitSystem.SI): "m^2",
    (Dimension.LENGTH_SQUARED, UnitSystem.ATOMIC): "a0^2",
    (Dimension.FIELD, UnitSystem.SI): "V/m",
    (Dimension.FIELD, UnitSystem.ATOMIC): "E_h/(e*a0)",
    (Dimension.CHARGE, UnitSystem.SI): "C",
    (Dimension.CHARGE, UnitSystem.ATOMIC): "e",
    (Dimension.POLARIZABILITY_VOLUME, UnitSystem.SI): "m^3",
    (Dimension.POLARIZABILITY_VOLUME, UnitSystem.ATOMIC): "a0^3",
    (Dimension.DIMENSIONLESS, UnitSystem.SI): "1",
    (Dimension.DIMENSIONLESS, UnitSystem.ATOMIC): "1",
}


@dataclass(frozen=True)
class Quantity:
    """A real value tagged with a dimension and a unit system.

    Supports addition/subtraction between matching tags, scaling by bare
    numbers, and ratios of matching tags (returning a bare float).  Anything
    that would require a dimension algebra raises :class:`DimensionError`;
    this is deliberately not a general unit library.
    """

    value: float
    dimension: Dimension
    system: UnitSystem

    @property
    def unit(self) -> str:
        return _UNIT_LABELS[(self.dimension, self.system)]

    def _check_compatible(self, other: "Quantity") -> None:
        if not isinstance(other, Quantity):
            raise DimensionError(f"expected Quantity, got {type(other).__name__}")
        if other.dimension is not self.dimension or other.system is not self.system:
            raise DimensionError(
                f"incompatible quantities: {self.dimension.value} [{self.system.value}] "
                f"vs {other.dimension.value} [{other.system.value}]"
            )

    def __add__(self, other: "Quantity") -> "Quantity":
        self._check_compatible(other)
        return Quantity(self.value + other.value, self.dimension, self.system)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._check_compatible(other)
        return Quantity(self.value - other.value, self.dimension, self.system)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.dimension, self.system)

    def __mul__(self, factor):
        if isinstance(factor, Quantity):
            raise DimensionError("product of two quantities is not supported")
        return Quantity(self.value * float(factor), self.dimension, self.system)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            self._check_compatible(other)
            return self.value / other.value
        return Quantity(self.value / float(other), self.dimension, self.system)

    def __abs__(self) -> "Quantity":
        return Quantity(abs(self.value), self.dimension, self.system)


@dataclass(frozen=True)
class PhysicalConstants:
    """Frozen CODATA 2018 constant set (SI)."""

    electron_charge: float        # C
    bohr_radius: float            # m
    vacuum_permittivity_factor: float  # 4*pi*eps0, C^2 N^-1 m^-2
    electron_mass: float          # kg
    hartree: float                # J
    reduced_planck: float         # J s

    def __post_init__(self):
        for name in ("electron_charge", "bohr_radius", "vacuum_permittivity_factor",
                     "electron_mass", "hartree", "reduced_planck"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"constant {name} must be strictly positive")


# CODATA 2018 values, frozen in source for bit-reproducible output.
_CODATA_2018 = PhysicalConstants(
    electron_charge=1.602176634e-19,          # exact by SI definition
    bohr_radius=5.29177210903e-11,
    vacuum_permittivity_factor=4.0 * math.pi * 8.8541878128e-12,
    electron_mass=9.1093837015e-31,
    hartree=4.3597447222071e-18,
    reduced_planck=1.054571817e-34,
)


def constants() -> PhysicalConstants:
    """Return the frozen CODATA 2018 constant set."""
    return _CODATA_2018


@dataclass(frozen=True)
class DeformationParams:
    """Deformed-algebra parameters (beta, beta') in m^2 under the hbar = 1 reading.

    Construction enforces beta, beta' >= 0 and 2*beta - beta' >= 0 (the square
    of the Coulomb regularization scale b), which is equivalent to eta >= 1/3.
    beta = beta' = 0 is admitted as the undeformed limit.
    """

    beta: float
    beta_prime: float

    def __post_init__(self):
        if self.beta < 0.0 or self.beta_prime < 0.0:
            raise ValueError("deformation parameters must be nonnegative")
        scale = self.beta + self.beta_prime
        # tolerate rounding noise from the (delta_x, eta) parameterization
        if 2.0 * self.beta - self.beta_prime < -1e-12 * scale:
            raise ValueError(
                "2*beta - beta' must be nonnegative (requires eta >= 1/3); "
                f"got beta={self.beta!r}, beta_prime={self.beta_prime!r}"
            )

    @property
    def b_squared(self) -> float:
        """Regularization scale squared, b^2 = 2*beta - beta' (m^2), clamped at 0."""
        return max(0.0, 2.0 * self.beta - self.beta_prime)

    @property
    def b(self) -> float:
        """Coulomb regularization length b = sqrt(2*beta - beta') (m)."""
        return math.sqrt(self.b_squared)

    @property
    def delta_x_min(self) -> float:
        """Minimum position uncertainty sqrt(beta + beta') (m)."""
        return math.sqrt(self.beta + self.beta_prime)

    def atomic(self) -> tuple[float, float]:
        """(beta, beta') in units of a0^2."""
        a0sq = _CODATA_2018.bohr_radius ** 2
        return self.beta / a0sq, self.beta_prime / a0sq


@dataclass(frozen=True)
class PhenomenologyParams:
    """Minimum length delta_x_min (m) and the mixing parameter eta in [1/3, 1]."""

    delta_x_min: float
    eta: float

    def __post_init__(self):
        if self.delta_x_min < 0.0:
            raise ValueError("delta_x_min must be nonnegative")
        if not (1.0 / 3.0 - 1e-12 <= self.eta <= 1.0 + 1e-12):
            raise ValueError(f"eta must lie in [1/3, 1], got {self.eta!r}")


def from_phenomenology(p: PhenomenologyParams) -> DeformationParams:
    """Map (delta_x_min, eta) to (beta, beta'): beta = eta*dx^2, beta' = (1-eta)*dx^2."""
    dx2 = p.delta_x_min ** 2
    return DeformationParams(beta=p.eta * dx2, beta_prime=(1.0 - p.eta) * dx2)


def to_phenomenology(d: DeformationParams) -> PhenomenologyParams:
    """Inverse map; undefined (rejected) at beta = beta' = 0."""
    total = d.beta + d.beta_prime
    if total <= 0.0:
        raise ValueError("eta is undefined for beta = beta' = 0")
    return PhenomenologyParams(delta_x_min=math.sqrt(total), eta=d.beta / total)


def quadratic_energy_si(expr_value: Quantity, field: Quantity) -> Quantity:
    """Resolve a quadratic-Stark expression c * length^3 * |E|^2 to joules.

    ``expr_value`` carries the c * length^3 part (dimension
    polarizability-volume, in a0^3 for the atomic system or m^3 for SI) and
    ``field`` the magnitude |E| in V/m.  The result is
    4*pi*eps0 * c * L^3 * |E|^2, the unique convention under which the
    Gaussian-style bound expressions become SI energies.
    """
    if expr_value.dimension is not Dimension.POLARIZABILITY_VOLUME:
        raise DimensionError(
            f"expected a polarizability-volume expression, got {expr_value.dimension.value}"
        )
    if field.dimension is not Dimension.FIELD or field.system is not UnitSystem.SI:
        raise DimensionError("field must be an SI field strength in V/m")
    c = _CODATA_2018
    volume = expr_value.value
    if expr_value.system is UnitSystem.ATOMIC:
        volume *= c.bohr_radius ** 3
    joules = c.vacuum_permittivity_factor * volume * field.value ** 2
    return Quantity(joules, Dimension.ENERGY, UnitSystem.SI)


def energy_in(q: Quantity, unit: str) -> float:
    """Numeric value of an energy quantity in 'J', 'eV' or 'hartree'."""
    if q.dimension is not Dimension.ENERGY:
        raise DimensionError(f"not an energy: {q.dimension.value}")
    c = _CODATA_2018
    joules = q.value * c.hartree if q.system is UnitSystem.ATOMIC else q.value
    if unit == "J":
        return joules
    if unit == "eV":
        return joules / c.electron_charge
    if unit == "hartree":
        return joules / c.hartree
    raise ValueError(f"unknown energy unit {unit!r}")


def field_to_atomic(field_v_per_m: float) -> float:
    """Field strength in atomic units E_h/(e*a0)."""
    c = _CODATA_2018
    return field_v_per_m * c.electron_charge * c.bohr_radius / c.hartree
