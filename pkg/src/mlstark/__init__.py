"""Hydrogen spectroscopy under a minimal-length deformed Heisenberg algebra.

Library layout:

- :mod:`mlstark.units` -- constants, unit-tagged quantities, (beta, beta')
  and (delta_x_min, eta) parameterizations, SI conversion rules.
- :mod:`mlstark.hydrogen` -- unperturbed levels, radial states, moments and
  z matrix elements.
- :mod:`mlstark.ml_corrections` -- minimum-length level shifts and the V_ML
  matrix elements.
- :mod:`mlstark.stark` -- ordinary and minimum-length Stark effect: bounds,
  n = 2 matrices, eigen-decomposition, sigma/chi estimators.
- :mod:`mlstark.oracle` -- independent quadrature and finite-difference
  verification engine.
- :mod:`mlstark.cli` -- the ``mlstark`` command.
"""

from .hydrogen import QuantumNumbers, energy_level, expectation_r_power, z_matrix_element
from .matrices import EigenDecomposition, PerturbationMatrix, diagonalize
from .ml_corrections import (ShiftResult, SingularCaseError, shift_1s, shift_2s,
                             shift_general, vml_matrix_element, vml_matrix_n2)
from .stark import (FieldSpec, chi_correction, polarizability_bound,
                    quadratic_shift_bound, quadratic_shift_bound_ml, sigma_correction,
                    simultaneity_check, stark_matrix_n2, stark_matrix_n2_ml,
                    z_sq_expectation_ml)
from .units import (DeformationParams, Dimension, PhenomenologyParams, PhysicalConstants,
                    Quantity, UnitSystem, constants, from_phenomenology,
                    quadratic_energy_si, to_phenomenology)

__version__ = "0.1.0"

__all__ = [
    "QuantumNumbers", "energy_level", "expectation_r_power", "z_matrix_element",
    "EigenDecomposition", "PerturbationMatrix", "diagonalize",
    "ShiftResult", "SingularCaseError", "shift_1s", "shift_2s", "shift_general",
    "vml_matrix_element", "vml_matrix_n2",
    "FieldSpec", "chi_correction", "polarizability_bound", "quadratic_shift_bound",
    "quadratic_shift_bound_ml", "sigma_correction", "simultaneity_check",
    "stark_matrix_n2", "stark_matrix_n2_ml", "z_sq_expectation_ml",
    "DeformationParams", "Dimension", "PhenomenologyParams", "PhysicalConstants",
    "Quantity", "UnitSystem", "constants", "from_phenomenology",
    "quadratic_energy_si", "to_phenomenology",
    "__version__",
]
