import math

import numpy as np
import pytest

from mlstark import ml_corrections, stark, units
from mlstark.matrices import PerturbationMatrix, diagonalize
from mlstark.oracle import deformation_from_atomic
from mlstark.stark import (FieldSpec, chi_correction, polarizability_bound,
                           quadratic_shift_bound, quadratic_shift_bound_ml,
                           sigma_correction, simultaneity_check, stark_matrix_n2,
                           stark_matrix_n2_ml, z_sq_expectation_ml)
from mlstark.units import (DeformationParams, Dimension, PhenomenologyParams, Quantity,
                           UnitSystem, from_phenomenology)

FIELD = FieldSpec(1e7)
REFERENCE = PhenomenologyParams(2.86e-17, 1.0)
REFERENCE_D = from_phenomenology(REFERENCE)
GENERIC_D = deformation_from_atomic(3e-4, 2e-4)
ETA_THIRD = PhenomenologyParams(2.86e-17, 1.0 / 3.0)


class TestQuadraticBound:
    def test_reference_value(self):
        assert quadratic_shift_bound(FIELD).value == pytest.approx(-4.390e-27, rel=2e-3)

    def test_zero_field(self):
        assert quadratic_shift_bound(FieldSpec(0.0)).value == 0.0

    def test_quadratic_scaling(self):
        b1 = quadratic_shift_bound(FieldSpec(2e6)).value
        b2 = quadratic_shift_bound(FieldSpec(4e6)).value
        assert b2 == pytest.approx(4 * b1, rel=1e-14)

    def test_rejects_negative_field(self):
        with pytest.raises(ValueError):
            FieldSpec(-1.0)


class TestPolarizabilityBound:
    def test_value(self):
        q = polarizability_bound()
        assert q.value == pytest.approx(16.0 / 3.0)
        assert q.value > 0

    def test_consistent_with_quadratic_bound(self):
        half_alpha = -0.5 * polarizability_bound().value
        expr = Quantity(half_alpha, Dimension.POLARIZABILITY_VOLUME, UnitSystem.ATOMIC)
        via_alpha = units.quadratic_energy_si(expr, FIELD.quantity())
        assert via_alpha.value == pytest.approx(quadratic_shift_bound(FIELD).value,
                                                rel=1e-14)


class TestZSqExpectation:
    def test_undeformed(self):
        assert z_sq_expectation_ml(DeformationParams(0.0, 0.0)).value == 1.0

    def test_eta_third(self):
        assert z_sq_expectation_ml(from_phenomenology(ETA_THIRD)).value == 1.0

    def test_generic(self):
        beta, beta_p = GENERIC_D.atomic()
        expected = 1.0 + 0.5 * (2 * beta - beta_p)
        assert z_sq_expectation_ml(GENERIC_D).value == pytest.approx(expected, rel=1e-12)


class TestMlQuadraticBound:
    def test_reduces_to_ordinary(self):
        zero = DeformationParams(0.0, 0.0)
        assert quadratic_shift_bound_ml(FIELD, zero).value == \
            quadratic_shift_bound(FIELD).value

    def test_eta_third_equals_ordinary(self):
        d = from_phenomenology(ETA_THIRD)
        assert quadratic_shift_bound_ml(FIELD, d).value == \
            quadratic_shift_bound(FIELD).value

    def test_more_negative_for_eta_above_third(self):
        for eta in (0.4, 0.7, 1.0):
            d = from_phenomenology(PhenomenologyParams(2.86e-17, eta))
            assert quadratic_shift_bound_ml(FIELD, d).value < \
                quadratic_shift_bound(FIELD).value

    def test_gap_equals_sigma(self):
        gap = quadratic_shift_bound_ml(FIELD, REFERENCE_D).value \
            - quadratic_shift_bound(FIELD).value
        assert gap == pytest.approx(sigma_correction(FIELD, REFERENCE).value, rel=1e-12)


class TestCouplingMatrices:
    def test_sparsity_and_value(self):
        m = stark_matrix_n2(FIELD)
        ref = -3.0 * units.constants().electron_charge * units.constants().bohr_radius * 1e7
        assert m.entries[0, 1] == m.entries[1, 0] == pytest.approx(ref)
        mask = np.ones((4, 4), dtype=bool)
        mask[0, 1] = mask[1, 0] = False
        assert np.all(m.entries[mask] == 0.0)

    def test_reference_magnitude(self):
        assert abs(stark_matrix_n2(FIELD).entries[0, 1]) == pytest.approx(2.542e-22,
                                                                          rel=2e-3)

    def test_zero_field(self):
        assert np.all(stark_matrix_n2(FieldSpec(0.0)).entries == 0.0)

    def test_trace_zero(self):
        assert np.trace(stark_matrix_n2(FIELD).entries) == 0.0
        assert np.trace(stark_matrix_n2_ml(FIELD, GENERIC_D).entries) == 0.0

    def test_ml_reduces_to_ordinary(self):
        zero = DeformationParams(0.0, 0.0)
        assert np.array_equal(stark_matrix_n2_ml(FIELD, zero).entries,
                              stark_matrix_n2(FIELD).entries)

    def test_ml_element_closed_form(self):
        c = units.constants()
        m = stark_matrix_n2_ml(FIELD, GENERIC_D)
        expected = -c.electron_charge * 1e7 * (
            3 * c.bohr_radius - GENERIC_D.b_squared / (8 * c.bohr_radius))
        assert m.entries[0, 1] == pytest.approx(expected, rel=1e-14)
        mask = np.ones((4, 4), dtype=bool)
        mask[0, 1] = mask[1, 0] = False
        assert np.all(m.entries[mask] == 0.0)

    def test_basis_labels(self):
        assert stark_matrix_n2(FIELD).basis == ("|2,0,0>", "|2,1,0>", "|2,1,1>", "|2,1,-1>")


class TestDiagonalize:
    def test_ordinary_spectrum(self):
        m = stark_matrix_n2(FIELD)
        eig = diagonalize(m)
        mag = abs(m.entries[0, 1])
        assert eig.eigenvalues[0] == pytest.approx(mag, rel=1e-12)
        assert eig.eigenvalues[1] == 0.0
        assert eig.eigenvalues[2] == 0.0
        assert eig.eigenvalues[3] == pytest.approx(-mag, rel=1e-12)

    def test_lowest_eigenvector_is_symmetric_combination(self):
        eig = diagonalize(stark_matrix_n2(FIELD))
        v = eig.eigenvectors[3]
        assert np.allclose(v, [1 / math.sqrt(2), 1 / math.sqrt(2), 0, 0], atol=1e-12)

    def test_upper_eigenvector_is_antisymmetric_combination(self):
        eig = diagonalize(stark_matrix_n2(FIELD))
        v = eig.eigenvectors[0]
        assert np.allclose(v, [1 / math.sqrt(2), -1 / math.sqrt(2), 0, 0], atol=1e-12)

    def test_ml_spectrum(self):
        c = units.constants()
        eig = diagonalize(stark_matrix_n2_ml(FIELD, GENERIC_D))
        mag = c.electron_charge * 1e7 * (3 * c.bohr_radius
                                         - GENERIC_D.b_squared / (8 * c.bohr_radius))
        assert eig.eigenvalues[0] == pytest.approx(mag, rel=1e-12)
        assert eig.eigenvalues[3] == pytest.approx(-mag, rel=1e-12)

    def test_zero_matrix(self):
        m = PerturbationMatrix(("a", "b"), np.zeros((2, 2)), UnitSystem.SI)
        eig = diagonalize(m)
        assert np.all(eig.eigenvalues == 0.0)

    def test_orthonormal_vectors(self):
        eig = diagonalize(stark_matrix_n2(FIELD))
        gram = eig.eigenvectors @ eig.eigenvectors.T
        assert np.allclose(gram, np.eye(4), atol=1e-12)

    def test_reconstruction(self):
        m = stark_matrix_n2_ml(FIELD, GENERIC_D)
        eig = diagonalize(m)
        rebuilt = sum(lam * np.outer(v, v) for lam, v in eig.pairs)
        scale = np.max(np.abs(m.entries))
        assert np.allclose(rebuilt, m.entries, atol=1e-12 * scale)

    def test_degenerate_subspace_projector(self):
        eig = diagonalize(stark_matrix_n2(FIELD))
        zero_vecs = eig.eigenvectors[1:3]
        projector = zero_vecs.T @ zero_vecs
        expected = np.diag([0.0, 0.0, 1.0, 1.0])
        assert np.allclose(projector, expected, atol=1e-12)

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError):
            PerturbationMatrix(("a", "b"), np.array([[0.0, 1.0], [0.5, 0.0]]),
                               UnitSystem.SI)

    def test_rejects_basis_length_mismatch(self):
        with pytest.raises(ValueError):
            PerturbationMatrix(("a",), np.zeros((2, 2)), UnitSystem.SI)

    def test_larger_block_fallback(self):
        entries = np.array([[2.0, 1.0, 0.5], [1.0, 1.0, 0.2], [0.5, 0.2, 0.0]])
        m = PerturbationMatrix(("x", "y", "z"), entries, UnitSystem.ATOMIC)
        eig = diagonalize(m)
        assert np.allclose(sorted(eig.eigenvalues), sorted(np.linalg.eigvalsh(entries)),
                           atol=1e-12)


class TestSigmaChi:
    def test_sigma_reference_value(self):
        assert sigma_correction(FIELD, REFERENCE).value == pytest.approx(-1.283e-39,
                                                                         rel=5e-3)

    def test_chi_reference_value(self):
        assert chi_correction(FIELD, REFERENCE).value == pytest.approx(-6.193e-36,
                                                                       rel=5e-3)

    def test_null_at_eta_third(self):
        assert sigma_correction(FIELD, ETA_THIRD).value == 0.0
        assert chi_correction(FIELD, ETA_THIRD).value == 0.0

    def test_proportional_to_eta_factor(self):
        s1 = sigma_correction(FIELD, REFERENCE).value
        c1 = chi_correction(FIELD, REFERENCE).value
        for eta in np.linspace(1.0 / 3.0, 1.0, 9):
            p = PhenomenologyParams(2.86e-17, float(eta))
            factor = (3 * eta - 1) / 2.0
            assert sigma_correction(FIELD, p).value == pytest.approx(
                s1 * factor, rel=1e-12, abs=1e-55)
            assert chi_correction(FIELD, p).value == pytest.approx(
                c1 * factor, rel=1e-12, abs=1e-52)

    def test_sigma_maximal_at_eta_one(self):
        mags = [abs(sigma_correction(FIELD, PhenomenologyParams(2.86e-17, e)).value)
                for e in np.linspace(1.0 / 3.0, 1.0, 15)]
        assert np.argmax(mags) == len(mags) - 1

    def test_chi_linear_in_field(self):
        c1 = chi_correction(FieldSpec(1e6), REFERENCE).value
        c2 = chi_correction(FieldSpec(1e7), REFERENCE).value
        assert c2 == pytest.approx(10 * c1, rel=1e-14)

    def test_chi_equals_eigenvalue_magnitude_difference(self):
        # upper branch: |ml eigenvalue| - |ordinary eigenvalue| = chi, exactly
        d = REFERENCE_D
        mag_ml = abs(diagonalize(stark_matrix_n2_ml(FIELD, d)).eigenvalues[0])
        mag = abs(diagonalize(stark_matrix_n2(FIELD)).eigenvalues[0])
        assert mag_ml - mag == pytest.approx(chi_correction(FIELD, REFERENCE).value,
                                             rel=1e-12)


class TestSimultaneity:
    def test_zero_without_deformation(self):
        assert simultaneity_check(FIELD, DeformationParams(0.0, 0.0)) == 0.0

    def test_zero_without_field(self):
        assert simultaneity_check(FieldSpec(0.0), REFERENCE_D) == 0.0

    def test_positive_generic(self):
        assert simultaneity_check(FIELD, REFERENCE_D) > 0.0

    def test_structure(self):
        # [diag, coupling] has exactly the coupling slots populated
        value = simultaneity_check(FIELD, GENERIC_D)
        c = units.constants()
        vml = ml_corrections.vml_matrix_n2(GENERIC_D).entries
        coupling = stark_matrix_n2_ml(FIELD, GENERIC_D).entries[0, 1] / c.hartree
        expected = math.sqrt(2.0) * abs(coupling) * abs(vml[0, 0] - vml[1, 1])
        assert value == pytest.approx(expected, rel=1e-12)
