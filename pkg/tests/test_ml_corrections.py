import numpy as np
import pytest

from mlstark import hydrogen, ml_corrections
from mlstark.hydrogen import QuantumNumbers
from mlstark.ml_corrections import (ShiftFormula, SingularCaseError, shift_1s, shift_2s,
                                    shift_general, vml_matrix_element, vml_matrix_n2)
from mlstark.oracle import deformation_from_atomic
from mlstark.units import DeformationParams

ZERO = DeformationParams(0.0, 0.0)
GENERIC = deformation_from_atomic(3e-4, 2e-4)


class TestShiftGeneral:
    def test_zero_deformation(self):
        r = shift_general(QuantumNumbers(2, 1, 0), 3, ZERO)
        assert r.value.value == 0.0

    def test_singular_case_d3_l0(self):
        with pytest.raises(SingularCaseError, match="shift_1s"):
            shift_general(QuantumNumbers(2, 0, 0), 3, GENERIC)

    def test_d4_l0_finite(self):
        r = shift_general(QuantumNumbers(2, 0, 0), 4, GENERIC)
        assert np.isfinite(r.value.value)

    def test_finite_for_all_supported_states(self):
        for space_dim in (3, 4, 5, 6):
            for n in range(1, 6):
                for l in range(n):
                    if space_dim == 3 and l == 0:
                        continue
                    r = shift_general(QuantumNumbers(n, l, 0), space_dim, GENERIC)
                    assert np.isfinite(r.value.value), (n, l, space_dim)

    def test_joint_linearity(self):
        r1 = shift_general(QuantumNumbers(2, 1, 0), 3, GENERIC)
        r2 = shift_general(QuantumNumbers(2, 1, 0), 3,
                           DeformationParams(2 * GENERIC.beta, 2 * GENERIC.beta_prime))
        assert r2.value.value == pytest.approx(2 * r1.value.value, rel=1e-12)

    def test_2p_value_beta_only(self):
        # at D = 3, n = 2, l = 1 the shift collapses to 7 beta / 48
        beta_au = 3e-4
        r = shift_general(QuantumNumbers(2, 1, 0), 3, deformation_from_atomic(beta_au, 2e-4))
        assert r.value.value == pytest.approx(7 * beta_au / 48, rel=1e-12)

    def test_result_metadata(self):
        r = shift_general(QuantumNumbers(3, 2, 1), 4, GENERIC)
        assert r.formula is ShiftFormula.GENERAL_D
        assert r.space_dim == 4


class TestSStateShifts:
    def test_zero_limit(self):
        assert shift_1s(ZERO).value.value == 0.0
        assert shift_2s(ZERO).value.value == 0.0

    def test_positive_at_eta_one(self):
        d = deformation_from_atomic(1e-6, 0.0)
        assert shift_1s(d).value.value > 0.0
        assert shift_2s(d).value.value > 0.0

    def test_b_zero_branch_ratio(self):
        # at eta = 1/3 the log terms vanish: 2s/1s = (1/8)(7b+3b')/(2(3b+b'))
        beta_au = 5e-4
        d = deformation_from_atomic(beta_au, 2 * beta_au)
        expected = 0.125 * (7 * beta_au + 6 * beta_au) / (2 * (3 * beta_au + 2 * beta_au))
        assert shift_2s(d).value.value / shift_1s(d).value.value == pytest.approx(
            expected, rel=1e-12)

    def test_continuity_at_b_zero(self):
        # shrink b^2 toward zero at fixed beta + beta': residual decreases monotonically
        total = 6e-4
        limit = shift_1s(deformation_from_atomic(total / 3, 2 * total / 3)).value.value
        residuals = []
        for eps in (1e-6, 1e-8, 1e-10, 1e-12):
            beta = (total + eps) / 3.0
            d = deformation_from_atomic(beta, total - beta)
            residuals.append(abs(shift_1s(d).value.value - limit))
        assert all(r2 < r1 for r1, r2 in zip(residuals, residuals[1:]))

    def test_rejects_negative_b_squared(self):
        with pytest.raises(ValueError):
            shift_1s(DeformationParams(1e-36, 5e-36))


class TestVmlElements:
    def test_l_mismatch_zero(self):
        elem = vml_matrix_element(QuantumNumbers(2, 1, 0), QuantumNumbers(2, 0, 0), GENERIC)
        assert elem.value == 0.0

    def test_m_mismatch_zero(self):
        elem = vml_matrix_element(QuantumNumbers(2, 1, 1), QuantumNumbers(2, 1, 0), GENERIC)
        assert elem.value == 0.0

    def test_2s_diagonal_equals_closed_form(self):
        elem = vml_matrix_element(QuantumNumbers(2, 0, 0), QuantumNumbers(2, 0, 0), GENERIC)
        assert elem.value == shift_2s(GENERIC).value.value

    def test_1s_diagonal_equals_closed_form(self):
        elem = vml_matrix_element(QuantumNumbers(1, 0, 0), QuantumNumbers(1, 0, 0), GENERIC)
        assert elem.value == shift_1s(GENERIC).value.value

    @pytest.mark.parametrize("m", [-1, 0, 1])
    def test_2p_diagonal_matches_general_formula(self, m):
        elem = vml_matrix_element(QuantumNumbers(2, 1, m), QuantumNumbers(2, 1, m), GENERIC)
        ref = shift_general(QuantumNumbers(2, 1, m), 3, GENERIC).value.value
        assert elem.value == pytest.approx(ref, rel=1e-10)

    def test_2p_diagonal_from_operator_expectations(self):
        # independent route: assemble the l >= 1 operator from moment expectations
        beta, beta_p = GENERIC.atomic()
        qn = QuantumNumbers(2, 1, 0)
        energy = hydrogen.energy_level(2).value
        inv_r = hydrogen.expectation_r_power(qn, -1)
        inv_r2 = hydrogen.expectation_r_power(qn, -2)
        inv_r3 = hydrogen.expectation_r_power(qn, -3)
        p4 = 4 * (energy ** 2 + 2 * energy * inv_r + inv_r2)
        coulomb_p2 = 4 * (energy * inv_r + inv_r2)
        operator_route = (0.5 * beta_p * p4
                          + 0.25 * (2 * beta - beta_p) * (coulomb_p2 + 2 * inv_r3))
        ref = shift_general(qn, 3, GENERIC).value.value
        assert operator_route == pytest.approx(ref, rel=1e-10)

    def test_1s_2s_cross_element_finite_and_symmetric(self):
        a, b = QuantumNumbers(1, 0, 0), QuantumNumbers(2, 0, 0)
        e_ab = vml_matrix_element(a, b, GENERIC).value
        e_ba = vml_matrix_element(b, a, GENERIC).value
        assert np.isfinite(e_ab) and e_ab != 0.0
        assert e_ab == pytest.approx(e_ba, rel=1e-10)

    def test_rejects_n3(self):
        with pytest.raises(ValueError):
            vml_matrix_element(QuantumNumbers(3, 0, 0), QuantumNumbers(1, 0, 0), GENERIC)


class TestVmlMatrixN2:
    def test_diagonal_and_symmetric(self):
        m = vml_matrix_n2(GENERIC)
        off = m.entries - np.diag(np.diag(m.entries))
        assert np.all(off == 0.0)
        assert np.array_equal(m.entries, m.entries.T)

    def test_zero_deformation_zero_matrix(self):
        assert np.all(vml_matrix_n2(ZERO).entries == 0.0)

    def test_entries_in_labeled_order(self):
        m = vml_matrix_n2(GENERIC)
        assert m.basis == ("|2,0,0>", "|2,1,0>", "|2,1,1>", "|2,1,-1>")
        assert m.entries[0, 0] == shift_2s(GENERIC).value.value
        s2p = shift_general(QuantumNumbers(2, 1, 0), 3, GENERIC).value.value
        assert np.allclose(np.diag(m.entries)[1:], s2p, rtol=1e-14)

    def test_2s_entry_differs_from_2p(self):
        m = vml_matrix_n2(GENERIC)
        assert m.entries[0, 0] != m.entries[1, 1]


class TestShiftLimitSequence:
    def test_all_shifts_vanish_with_deformation(self):
        values = []
        for k in (4, 6, 8, 10):
            d = deformation_from_atomic(10.0 ** -k, 0.5 * 10.0 ** -k)
            values.append((abs(shift_1s(d).value.value),
                           abs(shift_2s(d).value.value),
                           abs(shift_general(QuantumNumbers(2, 1, 0), 3, d).value.value)))
        for i in range(3):
            seq = [v[i] for v in values]
            assert all(b < a for a, b in zip(seq, seq[1:]))
            # s-state shifts carry a |ln beta| factor, so the floor is loose
            assert seq[-1] < 1e-7
