import itertools

import pytest

from mlstark import hydrogen, oracle
from mlstark.hydrogen import QuantumNumbers, energy_level, expectation_r_power, z_matrix_element


def all_states(n_max):
    return [QuantumNumbers(n, l, m)
            for n in range(1, n_max + 1) for l in range(n) for m in range(-l, l + 1)]


class TestQuantumNumbers:
    def test_valid(self):
        QuantumNumbers(3, 2, -2)

    @pytest.mark.parametrize("n,l,m", [(0, 0, 0), (2, 2, 0), (2, -1, 0), (2, 1, 2)])
    def test_invalid(self, n, l, m):
        with pytest.raises(ValueError):
            QuantumNumbers(n, l, m)


class TestEnergyLevels:
    def test_ground_state(self):
        assert energy_level(1).value == -0.5

    def test_n2(self):
        assert energy_level(2).value == -0.125

    def test_level_gap(self):
        # E_2 - E_1 = 3/8 hartree = 3 e^2 / (8 a0)
        assert energy_level(2).value - energy_level(1).value == pytest.approx(3.0 / 8.0)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            energy_level(0)


class TestRadialStates:
    @pytest.mark.parametrize("qn", [QuantumNumbers(n, l, 0)
                                    for n in range(1, 5) for l in range(n)])
    def test_normalization_by_quadrature(self, qn):
        norm = oracle.radial_integral(lambda r: r * 0 + 1.0, qn)
        assert norm == pytest.approx(1.0, abs=1e-8)

    def test_positive_near_origin(self):
        for qn in (QuantumNumbers(1, 0, 0), QuantumNumbers(2, 0, 0),
                   QuantumNumbers(2, 1, 0), QuantumNumbers(3, 2, 0)):
            state = hydrogen.radial_state(qn)
            assert state(1e-4) > 0.0

    def test_derivative_matches_finite_difference(self):
        state = hydrogen.radial_state(QuantumNumbers(2, 0, 0))
        d1 = state.derivative()
        h = 1e-6
        for r in (0.3, 1.7, 5.0):
            fd = (state(r + h) - state(r - h)) / (2 * h)
            assert d1(r) == pytest.approx(fd, rel=1e-7, abs=1e-8)


class TestRadialMoments:
    def test_1s_inverse_r(self):
        assert expectation_r_power(QuantumNumbers(1, 0, 0), -1) == 1.0

    def test_1s_r_squared(self):
        # <r^2> = 3 a0^2, hence <z^2> = a0^2
        assert expectation_r_power(QuantumNumbers(1, 0, 0), 2) == 3.0

    def test_2p_inverse_cube_vs_quadrature(self):
        qn = QuantumNumbers(2, 1, 0)
        closed = expectation_r_power(qn, -3)
        numeric = oracle.radial_integral(lambda r: r ** -3.0, qn)
        assert numeric == pytest.approx(closed, rel=1e-8)

    def test_rejects_inverse_cube_for_s_states(self):
        with pytest.raises(ValueError):
            expectation_r_power(QuantumNumbers(2, 0, 0), -3)

    def test_rejects_unsupported_power(self):
        with pytest.raises(ValueError):
            expectation_r_power(QuantumNumbers(1, 0, 0), 3)

    @pytest.mark.parametrize("qn", [QuantumNumbers(n, l, 0)
                                    for n in range(1, 4) for l in range(n)])
    def test_kramers_recurrence(self, qn):
        # (k+1)/n^2 <r^k> - (2k+1) <r^(k-1)> + (k/4)[(2l+1)^2 - k^2] <r^(k-2)> = 0
        n, l = qn.n, qn.l

        def moment(k):
            if k == 0:
                return 1.0
            return expectation_r_power(qn, k)

        for k in (1, 2):
            residual = ((k + 1) / n ** 2 * moment(k) - (2 * k + 1) * moment(k - 1)
                        + 0.25 * k * ((2 * l + 1) ** 2 - k * k) * moment(k - 2))
            assert residual == pytest.approx(0.0, abs=1e-10)
        if l >= 1:
            k = -1
            residual = ((k + 1) / n ** 2 * moment(k) - (2 * k + 1) * moment(k - 1)
                        + 0.25 * k * ((2 * l + 1) ** 2 - k * k) * moment(k - 2))
            assert residual == pytest.approx(0.0, abs=1e-10)


class TestZMatrixElements:
    def test_2p0_2s_element(self):
        elem = z_matrix_element(QuantumNumbers(2, 1, 0), QuantumNumbers(2, 0, 0))
        assert elem.value == pytest.approx(-3.0, rel=1e-12)

    def test_2p_pm1_2s_zero(self):
        for m in (1, -1):
            elem = z_matrix_element(QuantumNumbers(2, 1, m), QuantumNumbers(2, 0, 0))
            assert elem.value == 0.0

    def test_ground_state_diagonal_zero(self):
        assert z_matrix_element(QuantumNumbers(1, 0, 0), QuantumNumbers(1, 0, 0)).value == 0.0

    def test_selection_rules_exhaustive_n3(self):
        for a, b in itertools.product(all_states(3), repeat=2):
            value = z_matrix_element(a, b).value
            if (a.l + b.l) % 2 == 0:
                assert value == 0.0, f"parity violated for {a}, {b}"
            if a.m != b.m:
                assert value == 0.0, f"m selection violated for {a}, {b}"

    def test_symmetric(self):
        a, b = QuantumNumbers(3, 1, 0), QuantumNumbers(2, 0, 0)
        assert z_matrix_element(a, b).value == pytest.approx(
            z_matrix_element(b, a).value, rel=1e-14)

    def test_cross_n_against_quadrature(self):
        a, b = QuantumNumbers(2, 1, 0), QuantumNumbers(1, 0, 0)
        closed = z_matrix_element(a, b).value
        sa, sb = hydrogen.radial_state(a), hydrogen.radial_state(b)
        numeric = oracle._integrate(lambda r: sa(r) * sb(r) * r ** 3,
                                    oracle._seed_points(2), oracle.DEFAULT_SPEC)
        import math
        assert closed == pytest.approx(numeric / math.sqrt(3.0), rel=1e-10)
