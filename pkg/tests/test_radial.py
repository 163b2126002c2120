"""Series solver: indicial roots, recurrence, resonances, residuals."""

from fractions import Fraction
from math import factorial

import pytest

from distpf import (
    FreeParameterSetToZero,
    LogObstruction,
    PhysicalUnits,
    PotentialModel,
    RadialSeries,
    frobenius,
    indicial_roots,
    normalizable_at_origin,
    radial_residuals,
)


class TestIndicialRoots:
    @pytest.mark.parametrize("ell, expected", [(0, (0, -1)), (1, (1, -2)), (3, (3, -4))])
    def test_values(self, ell, expected):
        assert indicial_roots(ell) == expected

    def test_root_coefficient_vanishing_pattern(self):
        # D(k) = (k+s+1)(k+s) - ell(ell+1) vanishes only at k = 0 for the
        # upper root and only at k in {0, 2*ell+1} for the lower one.
        for ell in range(11):
            up, down = indicial_roots(ell)
            for k in range(1, 40):
                D_up = (k + up + 1) * (k + up) - ell * (ell + 1)
                D_down = (k + down + 1) * (k + down) - ell * (ell + 1)
                assert D_up != 0
                assert (D_down == 0) == (k == 2 * ell + 1)


class TestFrobenius:
    def test_coulomb_bound_state(self):
        res = frobenius(PotentialModel.coulomb(-2), 0, Fraction(-1), 0, 12)
        assert res.series.s == 1
        for k in range(13):
            assert res.series.coeffs[k] == Fraction((-1) ** k, factorial(k))
        assert res.resonance_report is None

    def test_free_particle_lower_root_is_cosine(self):
        E = Fraction(9)
        res = frobenius(PotentialModel.zero(), 0, E, -1, 10)
        assert res.resonance_report == FreeParameterSetToZero(1)
        for m in range(6):
            if 2 * m <= 10:
                assert res.series.coeffs[2 * m] == Fraction((-E) ** m, factorial(2 * m))
        assert all(res.series.coeffs[k] == 0 for k in range(1, 11, 2))

    def test_coulomb_lower_root_needs_logarithm(self):
        with pytest.raises(LogObstruction) as err:
            frobenius(PotentialModel.coulomb(-2), 0, Fraction(-1), -1, 8)
        assert err.value.order == 1

    def test_oscillator_ground_state(self):
        res = frobenius(PotentialModel(0, (0, 0, 1)), 0, Fraction(3), 0, 10)
        for m in range(6):
            if 2 * m <= 10:
                assert res.series.coeffs[2 * m] == Fraction(-1, 2) ** m / factorial(m)
        assert all(res.series.coeffs[k] == 0 for k in range(1, 11, 2))

    def test_lower_root_resonance_set_to_zero(self):
        for ell in range(4):
            res = frobenius(PotentialModel.zero(), ell, Fraction(2), -(ell + 1), 2 * ell + 5)
            assert res.resonance_report == FreeParameterSetToZero(2 * ell + 1)
            assert res.series.coeffs[2 * ell + 1] == 0

    def test_rejects_bad_root_and_order(self):
        with pytest.raises(ValueError):
            frobenius(PotentialModel.zero(), 1, Fraction(1), 0, 5)
        with pytest.raises(ValueError):
            frobenius(PotentialModel.zero(), 1, Fraction(1), 1, 0)

    def test_float_mode_propagates(self):
        res = frobenius(PotentialModel.zero(), 0, 2.0, -1, 6)
        assert not res.series.is_exact
        assert res.series.coeffs[2] == pytest.approx(-1.0)

    def test_units_rescale_equation(self):
        # with kappa = 1/2 the free equation is u'' = -2E u
        units = PhysicalUnits(Fraction(1, 2))
        res = frobenius(PotentialModel.zero(), 0, Fraction(1), -1, 4, units)
        assert res.series.coeffs[2] == Fraction(-1)

    def test_residuals_vanish_for_solutions(self, rng):
        for _ in range(25):
            ell = rng.randint(0, 3)
            root = rng.choice(indicial_roots(ell))
            V = PotentialModel(
                Fraction(rng.randint(-2, 2)) if root == ell else 0,
                tuple(Fraction(rng.randint(-2, 2)) for _ in range(rng.randint(0, 3))),
            )
            E = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            units = PhysicalUnits(Fraction(rng.randint(1, 3)))
            try:
                res = frobenius(V, ell, E, root, 9, units)
            except LogObstruction:
                continue
            R = RadialSeries(res.series.s - 1, res.series.coeffs)
            assert all(v == 0 for v in radial_residuals(V, ell, E, units, R))

    def test_residuals_flag_non_solutions(self):
        R = RadialSeries.exact(0, (1, 1))
        res = radial_residuals(PotentialModel.zero(), 0, Fraction(0), PhysicalUnits(), R)
        assert res[0] == 0 and res[1] != 0


class TestNormalizableAtOrigin:
    @pytest.mark.parametrize(
        "s, expected", [(-1, True), (-2, False), (0, True), (1, True), (-3, False)]
    )
    def test_values(self, s, expected):
        assert normalizable_at_origin(s) == expected

    def test_threshold_is_minus_three_halves(self):
        assert normalizable_at_origin(Fraction(-7, 5))
        assert not normalizable_at_origin(Fraction(-8, 5))
