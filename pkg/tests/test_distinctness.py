"""
Unit and property tests for macro/meso distinctness classification.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catsize.distinctness import classify, magnification_from_x, mesoscopic_diameter_um
from catsize.models import CatSizeError, DistinctnessKind, ErrorCodes, ResolutionCriterion


RANK = {
    DistinctnessKind.UNRESOLVABLE: 0,
    DistinctnessKind.MESOSCOPIC: 1,
    DistinctnessKind.MACROSCOPIC: 2,
}


class TestClassify:
    """Test classification against the human-eye criterion."""

    @pytest.mark.unit
    def test_macroscopic(self):
        assert classify(5e-4, 1.0).kind == DistinctnessKind.MACROSCOPIC

    @pytest.mark.unit
    def test_threshold_is_inclusive(self):
        assert classify(1.5e-4, 1.0).kind == DistinctnessKind.MACROSCOPIC

    @pytest.mark.unit
    def test_mesoscopic_reports_minimum_magnification(self):
        result = classify(5e-5, 1.0, available_magnification=10.0)
        assert result.kind == DistinctnessKind.MESOSCOPIC
        assert result.required_magnification == pytest.approx(3.0)

    @pytest.mark.unit
    def test_unresolvable_without_enough_magnification(self):
        assert classify(5e-5, 1.0, available_magnification=2.0).kind == DistinctnessKind.UNRESOLVABLE
        assert classify(5e-5, 1.0).kind == DistinctnessKind.UNRESOLVABLE

    @pytest.mark.unit
    def test_too_slow(self):
        """Displacements taking longer than the observation window are unresolvable."""
        assert classify(1.0, 2.0).kind == DistinctnessKind.UNRESOLVABLE

    @pytest.mark.unit
    def test_zero_displacement(self):
        assert classify(0.0, 1.0, available_magnification=1e6).kind == DistinctnessKind.UNRESOLVABLE

    @pytest.mark.unit
    def test_custom_criterion(self):
        criterion = ResolutionCriterion(min_resolvable_length=1e-2, max_observation_time=10.0)
        assert classify(5e-4, 5.0, criterion=criterion).kind == DistinctnessKind.UNRESOLVABLE
        assert classify(2e-2, 5.0, criterion=criterion).kind == DistinctnessKind.MACROSCOPIC

    @pytest.mark.unit
    @pytest.mark.parametrize("duration", [0.0, -1.0])
    def test_nonpositive_duration(self, duration):
        with pytest.raises(CatSizeError) as exc_info:
            classify(1e-4, duration)
        assert exc_info.value.code == ErrorCodes.NONPOSITIVE_DURATION

    @pytest.mark.unit
    def test_invalid_inputs(self):
        with pytest.raises(CatSizeError) as exc_info:
            classify(-1e-4, 1.0)
        assert exc_info.value.code == ErrorCodes.INVALID_VALUE
        with pytest.raises(CatSizeError):
            classify(1e-4, 1.0, available_magnification=0.5)


class TestXParameter:
    """Test the 5X micron particle helpers."""

    @pytest.mark.unit
    def test_magnification_from_x(self):
        assert magnification_from_x(0.2) == 5.0
        assert mesoscopic_diameter_um(0.3) == pytest.approx(1.5)

    @pytest.mark.unit
    def test_mesoscopic_particle_is_mesoscopic(self):
        x = 0.1
        diameter_cm = mesoscopic_diameter_um(x) * 1e-4
        result = classify(diameter_cm, 1.0, available_magnification=magnification_from_x(x))
        assert result.kind == DistinctnessKind.MESOSCOPIC

    @pytest.mark.unit
    @pytest.mark.parametrize("x", [0.0, 1.5, -0.2])
    def test_x_range(self, x):
        with pytest.raises(CatSizeError):
            magnification_from_x(x)


displacements = st.floats(min_value=0.0, max_value=1e-2, allow_nan=False)
magnifications = st.floats(min_value=1.0, max_value=1e3, allow_nan=False)


class TestDistinctnessProperties:
    """Property-based invariants of classify."""

    @pytest.mark.property
    @settings(max_examples=200, deadline=None)
    @given(d1=displacements, d2=displacements, magnification=magnifications)
    def test_monotone_in_displacement(self, d1, d2, magnification):
        low, high = sorted((d1, d2))
        assert RANK[classify(low, 1.0, magnification).kind] <= RANK[classify(high, 1.0, magnification).kind]

    @pytest.mark.property
    @settings(max_examples=200, deadline=None)
    @given(d=displacements, magnification=magnifications)
    def test_magnifying_the_displacement_is_consistent(self, d, magnification):
        """classify(d, t, M) and classify(d*M, t, 1) agree on resolvability."""
        assert classify(d, 1.0, magnification).is_resolvable == classify(d * magnification, 1.0).is_resolvable
