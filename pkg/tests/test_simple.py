"""
Simple tests to verify basic components work correctly.

These are quick smoke tests to ensure the core functionality
is working before running more complex test suites.
"""

import pytest

import catsize
from catsize import (
    EstimationMode, ModeBasis, ScenarioKind, create_fermionic_basis, create_rigid_body, fock,
    get_toolkit_info, rigid_body_w
)


class TestBasicComponents:
    """Test basic component functionality."""

    @pytest.mark.unit
    def test_enums_work(self):
        """Test that enums are properly defined."""
        assert EstimationMode.PAPER == "paper"
        assert ScenarioKind.FLUX_QUBIT == "flux_qubit"

    @pytest.mark.unit
    def test_basis_factory(self):
        basis = create_fermionic_basis(3)
        assert isinstance(basis, ModeBasis)
        assert basis.num_modes == 3

    @pytest.mark.unit
    def test_rigid_body_factory(self):
        """A 5 um particle in paper mode gives the headline figure."""
        spec = create_rigid_body(5.0, mode=EstimationMode.PAPER)
        assert spec.geometry.size == pytest.approx(5e-4)
        assert rigid_body_w(spec).total_w_particles == pytest.approx(1626.67, rel=1e-5)

    @pytest.mark.unit
    def test_single_hop(self):
        basis = create_fermionic_basis(2)
        a, b = fock.basis_state(basis, [1, 0]), fock.basis_state(basis, [0, 1])
        assert fock.w_particles(fock.w_fixed_basis(a, b)) == 1.0


class TestToolkitInfo:
    """Test package metadata."""

    @pytest.mark.unit
    def test_toolkit_info(self):
        info = get_toolkit_info()
        assert info["version"] == catsize.__version__
        assert info["schema_version"] == 1
        assert "rigid_body" in info["scenario_kinds"]

    @pytest.mark.unit
    def test_info_is_a_copy(self):
        info = get_toolkit_info()
        info["version"] = "0"
        assert get_toolkit_info()["version"] == catsize.__version__

    @pytest.mark.unit
    def test_exports(self):
        for name in catsize.__all__:
            assert hasattr(catsize, name), name
