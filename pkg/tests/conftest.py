"""
Shared test configuration and fixtures for the catsize test suite.

This module provides common bases, states, rigid-body specs and scenario
files used across the unit, integration and end-to-end tests.
"""

from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from catsize import fock
from catsize.models import (
    EstimationMode, Geometry, Material, ModeBasis, NucleonTreatment, RigidBodySpec
)


RIGID_BODY_SCENARIO = """\
schema = 1
kind = "rigid_body"
name = "lif-5um"

[rigid_body]
material = "LiF"
sphere_diameter_um = 5.0
displacement_um = 5.0
duration_s = 1.0
mode = "paper"
nucleon_treatment = "intranuclear"
"""

FLUX_QUBIT_SCENARIO = """\
schema = 1
kind = "flux_qubit"
name = "flux"

[flux_qubit]
n_electrons = 1e9
velocity_ratio = 5e-6
gap_ratio = 1e-3
case = "symmetric"
"""

EXACT_SCENARIO = """\
schema = 1
kind = "exact"
name = "two-mode"

[exact]
statistics = "fermionic"
num_modes = 2

[[exact.state_a]]
occupations = [1, 0]

[[exact.state_b]]
occupations = [0, 1]
"""

# gap_ratio sits on line 7
INVALID_GAP_SCENARIO = """\
schema = 1
kind = "flux_qubit"

[flux_qubit]
n_electrons = 1e9
velocity_ratio = 5e-6
gap_ratio = 1.5
"""

STATE_A = """\
statistics = "fermionic"
num_modes = 2

[[terms]]
occupations = [1, 0]
amplitude = 1.0

[[terms]]
occupations = [0, 1]
amplitude = [0.0, 1.0]
"""

STATE_B = """\
statistics = "fermionic"
num_modes = 2

[[terms]]
occupations = [0, 1]
"""


@pytest.fixture
def two_modes() -> ModeBasis:
    """Two fermionic modes"""
    return ModeBasis.fermionic(2)


@pytest.fixture
def four_modes() -> ModeBasis:
    """Four fermionic modes"""
    return ModeBasis.fermionic(4)


@pytest.fixture
def boson_modes() -> ModeBasis:
    """Three bosonic modes holding up to two quanta each"""
    return ModeBasis.bosonic(3, max_occupancy=2)


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixed-seed generator for counted sweeps"""
    return np.random.default_rng(20240517)


@pytest.fixture
def state_10(two_modes):
    return fock.basis_state(two_modes, [1, 0])


@pytest.fixture
def state_01(two_modes):
    return fock.basis_state(two_modes, [0, 1])


@pytest.fixture
def phase_cat(two_modes):
    """(|10> + i|01>)/sqrt(2)"""
    return fock.from_terms(two_modes, [(1.0, [1, 0]), (1j, [0, 1])])


@pytest.fixture
def lif() -> Material:
    return Material.lif()


@pytest.fixture
def lif_paper_spec(lif) -> RigidBodySpec:
    """5 um LiF sphere moving 5 um in 1 s with the quoted 8e14 electrons"""
    return RigidBodySpec(
        material=lif,
        geometry=Geometry.sphere(5e-4),
        displacement=5e-4,
        duration=1.0,
        mode=EstimationMode.PAPER,
        electron_count_override=8e14,
        nucleon_treatment=NucleonTreatment.INTRANUCLEAR
    )


@pytest.fixture
def lif_first_principles_spec(lif) -> RigidBodySpec:
    return RigidBodySpec(
        material=lif,
        geometry=Geometry.sphere(5e-4),
        displacement=5e-4,
        duration=1.0,
        mode=EstimationMode.FIRST_PRINCIPLES
    )


@pytest.fixture
def write_file(tmp_path) -> Callable[[str, str], Path]:
    """Write `text` to tmp_path/`name` and return the path"""
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path
    return _write


# Test utilities
def assert_relative(value: float, target: float, rel: float):
    """Assert |value - target| <= rel * |target|"""
    assert abs(value - target) <= rel * abs(target), f"{value} not within {rel:g} of {target}"


def all_fock_states(basis: ModeBasis, max_particles: int):
    """Every occupation vector of `basis` with at most `max_particles` particles"""
    return [occ for occ in fock.fock_space(basis) if sum(occ) <= max_particles]
