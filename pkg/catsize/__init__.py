"""
catsize
Cat-size (W) estimates for superpositions of macroscopically distinct many-particle states
"""

__version__ = "1.0.0"
__author__ = "catsize developers"
__description__ = "Exact and order-of-magnitude cat sizes for quantum superpositions"

# Core imports for easy access
from .models import (
    # Enums
    Statistics,
    SpeciesKind,
    GeometryKind,
    NucleonTreatment,
    EstimationMode,
    DistinctnessKind,
    ScenarioKind,
    FluxQubitCase,
    GroupingKind,
    ReportFormat,
    WConvention,

    # Fock-space models
    ModeBasis,
    ManyBodyState,
    OneBodyRDM,

    # Estimator models
    PhysicalConstants,
    SpeciesPopulation,
    Material,
    Nucleus,
    Geometry,
    RigidBodySpec,
    ResolutionCriterion,
    Distinctness,
    CatSizeReport,

    # Composite models
    CondensateSpec,
    RingMode,
    GaussianPacket,
    PairReport,
    FreeNucleonsGrouping,
    NucleiGrouping,
    CooperPairGrouping,

    # Scenario and report models
    Scenario,
    Report,
    PaperReproduction,

    # Configuration
    ToolkitConfig,
    ErrorCodes,
    ExitCodes,

    # Errors
    CatSizeError,
    ScenarioError
)

from . import fock

from .estimators import (
    band_electron_v0,
    composition,
    contribution,
    flux_qubit_w,
    lookup_material,
    rigid_body_w,
    self_traversal
)

from .composites import (
    com_overlap,
    condensate_pair_count,
    flux_qubit_pair_report,
    regroup,
    symmetric_branches,
    w_cp
)

from .distinctness import classify

from .scenarios import (
    parse_scenario,
    render,
    reproduce_paper,
    run_scenario,
    run_scenarios,
    run_scenarios_async
)


# Convenience functions
def create_fermionic_basis(num_modes: int) -> ModeBasis:
    """Create a fermionic mode basis"""
    return ModeBasis.fermionic(num_modes)


def create_rigid_body(
    diameter_um: float,
    mode: EstimationMode = EstimationMode.FIRST_PRINCIPLES,
    material: str = "LiF"
) -> RigidBodySpec:
    """Sphere of `diameter_um` microns moving its own diameter in one second"""
    return self_traversal(diameter_um * ToolkitConfig.CM_PER_UM, mode=mode, material=lookup_material(material))


# Toolkit information
TOOLKIT_INFO = {
    "version": __version__,
    "schema_version": ToolkitConfig.SCHEMA_VERSION,
    "estimation_modes": [m.value for m in EstimationMode],
    "scenario_kinds": [k.value for k in ScenarioKind],
    "nucleon_treatments": [t.value for t in NucleonTreatment],
    "max_modes": ToolkitConfig.MAX_MODES
}


def get_toolkit_info():
    """Get toolkit information"""
    return TOOLKIT_INFO.copy()


# Export all important classes and functions
__all__ = [
    # Enums
    "Statistics",
    "SpeciesKind",
    "GeometryKind",
    "NucleonTreatment",
    "EstimationMode",
    "DistinctnessKind",
    "ScenarioKind",
    "FluxQubitCase",
    "GroupingKind",
    "ReportFormat",
    "WConvention",

    # Data models
    "ModeBasis",
    "ManyBodyState",
    "OneBodyRDM",
    "PhysicalConstants",
    "SpeciesPopulation",
    "Material",
    "Nucleus",
    "Geometry",
    "RigidBodySpec",
    "ResolutionCriterion",
    "Distinctness",
    "CatSizeReport",
    "CondensateSpec",
    "RingMode",
    "GaussianPacket",
    "PairReport",
    "FreeNucleonsGrouping",
    "NucleiGrouping",
    "CooperPairGrouping",
    "Scenario",
    "Report",
    "PaperReproduction",

    # Configuration
    "ToolkitConfig",
    "ErrorCodes",
    "ExitCodes",

    # Errors
    "CatSizeError",
    "ScenarioError",

    # Operations
    "fock",
    "band_electron_v0",
    "composition",
    "contribution",
    "flux_qubit_w",
    "lookup_material",
    "rigid_body_w",
    "self_traversal",
    "com_overlap",
    "condensate_pair_count",
    "flux_qubit_pair_report",
    "regroup",
    "symmetric_branches",
    "w_cp",
    "classify",
    "parse_scenario",
    "render",
    "reproduce_paper",
    "run_scenario",
    "run_scenarios",
    "run_scenarios_async",

    # Factory functions
    "create_fermionic_basis",
    "create_rigid_body",

    # Utility functions
    "get_toolkit_info",

    # Version info
    "__version__",
    "TOOLKIT_INFO"
]
