"""
catsize - Data Models
Shared data models, enums, constants and errors for every cat-size calculator
"""

import math

from enum import Enum
from typing import Annotated, Dict, List, Literal, NamedTuple, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import constants as sc


class Statistics(str, Enum):
    """Particle statistics of a mode basis"""
    FERMIONIC = "fermionic"
    BOSONIC = "bosonic"


class SpeciesKind(str, Enum):
    """Constituent kinds that can contribute to W"""
    ELECTRON = "electron"
    NUCLEON = "nucleon"
    NUCLEUS = "nucleus"
    COOPER_PAIR = "cooper_pair"
    OTHER = "other"


class GeometryKind(str, Enum):
    """Rigid-body shapes"""
    SPHERE_DIAMETER = "sphere_diameter"
    CUBE_SIDE = "cube_side"


class NucleonTreatment(str, Enum):
    """How nucleons enter a rigid-body estimate"""
    INTRANUCLEAR = "intranuclear"
    ATOMIC_RMS = "atomic_rms"
    NUCLEUS_COMPOSITE = "nucleus_composite"


class EstimationMode(str, Enum):
    """Provenance of the numbers in a report"""
    PAPER = "paper"
    FIRST_PRINCIPLES = "first_principles"
    EXACT = "exact"
    CONFIGURED = "configured"


class DistinctnessKind(str, Enum):
    """Macro/meso classification outcomes"""
    MACROSCOPIC = "macroscopic"
    MESOSCOPIC = "mesoscopic"
    UNRESOLVABLE = "unresolvable"


class ScenarioKind(str, Enum):
    """Scenario file kinds"""
    EXACT = "exact"
    RIGID_BODY = "rigid_body"
    FLUX_QUBIT = "flux_qubit"


class FluxQubitCase(str, Enum):
    """External-flux bias of a flux qubit"""
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"


class GroupingKind(str, Enum):
    """Composite regrouping options"""
    FREE_NUCLEONS = "free_nucleons"
    NUCLEI = "nuclei"
    COOPER_PAIRS = "cooper_pairs"


class ReportFormat(str, Enum):
    """Output formats for rendered reports"""
    TABLE = "table"
    JSON = "json"


class WConvention(str, Enum):
    """Reporting conventions for W"""
    RAW = "w_raw"
    PARTICLES = "w_particles"


# Toolkit Constants
class ToolkitConfig:
    """Toolkit configuration constants"""
    TOOLKIT_VERSION = "1.0.0"
    SCHEMA_VERSION = 1

    NORM_TOLERANCE = 1e-12
    NUMERIC_TOLERANCE = 1e-10
    FERMIONIC_EIGENVALUE_SLACK = 1e-10
    MAX_MODES = 16

    # Figures quoted for the 5 micron LiF particle
    PAPER_ELECTRON_COUNT = 8e14
    PAPER_REFERENCE_DIAMETER_CM = 5e-4
    PAPER_ELECTRON_V0 = 3e8
    PAPER_NUCLEON_COUNT_RATIO = 2.2

    INTRANUCLEAR_V0_RATIO = 10.0
    ATOMIC_RMS_V0_RATIO = 1e-3
    DISCREPANCY_FACTOR = 2.0

    MIN_RESOLVABLE_LENGTH_CM = 1.5e-4
    MAX_OBSERVATION_TIME_S = 1.0

    TABLE_SIGNIFICANT_DIGITS = 6
    MATERIALS_ENV_VAR = "CATSIZE_MATERIALS"
    CM_PER_UM = 1e-4


# Error Codes
class ErrorCodes:
    """Standard error codes"""
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    OCCUPANCY_VIOLATION = "OCCUPANCY_VIOLATION"
    BASIS_MISMATCH = "BASIS_MISMATCH"
    ZERO_NORM = "ZERO_NORM"
    INDEX_OUT_OF_RANGE = "INDEX_OUT_OF_RANGE"
    NONPOSITIVE_V0 = "NONPOSITIVE_V0"
    UNKNOWN_MATERIAL = "UNKNOWN_MATERIAL"
    UNKNOWN_MATERIAL_FIELD = "UNKNOWN_MATERIAL_FIELD"
    RATIO_OUT_OF_RANGE = "RATIO_OUT_OF_RANGE"
    GAP_RATIO_OUT_OF_RANGE = "GAP_RATIO_OUT_OF_RANGE"
    MODEL_MISMATCH = "MODEL_MISMATCH"
    OVERLAP_OUT_OF_RANGE = "OVERLAP_OUT_OF_RANGE"
    INAPPLICABLE_GROUPING = "INAPPLICABLE_GROUPING"
    NONPOSITIVE_DURATION = "NONPOSITIVE_DURATION"
    SYNTAX_ERROR = "SYNTAX_ERROR"
    MISSING_FIELD = "MISSING_FIELD"
    INVALID_VALUE = "INVALID_VALUE"
    UNKNOWN_SCENARIO_KIND = "UNKNOWN_SCENARIO_KIND"
    NOT_UNITARY = "NOT_UNITARY"
    SCENARIO_FAILED = "SCENARIO_FAILED"


class ExitCodes:
    """Process exit codes of the catsize command"""
    SUCCESS = 0
    USAGE_ERROR = 1
    VALIDATION_ERROR = 2
    DOMAIN_ERROR = 3


class CatSizeError(Exception):
    """Base exception for cat-size computations"""

    def __init__(self, message: str, code: str = None):
        super().__init__(message)
        self.code = code


class ScenarioError(CatSizeError):
    """Scenario file error anchored to a field path and source line"""

    def __init__(
        self,
        message: str,
        code: str = ErrorCodes.INVALID_VALUE,
        path: Optional[str] = None,
        line: Optional[int] = None,
        source: str = "<scenario>"
    ):
        super().__init__(message, code)
        self.reason = message
        self.path = path
        self.line = line
        self.source = source

    def format(self) -> str:
        """Format as `[CODE] source:line path: reason`"""
        location = self.source
        if self.line is not None:
            location = f"{location}:{self.line}"
        subject = f" {self.path}:" if self.path else ""
        return f"[{self.code}] {location}{subject} {self.reason}"

    def __str__(self) -> str:
        return self.format()


# Fock-space Models
class ModeBasis(BaseModel):
    """Finite single-particle mode set"""
    model_config = ConfigDict(frozen=True)

    num_modes: int = Field(..., ge=1, le=ToolkitConfig.MAX_MODES)
    statistics: Statistics = Statistics.FERMIONIC
    max_occupancy: int = Field(1, ge=1)

    @model_validator(mode="before")
    @classmethod
    def force_pauli_limit(cls, data):
        """Fermionic modes hold at most one particle"""
        if isinstance(data, dict) and data.get("statistics", Statistics.FERMIONIC) == Statistics.FERMIONIC:
            data = {**data, "max_occupancy": 1}
        return data

    @classmethod
    def fermionic(cls, num_modes: int) -> "ModeBasis":
        return cls(num_modes=num_modes, statistics=Statistics.FERMIONIC)

    @classmethod
    def bosonic(cls, num_modes: int, max_occupancy: int) -> "ModeBasis":
        return cls(num_modes=num_modes, statistics=Statistics.BOSONIC, max_occupancy=max_occupancy)

    @property
    def is_fermionic(self) -> bool:
        return self.statistics == Statistics.FERMIONIC


Occupations = Tuple[int, ...]


class ManyBodyState(BaseModel):
    """Normalized sparse superposition of occupation-number basis states.

    Build instances through `fock.basis_state`, `fock.superpose` or
    `fock.from_terms`; they validate occupations and normalize.
    """
    model_config = ConfigDict(frozen=True)

    basis: ModeBasis
    terms: Dict[Occupations, complex]

    def norm_squared(self) -> float:
        return math.fsum(abs(amp) ** 2 for amp in self.terms.values())

    def amplitude(self, occupations: Occupations) -> complex:
        return self.terms.get(tuple(occupations), 0j)

    @property
    def num_terms(self) -> int:
        return len(self.terms)


class OneBodyRDM(BaseModel):
    """One-body reduced density matrix, rho[i][j] = <a_j^dagger a_i>"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray
    particle_number_sector: Optional[float] = None

    def diagonal(self) -> np.ndarray:
        return np.real(np.diag(self.matrix))

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))


# Estimator Models
class PhysicalConstants(BaseModel):
    """CGS constants (erg*s, g, cm/s, 1/mol)"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    planck_h: float = Field(sc.h * 1e7, gt=0)
    electron_mass: float = Field(sc.m_e * 1e3, gt=0)
    speed_of_light: float = Field(sc.c * 1e2, gt=0)
    avogadro: float = Field(sc.N_A, gt=0)

    @classmethod
    def codata(cls) -> "PhysicalConstants":
        """CODATA values converted from SI"""
        return cls()


class SpeciesPopulation(BaseModel):
    """One constituent species: count N, shift velocity v and characteristic velocity v0 (cm/s)"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    name: str = Field(..., min_length=1)
    kind: SpeciesKind = SpeciesKind.OTHER
    count: float = Field(..., ge=0)
    shift_velocity: float = Field(0.0, ge=0)
    characteristic_velocity: float = Field(..., gt=0)
    constituents_per_particle: int = Field(1, ge=1)
    displaced_fraction: Optional[float] = Field(None, ge=0, le=1)

    @property
    def velocity_ratio(self) -> float:
        return self.shift_velocity / self.characteristic_velocity


class Nucleus(BaseModel):
    """Nuclear species inside one formula unit"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    symbol: str = Field(..., min_length=1)
    nucleons: int = Field(..., ge=1)
    per_formula_unit: int = Field(1, ge=1)


class Material(BaseModel):
    """Crystalline material data (g/cm^3, g/mol, cm)"""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    name: str = Field(..., min_length=1)
    mass_density: float = Field(..., gt=0)
    molar_mass: float = Field(..., gt=0)
    electrons_per_formula_unit: int = Field(..., gt=0)
    nucleons_per_formula_unit: int = Field(..., gt=0)
    cell_dimension_a: float = Field(..., gt=0)
    nuclei: List[Nucleus] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_nuclei_add_up(self):
        if self.nuclei:
            total = sum(n.nucleons * n.per_formula_unit for n in self.nuclei)
            if total != self.nucleons_per_formula_unit:
                raise ValueError(
                    f"nuclei carry {total} nucleons per formula unit, "
                    f"expected {self.nucleons_per_formula_unit}"
                )
        return self

    @property
    def nucleon_electron_ratio(self) -> float:
        return self.nucleons_per_formula_unit / self.electrons_per_formula_unit

    @property
    def nuclei_per_formula_unit(self) -> int:
        return sum(n.per_formula_unit for n in self.nuclei)

    @classmethod
    def lif(cls) -> "Material":
        """Lithium fluoride"""
        return cls(
            name="LiF",
            mass_density=2.635,
            molar_mass=25.939,
            electrons_per_formula_unit=12,
            nucleons_per_formula_unit=26,
            cell_dimension_a=4.03e-8,
            nuclei=[Nucleus(symbol="Li", nucleons=7), Nucleus(symbol="F", nucleons=19)]
        )


class Geometry(BaseModel):
    """Rigid-body shape with its linear size in cm"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    kind: GeometryKind
    size: float = Field(..., gt=0)

    @classmethod
    def sphere(cls, diameter: float) -> "Geometry":
        return cls(kind=GeometryKind.SPHERE_DIAMETER, size=diameter)

    @classmethod
    def cube(cls, side: float) -> "Geometry":
        return cls(kind=GeometryKind.CUBE_SIDE, size=side)

    @property
    def volume(self) -> float:
        if self.kind == GeometryKind.SPHERE_DIAMETER:
            return math.pi / 6.0 * self.size ** 3
        return self.size ** 3


class Composition(NamedTuple):
    """Particle content of a rigid body"""
    electron_count: float
    nucleon_count: float
    formula_units: float


class ResolutionCriterion(BaseModel):
    """Resolution limit (cm) and observation window (s)"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    min_resolvable_length: float = Field(ToolkitConfig.MIN_RESOLVABLE_LENGTH_CM, gt=0)
    max_observation_time: float = Field(ToolkitConfig.MAX_OBSERVATION_TIME_S, gt=0)

    @classmethod
    def human_eye(cls) -> "ResolutionCriterion":
        """Unaided human vision over one second"""
        return cls()


class Distinctness(BaseModel):
    """Classification of a displacement against a resolution criterion"""
    model_config = ConfigDict(frozen=True)

    kind: DistinctnessKind
    required_magnification: Optional[float] = None

    @model_validator(mode="after")
    def check_magnification(self):
        if self.kind == DistinctnessKind.MESOSCOPIC:
            if self.required_magnification is None or not self.required_magnification > 1.0:
                raise ValueError("mesoscopic distinctness needs a required magnification > 1")
        elif self.required_magnification is not None:
            raise ValueError(f"{self.kind.value} distinctness carries no magnification")
        return self

    @classmethod
    def macroscopic(cls) -> "Distinctness":
        return cls(kind=DistinctnessKind.MACROSCOPIC)

    @classmethod
    def mesoscopic(cls, required_magnification: float) -> "Distinctness":
        return cls(kind=DistinctnessKind.MESOSCOPIC, required_magnification=required_magnification)

    @classmethod
    def unresolvable(cls) -> "Distinctness":
        return cls(kind=DistinctnessKind.UNRESOLVABLE)

    @property
    def is_resolvable(self) -> bool:
        return self.kind != DistinctnessKind.UNRESOLVABLE


class RigidBodySpec(BaseModel):
    """A rigid particle displaced by `displacement` cm over `duration` s"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    material: Material = Field(default_factory=Material.lif)
    geometry: Geometry
    displacement: float = Field(..., gt=0)
    duration: float = Field(..., gt=0)
    mode: EstimationMode = EstimationMode.FIRST_PRINCIPLES
    electron_count_override: Optional[float] = Field(None, gt=0)
    nucleon_treatment: NucleonTreatment = NucleonTreatment.INTRANUCLEAR
    available_magnification: float = Field(1.0, ge=1.0)
    criterion: ResolutionCriterion = Field(default_factory=ResolutionCriterion.human_eye)

    @field_validator("mode")
    @classmethod
    def validate_mode(cls, v):
        if v not in (EstimationMode.PAPER, EstimationMode.FIRST_PRINCIPLES):
            raise ValueError("must be 'paper' or 'first_principles'")
        return v

    @property
    def shift_velocity(self) -> float:
        return self.displacement / self.duration


class SpeciesContribution(BaseModel):
    """One row of a cat-size report"""
    name: str
    kind: SpeciesKind
    count: float
    shift_velocity: float
    characteristic_velocity: float
    contribution: float


class CatSizeReport(BaseModel):
    """Per-species contributions and totals in both W conventions"""
    per_species: List[SpeciesContribution] = Field(default_factory=list)
    total_w_particles: float = 0.0
    total_w_raw: float = 0.0
    classification: Optional[Distinctness] = None
    mode: EstimationMode = EstimationMode.FIRST_PRINCIPLES
    notes: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_totals(self):
        expected = math.fsum(row.contribution for row in self.per_species)
        slack = ToolkitConfig.NORM_TOLERANCE * max(1.0, abs(expected))
        if abs(self.total_w_particles - expected) > slack:
            raise ValueError(f"total {self.total_w_particles} differs from species sum {expected}")
        if abs(self.total_w_raw - 2.0 * self.total_w_particles) > 2.0 * slack:
            raise ValueError("total_w_raw must be twice total_w_particles")
        return self

    @classmethod
    def from_contributions(
        cls,
        per_species: List[SpeciesContribution],
        mode: EstimationMode,
        classification: Optional[Distinctness] = None,
        notes: Optional[List[str]] = None,
        warnings: Optional[List[str]] = None
    ) -> "CatSizeReport":
        total = math.fsum(row.contribution for row in per_species)
        return cls(
            per_species=per_species,
            total_w_particles=total,
            total_w_raw=2.0 * total,
            classification=classification,
            mode=mode,
            notes=notes or [],
            warnings=warnings or []
        )

    def contribution_of(self, kind: SpeciesKind) -> float:
        return math.fsum(row.contribution for row in self.per_species if row.kind == kind)


# Composite Models
class CondensateSpec(BaseModel):
    """Electron count N and gap ratio Delta/epsilon_F of a superconductor"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    n_electrons: float = Field(..., gt=0)
    gap_ratio: float

    @field_validator("gap_ratio")
    @classmethod
    def validate_gap_ratio(cls, v):
        if not 0.0 < v < 1.0:
            raise ValueError("must be in (0,1)")
        return v


class RingMode(BaseModel):
    """Plane wave on a ring with angular momentum l (units of hbar)"""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    model: Literal["ring"] = "ring"
    angular_momentum: float


class GaussianPacket(BaseModel):
    """Gaussian packet: center (cm), mean wavenumber (1/cm), width sigma (cm)"""
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    model: Literal["gaussian"] = "gaussian"
    center: float = 0.0
    mean_wavenumber: float = 0.0
    width: float = Field(..., gt=0)


COMWavefunction = Annotated[Union[RingMode, GaussianPacket], Field(discriminator="model")]


class PairReport(BaseModel):
    """Cooper-pair cat size W_CP = N_p (1 - K)"""
    n_pairs: float = Field(..., ge=0)
    overlap_k: float = Field(..., ge=0, le=1)
    w_cp: float = Field(..., ge=0)

    @model_validator(mode="after")
    def check_w_cp(self):
        expected = self.n_pairs * (1.0 - self.overlap_k)
        if abs(self.w_cp - expected) > ToolkitConfig.NORM_TOLERANCE * max(1.0, expected):
            raise ValueError(f"w_cp {self.w_cp} != n_pairs*(1-K) = {expected}")
        return self


class FreeNucleonsGrouping(BaseModel):
    """Keep nucleons as independent particles"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["free_nucleons"] = "free_nucleons"


class NucleiGrouping(BaseModel):
    """Bind nucleons into the nuclei of `material`"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["nuclei"] = "nuclei"
    material: Material = Field(default_factory=Material.lif)
    atomic_rms_v0: Optional[float] = Field(None, gt=0)


class CooperPairGrouping(BaseModel):
    """Bind condensed electrons into Cooper pairs with the given COM branches"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cooper_pairs"] = "cooper_pairs"
    condensate: CondensateSpec
    branch_a: COMWavefunction
    branch_b: COMWavefunction


Grouping = Annotated[
    Union[FreeNucleonsGrouping, NucleiGrouping, CooperPairGrouping],
    Field(discriminator="kind")
]


# Scenario Models
class ExactScenario(BaseModel):
    """Two exact many-body states to compare"""
    model_config = ConfigDict(frozen=True)

    state_a: ManyBodyState
    state_b: ManyBodyState


class RigidBodyScenario(BaseModel):
    """Rigid-body estimate"""
    model_config = ConfigDict(frozen=True)

    spec: RigidBodySpec


class FluxQubitScenario(BaseModel):
    """Flux-qubit estimate, single-electron and Cooper-pair views"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    n_electrons: float = Field(..., gt=0)
    velocity_ratio: float = Field(..., ge=0, le=1)
    condensate: CondensateSpec
    case: FluxQubitCase = FluxQubitCase.SYMMETRIC
    branch_a: Optional[COMWavefunction] = None
    branch_b: Optional[COMWavefunction] = None

    @model_validator(mode="after")
    def check_branches(self):
        if self.case == FluxQubitCase.ASYMMETRIC and (self.branch_a is None or self.branch_b is None):
            raise ValueError("asymmetric flux qubit needs branch_a and branch_b")
        return self


class Scenario(BaseModel):
    """A fully validated scenario of exactly one kind"""
    model_config = ConfigDict(frozen=True)

    name: str = "scenario"
    kind: ScenarioKind
    exact: Optional[ExactScenario] = None
    rigid_body: Optional[RigidBodyScenario] = None
    flux_qubit: Optional[FluxQubitScenario] = None
    criterion_overrides: Optional[ResolutionCriterion] = None

    @model_validator(mode="after")
    def check_single_kind(self):
        bodies = {
            ScenarioKind.EXACT: self.exact,
            ScenarioKind.RIGID_BODY: self.rigid_body,
            ScenarioKind.FLUX_QUBIT: self.flux_qubit,
        }
        present = [kind for kind, body in bodies.items() if body is not None]
        if present != [self.kind]:
            raise ValueError(f"scenario of kind {self.kind.value} must carry exactly that body")
        return self


# Report Models
class ScenarioEcho(BaseModel):
    """Scenario identity echoed into a report"""
    name: str
    kind: ScenarioKind


class ExactResult(BaseModel):
    """Exact-engine numbers for two many-body states"""
    w_fixed_raw: float
    w_fixed_particles: float
    w_natural_raw: float
    w_natural_particles: float
    overlap_modulus: float


class Report(BaseModel):
    """Result of running one scenario; serializes to the JSON report schema"""
    scenario: ScenarioEcho
    mode: EstimationMode
    species: List[SpeciesContribution] = Field(default_factory=list)
    total_w_particles: float
    total_w_raw: float
    w_cp: Optional[float] = None
    pair: Optional[PairReport] = None
    exact: Optional[ExactResult] = None
    classification: Optional[Distinctness] = None
    conventions: List[WConvention] = Field(default_factory=lambda: [WConvention.RAW, WConvention.PARTICLES])
    warnings: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class ComparisonRow(BaseModel):
    """A quoted figure next to its recomputation"""
    quantity: str
    paper_value: str
    computed: float
    mode: EstimationMode
    note: str = ""


class PaperReproduction(BaseModel):
    """Built-in scenario reports plus the comparison table"""
    reports: List[Report]
    rows: List[ComparisonRow]
