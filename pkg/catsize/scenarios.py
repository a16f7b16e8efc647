"""
catsize - Scenarios
TOML scenario parsing with line-anchored errors, scenario execution, report rendering
and the built-in reproduction of the quoted figures
"""

import asyncio
import json
import logging
import math
import re
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from . import fock
from .composites import flux_qubit_pair_report, symmetric_branches
from .estimators import band_electron_v0, composition, flux_qubit_w, lookup_material, rigid_body_w
from .models import (
    CatSizeError, ComparisonRow, CondensateSpec, ErrorCodes, EstimationMode, ExactResult,
    ExactScenario, FluxQubitCase, FluxQubitScenario, GaussianPacket, Geometry, Material,
    ManyBodyState, ModeBasis, NucleonTreatment, PaperReproduction, Report, ReportFormat,
    ResolutionCriterion, RigidBodyScenario, RigidBodySpec, RingMode, Scenario, ScenarioEcho,
    ScenarioError, ScenarioKind, SpeciesKind, Statistics, ToolkitConfig
)


logger = logging.getLogger(__name__)

UM = ToolkitConfig.CM_PER_UM


# Scenario file documents (lengths in microns at this boundary)

class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)


class CriterionSection(_Section):
    min_resolvable_um: float = Field(ToolkitConfig.MIN_RESOLVABLE_LENGTH_CM / UM, gt=0)
    max_observation_s: float = Field(ToolkitConfig.MAX_OBSERVATION_TIME_S, gt=0)

    def to_criterion(self) -> ResolutionCriterion:
        return ResolutionCriterion(
            min_resolvable_length=self.min_resolvable_um * UM,
            max_observation_time=self.max_observation_s
        )


class RigidBodySection(_Section):
    material: str = "LiF"
    sphere_diameter_um: Optional[float] = Field(None, gt=0)
    cube_side_um: Optional[float] = Field(None, gt=0)
    displacement_um: float = Field(..., gt=0)
    duration_s: float = Field(..., gt=0)
    mode: EstimationMode = EstimationMode.FIRST_PRINCIPLES
    nucleon_treatment: NucleonTreatment = NucleonTreatment.INTRANUCLEAR
    electron_count: Optional[float] = Field(None, gt=0)
    magnification: float = Field(1.0, ge=1.0)

    @field_validator("mode")
    @classmethod
    def validate_mode(cls, v):
        if v not in (EstimationMode.PAPER, EstimationMode.FIRST_PRINCIPLES):
            raise ValueError("must be 'paper' or 'first_principles'")
        return v

    @model_validator(mode="after")
    def check_single_geometry(self):
        if (self.sphere_diameter_um is None) == (self.cube_side_um is None):
            raise ValueError("give exactly one of sphere_diameter_um, cube_side_um")
        return self

    def geometry(self) -> Geometry:
        if self.sphere_diameter_um is not None:
            return Geometry.sphere(self.sphere_diameter_um * UM)
        return Geometry.cube(self.cube_side_um * UM)


class WavefunctionSection(_Section):
    model: Literal["ring", "gaussian"]
    angular_momentum: Optional[float] = None
    center_um: float = 0.0
    mean_wavenumber_per_um: float = 0.0
    width_um: Optional[float] = Field(None, gt=0)

    @model_validator(mode="after")
    def check_model_fields(self):
        if self.model == "ring" and self.angular_momentum is None:
            raise ValueError("ring model needs angular_momentum")
        if self.model == "gaussian" and self.width_um is None:
            raise ValueError("gaussian model needs width_um")
        return self

    def to_wavefunction(self) -> Union[RingMode, GaussianPacket]:
        if self.model == "ring":
            return RingMode(angular_momentum=self.angular_momentum)
        return GaussianPacket(
            center=self.center_um * UM,
            mean_wavenumber=self.mean_wavenumber_per_um / UM,
            width=self.width_um * UM
        )


class FluxQubitSection(_Section):
    n_electrons: float = Field(..., gt=0)
    velocity_ratio: float = Field(..., ge=0, le=1)
    gap_ratio: float
    case: FluxQubitCase = FluxQubitCase.SYMMETRIC
    branch_a: Optional[WavefunctionSection] = None
    branch_b: Optional[WavefunctionSection] = None

    @field_validator("gap_ratio")
    @classmethod
    def validate_gap_ratio(cls, v):
        if not 0.0 < v < 1.0:
            raise ValueError("must be in (0,1)")
        return v

    @model_validator(mode="after")
    def check_branches(self):
        if self.case == FluxQubitCase.ASYMMETRIC and (self.branch_a is None or self.branch_b is None):
            raise ValueError("asymmetric case needs branch_a and branch_b")
        if (self.branch_a is None) != (self.branch_b is None):
            raise ValueError("give both branch_a and branch_b or neither")
        return self


class TermEntry(_Section):
    occupations: List[int]
    amplitude: Tuple[float, float] = (1.0, 0.0)

    @field_validator("amplitude", mode="before")
    @classmethod
    def validate_amplitude(cls, v):
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return (float(v), 0.0)
        if isinstance(v, (list, tuple)) and len(v) == 2:
            return tuple(v)
        raise ValueError("must be a number or [re, im]")

    def as_term(self) -> Tuple[complex, List[int]]:
        return complex(*self.amplitude), self.occupations


class _BasisFields(_Section):
    statistics: Statistics = Statistics.FERMIONIC
    num_modes: int = Field(..., ge=1, le=ToolkitConfig.MAX_MODES)
    max_occupancy: int = Field(1, ge=1)

    def basis(self) -> ModeBasis:
        return ModeBasis(num_modes=self.num_modes, statistics=self.statistics, max_occupancy=self.max_occupancy)


class ExactSection(_BasisFields):
    state_a: List[TermEntry] = Field(..., min_length=1)
    state_b: List[TermEntry] = Field(..., min_length=1)


class StateDocument(_BasisFields):
    terms: List[TermEntry] = Field(..., min_length=1)


class ScenarioDocument(_Section):
    schema_version: int = Field(..., alias="schema")
    kind: ScenarioKind
    name: Optional[str] = None
    rigid_body: Optional[RigidBodySection] = None
    flux_qubit: Optional[FluxQubitSection] = None
    exact: Optional[ExactSection] = None
    criterion: Optional[CriterionSection] = None

    @field_validator("schema_version")
    @classmethod
    def validate_schema(cls, v):
        if v != ToolkitConfig.SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {v}, expected {ToolkitConfig.SCHEMA_VERSION}")
        return v


# Line anchoring

_HEADER = re.compile(r"^\s*(\[\[?)\s*([^\]]+?)\s*\]\]?\s*(#.*)?$")
_KEY = re.compile(r"^\s*([A-Za-z0-9_\-\.\"' ]+?)\s*=")


def _split_key(raw: str) -> Tuple[str, ...]:
    return tuple(part.strip().strip("\"'") for part in raw.split("."))


def locate_line(text: str, path: Sequence[Union[str, int]]) -> Optional[int]:
    """1-based line that defines `path`, or the line of its closest enclosing table"""
    target = tuple(path)
    current: Tuple[Union[str, int], ...] = ()
    array_counts: Dict[Tuple[str, ...], int] = {}
    best_line, best_depth = None, -1

    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header:
            name = _split_key(header.group(2))
            if header.group(1) == "[[":
                if name == target:
                    return number
                index = array_counts.get(name, 0)
                array_counts[name] = index + 1
                current = name + (index,)
            else:
                current = name
            line_path = current
        else:
            key = _KEY.match(line)
            if not key:
                continue
            line_path = current + _split_key(key.group(1))

        if line_path == target:
            return number
        depth = len(line_path)
        if depth > best_depth and target[:depth] == line_path:
            best_line, best_depth = number, depth
    return best_line


def _decode_error_line(error: tomllib.TOMLDecodeError) -> Optional[int]:
    line = getattr(error, "lineno", None)
    if line is None:
        match = re.search(r"line (\d+)", str(error))
        line = int(match.group(1)) if match else None
    return line


def _validation_error(error: ValidationError, text: str, source: str, prefix: Tuple = ()) -> ScenarioError:
    first = error.errors()[0]
    loc = prefix + tuple(first["loc"])
    path = ".".join(str(part) for part in loc) or None
    if first["type"] == "missing":
        code, reason = ErrorCodes.MISSING_FIELD, "field required"
    else:
        code, reason = ErrorCodes.INVALID_VALUE, re.sub(r"^Value error, ", "", first["msg"])
    return ScenarioError(reason, code, path=path, line=locate_line(text, loc) or 1, source=source)


def _load_toml(text: str, source: str) -> Dict[str, Any]:
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ScenarioError(str(e), ErrorCodes.SYNTAX_ERROR, line=_decode_error_line(e), source=source)


def _state_from_terms(
    basis: ModeBasis, terms: List[TermEntry], text: str, source: str, path: Tuple
) -> ManyBodyState:
    try:
        return fock.from_terms(basis, [term.as_term() for term in terms])
    except CatSizeError as e:
        raise ScenarioError(str(e), ErrorCodes.INVALID_VALUE, path=".".join(map(str, path)),
                            line=locate_line(text, path) or 1, source=source)


# Parsing

def parse_scenario(text: str, source: str = "<scenario>") -> Scenario:
    """Parse and fully validate a scenario file"""
    document = _load_toml(text, source)

    kind = document.get("kind")
    if kind not in [k.value for k in ScenarioKind]:
        reason = "missing scenario kind" if kind is None else f"unknown scenario kind '{kind}'"
        raise ScenarioError(reason, ErrorCodes.UNKNOWN_SCENARIO_KIND, path="kind",
                            line=locate_line(text, ("kind",)) or 1, source=source)
    if kind not in document:
        raise ScenarioError(f"[{kind}] section required", ErrorCodes.MISSING_FIELD, path=kind, line=1, source=source)
    for other in ScenarioKind:
        if other.value != kind and other.value in document:
            raise ScenarioError(f"section does not match kind '{kind}'", ErrorCodes.INVALID_VALUE,
                                path=other.value, line=locate_line(text, (other.value,)) or 1, source=source)

    try:
        parsed = ScenarioDocument.model_validate(document)
    except ValidationError as e:
        raise _validation_error(e, text, source)

    name = parsed.name or (Path(source).stem if source != "<scenario>" else kind)
    criterion = parsed.criterion.to_criterion() if parsed.criterion else None
    scenario_kind = ScenarioKind(kind)

    if scenario_kind == ScenarioKind.RIGID_BODY:
        section = parsed.rigid_body
        try:
            material = lookup_material(section.material)
        except CatSizeError as e:
            raise ScenarioError(str(e), ErrorCodes.INVALID_VALUE, path="rigid_body.material",
                                line=locate_line(text, ("rigid_body", "material")) or 1, source=source)
        spec = RigidBodySpec(
            material=material,
            geometry=section.geometry(),
            displacement=section.displacement_um * UM,
            duration=section.duration_s,
            mode=section.mode,
            electron_count_override=section.electron_count,
            nucleon_treatment=section.nucleon_treatment,
            available_magnification=section.magnification,
            criterion=criterion or ResolutionCriterion.human_eye()
        )
        body = {"rigid_body": RigidBodyScenario(spec=spec)}

    elif scenario_kind == ScenarioKind.FLUX_QUBIT:
        section = parsed.flux_qubit
        if section.branch_a is not None:
            branch_a, branch_b = section.branch_a.to_wavefunction(), section.branch_b.to_wavefunction()
            if type(branch_a) is not type(branch_b):
                raise ScenarioError("branch_a and branch_b must use the same model", ErrorCodes.INVALID_VALUE,
                                    path="flux_qubit.branch_b",
                                    line=locate_line(text, ("flux_qubit", "branch_b")) or 1, source=source)
        else:
            branch_a, branch_b = symmetric_branches()
        body = {"flux_qubit": FluxQubitScenario(
            n_electrons=section.n_electrons,
            velocity_ratio=section.velocity_ratio,
            condensate=CondensateSpec(n_electrons=section.n_electrons, gap_ratio=section.gap_ratio),
            case=section.case,
            branch_a=branch_a,
            branch_b=branch_b
        )}

    else:
        section = parsed.exact
        basis = section.basis()
        body = {"exact": ExactScenario(
            state_a=_state_from_terms(basis, section.state_a, text, source, ("exact", "state_a")),
            state_b=_state_from_terms(basis, section.state_b, text, source, ("exact", "state_b"))
        )}

    return Scenario(name=name, kind=scenario_kind, criterion_overrides=criterion, **body)


def parse_state(text: str, source: str = "<state>") -> ManyBodyState:
    """Parse an exact-state file: basis fields plus [[terms]]"""
    document = _load_toml(text, source)
    try:
        parsed = StateDocument.model_validate(document)
    except ValidationError as e:
        raise _validation_error(e, text, source)
    return _state_from_terms(parsed.basis(), parsed.terms, text, source, ("terms",))


def _read_text(path: Path) -> str:
    raw = path.read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        raise ScenarioError(f"invalid UTF-8 byte 0x{raw[e.start]:02x}", ErrorCodes.SYNTAX_ERROR,
                            line=line, source=str(path))


def load_scenario(path: Union[str, Path]) -> Scenario:
    path = Path(path)
    return parse_scenario(_read_text(path), source=str(path))


def load_state(path: Union[str, Path]) -> ManyBodyState:
    path = Path(path)
    return parse_state(_read_text(path), source=str(path))


# Execution

def exact_report(a: ManyBodyState, b: ManyBodyState, name: str = "exact") -> Report:
    """Compare two exact states in both W conventions"""
    w_fixed = fock.w_fixed_basis(a, b)
    w_nat = fock.w_natural(a, b)
    warnings = []
    if w_nat - w_fixed > ToolkitConfig.NUMERIC_TOLERANCE:
        warnings.append(
            f"density matrices are not simultaneously diagonal in the given modes: "
            f"w_natural {w_nat:.6g} exceeds w_fixed_basis {w_fixed:.6g}"
        )
    return Report(
        scenario=ScenarioEcho(name=name, kind=ScenarioKind.EXACT),
        mode=EstimationMode.EXACT,
        total_w_particles=fock.w_particles(w_fixed),
        total_w_raw=w_fixed,
        exact=ExactResult(
            w_fixed_raw=w_fixed,
            w_fixed_particles=fock.w_particles(w_fixed),
            w_natural_raw=w_nat,
            w_natural_particles=fock.w_particles(w_nat),
            overlap_modulus=abs(fock.overlap(a, b))
        ),
        warnings=warnings,
        notes=["totals use the given mode basis; w_natural is the trace norm of the density-matrix difference"]
    )


def _run_rigid_body(scenario: Scenario) -> Report:
    cat = rigid_body_w(scenario.rigid_body.spec)
    return Report(
        scenario=ScenarioEcho(name=scenario.name, kind=scenario.kind),
        mode=cat.mode,
        species=cat.per_species,
        total_w_particles=cat.total_w_particles,
        total_w_raw=cat.total_w_raw,
        classification=cat.classification,
        warnings=cat.warnings,
        notes=cat.notes
    )


def _run_flux_qubit(scenario: Scenario) -> Report:
    body = scenario.flux_qubit
    cat = flux_qubit_w(body.n_electrons, body.velocity_ratio)
    pair = flux_qubit_pair_report(body.condensate, body.branch_a, body.branch_b)
    notes = list(cat.notes)
    notes.append(f"N_p = N x gap_ratio = {pair.n_pairs:.6g}; K = {pair.overlap_k:.6g}")
    if body.case == FluxQubitCase.ASYMMETRIC:
        notes.append(f"{body.branch_a.model} COM wavefunctions are model stand-ins, not quoted results")
    return Report(
        scenario=ScenarioEcho(name=scenario.name, kind=scenario.kind),
        mode=cat.mode,
        species=cat.per_species,
        total_w_particles=cat.total_w_particles,
        total_w_raw=cat.total_w_raw,
        w_cp=pair.w_cp,
        pair=pair,
        notes=notes
    )


def run_scenario(scenario: Scenario) -> Report:
    """Dispatch a validated scenario to its calculator"""
    logger.debug(f"Running scenario {scenario.name} ({scenario.kind.value})")
    try:
        if scenario.kind == ScenarioKind.EXACT:
            return exact_report(scenario.exact.state_a, scenario.exact.state_b, name=scenario.name)
        if scenario.kind == ScenarioKind.RIGID_BODY:
            return _run_rigid_body(scenario)
        return _run_flux_qubit(scenario)
    except ScenarioError:
        raise
    except CatSizeError as e:
        raise CatSizeError(f"scenario '{scenario.name}': {e} [{e.code}]", ErrorCodes.SCENARIO_FAILED) from e


ScenarioSource = Union[Scenario, str, Path]


def _run_source(source: ScenarioSource) -> Report:
    scenario = source if isinstance(source, Scenario) else load_scenario(source)
    return run_scenario(scenario)


async def run_scenarios_async(sources: Sequence[ScenarioSource]) -> List[Report]:
    """Evaluate scenarios (or scenario files) concurrently.

    Reports keep input order; when several fail, the first failure in input
    order is raised.
    """
    results = await asyncio.gather(
        *(asyncio.to_thread(_run_source, source) for source in sources),
        return_exceptions=True
    )
    for result in results:
        if isinstance(result, BaseException):
            raise result
    return list(results)


def run_scenarios(sources: Sequence[ScenarioSource]) -> List[Report]:
    """Synchronous version of run_scenarios_async"""
    return asyncio.run(run_scenarios_async(sources))


# Rendering

def _num(value: Optional[float]) -> str:
    if value is None:
        return "-"
    return f"{value:.{ToolkitConfig.TABLE_SIGNIFICANT_DIGITS}g}"


def _table(header: List[str], rows: List[List[str]]) -> List[str]:
    widths = [max(len(cell) for cell in column) for column in zip(header, *rows)]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in [header, *rows]]


def _render_table(report: Report) -> str:
    lines = [f"scenario: {report.scenario.name} ({report.scenario.kind.value})  mode: {report.mode.value}"]
    unit = "ratio" if report.mode == EstimationMode.CONFIGURED else "cm/s"
    lines += _table(
        ["species", "N", f"v ({unit})", f"v0 ({unit})", "contribution"],
        [
            [row.name, _num(row.count), _num(row.shift_velocity), _num(row.characteristic_velocity),
             _num(row.contribution)]
            for row in report.species
        ]
    )
    lines.append(f"total {_num(report.total_w_particles)}")
    lines.append(f"W_particles {_num(report.total_w_particles)}  W_raw {_num(report.total_w_raw)}")
    if report.exact is not None:
        lines.append(
            f"w_fixed_basis {_num(report.exact.w_fixed_raw)}  w_natural {_num(report.exact.w_natural_raw)}"
            f"  |<A|B>| {_num(report.exact.overlap_modulus)}"
        )
    if report.pair is not None:
        lines.append(f"W_CP {_num(report.pair.w_cp)}  N_p {_num(report.pair.n_pairs)}  K {_num(report.pair.overlap_k)}")
    if report.classification is not None:
        text = report.classification.kind.value
        if report.classification.required_magnification is not None:
            text += f" (magnification {_num(report.classification.required_magnification)})"
        lines.append(f"classification {text}")
    lines += [f"note: {note}" for note in report.notes]
    lines += [f"warning: {warning}" for warning in report.warnings]
    return "\n".join(lines)


def render(report: Report, fmt: ReportFormat = ReportFormat.TABLE) -> str:
    """Aligned text table or stable-key JSON document"""
    if ReportFormat(fmt) == ReportFormat.JSON:
        return json.dumps(report.model_dump(mode="json"), indent=2)
    return _render_table(report)


def parse_report(text: str) -> Report:
    """Inverse of render(report, json)"""
    return Report.model_validate_json(text)


# Built-in scenarios reproducing the quoted figures

BUILTIN_SCENARIOS: Dict[str, str] = {
    "lif-5um-paper": """
schema = 1
kind = "rigid_body"
name = "lif-5um-paper"

[rigid_body]
material = "LiF"
sphere_diameter_um = 5.0
displacement_um = 5.0
duration_s = 1.0
mode = "paper"
electron_count = 8e14
nucleon_treatment = "intranuclear"
""",
    "lif-5um-first-principles": """
schema = 1
kind = "rigid_body"
name = "lif-5um-first-principles"

[rigid_body]
material = "LiF"
sphere_diameter_um = 5.0
displacement_um = 5.0
duration_s = 1.0
mode = "first_principles"
nucleon_treatment = "intranuclear"
""",
    "lif-5um-paper-atomic-rms": """
schema = 1
kind = "rigid_body"
name = "lif-5um-paper-atomic-rms"

[rigid_body]
material = "LiF"
sphere_diameter_um = 5.0
displacement_um = 5.0
duration_s = 1.0
mode = "paper"
electron_count = 8e14
nucleon_treatment = "atomic_rms"
""",
    "lif-5um-paper-nuclei": """
schema = 1
kind = "rigid_body"
name = "lif-5um-paper-nuclei"

[rigid_body]
material = "LiF"
sphere_diameter_um = 5.0
displacement_um = 5.0
duration_s = 1.0
mode = "paper"
electron_count = 8e14
nucleon_treatment = "nucleus_composite"
""",
    "lif-1.5um-paper": """
schema = 1
kind = "rigid_body"
name = "lif-1.5um-paper"

[rigid_body]
material = "LiF"
sphere_diameter_um = 1.5
displacement_um = 1.5
duration_s = 1.0
mode = "paper"
nucleon_treatment = "intranuclear"
""",
    "lif-1.5um-first-principles": """
schema = 1
kind = "rigid_body"
name = "lif-1.5um-first-principles"

[rigid_body]
material = "LiF"
sphere_diameter_um = 1.5
displacement_um = 1.5
duration_s = 1.0
mode = "first_principles"
nucleon_treatment = "intranuclear"
""",
    "flux-qubit-1e9": """
schema = 1
kind = "flux_qubit"
name = "flux-qubit-1e9"

[flux_qubit]
n_electrons = 1e9
velocity_ratio = 5e-6
gap_ratio = 1e-3
case = "symmetric"
""",
    "flux-qubit-1e10": """
schema = 1
kind = "flux_qubit"
name = "flux-qubit-1e10"

[flux_qubit]
n_electrons = 1e10
velocity_ratio = 5e-7
gap_ratio = 1e-3
case = "symmetric"
""",
}


def builtin_scenarios() -> List[Scenario]:
    return [parse_scenario(text, source=f"<builtin:{name}>") for name, text in BUILTIN_SCENARIOS.items()]


def _nucleon_share(report: Report) -> float:
    electrons = math.fsum(r.contribution for r in report.species if r.kind == SpeciesKind.ELECTRON)
    others = math.fsum(r.contribution for r in report.species if r.kind != SpeciesKind.ELECTRON)
    return others / electrons


def reproduce_paper() -> PaperReproduction:
    """Run the built-in scenarios and line each quoted figure up with its recomputation"""
    reports = [run_scenario(s) for s in builtin_scenarios()]
    by_name = {r.scenario.name: r for r in reports}
    lif = Material.lif()
    fp_composition = composition(lif, Geometry.sphere(ToolkitConfig.PAPER_REFERENCE_DIAMETER_CM))

    def row(quantity: str, paper: str, name: str, computed: float, note: str = "") -> ComparisonRow:
        return ComparisonRow(quantity=quantity, paper_value=paper, computed=computed,
                             mode=by_name[name].mode, note=note or name)

    rows = [
        row("W, 5 um LiF", "around 1600", "lif-5um-paper", by_name["lif-5um-paper"].total_w_particles),
        row("W, 5 um LiF", "around 1600", "lif-5um-first-principles",
            by_name["lif-5um-first-principles"].total_w_particles),
        row("nucleon / electron share", "about 0.2", "lif-5um-paper", _nucleon_share(by_name["lif-5um-paper"])),
        row("nucleon / electron share", "about 0.2", "lif-5um-first-principles",
            _nucleon_share(by_name["lif-5um-first-principles"])),
        row("W, atomic-rms nucleon v0", "several orders above the electrons", "lif-5um-paper-atomic-rms",
            by_name["lif-5um-paper-atomic-rms"].total_w_particles),
        row("W, electrons + nuclei", "about 1e5", "lif-5um-paper-nuclei",
            by_name["lif-5um-paper-nuclei"].total_w_particles),
        ComparisonRow(quantity="electron v0 (cm/s)", paper_value="about 3e8",
                      computed=band_electron_v0(lif), mode=EstimationMode.FIRST_PRINCIPLES, note="h/(m_e a)"),
        ComparisonRow(quantity="electrons, 5 um LiF", paper_value="about 8e14",
                      computed=fp_composition.electron_count, mode=EstimationMode.FIRST_PRINCIPLES,
                      note="density-derived sphere"),
        row("W, 1.5 um LiF", "smaller than 3", "lif-1.5um-paper", by_name["lif-1.5um-paper"].total_w_particles),
        row("W, 1.5 um LiF", "smaller than 3", "lif-1.5um-first-principles",
            by_name["lif-1.5um-first-principles"].total_w_particles),
        row("W, flux qubit", "of order 5000", "flux-qubit-1e9", by_name["flux-qubit-1e9"].total_w_particles),
        row("W_CP, symmetric flux qubit", "1e6-1e7", "flux-qubit-1e9", by_name["flux-qubit-1e9"].w_cp),
        row("W_CP, symmetric flux qubit", "1e6-1e7", "flux-qubit-1e10", by_name["flux-qubit-1e10"].w_cp),
    ]
    return PaperReproduction(reports=reports, rows=rows)


def render_reproduction(reproduction: PaperReproduction, fmt: ReportFormat = ReportFormat.TABLE) -> str:
    if ReportFormat(fmt) == ReportFormat.JSON:
        return json.dumps(reproduction.model_dump(mode="json"), indent=2)
    lines = _table(
        ["quantity", "paper", "computed", "mode", "source"],
        [[r.quantity, r.paper_value, _num(r.computed), r.mode.value, r.note] for r in reproduction.rows]
    )
    for report in reproduction.reports:
        lines.append("")
        lines.append(_render_table(report))
    return "\n".join(lines)
