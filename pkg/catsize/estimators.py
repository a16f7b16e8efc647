"""
catsize - Order-of-magnitude estimators
Per-species contributions N(v/v0), material composition, and the rigid-body and flux-qubit calculators
"""

import logging
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from .distinctness import classify
from .models import (
    CatSizeError, CatSizeReport, Composition, ErrorCodes, EstimationMode, Geometry, Material,
    NucleonTreatment, Nucleus, PhysicalConstants, RigidBodySpec, SpeciesContribution,
    SpeciesKind, SpeciesPopulation, ToolkitConfig
)


logger = logging.getLogger(__name__)


_BUILTIN_MATERIALS: Dict[str, Material] = {
    material.name: material
    for material in [
        Material.lif(),
        Material(
            name="NaCl", mass_density=2.165, molar_mass=58.443,
            electrons_per_formula_unit=28, nucleons_per_formula_unit=58, cell_dimension_a=5.64e-8,
            nuclei=[Nucleus(symbol="Na", nucleons=23), Nucleus(symbol="Cl", nucleons=35)]
        ),
        Material(
            name="KCl", mass_density=1.984, molar_mass=74.551,
            electrons_per_formula_unit=36, nucleons_per_formula_unit=74, cell_dimension_a=6.29e-8,
            nuclei=[Nucleus(symbol="K", nucleons=39), Nucleus(symbol="Cl", nucleons=35)]
        ),
        Material(
            name="MgO", mass_density=3.58, molar_mass=40.304,
            electrons_per_formula_unit=20, nucleons_per_formula_unit=40, cell_dimension_a=4.21e-8,
            nuclei=[Nucleus(symbol="Mg", nucleons=24), Nucleus(symbol="O", nucleons=16)]
        ),
        Material(
            name="Si", mass_density=2.329, molar_mass=28.085,
            electrons_per_formula_unit=14, nucleons_per_formula_unit=28, cell_dimension_a=5.431e-8,
            nuclei=[Nucleus(symbol="Si", nucleons=28)]
        ),
    ]
}


def load_material_table(path: str) -> Dict[str, Material]:
    """Read `[materials.<name>]` tables from a TOML file"""
    try:
        with open(path, "rb") as f:
            document = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as e:
        raise CatSizeError(f"cannot read material table {path}: {e}", ErrorCodes.INVALID_VALUE)

    table: Dict[str, Material] = {}
    for name, fields in document.get("materials", {}).items():
        try:
            table[name] = Material.model_validate({"name": name, **fields})
        except ValidationError as e:
            for error in e.errors():
                location = ".".join(str(part) for part in error["loc"])
                if error["type"] == "extra_forbidden":
                    raise CatSizeError(
                        f"material {name}: unknown field '{location}'", ErrorCodes.UNKNOWN_MATERIAL_FIELD
                    )
            raise CatSizeError(f"material {name}: {e.errors()[0]['msg']}", ErrorCodes.INVALID_VALUE)
    return table


def material_table() -> Dict[str, Material]:
    """Built-in materials overlaid with the file named by CATSIZE_MATERIALS"""
    table = dict(_BUILTIN_MATERIALS)
    path = os.environ.get(ToolkitConfig.MATERIALS_ENV_VAR)
    if path:
        user_table = load_material_table(path)
        logger.debug(f"Loaded {len(user_table)} materials from {path}")
        table.update(user_table)
    return table


def lookup_material(name: str) -> Material:
    table = material_table()
    if name in table:
        return table[name]
    for key, material in table.items():
        if key.casefold() == name.casefold():
            return material
    raise CatSizeError(
        f"unknown material '{name}' (known: {', '.join(sorted(table))})", ErrorCodes.UNKNOWN_MATERIAL
    )


def contribution(species: SpeciesPopulation) -> float:
    """N * v / v0, or N * displaced_fraction for composite species"""
    if not species.characteristic_velocity > 0:
        raise CatSizeError(
            f"{species.name}: characteristic velocity must be positive", ErrorCodes.NONPOSITIVE_V0
        )
    if species.displaced_fraction is not None:
        return species.count * species.displaced_fraction
    return species.count * species.shift_velocity / species.characteristic_velocity


def contributions(species: List[SpeciesPopulation]) -> List[SpeciesContribution]:
    return [
        SpeciesContribution(
            name=s.name,
            kind=s.kind,
            count=s.count,
            shift_velocity=s.shift_velocity,
            characteristic_velocity=s.characteristic_velocity,
            contribution=contribution(s)
        )
        for s in species
    ]


def band_electron_v0(material: Material, constants: Optional[PhysicalConstants] = None) -> float:
    """h / (m_e a), the velocity scale of filled-band electrons"""
    constants = constants or PhysicalConstants.codata()
    return constants.planck_h / (constants.electron_mass * material.cell_dimension_a)


def composition(
    material: Union[Material, str],
    geometry: Geometry,
    constants: Optional[PhysicalConstants] = None
) -> Composition:
    """Electron, nucleon and formula-unit counts of a body from density and molar mass"""
    if isinstance(material, str):
        material = lookup_material(material)
    constants = constants or PhysicalConstants.codata()
    formula_units = geometry.volume * material.mass_density / material.molar_mass * constants.avogadro
    return Composition(
        electron_count=formula_units * material.electrons_per_formula_unit,
        nucleon_count=formula_units * material.nucleons_per_formula_unit,
        formula_units=formula_units
    )


def nucleus_species(
    material: Material,
    nucleon_count: float,
    shift_velocity: float,
    characteristic_velocity: float
) -> List[SpeciesPopulation]:
    """Split `nucleon_count` nucleons into the nuclei of `material`"""
    if not material.nuclei:
        raise CatSizeError(f"material {material.name} lists no nuclei", ErrorCodes.INAPPLICABLE_GROUPING)
    formula_units = nucleon_count / material.nucleons_per_formula_unit
    return [
        SpeciesPopulation(
            name=f"{nucleus.symbol} nuclei",
            kind=SpeciesKind.NUCLEUS,
            count=formula_units * nucleus.per_formula_unit,
            shift_velocity=shift_velocity,
            characteristic_velocity=characteristic_velocity,
            constituents_per_particle=nucleus.nucleons
        )
        for nucleus in material.nuclei
    ]


def self_traversal(
    diameter: float,
    mode: EstimationMode = EstimationMode.FIRST_PRINCIPLES,
    nucleon_treatment: NucleonTreatment = NucleonTreatment.INTRANUCLEAR,
    material: Optional[Material] = None,
    duration: float = 1.0,
    displacement: Optional[float] = None
) -> RigidBodySpec:
    """Sphere of `diameter` cm moving its own diameter (or `displacement`) in `duration` s"""
    return RigidBodySpec(
        material=material or Material.lif(),
        geometry=Geometry.sphere(diameter),
        displacement=diameter if displacement is None else displacement,
        duration=duration,
        mode=mode,
        nucleon_treatment=nucleon_treatment
    )


def rigid_body_w(spec: RigidBodySpec, constants: Optional[PhysicalConstants] = None) -> CatSizeReport:
    """Electron and nucleon contributions of a rigid body moving at displacement/duration"""
    material = spec.material
    v = spec.shift_velocity
    derived = composition(material, spec.geometry, constants)
    notes: List[str] = []
    warnings: List[str] = []

    if spec.mode == EstimationMode.PAPER:
        if spec.electron_count_override is not None:
            n_electrons = spec.electron_count_override
            notes.append(f"electron count pinned to {n_electrons:.6g}")
        else:
            scale = (spec.geometry.size / ToolkitConfig.PAPER_REFERENCE_DIAMETER_CM) ** 3
            n_electrons = ToolkitConfig.PAPER_ELECTRON_COUNT * scale
            notes.append(f"electron count = 8e14 x (size / 5 um)^3 = {n_electrons:.6g}")
        n_nucleons = n_electrons * ToolkitConfig.PAPER_NUCLEON_COUNT_RATIO
        v0_electron = ToolkitConfig.PAPER_ELECTRON_V0
        notes.append(f"electron v0 = {v0_electron:.6g} cm/s (quoted figure)")
        notes.append(f"nucleon count = {ToolkitConfig.PAPER_NUCLEON_COUNT_RATIO} x electron count")

        ratio = n_electrons / derived.electron_count
        if ratio > ToolkitConfig.DISCREPANCY_FACTOR or ratio < 1.0 / ToolkitConfig.DISCREPANCY_FACTOR:
            warnings.append(
                f"paper-mode electron count {n_electrons:.6g} differs from the density-derived "
                f"{derived.electron_count:.6g} by a factor {ratio:.3g}"
            )
    else:
        n_electrons = spec.electron_count_override or derived.electron_count
        n_nucleons = n_electrons * material.nucleon_electron_ratio
        v0_electron = band_electron_v0(material, constants)
        notes.append(f"electron count from density of {material.name} = {n_electrons:.6g}")
        notes.append(f"electron v0 = h/(m_e a) = {v0_electron:.6g} cm/s")

    species = [
        SpeciesPopulation(
            name="electrons",
            kind=SpeciesKind.ELECTRON,
            count=n_electrons,
            shift_velocity=v,
            characteristic_velocity=v0_electron
        )
    ]

    treatment = spec.nucleon_treatment
    if treatment == NucleonTreatment.INTRANUCLEAR:
        species.append(SpeciesPopulation(
            name="nucleons",
            kind=SpeciesKind.NUCLEON,
            count=n_nucleons,
            shift_velocity=v,
            characteristic_velocity=ToolkitConfig.INTRANUCLEAR_V0_RATIO * v0_electron
        ))
    elif treatment == NucleonTreatment.ATOMIC_RMS:
        species.append(SpeciesPopulation(
            name="nucleons",
            kind=SpeciesKind.NUCLEON,
            count=n_nucleons,
            shift_velocity=v,
            characteristic_velocity=ToolkitConfig.ATOMIC_RMS_V0_RATIO * v0_electron
        ))
    else:
        species.extend(nucleus_species(
            material, n_nucleons, v, ToolkitConfig.ATOMIC_RMS_V0_RATIO * v0_electron
        ))
    notes.append(f"nucleon treatment: {treatment.value}")

    classification = classify(spec.displacement, spec.duration, spec.available_magnification, spec.criterion)
    report = CatSizeReport.from_contributions(
        contributions(species), spec.mode, classification, notes, warnings
    )
    logger.debug(f"rigid_body_w({material.name}, {spec.mode.value}) -> {report.total_w_particles:.6g}")
    return report


def flux_qubit_w(n_electrons: float, velocity_ratio: float) -> CatSizeReport:
    """Single-electron W = N * (v / v0) for a flux qubit"""
    if not n_electrons > 0:
        raise CatSizeError(f"electron count must be positive, got {n_electrons}", ErrorCodes.INVALID_VALUE)
    if not 0.0 <= velocity_ratio <= 1.0:
        raise CatSizeError(f"velocity ratio {velocity_ratio} outside [0, 1]", ErrorCodes.RATIO_OUT_OF_RANGE)

    electrons = SpeciesPopulation(
        name="electrons",
        kind=SpeciesKind.ELECTRON,
        count=n_electrons,
        shift_velocity=velocity_ratio,
        characteristic_velocity=1.0
    )
    notes = [
        f"velocity_ratio = {velocity_ratio:g} is a configured input "
        "(v / v0, v0 the Fermi velocity up to a factor of order unity)",
        "v and v0 are dimensionless: v = velocity_ratio, v0 = 1"
    ]
    return CatSizeReport.from_contributions(contributions([electrons]), EstimationMode.CONFIGURED, notes=notes)
