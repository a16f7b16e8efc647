"""
catsize - Composite particles
Regrouping of constituents into nuclei or Cooper pairs, and the Cooper-pair cat size W_CP
"""

import logging
import math

from typing import List, Tuple, Union

import numpy as np
from scipy import integrate

from .estimators import nucleus_species
from .models import (
    CatSizeError, CondensateSpec, CooperPairGrouping, ErrorCodes, FreeNucleonsGrouping,
    GaussianPacket, NucleiGrouping, PairReport, RingMode, SpeciesKind, SpeciesPopulation,
    ToolkitConfig
)


logger = logging.getLogger(__name__)

Wavefunction = Union[RingMode, GaussianPacket]


def condensate_pair_count(spec: CondensateSpec) -> float:
    """N_p = N * (Delta / epsilon_F)"""
    if not 0.0 < spec.gap_ratio < 1.0:
        raise CatSizeError(f"gap ratio {spec.gap_ratio} outside (0, 1)", ErrorCodes.GAP_RATIO_OUT_OF_RANGE)
    if not spec.n_electrons > 0:
        raise CatSizeError(f"electron count must be positive, got {spec.n_electrons}", ErrorCodes.INVALID_VALUE)
    return spec.n_electrons * spec.gap_ratio


def _same_family(a: Wavefunction, b: Wavefunction) -> None:
    if type(a) is not type(b):
        raise CatSizeError(f"cannot overlap {a.model} with {b.model} wavefunctions", ErrorCodes.MODEL_MISMATCH)
    if isinstance(a, GaussianPacket) and not math.isclose(a.width, b.width, rel_tol=ToolkitConfig.NORM_TOLERANCE):
        raise CatSizeError(
            f"gaussian widths differ ({a.width} vs {b.width}); only equal widths are supported",
            ErrorCodes.MODEL_MISMATCH
        )


def com_overlap(a: Wavefunction, b: Wavefunction) -> float:
    """K = |<a|b>| for two center-of-mass wavefunctions of one model family.

    Ring modes: |sin(pi dl) / (pi dl)|, exactly 0 for nonzero integer dl.
    Equal-width gaussians: exp(-d^2 / (8 sigma^2)) * exp(-sigma^2 dk^2 / 2).
    """
    _same_family(a, b)
    if isinstance(a, RingMode):
        dl = a.angular_momentum - b.angular_momentum
        if dl == 0:
            return 1.0
        if float(dl).is_integer():
            return 0.0
        return min(1.0, abs(float(np.sinc(dl))))

    sigma = a.width
    d = a.center - b.center
    dk = a.mean_wavenumber - b.mean_wavenumber
    return min(1.0, math.exp(-d * d / (8.0 * sigma * sigma)) * math.exp(-0.5 * sigma * sigma * dk * dk))


def com_overlap_quadrature(a: Wavefunction, b: Wavefunction) -> float:
    """K by direct numerical integration of conj(a) * b"""
    _same_family(a, b)
    if isinstance(a, RingMode):
        dl = b.angular_momentum - a.angular_momentum
        re, _ = integrate.quad(lambda t: math.cos(dl * t) / (2 * math.pi), 0.0, 2 * math.pi, limit=200)
        im, _ = integrate.quad(lambda t: math.sin(dl * t) / (2 * math.pi), 0.0, 2 * math.pi, limit=200)
        return math.hypot(re, im)

    sigma = a.width

    def packet(p: GaussianPacket, x: float) -> complex:
        envelope = (2 * math.pi * sigma * sigma) ** -0.25 * math.exp(-(x - p.center) ** 2 / (4 * sigma * sigma))
        return envelope * complex(math.cos(p.mean_wavenumber * x), math.sin(p.mean_wavenumber * x))

    def integrand(x: float) -> complex:
        return packet(a, x).conjugate() * packet(b, x)

    lo = min(a.center, b.center) - 12 * sigma
    hi = max(a.center, b.center) + 12 * sigma
    options = dict(epsabs=1e-14, epsrel=1e-12, limit=500)
    re, _ = integrate.quad(lambda x: integrand(x).real, lo, hi, **options)
    im, _ = integrate.quad(lambda x: integrand(x).imag, lo, hi, **options)
    return math.hypot(re, im)


def w_cp(n_pairs: float, overlap_k: float) -> PairReport:
    """W_CP = N_p (1 - K)"""
    if not 0.0 <= overlap_k <= 1.0:
        raise CatSizeError(f"overlap K = {overlap_k} outside [0, 1]", ErrorCodes.OVERLAP_OUT_OF_RANGE)
    if not n_pairs >= 0:
        raise CatSizeError(f"pair count must be non-negative, got {n_pairs}", ErrorCodes.INVALID_VALUE)
    return PairReport(n_pairs=n_pairs, overlap_k=overlap_k, w_cp=n_pairs * (1.0 - overlap_k))


def symmetric_branches() -> Tuple[RingMode, RingMode]:
    """COM branches of a flux qubit at half a flux quantum: l = +1/2 and -1/2"""
    return RingMode(angular_momentum=0.5), RingMode(angular_momentum=-0.5)


def flux_qubit_pair_report(condensate: CondensateSpec, branch_a: Wavefunction, branch_b: Wavefunction) -> PairReport:
    n_pairs = condensate_pair_count(condensate)
    k = com_overlap(branch_a, branch_b)
    logger.debug(f"N_p = {n_pairs:.6g}, K = {k:.6g}")
    return w_cp(n_pairs, k)


def regroup(
    species: List[SpeciesPopulation],
    grouping: Union[FreeNucleonsGrouping, NucleiGrouping, CooperPairGrouping]
) -> List[SpeciesPopulation]:
    """Re-express constituents as composites.

    Nuclei: nucleon species become one species per nucleus of the material,
    moving with the atomic-rms v0. Cooper pairs: each electron species becomes
    N_p = count * gap_ratio pairs whose displaced fraction is 1 - K.
    """
    if not species or isinstance(grouping, FreeNucleonsGrouping):
        return list(species)

    if isinstance(grouping, NucleiGrouping):
        if not any(s.kind == SpeciesKind.NUCLEON for s in species):
            raise CatSizeError("no nucleon species to bind into nuclei", ErrorCodes.INAPPLICABLE_GROUPING)
        v0 = grouping.atomic_rms_v0
        if v0 is None:
            electrons = [s for s in species if s.kind == SpeciesKind.ELECTRON]
            if not electrons:
                raise CatSizeError(
                    "atomic rms v0 needs an electron species or an explicit atomic_rms_v0",
                    ErrorCodes.INAPPLICABLE_GROUPING
                )
            v0 = ToolkitConfig.ATOMIC_RMS_V0_RATIO * electrons[0].characteristic_velocity
        regrouped: List[SpeciesPopulation] = []
        for s in species:
            if s.kind == SpeciesKind.NUCLEON:
                regrouped.extend(nucleus_species(grouping.material, s.count, s.shift_velocity, v0))
            else:
                regrouped.append(s)
        return regrouped

    if not any(s.kind == SpeciesKind.ELECTRON for s in species):
        raise CatSizeError("no electron species to bind into Cooper pairs", ErrorCodes.INAPPLICABLE_GROUPING)
    k = com_overlap(grouping.branch_a, grouping.branch_b)
    regrouped = []
    for s in species:
        if s.kind != SpeciesKind.ELECTRON:
            regrouped.append(s)
            continue
        n_pairs = condensate_pair_count(CondensateSpec(n_electrons=s.count, gap_ratio=grouping.condensate.gap_ratio))
        regrouped.append(SpeciesPopulation(
            name="Cooper pairs",
            kind=SpeciesKind.COOPER_PAIR,
            count=n_pairs,
            shift_velocity=s.shift_velocity,
            characteristic_velocity=s.characteristic_velocity,
            constituents_per_particle=2,
            displaced_fraction=1.0 - k
        ))
    return regrouped
