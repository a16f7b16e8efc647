"""
Unit tests for composite particles: condensate pair counts, COM overlaps,
W_CP and regrouping of constituents into nuclei or Cooper pairs.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catsize.composites import (
    com_overlap, com_overlap_quadrature, condensate_pair_count, flux_qubit_pair_report, regroup,
    symmetric_branches, w_cp
)
from catsize.estimators import contribution, rigid_body_w
from catsize.models import (
    CatSizeError, CondensateSpec, CooperPairGrouping, ErrorCodes, FreeNucleonsGrouping, GaussianPacket,
    NucleiGrouping, NucleonTreatment, RingMode, SpeciesKind, SpeciesPopulation
)


@pytest.fixture
def condensate():
    return CondensateSpec(n_electrons=1e9, gap_ratio=1e-3)


@pytest.fixture
def paper_species(lif_paper_spec):
    """Electron and nucleon populations of the 5 um LiF particle"""
    report = rigid_body_w(lif_paper_spec)
    return [
        SpeciesPopulation(name=row.name, kind=row.kind, count=row.count, shift_velocity=row.shift_velocity,
                          characteristic_velocity=row.characteristic_velocity)
        for row in report.per_species
    ]


class TestCondensate:
    """Test N_p = N * gap_ratio."""

    @pytest.mark.unit
    def test_pair_count(self, condensate):
        assert condensate_pair_count(condensate) == pytest.approx(1e6, rel=1e-12)

    @pytest.mark.unit
    def test_gap_ratio_rechecked(self):
        spec = CondensateSpec.model_construct(n_electrons=1e9, gap_ratio=1.5)
        with pytest.raises(CatSizeError) as exc_info:
            condensate_pair_count(spec)
        assert exc_info.value.code == ErrorCodes.GAP_RATIO_OUT_OF_RANGE


class TestOverlap:
    """Test center-of-mass overlaps."""

    @pytest.mark.unit
    def test_symmetric_branches_are_orthogonal(self):
        a, b = symmetric_branches()
        assert com_overlap(a, b) == 0.0

    @pytest.mark.unit
    def test_identical_ring_modes(self):
        assert com_overlap(RingMode(angular_momentum=0.3), RingMode(angular_momentum=0.3)) == 1.0

    @pytest.mark.unit
    def test_half_integer_ring_shift(self):
        k = com_overlap(RingMode(angular_momentum=0.5), RingMode(angular_momentum=0.0))
        assert k == pytest.approx(2 / math.pi, rel=1e-12)

    @pytest.mark.unit
    def test_ring_quadrature(self):
        a, b = RingMode(angular_momentum=0.5), RingMode(angular_momentum=-0.25)
        assert com_overlap_quadrature(a, b) == pytest.approx(com_overlap(a, b), abs=1e-8)

    @pytest.mark.unit
    def test_gaussian_closed_form(self):
        a = GaussianPacket(center=0.0, width=1.0)
        b = GaussianPacket(center=2.0, width=1.0)
        assert com_overlap(a, b) == pytest.approx(math.exp(-0.5), rel=1e-12)
        assert com_overlap(a, a) == 1.0

    @pytest.mark.unit
    def test_gaussian_momentum_offset(self):
        a = GaussianPacket(width=0.5, mean_wavenumber=1.0)
        b = GaussianPacket(width=0.5, mean_wavenumber=-1.0)
        assert com_overlap(a, b) == pytest.approx(math.exp(-0.5), rel=1e-12)

    @pytest.mark.unit
    def test_overlap_is_symmetric(self):
        a = GaussianPacket(center=0.3, mean_wavenumber=0.7, width=0.9)
        b = GaussianPacket(center=-1.1, mean_wavenumber=0.2, width=0.9)
        assert com_overlap(a, b) == com_overlap(b, a)

    @pytest.mark.unit
    def test_gaussian_matches_quadrature(self, rng):
        """100 random equal-width pairs agree with direct integration."""
        for _ in range(100):
            width = rng.uniform(0.3, 2.0)
            a = GaussianPacket(center=rng.uniform(-3, 3), mean_wavenumber=rng.uniform(-2, 2), width=width)
            b = GaussianPacket(center=rng.uniform(-3, 3), mean_wavenumber=rng.uniform(-2, 2), width=width)
            assert abs(com_overlap(a, b) - com_overlap_quadrature(a, b)) <= 1e-8

    @pytest.mark.unit
    def test_model_mismatch(self):
        with pytest.raises(CatSizeError) as exc_info:
            com_overlap(RingMode(angular_momentum=0.5), GaussianPacket(width=1.0))
        assert exc_info.value.code == ErrorCodes.MODEL_MISMATCH

    @pytest.mark.unit
    def test_unequal_widths_rejected(self):
        with pytest.raises(CatSizeError) as exc_info:
            com_overlap(GaussianPacket(width=1.0), GaussianPacket(width=2.0))
        assert exc_info.value.code == ErrorCodes.MODEL_MISMATCH


class TestCooperPairW:
    """Test W_CP = N_p (1 - K)."""

    @pytest.mark.unit
    def test_w_cp(self):
        report = w_cp(1e6, 0.25)
        assert report.w_cp == pytest.approx(7.5e5)
        assert report.n_pairs == 1e6

    @pytest.mark.unit
    @pytest.mark.parametrize("k", [-0.1, 1.2])
    def test_overlap_out_of_range(self, k):
        with pytest.raises(CatSizeError) as exc_info:
            w_cp(1e6, k)
        assert exc_info.value.code == ErrorCodes.OVERLAP_OUT_OF_RANGE

    @pytest.mark.unit
    @pytest.mark.parametrize("n_electrons,expected", [(1e9, 1e6), (1e10, 1e7)])
    def test_symmetric_flux_qubit(self, n_electrons, expected):
        report = flux_qubit_pair_report(CondensateSpec(n_electrons=n_electrons, gap_ratio=1e-3), *symmetric_branches())
        assert abs(report.w_cp - expected) <= 1e-9 * expected
        assert report.overlap_k == 0.0

    @pytest.mark.unit
    def test_asymmetric_flux_qubit(self, condensate):
        a, b = RingMode(angular_momentum=0.5), RingMode(angular_momentum=0.0)
        report = flux_qubit_pair_report(condensate, a, b)
        assert report.w_cp == pytest.approx(1e6 * (1 - 2 / math.pi), rel=1e-9)


class TestRegroup:
    """Test re-expressing constituents as composites."""

    @pytest.mark.unit
    def test_free_nucleons_is_identity(self, paper_species):
        assert regroup(paper_species, FreeNucleonsGrouping()) == paper_species

    @pytest.mark.unit
    def test_empty_species(self):
        assert regroup([], NucleiGrouping()) == []

    @pytest.mark.unit
    def test_nuclei_grouping_matches_composite_treatment(self, paper_species, lif_paper_spec):
        regrouped = regroup(paper_species, NucleiGrouping())
        assert [s.kind for s in regrouped] == [SpeciesKind.ELECTRON, SpeciesKind.NUCLEUS, SpeciesKind.NUCLEUS]
        composite = rigid_body_w(lif_paper_spec.model_copy(
            update={"nucleon_treatment": NucleonTreatment.NUCLEUS_COMPOSITE}
        ))
        total = math.fsum(contribution(s) for s in regrouped)
        assert total == pytest.approx(composite.total_w_particles, rel=1e-12)

    @pytest.mark.unit
    def test_nuclei_need_nucleons(self):
        electrons = [SpeciesPopulation(name="e", kind=SpeciesKind.ELECTRON, count=1, characteristic_velocity=1)]
        with pytest.raises(CatSizeError) as exc_info:
            regroup(electrons, NucleiGrouping())
        assert exc_info.value.code == ErrorCodes.INAPPLICABLE_GROUPING

    @pytest.mark.unit
    def test_cooper_pairs(self, condensate):
        electrons = [SpeciesPopulation(name="electrons", kind=SpeciesKind.ELECTRON, count=1e9,
                                       shift_velocity=5e-6, characteristic_velocity=1.0)]
        a, b = symmetric_branches()
        pairs = regroup(electrons, CooperPairGrouping(condensate=condensate, branch_a=a, branch_b=b))
        assert len(pairs) == 1
        assert pairs[0].kind == SpeciesKind.COOPER_PAIR
        assert pairs[0].constituents_per_particle == 2
        assert contribution(pairs[0]) == pytest.approx(1e6, rel=1e-12)

    @pytest.mark.unit
    def test_cooper_pairs_need_electrons(self, condensate):
        nucleons = [SpeciesPopulation(name="n", kind=SpeciesKind.NUCLEON, count=1, characteristic_velocity=1)]
        a, b = symmetric_branches()
        with pytest.raises(CatSizeError) as exc_info:
            regroup(nucleons, CooperPairGrouping(condensate=condensate, branch_a=a, branch_b=b))
        assert exc_info.value.code == ErrorCodes.INAPPLICABLE_GROUPING


class TestRingOverlap:
    """Ring-mode overlaps away from the symmetric point."""

    @pytest.mark.unit
    @pytest.mark.parametrize("l_a,l_b", [(2.0, 0.0), (1.5, -1.5), (-2.5, 2.5), (0.5, 5.5)])
    def test_integer_shift_is_orthogonal(self, l_a, l_b):
        assert com_overlap(RingMode(angular_momentum=l_a), RingMode(angular_momentum=l_b)) == 0.0

    @pytest.mark.unit
    @pytest.mark.parametrize("dl", [10.5, 100.5, 1000.5])
    def test_half_integer_shift_decays_as_inverse(self, dl):
        k = com_overlap(RingMode(angular_momentum=dl), RingMode(angular_momentum=0.0))
        assert k == pytest.approx(1.0 / (math.pi * dl), rel=1e-9)

    @pytest.mark.property
    @settings(max_examples=200, deadline=None)
    @given(dl=st.floats(min_value=1.0, max_value=1e4, allow_nan=False))
    def test_overlap_bounded_by_inverse_shift(self, dl):
        k = com_overlap(RingMode(angular_momentum=dl), RingMode(angular_momentum=0.0))
        assert 0.0 <= k <= (1.0 + 1e-12) / (math.pi * dl)


class TestCompositeProperties:
    """Property-based invariants of W_CP and regrouping."""

    @pytest.mark.property
    @settings(max_examples=200, deadline=None)
    @given(
        n_pairs=st.floats(min_value=0.0, max_value=1e12, allow_nan=False),
        k1=st.floats(min_value=0.0, max_value=1.0),
        k2=st.floats(min_value=0.0, max_value=1.0)
    )
    def test_w_cp_never_grows_with_overlap(self, n_pairs, k1, k2):
        low, high = sorted((k1, k2))
        assert w_cp(n_pairs, high).w_cp <= w_cp(n_pairs, low).w_cp

    @pytest.mark.property
    @settings(max_examples=50, deadline=None)
    @given(n_pairs=st.floats(min_value=0.0, max_value=1e12, allow_nan=False))
    def test_full_overlap_gives_zero(self, n_pairs):
        assert w_cp(n_pairs, 1.0).w_cp == 0.0

    @pytest.mark.property
    @settings(max_examples=200, deadline=None)
    @given(nucleons=st.floats(min_value=1.0, max_value=1e20, allow_nan=False))
    def test_nuclei_keep_every_nucleon(self, nucleons):
        species = [
            SpeciesPopulation(name="electrons", kind=SpeciesKind.ELECTRON, count=nucleons / 2,
                              shift_velocity=5e-4, characteristic_velocity=3e8),
            SpeciesPopulation(name="nucleons", kind=SpeciesKind.NUCLEON, count=nucleons,
                              shift_velocity=5e-4, characteristic_velocity=3e9),
        ]
        nuclei = [s for s in regroup(species, NucleiGrouping()) if s.kind == SpeciesKind.NUCLEUS]
        bound = math.fsum(s.count * s.constituents_per_particle for s in nuclei)
        assert math.isclose(bound, nucleons, rel_tol=1e-12)
