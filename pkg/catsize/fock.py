"""
catsize - Exact Fock-space engine
Sparse occupation-number states, one-body density matrices and the two W evaluators
"""

import itertools
import logging
import math

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .models import (
    CatSizeError, ErrorCodes, ManyBodyState, ModeBasis, Occupations, OneBodyRDM, ToolkitConfig
)


logger = logging.getLogger(__name__)

Amplitudes = Dict[Occupations, complex]


def _check_occupations(basis: ModeBasis, occupations: Iterable[int]) -> Occupations:
    occ = tuple(int(n) for n in occupations)
    if len(occ) != basis.num_modes:
        raise CatSizeError(
            f"occupation vector has {len(occ)} entries, basis has {basis.num_modes} modes",
            ErrorCodes.DIMENSION_MISMATCH
        )
    for k, n in enumerate(occ):
        if n < 0 or n > basis.max_occupancy:
            raise CatSizeError(
                f"mode {k} occupation {n} outside 0..{basis.max_occupancy} ({basis.statistics.value})",
                ErrorCodes.OCCUPANCY_VIOLATION
            )
    return occ


def _normalized(basis: ModeBasis, amplitudes: Amplitudes) -> ManyBodyState:
    kept = {occ: complex(amp) for occ, amp in sorted(amplitudes.items()) if amp != 0}
    norm = math.sqrt(math.fsum(abs(amp) ** 2 for amp in kept.values()))
    if norm <= ToolkitConfig.NORM_TOLERANCE:
        raise CatSizeError(f"superposition norm {norm:.3e} is zero", ErrorCodes.ZERO_NORM)
    return ManyBodyState(basis=basis, terms={occ: amp / norm for occ, amp in kept.items()})


def _require_same_basis(a: ManyBodyState, b: ManyBodyState) -> ModeBasis:
    if a.basis != b.basis:
        raise CatSizeError(f"states live in different bases: {a.basis} vs {b.basis}", ErrorCodes.BASIS_MISMATCH)
    return a.basis


def _check_mode(basis: ModeBasis, k: int) -> None:
    if not 0 <= k < basis.num_modes:
        raise CatSizeError(f"mode {k} outside 0..{basis.num_modes - 1}", ErrorCodes.INDEX_OUT_OF_RANGE)


def basis_state(basis: ModeBasis, occupations: Sequence[int]) -> ManyBodyState:
    """Single Fock state with amplitude 1"""
    occ = _check_occupations(basis, occupations)
    return ManyBodyState(basis=basis, terms={occ: 1 + 0j})


def from_terms(basis: ModeBasis, terms: Iterable[Tuple[complex, Sequence[int]]]) -> ManyBodyState:
    """Normalized state from (amplitude, occupations) pairs; repeated vectors add up"""
    amplitudes: Amplitudes = {}
    for amp, occupations in terms:
        occ = _check_occupations(basis, occupations)
        amplitudes[occ] = amplitudes.get(occ, 0j) + complex(amp)
    return _normalized(basis, amplitudes)


def superpose(terms: Sequence[Tuple[complex, ManyBodyState]]) -> ManyBodyState:
    """Normalized linear combination of states sharing one basis"""
    if not terms:
        raise CatSizeError("empty superposition", ErrorCodes.ZERO_NORM)
    basis = terms[0][1].basis
    amplitudes: Amplitudes = {}
    for coeff, state in terms:
        if state.basis != basis:
            raise CatSizeError("superposed states live in different bases", ErrorCodes.BASIS_MISMATCH)
        for occ, amp in state.terms.items():
            amplitudes[occ] = amplitudes.get(occ, 0j) + complex(coeff) * amp
    return _normalized(basis, amplitudes)


def occupation_expectation(state: ManyBodyState, k: int) -> float:
    """<n_k> summed directly over the amplitude map"""
    _check_mode(state.basis, k)
    return math.fsum(abs(amp) ** 2 * occ[k] for occ, amp in state.terms.items())


def particle_number(state: ManyBodyState) -> float:
    """<N> over all modes"""
    return math.fsum(abs(amp) ** 2 * sum(occ) for occ, amp in state.terms.items())


def apply_annihilation(basis: ModeBasis, amplitudes: Amplitudes, mode: int) -> Amplitudes:
    """a_mode on a sparse amplitude map.

    Fermionic sign is (-1)^(occupied modes with index < mode).
    """
    out: Amplitudes = {}
    for occ, amp in amplitudes.items():
        n = occ[mode]
        if n == 0:
            continue
        if basis.is_fermionic:
            factor = -1.0 if sum(occ[:mode]) % 2 else 1.0
        else:
            factor = math.sqrt(n)
        lowered = occ[:mode] + (n - 1,) + occ[mode + 1:]
        out[lowered] = out.get(lowered, 0j) + factor * amp
    return out


def apply_creation(
    basis: ModeBasis,
    amplitudes: Amplitudes,
    mode: int,
    max_occupancy: Optional[int] = None
) -> Amplitudes:
    """a_mode^dagger on a sparse amplitude map, truncated at `max_occupancy`"""
    cap = 1 if basis.is_fermionic else (max_occupancy or basis.max_occupancy)
    out: Amplitudes = {}
    for occ, amp in amplitudes.items():
        n = occ[mode]
        if n >= cap:
            continue
        if basis.is_fermionic:
            factor = -1.0 if sum(occ[:mode]) % 2 else 1.0
        else:
            factor = math.sqrt(n + 1)
        raised = occ[:mode] + (n + 1,) + occ[mode + 1:]
        out[raised] = out.get(raised, 0j) + factor * amp
    return out


def one_body_rdm(state: ManyBodyState) -> OneBodyRDM:
    """rho[i][j] = <a_j^dagger a_i>; the diagonal holds <n_k>"""
    basis = state.basis
    m = basis.num_modes
    matrix = np.zeros((m, m), dtype=complex)
    for j in range(m):
        lowered = apply_annihilation(basis, state.terms, j)
        if not lowered:
            continue
        for i in range(m):
            raised = apply_creation(basis, lowered, i)
            # <psi| a_i^dagger a_j |psi> is rho[j][i]
            matrix[j, i] = sum(np.conj(state.amplitude(occ)) * amp for occ, amp in raised.items())
    return OneBodyRDM(matrix=matrix, particle_number_sector=float(np.real(np.trace(matrix))))


def w_fixed_basis(a: ManyBodyState, b: ManyBodyState) -> float:
    """Raw W = sum_k |<n_k>_A - <n_k>_B| in the states' own mode basis"""
    _require_same_basis(a, b)
    delta = one_body_rdm(a).diagonal() - one_body_rdm(b).diagonal()
    w = math.fsum(abs(x) for x in delta)
    logger.debug(f"w_fixed_basis = {w}")
    return w


def w_natural(a: ManyBodyState, b: ManyBodyState) -> float:
    """Raw W as the trace norm of rho_A - rho_B (basis independent)"""
    _require_same_basis(a, b)
    delta = one_body_rdm(a).matrix - one_body_rdm(b).matrix
    delta = 0.5 * (delta + delta.conj().T)
    eigenvalues = np.linalg.eigvalsh(delta)
    w = math.fsum(abs(float(x)) for x in eigenvalues)
    logger.debug(f"w_natural = {w} from eigenvalues {eigenvalues}")
    return w


def w_particles(w_raw: float) -> float:
    """Shifted-particle convention: half of sum_k |Delta n_k|"""
    return 0.5 * w_raw


def overlap(a: ManyBodyState, b: ManyBodyState) -> complex:
    """<A|B>"""
    _require_same_basis(a, b)
    return complex(sum(np.conj(amp) * b.amplitude(occ) for occ, amp in a.terms.items()))


def shifted_fermi_sea(num_modes: int, num_particles: int, shift: int) -> ManyBodyState:
    """1D Fermi sea filling momentum modes shift .. shift+num_particles-1"""
    if num_particles < 0 or shift < 0 or num_particles + shift > num_modes:
        raise CatSizeError(
            f"sea of {num_particles} particles shifted by {shift} does not fit {num_modes} modes",
            ErrorCodes.DIMENSION_MISMATCH
        )
    occ = [0] * num_modes
    for k in range(shift, shift + num_particles):
        occ[k] = 1
    return basis_state(ModeBasis.fermionic(num_modes), occ)


def rotate_modes(state: ManyBodyState, unitary: np.ndarray) -> ManyBodyState:
    """Apply a single-particle unitary, a_k^dagger -> sum_l U[l, k] a_l^dagger"""
    basis = state.basis
    m = basis.num_modes
    u = np.asarray(unitary, dtype=complex)
    if u.shape != (m, m):
        raise CatSizeError(f"rotation has shape {u.shape}, expected {(m, m)}", ErrorCodes.DIMENSION_MISMATCH)
    if not np.allclose(u.conj().T @ u, np.eye(m), atol=ToolkitConfig.NUMERIC_TOLERANCE):
        raise CatSizeError("mode rotation is not unitary", ErrorCodes.NOT_UNITARY)

    vacuum = (0,) * m
    result: Amplitudes = {}
    for occ, amp in state.terms.items():
        cap = max(sum(occ), 1)
        # |occ> = prod_k (a_k^dagger)^n_k / sqrt(n_k!) |0>, mode 0 leftmost
        creators = [k for k in range(m) for _ in range(occ[k])]
        weight = 1.0 if basis.is_fermionic else math.prod(math.sqrt(math.factorial(n)) for n in occ)
        current: Amplitudes = {vacuum: amp / weight}
        for k in reversed(creators):
            nxt: Amplitudes = {}
            for l in range(m):
                if u[l, k] == 0:
                    continue
                for o, a in apply_creation(basis, current, l, max_occupancy=cap).items():
                    nxt[o] = nxt.get(o, 0j) + u[l, k] * a
            current = nxt
        for o, a in current.items():
            result[o] = result.get(o, 0j) + a

    for occ, amp in result.items():
        if max(occ) > basis.max_occupancy and abs(amp) > ToolkitConfig.NUMERIC_TOLERANCE:
            raise CatSizeError(
                f"rotated state exceeds max_occupancy {basis.max_occupancy}",
                ErrorCodes.OCCUPANCY_VIOLATION
            )
    return _normalized(basis, {occ: amp for occ, amp in result.items() if max(occ) <= basis.max_occupancy})


# Dense oracle: full truncated Fock space, matrix operators

def fock_space(basis: ModeBasis) -> List[Occupations]:
    """Every occupation vector of the basis, lexicographically ordered"""
    return list(itertools.product(range(basis.max_occupancy + 1), repeat=basis.num_modes))


def dense_vector(state: ManyBodyState, space: Optional[List[Occupations]] = None) -> np.ndarray:
    space = space or fock_space(state.basis)
    return np.array([state.amplitude(occ) for occ in space], dtype=complex)


def dense_annihilation(basis: ModeBasis, k: int, space: Optional[List[Occupations]] = None) -> np.ndarray:
    """Matrix of a_k over the whole truncated space (Jordan-Wigner string for fermions)"""
    _check_mode(basis, k)
    space = space or fock_space(basis)
    index = {occ: i for i, occ in enumerate(space)}
    op = np.zeros((len(space), len(space)), dtype=complex)
    for col, occ in enumerate(space):
        n = occ[k]
        if n == 0:
            continue
        target = list(occ)
        target[k] -= 1
        if basis.is_fermionic:
            op[index[tuple(target)], col] = (-1) ** sum(occ[:k])
        else:
            op[index[tuple(target)], col] = np.sqrt(n)
    return op


def brute_force_occupations(state: ManyBodyState) -> np.ndarray:
    """<n_k> for every mode via dense number operators"""
    space = fock_space(state.basis)
    vec = dense_vector(state, space)
    occupations = []
    for k in range(state.basis.num_modes):
        a = dense_annihilation(state.basis, k, space)
        occupations.append(np.real(vec.conj() @ (a.conj().T @ a) @ vec))
    return np.array(occupations)


def brute_force_rdm(state: ManyBodyState) -> np.ndarray:
    """rho[i][j] = <a_j^dagger a_i> via dense operators"""
    space = fock_space(state.basis)
    vec = dense_vector(state, space)
    ops = [dense_annihilation(state.basis, k, space) for k in range(state.basis.num_modes)]
    m = state.basis.num_modes
    rho = np.zeros((m, m), dtype=complex)
    for i in range(m):
        for j in range(m):
            rho[i, j] = vec.conj() @ (ops[j].conj().T @ ops[i]) @ vec
    return rho


def brute_force_w(a: ManyBodyState, b: ManyBodyState) -> float:
    """Raw W from dense number operators"""
    _require_same_basis(a, b)
    return float(np.sum(np.abs(brute_force_occupations(a) - brute_force_occupations(b))))


def random_state(
    basis: ModeBasis,
    rng: np.random.Generator,
    num_terms: int = 3,
    particle_number: Optional[int] = None
) -> ManyBodyState:
    """Random normalized superposition of up to `num_terms` Fock states"""
    space = fock_space(basis)
    if particle_number is not None:
        space = [occ for occ in space if sum(occ) == particle_number]
    if not space:
        raise CatSizeError(f"no Fock states with {particle_number} particles", ErrorCodes.DIMENSION_MISMATCH)
    picks = rng.choice(len(space), size=min(num_terms, len(space)), replace=False)
    amplitudes = rng.normal(size=len(picks)) + 1j * rng.normal(size=len(picks))
    return from_terms(basis, [(amp, space[i]) for amp, i in zip(amplitudes, picks)])
