"""Schwinger-style two-mode boson realization of the su(1,1) ladders.

Two independent truncated oscillator modes A, B carry L+ = A†B†, L- = AB,
L3 = (A†A + B†B + 1)/2.  The Casimir is diagonal with eigenvalue
j = (n_A - n_B)/2, and each fixed-j sector reproduces the discrete series of
weight k = |j| + 1/2 entrywise (the j = 0 sector is the square-root-free
weight-1/2 ladder).  On top of this sits the dissipative Hamiltonian
H0 = Omega (A†A - B†B), HI = i Gamma (A†B† - AB) = -2 Gamma L2.

Truncation lives at the per-mode cutoff n_max: an "interior" of size b means
the states with both occupations below b, which is where every identity holds
exactly.  The finite conjugation e^{(pi/2) L1} L3 e^{-(pi/2) L1} is non-unitary
and truncation-dominated, so it is exposed only as a diagnostic; the
infinitesimal relations [L1, L3] = -i L2 and [L1, [L1, L3]] = -L3, which
integrate to it, are the checked form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np

from .algebra import LadderRep, Su11, build_su11_rep
from .operators import OperatorMatrix, matrix_exponential, max_entry, restricted


@dataclass(frozen=True, eq=False)
class TwoModeSpace:
    """Truncated two-oscillator space with mode and ladder operators.

    Basis |n_A, n_B> with 0 <= n_A, n_B <= n_max, flattened row-major:
    flat index = n_A (n_max + 1) + n_B.
    """

    n_max: int
    dim: int
    A: OperatorMatrix
    Adag: OperatorMatrix
    B: OperatorMatrix
    Bdag: OperatorMatrix
    Lplus: OperatorMatrix
    Lminus: OperatorMatrix
    L3: OperatorMatrix

    def index(self, n_a: int, n_b: int) -> int:
        if not (0 <= n_a <= self.n_max and 0 <= n_b <= self.n_max):
            raise ValueError("occupation out of range")
        return n_a * (self.n_max + 1) + n_b

    def occupations(self, flat: int) -> tuple[int, int]:
        return divmod(int(flat), self.n_max + 1)


@dataclass(frozen=True, eq=False)
class SectorDecomposition:
    """Partition of the two-mode basis by j = (n_A - n_B)/2.

    Within each sector the indices are ordered by ascending m = (n_A + n_B)/2,
    i.e. by the ladder level n = m - |j|.  Each sector carries the induced
    discrete-series weight k = |j| + 1/2.
    """

    sectors: dict[float, list[int]]
    induced_k: dict[float, float]


@dataclass(frozen=True)
class DissipativeParams:
    """Splitting Omega and pumping Gamma > 0; the oscillator frequency is 2 Gamma."""

    Omega: float
    Gamma: float

    def __post_init__(self) -> None:
        if self.Gamma <= 0:
            raise ValueError("Gamma must be positive")

    @property
    def omega(self) -> float:
        return 2.0 * self.Gamma


def build_two_mode(n_max: int) -> TwoModeSpace:
    """Tensor two single-mode ladders and form L+, L-, L3."""
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    cutoff = n_max + 1
    lower = np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), 1)
    eye = np.eye(cutoff)
    a = np.kron(lower, eye)
    b = np.kron(eye, lower)
    adag, bdag = a.T, b.T
    lplus = adag @ bdag
    lminus = a @ b
    l3 = 0.5 * (adag @ a + bdag @ b + np.eye(cutoff * cutoff))
    return TwoModeSpace(
        n_max=n_max,
        dim=cutoff * cutoff,
        A=OperatorMatrix("A", a),
        Adag=OperatorMatrix("Adag", adag),
        B=OperatorMatrix("B", b),
        Bdag=OperatorMatrix("Bdag", bdag),
        Lplus=OperatorMatrix("L+", lplus),
        Lminus=OperatorMatrix("L-", lminus),
        L3=OperatorMatrix("L3", l3),
    )


def interior_indices(space: TwoModeSpace, bound: int | None = None) -> list[int]:
    """Flat indices with both occupations below `bound` (default n_max)."""
    bound = space.n_max if bound is None else int(bound)
    side = space.n_max + 1
    return [
        n_a * side + n_b for n_a in range(min(bound, side)) for n_b in range(min(bound, side))
    ]


def _mode_numbers(space: TwoModeSpace) -> tuple[np.ndarray, np.ndarray]:
    side = space.n_max + 1
    n_a = np.repeat(np.arange(side), side).astype(float)
    n_b = np.tile(np.arange(side), side).astype(float)
    return n_a, n_b


def casimir_interior_residual(space: TwoModeSpace) -> float:
    """Max-entry gap between the ladder-form Casimir and (A†A - B†B)^2/4 on the interior."""
    c2 = _casimir_ladder_form(space)
    n_a, n_b = _mode_numbers(space)
    mode_form = np.diag(0.25 * (n_a - n_b) ** 2)
    keep = interior_indices(space)
    return max_entry(restricted(c2 - mode_form, keep))


def _casimir_ladder_form(space: TwoModeSpace) -> np.ndarray:
    l3, lp, lm = space.L3.entries, space.Lplus.entries, space.Lminus.entries
    return 0.25 * np.eye(space.dim) + l3 @ l3 - 0.5 * (lp @ lm + lm @ lp)


def casimir(space: TwoModeSpace, tol: float = 1e-12) -> OperatorMatrix:
    """Casimir squared, C^2 = 1/4 + L3^2 - (L+L- + L-L+)/2.

    Verified against the diagonal mode form (A†A - B†B)^2/4 on the interior;
    a mismatch beyond `tol` means the construction is broken.
    """
    residual = casimir_interior_residual(space)
    if residual > tol:
        raise ValueError(f"Casimir forms disagree on the interior: {residual:.3e}")
    return OperatorMatrix("C2", _casimir_ladder_form(space))


def casimir_root(space: TwoModeSpace) -> OperatorMatrix:
    """C = nonnegative square root of the exact diagonal C^2, i.e. diag(|j|)."""
    n_a, n_b = _mode_numbers(space)
    return OperatorMatrix("C", np.diag(np.abs(n_a - n_b) / 2.0))


def sector_decompose(space: TwoModeSpace) -> SectorDecomposition:
    """Group the basis by j = (n_A - n_B)/2, each sector ordered by ascending m."""
    sectors: dict[float, list[int]] = {}
    for flat in range(space.dim):
        n_a, n_b = space.occupations(flat)
        j = (n_a - n_b) / 2.0
        sectors.setdefault(j, []).append(flat)
    ordered = {}
    for j in sorted(sectors):
        # fixed j: ascending n_A is ascending m = (n_A + n_B)/2
        ordered[j] = sorted(sectors[j], key=lambda flat: space.occupations(flat)[0])
    induced = {j: abs(j) + 0.5 for j in ordered}
    return SectorDecomposition(sectors=ordered, induced_k=induced)


def sector_operators(
    space: TwoModeSpace, indices
) -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    """Restrictions of (L3, L+, L-) to the given sector index list."""
    return (
        OperatorMatrix("L3", restricted(space.L3.entries, indices)),
        OperatorMatrix("L+", restricted(space.Lplus.entries, indices)),
        OperatorMatrix("L-", restricted(space.Lminus.entries, indices)),
    )


def sector_match_residual(space: TwoModeSpace, j: float) -> float:
    """Entrywise gap between the j-sector restriction and the directly built series.

    The sector has size n_max + 1 - 2|j| and induced weight k = |j| + 1/2;
    restriction and direct construction truncate identically, so the gap is
    zero to rounding on every entry.
    """
    decomp = sector_decompose(space)
    if j not in decomp.sectors:
        raise ValueError(f"no sector with j = {j}")
    indices = decomp.sectors[j]
    if len(indices) < 2:
        raise ValueError(f"sector j = {j} is too small to compare")
    l3, lp, lm = sector_operators(space, indices)
    reference = build_su11_rep(decomp.induced_k[j], len(indices))
    return max(
        max_entry(l3.entries - reference.L3.entries),
        max_entry(lp.entries - reference.Lplus.entries),
        max_entry(lm.entries - reference.Lminus.entries),
    )


def _cartesian(lp: np.ndarray, lm: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return (lp + lm) / 2.0, (lp - lm) / 2.0j


def dissipative_residuals(space: TwoModeSpace, p: DissipativeParams) -> dict[str, float]:
    """Identity residuals for the dissipative Hamiltonian pieces.

    h0_vs_casimir compares Omega (A†A - B†B) with 2 Omega C on the j >= 0
    sectors only: C is the nonnegative Casimir root, so the signed mode form
    can match it only where j >= 0.
    """
    h0, hi = _dissipative_pieces(space, p)
    _, l2 = _cartesian(space.Lplus.entries, space.Lminus.entries)
    keep = interior_indices(space)
    n_a, n_b = _mode_numbers(space)
    nonneg = [flat for flat in range(space.dim) if n_a[flat] >= n_b[flat]]
    c = casimir_root(space).entries
    return {
        "h0_vs_casimir": max_entry(restricted(h0 - 2.0 * p.Omega * c, nonneg)),
        "hi_vs_l2": max_entry(restricted(hi - (-2.0 * p.Gamma) * l2, keep)),
        "h0_hermiticity": max_entry(h0 - h0.conj().T),
        "hi_hermiticity": max_entry(hi - hi.conj().T),
        "h0_hi_commutator": max_entry(restricted(h0 @ hi - hi @ h0, keep)),
    }


def _dissipative_pieces(space: TwoModeSpace, p: DissipativeParams) -> tuple[np.ndarray, np.ndarray]:
    a, adag = space.A.entries, space.Adag.entries
    b, bdag = space.B.entries, space.Bdag.entries
    h0 = p.Omega * (adag @ a - bdag @ b)
    hi = 1j * p.Gamma * (adag @ bdag - a @ b)
    return h0, hi


def dissipative_hamiltonian(
    space: TwoModeSpace, p: DissipativeParams, tol: float = 1e-12
) -> tuple[OperatorMatrix, OperatorMatrix]:
    """H0 = Omega (A†A - B†B) and HI = i Gamma (A†B† - AB), built from the modes.

    The ladder-form identities H0 = 2 Omega C (on j >= 0) and HI = -2 Gamma L2
    are verified on the interior before returning; both pieces are hermitian.
    """
    residuals = dissipative_residuals(space, p)
    worst = max(residuals.values())
    if worst > tol:
        raise ValueError(f"dissipative Hamiltonian identities breached: {worst:.3e}")
    h0, hi = _dissipative_pieces(space, p)
    return OperatorMatrix("H0", h0), OperatorMatrix("HI", hi)


def _l1_l2_l3_keep(target, interior: int):
    if isinstance(target, TwoModeSpace):
        if not 2 <= int(interior) <= target.n_max + 1:
            raise ValueError(f"interior must be in 2..{target.n_max + 1}")
        keep = interior_indices(target, int(interior))
        lp, lm, l3 = target.Lplus.entries, target.Lminus.entries, target.L3.entries
    elif isinstance(target, LadderRep):
        if not isinstance(target.kind, Su11):
            raise ValueError("the rotation relation needs the su(1,1) sign; pass a D+_k rep")
        if not 2 <= int(interior) <= target.dim:
            raise ValueError(f"interior must be in 2..{target.dim}")
        keep = list(range(int(interior)))
        lp, lm, l3 = target.Lplus.entries, target.Lminus.entries, target.L3.entries
    else:
        raise ValueError("expected a TwoModeSpace or an su(1,1) LadderRep")
    l1, l2 = _cartesian(lp, lm)
    return l1, l2, l3, keep


def l2_relation_check(target, interior: int) -> tuple[float, float]:
    """Residuals of [L1, L3] = -i L2 and [L1, [L1, L3]] = -L3 on the interior.

    These two relations are the infinitesimal content of the finite rotation
    i e^{(pi/2) L1} L3 e^{-(pi/2) L1} = L2 (the double commutator closing on
    -L3 makes the adjoint orbit a rotation, evaluated at angle pi/2).
    Accepts a TwoModeSpace (interior = per-mode occupation bound) or an
    su(1,1) LadderRep (interior = number of leading states).
    """
    l1, l2, l3, keep = _l1_l2_l3_keep(target, interior)
    first = l1 @ l3 - l3 @ l1
    second = l1 @ first - first @ l1
    res1 = max_entry(restricted(first + 1j * l2, keep))
    res2 = max_entry(restricted(second + l3, keep))
    return res1, res2


def l2_finite_residual(target, interior: int) -> float:
    """Finite-rotation diagnostic: how well e^{(pi/2) L1}|n> solves the L2 eigenproblem.

    The finite form of the rotation says the conjugated states
    |phi> = e^{(pi/2) L1} |n> are L2 eigenvectors with eigenvalue i (m + 1/2),
    i.e. i times the L3 eigenvalue of |n>.  For every interior basis state
    this returns the relative eigen-relation residual
    ||(L2 - i <n|L3|n>) |phi>|| / |||phi>||, both restricted to the interior
    components, maximized over the states.

    Diagnostic only: e^{(pi/2) L1} is unbounded and non-unitary, so on a
    truncated space the residual is truncation-dominated, orders of magnitude
    above the infinitesimal commutator residuals.  It decays fast as the
    cutoff grows with the interior held fixed (the operator-identity block
    residual, by contrast, diverges with the cutoff and is not reported).
    """
    l1, l2, l3, keep = _l1_l2_l3_keep(target, interior)
    grow = matrix_exponential(OperatorMatrix("piL1/2", (pi / 2.0) * l1)).entries
    keep_arr = np.asarray(keep, dtype=int)
    worst = 0.0
    for state in keep:
        phi = grow[:, state]
        mismatch = l2 @ phi - 1j * l3[state, state] * phi
        scale = float(np.linalg.norm(phi[keep_arr]))
        worst = max(worst, float(np.linalg.norm(mismatch[keep_arr])) / scale)
    return worst
