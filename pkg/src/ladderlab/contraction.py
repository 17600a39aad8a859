"""Contraction of the ladder algebras onto the oscillator algebra.

The scaled ladders a = L-/sqrt(2l) (su(2)) or L-/sqrt(2k) (su(1,1)) approach
canonical bosons as the representation label grows; the deviation
||([a, a†] - 1)|n>|| has the closed forms n/l and n/k, which this module both
measures and sweeps.  The weight-1/2 discrete series additionally admits an
exact nonlinear boson mapping a = (L3 + 1/2)^(-1/2) L- that needs no limit at
all.  The spin representation carries deformed position/momentum operators
x = alpha*L1, p = beta*L2 whose algebra closes on the Hamiltonian; both
operator identities are verified here as matrix residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    LadderRep,
    Su2,
    Su11,
    build_su2_rep,
    build_su11_rep,
    cartesian_generators,
)
from .operators import OperatorMatrix, max_entry


@dataclass(frozen=True)
class ScalingPair:
    """Position/momentum scalings alpha = sqrt(tau/pi), beta = -2/(2l+1) sqrt(pi/tau).

    Only the product alpha*beta = -2/(2l+1) enters the commutator identities;
    the sign convention is observable solely through the overall sign of p.
    """

    alpha: float
    beta: float
    tau: float
    l: float

    def __post_init__(self) -> None:
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if not (self.alpha > 0 and self.beta < 0):
            raise ValueError("alpha must be positive and beta negative")
        product = self.alpha * self.beta * (2.0 * self.l + 1.0) / (-2.0)
        if abs(product - 1.0) > 1e-12:
            raise ValueError("alpha*beta must equal -2/(2l+1)")

    @classmethod
    def for_parameters(cls, tau: float, l: float) -> "ScalingPair":
        if tau <= 0:
            raise ValueError("tau must be positive")
        alpha = math.sqrt(tau / math.pi)
        beta = -2.0 / (2.0 * l + 1.0) * math.sqrt(math.pi / tau)
        return cls(alpha=alpha, beta=beta, tau=float(tau), l=float(l))


@dataclass(frozen=True, eq=False)
class ContractionReport:
    """Deviation table of a contraction sweep plus its fitted decay rate.

    `deviations[i, n]` holds ||([a, a†] - 1)|n>|| for the representation built
    at `params[i]`.  The log-log least-squares fit of deviation against the
    sweep parameter is taken at fixed n = fit_n (the largest tabulated n);
    fits with fewer than three points are rejected and reported as NaN.
    """

    family: str
    params: tuple[float, ...]
    interior: int
    deviations: np.ndarray
    fit_n: int
    fitted_slope: float
    fit_residual: float


def scaled_ladders(rep: LadderRep) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Ladders divided by sqrt(2l) or sqrt(2k), the contraction normalization."""
    if isinstance(rep.kind, Su2):
        scale = math.sqrt(2.0 * rep.kind.l)
    elif isinstance(rep.kind, Su11):
        scale = math.sqrt(2.0 * rep.kind.k)
    else:
        raise ValueError("oscillator ladders are already canonical; nothing to scale")
    return (
        OperatorMatrix("a", rep.Lminus.entries / scale),
        OperatorMatrix("adag", rep.Lplus.entries / scale),
    )


def _deviation_bound(rep: LadderRep) -> int:
    # su(2) is a complete irrep with no truncation row, so the closed form
    # n/l holds up to the top state; the truncated families lose their top
    # commutator column.
    return rep.dim - 1 if isinstance(rep.kind, Su2) else rep.dim - 2


def contraction_deviation(rep: LadderRep, n: int) -> float:
    """||([a, a†] - 1)|n>|| for the scaled ladders.

    Closed form: n/l for su(2) and n/k for su(1,1), which the returned value
    matches to machine precision.
    """
    n = int(n)
    bound = _deviation_bound(rep)
    if not 0 <= n <= bound:
        raise ValueError(f"n must be in 0..{bound} for this representation")
    a, adag = scaled_ladders(rep)
    comm = a.entries @ adag.entries - adag.entries @ a.entries
    vec = comm[:, n].copy()
    vec[n] -= 1.0
    return float(np.linalg.norm(vec))


def run_contraction_study(family: str, params, interior: int) -> ContractionReport:
    """Sweep the representation label and tabulate contraction deviations.

    `interior` is the number of ladder states tabulated (n = 0 .. interior-1).
    For su(1,1) the truncation cutoff is chosen as interior + 1 so every
    tabulated n is interior; for su(2) the sweep parameter itself must give a
    large enough representation.
    """
    if family not in ("su2", "su11"):
        raise ValueError("family must be 'su2' or 'su11'")
    params = tuple(float(p) for p in params)
    if not params:
        raise ValueError("empty sweep")
    if list(params) != sorted(params):
        raise ValueError("params must be ascending")
    interior = int(interior)
    if interior < 2:
        raise ValueError("interior must be at least 2")

    rows = []
    for p in params:
        if family == "su2":
            rep = build_su2_rep(p)
            if interior > rep.dim:
                raise ValueError(f"interior {interior} exceeds the l={p} representation")
        else:
            rep = build_su11_rep(p, interior + 1)
        rows.append([contraction_deviation(rep, n) for n in range(interior)])
    deviations = np.array(rows)

    fit_n = interior - 1
    if len(params) >= 3:
        x = np.log(np.array(params))
        y = np.log(deviations[:, fit_n])
        slope, intercept = np.polyfit(x, y, 1)
        fit_residual = float(np.sqrt(np.mean((y - slope * x - intercept) ** 2)))
        fitted_slope = float(slope)
    else:
        fitted_slope = math.nan
        fit_residual = math.nan

    return ContractionReport(
        family=family,
        params=params,
        interior=interior,
        deviations=deviations,
        fit_n=fit_n,
        fitted_slope=fitted_slope,
        fit_residual=fit_residual,
    )


def holstein_primakoff(rep: LadderRep) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Nonlinear boson mapping a = (L3 + 1/2)^(-1/2) L- on the weight-1/2 series.

    The diagonal function f = (L3 + 1/2)^(-1/2) composes with the integer
    ladder elements of k = 1/2 to give exactly the canonical sqrt(n + 1)
    elements, so the output coincides entrywise with `build_h1_rep(rep.dim)`
    with no limit taken.
    """
    if not (isinstance(rep.kind, Su11) and rep.kind.k == 0.5):
        raise ValueError("mapping requires the k = 1/2 discrete series")
    if rep.dim < 2:
        raise ValueError("dim must be at least 2")
    shifted = np.diag(rep.L3.entries).real + 0.5
    if np.any(shifted <= 0):
        raise ValueError("L3 + 1/2 must be positive definite")
    f = 1.0 / np.sqrt(shifted)
    a = OperatorMatrix("a", f[:, None] * rep.Lminus.entries)
    adag = OperatorMatrix("adag", rep.Lplus.entries * f[None, :])
    return a, adag


def position_momentum(
    rep: LadderRep, tau: float
) -> tuple[OperatorMatrix, OperatorMatrix, ScalingPair]:
    """Deformed position/momentum analogues x = alpha*L1, p = beta*L2 (both hermitian)."""
    if not isinstance(rep.kind, Su2):
        raise ValueError("position/momentum analogues live on the su(2) representation")
    pair = ScalingPair.for_parameters(tau, rep.kind.l)
    l1, l2 = cartesian_generators(rep)
    xhat = OperatorMatrix("x", pair.alpha * l1.entries)
    phat = OperatorMatrix("p", pair.beta * l2.entries)
    return xhat, phat, pair


def su2_hamiltonian(rep: LadderRep, tau: float) -> OperatorMatrix:
    """H = omega (L3 + l + 1/2) with omega = 2 pi / ((2l+1) tau).

    The shift by l + 1/2 moves the L3 spectrum m = -l .. l onto n + 1/2, the
    cyclic-evolution energy ladder.
    """
    if not isinstance(rep.kind, Su2):
        raise ValueError("the oscillator-ladder Hamiltonian is defined on su(2)")
    if tau <= 0:
        raise ValueError("tau must be positive")
    omega = 2.0 * math.pi / (rep.dim * tau)
    h = omega * (rep.L3.entries + (rep.kind.l + 0.5) * np.eye(rep.dim))
    return OperatorMatrix("H", h)


def deformed_commutator_check(rep: LadderRep, tau: float) -> float:
    """Residual of [x, p] = i (1 - (tau/pi) H), an exact identity on the irrep."""
    xhat, phat, _ = position_momentum(rep, tau)
    h = su2_hamiltonian(rep, tau)
    lhs = xhat.entries @ phat.entries - phat.entries @ xhat.entries
    rhs = 1j * (np.eye(rep.dim) - (tau / math.pi) * h.entries)
    return max_entry(lhs - rhs)


def hamiltonian_identity_check(rep: LadderRep, tau: float) -> float:
    """Residual of H = (1/2) omega^2 x^2 + (1/2) p^2 + (tau/2pi)(omega^2/4 + H^2).

    Exact on the irrep: the quadratic terms reduce through the Casimir
    L1^2 + L2^2 = l(l+1) - L3^2, and the correction term vanishes in the
    contraction limit on states of bounded energy.
    """
    xhat, phat, _ = position_momentum(rep, tau)
    h = su2_hamiltonian(rep, tau)
    omega = 2.0 * math.pi / (rep.dim * tau)
    reconstructed = (
        0.5 * omega**2 * (xhat.entries @ xhat.entries)
        + 0.5 * (phat.entries @ phat.entries)
        + (tau / (2.0 * math.pi))
        * (omega**2 / 4.0 * np.eye(rep.dim) + h.entries @ h.entries)
    )
    return max_entry(h.entries - reconstructed)
