"""Discrete-time cyclic evolution operator and its spectrum.

One time step of the N-state cyclic system is the permutation |v> -> |v+1 mod N>
multiplied by the phase e^{-i pi/N}, inserted by hand.  The permutation is
diagonalized by the discrete Fourier transform; the phase shifts every
eigenphase by half a level spacing, which is exactly the zero-point term: the
energies come out as (n + 1/2) omega with omega = 2 pi / (N tau).  With that
phase the N-th power of the step operator is -1 times the identity (the
permutation alone has order N), a period-wide phase invisible in the level
spacing itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import OperatorMatrix, Spectrum, max_entry


@dataclass(frozen=True)
class EvolutionParams:
    """Number of states N >= 2 and time step tau > 0; omega = 2 pi/(N tau)."""

    n_states: int
    tau: float

    def __post_init__(self) -> None:
        if int(self.n_states) != self.n_states or self.n_states < 2:
            raise ValueError("n_states must be an integer >= 2")
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        object.__setattr__(self, "n_states", int(self.n_states))
        object.__setattr__(self, "tau", float(self.tau))

    @property
    def omega(self) -> float:
        return 2.0 * math.pi / (self.n_states * self.tau)


def _cyclic_permutation(n: int) -> np.ndarray:
    perm = np.zeros((n, n))
    cols = np.arange(n)
    perm[(cols + 1) % n, cols] = 1.0
    return perm


def build_evolution_operator(p: EvolutionParams) -> OperatorMatrix:
    """U = e^{-i pi/N} P with P the one-step cyclic shift; unitary.

    Entry convention: U[(v+1) mod N, v] carries the phase, i.e. ones below the
    diagonal plus the top-right corner.
    """
    n = p.n_states
    u = np.exp(-1j * math.pi / n) * _cyclic_permutation(n)
    return OperatorMatrix("U", u)


def spectrum_via_dft(p: EvolutionParams) -> Spectrum:
    """Energies (n + 1/2) omega extracted by Fourier-diagonalizing the step operator.

    The DFT columns f_m[v] = e^{i 2 pi m v / N}/sqrt(N) are eigenvectors of the
    shift with eigenvalues e^{-i 2 pi m / N}.  Eigenphases are unwrapped with
    arg taken in (-2 pi, 0] via n = round((-arg * N/pi - 1)/2); any collision
    signals a construction bug.  Returned energies are sorted ascending.
    """
    n = p.n_states
    u = build_evolution_operator(p)
    grid = np.outer(np.arange(n), np.arange(n))
    fourier = np.exp(2j * math.pi * grid / n) / math.sqrt(n)
    diagonalized = fourier.conj().T @ u.entries @ fourier
    off = diagonalized - np.diag(np.diag(diagonalized))
    if max_entry(off) > 1e-10:
        raise ValueError("the DFT failed to diagonalize the evolution operator")
    args = np.angle(np.diag(diagonalized))
    args = np.where(args > 0, args - 2.0 * math.pi, args)
    levels = np.rint((-args * n / math.pi - 1.0) / 2.0).astype(int)
    if sorted(levels) != list(range(n)):
        raise ValueError("eigenphase unwrapping produced colliding levels")
    energies = (levels + 0.5) * p.omega
    return Spectrum.from_eigenvalues(energies, hermitian_tol=1e-12)


def geometric_phase_check(p: EvolutionParams) -> complex:
    """Scalar phi with U^N = phi * 1; the phase factor makes phi = -1.

    Raises if U^N is not proportional to the identity (construction bug).
    """
    u = build_evolution_operator(p)
    power = np.linalg.matrix_power(u.entries, p.n_states)
    phi = complex(power[0, 0])
    if max_entry(power - phi * np.eye(p.n_states)) > 1e-12:
        raise ValueError("U^N is not proportional to the identity")
    return phi
