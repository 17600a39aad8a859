"""Exact ladder-operator representations on explicit bases.

Three families are built here: the spin algebra su(2) at half-integer l
(dimension 2l + 1, exact), the positive discrete series of su(1,1) at
half-integer weight k >= 1/2 (infinite-dimensional, hard-truncated at a
caller-chosen cutoff), and the oscillator algebra h(1) (likewise truncated).

Basis convention: index n = 0 .. dim-1 labels the ladder state |n>, lowest
weight first.  For su(2) this means n = m + l.  The raising operator lives on
the first subdiagonal (row n+1, column n) with real nonnegative elements and
the lowering operator is its exact adjoint.  For the truncated families every
defining relation holds exactly except through matrix elements that touch the
top basis state, so identity checks take an explicit `interior` size.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import OperatorMatrix, max_entry, restricted


def _validate_half_integer(value: float, minimum: float, name: str) -> float:
    value = float(value)
    doubled = 2.0 * value
    if doubled != round(doubled) or value < minimum:
        shown = "1/2" if minimum == 0.5 else str(minimum)
        raise ValueError(f"{name} must be a half-integer >= {shown}")
    return value


@dataclass(frozen=True)
class Su2:
    """Spin label l; the representation has dimension 2l + 1."""

    l: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "l", _validate_half_integer(self.l, 0.5, "l"))


@dataclass(frozen=True)
class Su11:
    """Discrete-series weight k; the L3 spectrum is {k, k+1, k+2, ...}."""

    k: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", _validate_half_integer(self.k, 0.5, "k"))


@dataclass(frozen=True)
class Heisenberg:
    """Oscillator algebra; carries no representation label."""


AlgebraKind = Su2 | Su11 | Heisenberg


@dataclass(frozen=True, eq=False)
class LadderRep:
    """A ladder triple (L3, L+, L-) over the basis |0> .. |dim-1>.

    L3 is real diagonal, L+ strictly subdiagonal with nonnegative elements,
    and L- the exact entrywise adjoint of L+.  For the Heisenberg kind the
    slots hold (N + 1/2, a†, a): the number operator is shifted by 1/2 so
    that the diagonal of L3 is the oscillator spectrum n + 1/2 in units of
    the mode frequency.
    """

    kind: AlgebraKind
    dim: int
    L3: OperatorMatrix
    Lplus: OperatorMatrix
    Lminus: OperatorMatrix


def build_su2_rep(l: float) -> LadderRep:
    """Spin-l ladder matrices.

    <n+1|L+|n> = sqrt((2l - n)(n + 1)) and <n|L3|n> = n - l, so the L3
    eigenvalues run through m = -l .. l and the top state is annihilated
    by L+.  All three defining relations hold exactly.
    """
    kind = Su2(l)
    dim = int(round(2 * kind.l)) + 1
    n = np.arange(dim - 1, dtype=float)
    lp = np.diag(np.sqrt((2.0 * kind.l - n) * (n + 1.0)), -1)
    l3 = np.diag(np.arange(dim, dtype=float) - kind.l)
    return LadderRep(
        kind=kind,
        dim=dim,
        L3=OperatorMatrix("L3", l3),
        Lplus=OperatorMatrix("L+", lp),
        Lminus=OperatorMatrix("L-", lp.T),
    )


def build_su11_rep(k: float, dim: int) -> LadderRep:
    """Discrete-series ladder matrices at weight k, truncated at `dim` states.

    <n+1|L+|n> = sqrt((n + 2k)(n + 1)) and <n|L3|n> = n + k.  At k = 1/2 the
    ladder elements are the integers n + 1 (no square roots).  The defining
    relations hold exactly on the interior span |0> .. |dim-2>; the top row
    is truncation-contaminated.
    """
    kind = Su11(k)
    dim = int(dim)
    if dim < 2:
        raise ValueError("dim must be at least 2")
    n = np.arange(dim - 1, dtype=float)
    lp = np.diag(np.sqrt((n + 2.0 * kind.k) * (n + 1.0)), -1)
    l3 = np.diag(np.arange(dim, dtype=float) + kind.k)
    return LadderRep(
        kind=kind,
        dim=dim,
        L3=OperatorMatrix("L3", l3),
        Lplus=OperatorMatrix("L+", lp),
        Lminus=OperatorMatrix("L-", lp.T),
    )


def build_h1_rep(dim: int) -> LadderRep:
    """Truncated oscillator ladders: <n+1|a†|n> = sqrt(n + 1).

    The L3 slot stores N + 1/2 = diag(n + 1/2), so the Hamiltonian in units
    of the mode frequency is the L3 matrix itself.  [a, a†] = 1 holds exactly
    on the interior span |0> .. |dim-2>.
    """
    dim = int(dim)
    if dim < 2:
        raise ValueError("dim must be at least 2")
    n = np.arange(dim - 1, dtype=float)
    lp = np.diag(np.sqrt(n + 1.0), -1)
    l3 = np.diag(np.arange(dim, dtype=float) + 0.5)
    return LadderRep(
        kind=Heisenberg(),
        dim=dim,
        L3=OperatorMatrix("L3", l3),
        Lplus=OperatorMatrix("L+", lp),
        Lminus=OperatorMatrix("L-", lp.T),
    )


def cartesian_generators(rep: LadderRep) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Hermitian combinations L1 = (L+ + L-)/2 and L2 = (L+ - L-)/(2i)."""
    if isinstance(rep.kind, Heisenberg):
        raise ValueError("cartesian generators are defined for the su(2)/su(1,1) ladders")
    l1 = (rep.Lplus.entries + rep.Lminus.entries) / 2.0
    l2 = (rep.Lplus.entries - rep.Lminus.entries) / 2.0j
    return OperatorMatrix("L1", l1), OperatorMatrix("L2", l2)


def check_algebra_relations(rep: LadderRep, interior: int) -> float:
    """Max-entry residual of the defining relations on the leading `interior` states.

    Both sides of every identity are restricted to the span of
    |0> .. |interior-1>, which excises the truncation-contaminated top row of
    the su(1,1)/h(1) matrices.  su(2) closes with [L+, L-] = +2 L3, su(1,1)
    with -2 L3, and h(1) with [a, a†] = 1; the two [L3, L±] = ±L± relations
    are checked for every kind.
    """
    if not 1 <= int(interior) <= rep.dim:
        raise ValueError(f"interior must be in 1..{rep.dim}")
    keep = range(int(interior))
    l3, lp, lm = rep.L3.entries, rep.Lplus.entries, rep.Lminus.entries
    residuals = [
        l3 @ lp - lp @ l3 - lp,
        l3 @ lm - lm @ l3 + lm,
    ]
    if isinstance(rep.kind, Heisenberg):
        residuals.append(lm @ lp - lp @ lm - np.eye(rep.dim))
    else:
        sign = 2.0 if isinstance(rep.kind, Su2) else -2.0
        residuals.append(lp @ lm - lm @ lp - sign * l3)
    return max(max_entry(restricted(r, keep)) for r in residuals)
