"""Labeled dense complex matrices and the small operator calculus built on them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """A labeled dense complex square matrix."""

    label: str
    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"{self.label!r}: entries must form a square matrix")
        if entries.shape[0] < 1:
            raise ValueError(f"{self.label!r}: dimension must be at least 1")
        if not np.all(np.isfinite(entries)):
            raise ValueError(f"{self.label!r}: entries must be finite")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _require_same_dim(a: OperatorMatrix, b: OperatorMatrix) -> None:
    if a.dim != b.dim:
        raise ValueError(
            f"dimension mismatch: {a.label!r} is {a.dim}x{a.dim}, {b.label!r} is {b.dim}x{b.dim}"
        )


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """[a, b] = ab - ba."""
    _require_same_dim(a, b)
    return OperatorMatrix(
        f"[{a.label},{b.label}]", a.entries @ b.entries - b.entries @ a.entries
    )


def anticommutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """{a, b} = ab + ba."""
    _require_same_dim(a, b)
    return OperatorMatrix(
        f"{{{a.label},{b.label}}}", a.entries @ b.entries + b.entries @ a.entries
    )


def adjoint(a: OperatorMatrix) -> OperatorMatrix:
    """Conjugate transpose."""
    return OperatorMatrix(f"{a.label}†", a.entries.conj().T)


def matrix_exponential(a: OperatorMatrix) -> OperatorMatrix:
    """Matrix exponential, via scipy's Pade approximation with scaling and squaring."""
    return OperatorMatrix(f"exp({a.label})", expm(np.asarray(a.entries)))


def max_entry(matrix: np.ndarray) -> float:
    """Largest absolute entry; the norm used for operator-identity residuals."""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix)))


def restricted(matrix: np.ndarray, indices) -> np.ndarray:
    """Sub-matrix on the given basis indices (same set for rows and columns)."""
    idx = np.asarray(list(indices), dtype=int)
    return matrix[np.ix_(idx, idx)]


def hermiticity_residual(a: OperatorMatrix) -> float:
    """max |A - A†|, zero for an exactly hermitian matrix."""
    return max_entry(a.entries - a.entries.conj().T)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted by real part, then imaginary part.

    When `hermitian` is set the imaginary parts were below tolerance and
    `values` is a real array.
    """

    values: np.ndarray
    hermitian: bool

    @classmethod
    def from_eigenvalues(cls, values, hermitian_tol: float | None = None) -> "Spectrum":
        vals = np.asarray(values, dtype=complex)
        vals = vals[np.lexsort((vals.imag, vals.real))]
        if hermitian_tol is not None and np.max(np.abs(vals.imag), initial=0.0) < hermitian_tol:
            return cls(values=vals.real.copy(), hermitian=True)
        return cls(values=vals, hermitian=False)

    def __len__(self) -> int:
        return len(self.values)
