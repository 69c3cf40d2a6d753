"""Dense hermitian-operator and density-matrix algebra plus model builders.

Two concrete fully-connected models are provided:

* the spin-s "square well" model: transverse hopping in the magnetic-number
  basis plus a collective interaction active on ``|m| <= w``;
* the planar-rotor model: kinetic term ``L^2/2`` with a self-consistent
  ``cos(theta)`` coupling, truncated at ``|L| <= l_max``.

All matrices are stored dense; both builders yield real tridiagonal operators,
which downstream modules detect and exploit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DimensionMismatchError, InvalidModelError, NumericalIntegrityError

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
EIGENVALUE_TOL = 1e-10
IMAG_RESIDUE_TOL = 1e-8


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class HermitianOperator:
    """Dense hermitian matrix in dimensionless energy units (hbar = 1)."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidModelError(f"operator must be square, got shape {a.shape}")
        if a.shape[0] < 2:
            raise InvalidModelError("operator dimension must be >= 2")
        defect = np.max(np.abs(a - a.conj().T))
        if defect > HERMITICITY_TOL:
            raise NumericalIntegrityError(f"hermiticity defect {defect:.3e} > {HERMITICITY_TOL}")
        object.__setattr__(self, "entries", _frozen(a))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class DensityMatrix:
    """Single-site state: hermitian, unit trace, positive semidefinite."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidModelError(f"density matrix must be square, got shape {a.shape}")
        defect = np.max(np.abs(a - a.conj().T))
        if defect > HERMITICITY_TOL:
            raise NumericalIntegrityError(f"hermiticity defect {defect:.3e} > {HERMITICITY_TOL}")
        tr = np.trace(a)
        if abs(tr - 1.0) > TRACE_TOL:
            raise NumericalIntegrityError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
        evals = np.linalg.eigvalsh(a)
        if evals.min() < -EIGENVALUE_TOL:
            raise NumericalIntegrityError(f"negative eigenvalue {evals.min():.3e}")
        dim = a.shape[0]
        pur = float(np.sum(evals**2))
        if not (1.0 / dim - EIGENVALUE_TOL <= pur <= 1.0 + EIGENVALUE_TOL):
            raise NumericalIntegrityError(f"purity {pur} outside [1/dim, 1]")
        object.__setattr__(self, "entries", _frozen(a))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def purity(self) -> float:
        return float(np.vdot(self.entries, self.entries).real)


@dataclass(frozen=True)
class WModelTag:
    s: int
    w: int
    h: float


@dataclass(frozen=True)
class RotorTag:
    l_max: int


@dataclass(frozen=True)
class ModelSpec:
    """Single-site reduction of a fully-connected model.

    ``h0`` is the free term, ``h1`` the ordered couplings entering the
    effective hamiltonian ``h0 - lam * sum_a mu_a * h1_a``, and ``lam > 0``
    the ferromagnetic interaction strength.  ``basis_labels`` carries the
    magnetic number m (or angular momentum L) of each basis vector, and
    ``parity_map`` the basis permutation realizing m -> -m.
    """

    h0: HermitianOperator
    h1: tuple[HermitianOperator, ...]
    lam: float
    basis_labels: np.ndarray
    parity_map: np.ndarray
    model_tag: WModelTag | RotorTag

    def __post_init__(self):
        if not self.h1:
            raise InvalidModelError("at least one coupling operator is required")
        dim = self.h0.dim
        for a, op in enumerate(self.h1):
            if op.dim != dim:
                raise DimensionMismatchError(f"h1[{a}] has dim {op.dim}, expected {dim}")
        if self.lam <= 0:
            raise InvalidModelError(f"interaction must be ferromagnetic (lam > 0), got {self.lam}")
        labels = np.asarray(self.basis_labels, dtype=int)
        perm = np.asarray(self.parity_map, dtype=int)
        if labels.shape != (dim,) or perm.shape != (dim,):
            raise DimensionMismatchError("basis_labels/parity_map length must equal dim")
        if not np.array_equal(perm[perm], np.arange(dim)):
            raise InvalidModelError("parity_map must be an involution")
        if not np.array_equal(labels[perm], -labels):
            raise InvalidModelError("parity_map must send label m to -m")
        object.__setattr__(self, "basis_labels", _frozen(labels))
        object.__setattr__(self, "parity_map", _frozen(perm))

    @property
    def dim(self) -> int:
        return self.h0.dim

    def with_coupling(self, lam: float) -> "ModelSpec":
        """Copy of this spec with a different interaction strength."""
        return replace(self, lam=lam)


def build_w_model(s: int, w: int, h: float, lam: float = 1.0) -> ModelSpec:
    """Spin-s square-well model in the s_z eigenbasis (labels m = -s..s).

    The free term is the transverse field written as nearest-neighbour
    hopping, ``<m'|H0|m> = -(h/2s) sqrt(s(s+1) - m'm)`` for ``|m - m'| = 1``;
    the single coupling is the projector onto ``|m| <= w`` (with the step
    convention that m = +-w is included even for w = 0).
    """
    if s <= 0:
        raise InvalidModelError(f"spin s must be a positive integer, got {s}")
    if not (0 <= w < s):
        raise InvalidModelError(f"well half-width must satisfy 0 <= w < s, got w={w}, s={s}")
    if s > 2000:
        raise InvalidModelError(f"s={s} exceeds the dense-diagonalization budget (s <= 2000)")
    dim = 2 * s + 1
    m = np.arange(-s, s + 1)
    hop = -(h / (2.0 * s)) * np.sqrt(s * (s + 1.0) - m[:-1] * (m[:-1] + 1.0))
    h0 = np.zeros((dim, dim))
    h0[np.arange(dim - 1), np.arange(1, dim)] = hop
    h0[np.arange(1, dim), np.arange(dim - 1)] = hop
    h1 = np.diag((np.abs(m) <= w).astype(float))
    return ModelSpec(
        h0=HermitianOperator(h0),
        h1=(HermitianOperator(h1),),
        lam=lam,
        basis_labels=m,
        parity_map=np.arange(dim)[::-1],
        model_tag=WModelTag(s=s, w=w, h=h),
    )


def build_rotor_model(l_max: int, lam: float = 1.0) -> ModelSpec:
    """Planar rotor in the angular-momentum basis (labels L = -l_max..l_max).

    H0 = diag(L^2/2); the single coupling is cos(theta), whose matrix
    elements are 1/2 on the first off-diagonals.  Only the theta -> -theta
    symmetric coupling is tracked.
    """
    if l_max < 1:
        raise InvalidModelError(f"l_max must be >= 1, got {l_max}")
    dim = 2 * l_max + 1
    ell = np.arange(-l_max, l_max + 1)
    h0 = np.diag(ell.astype(float) ** 2 / 2.0)
    cos_theta = np.zeros((dim, dim))
    cos_theta[np.arange(dim - 1), np.arange(1, dim)] = 0.5
    cos_theta[np.arange(1, dim), np.arange(dim - 1)] = 0.5
    return ModelSpec(
        h0=HermitianOperator(h0),
        h1=(HermitianOperator(cos_theta),),
        lam=lam,
        basis_labels=ell,
        parity_map=np.arange(dim)[::-1],
        model_tag=RotorTag(l_max=l_max),
    )


def gaussian_w_state(s: int, width: float = 1.0) -> DensityMatrix:
    """Pure state with amplitudes exp(-m^2 / (4 width^2)); width=1 is the
    reference initial condition for the square-well model."""
    if width <= 0:
        raise InvalidModelError(f"width must be positive, got {width}")
    m = np.arange(-s, s + 1)
    amp = np.exp(-(m.astype(float) ** 2) / (4.0 * width**2))
    amp /= np.linalg.norm(amp)
    return DensityMatrix(np.outer(amp, amp))


def rotor_initial_state(l_max: int) -> DensityMatrix:
    """Pure rotor state with amplitudes (3, 1, 1)/sqrt(11) on L = 0, -1, +1."""
    if l_max < 1:
        raise InvalidModelError(f"l_max must be >= 1, got {l_max}")
    dim = 2 * l_max + 1
    amp = np.zeros(dim)
    amp[l_max] = 3.0
    amp[l_max - 1] = 1.0
    amp[l_max + 1] = 1.0
    amp /= math.sqrt(11.0)
    return DensityMatrix(np.outer(amp, amp))


def expectation(rho: DensityMatrix, a: HermitianOperator) -> float:
    """tr(rho A); raises if the imaginary residue exceeds tolerance."""
    if rho.dim != a.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != operator dim {a.dim}")
    return _expectation_array(rho.entries, a.entries)


def _expectation_array(rho: np.ndarray, a: np.ndarray) -> float:
    # tr(rho A) = sum_ij rho[i,j] A[j,i]
    val = complex(np.sum(rho * a.T))
    if abs(val.imag) > IMAG_RESIDUE_TOL:
        raise NumericalIntegrityError(f"imaginary residue {val.imag:.3e} in expectation value")
    return float(val.real)


def real_tridiagonal_bands(op: HermitianOperator) -> tuple[np.ndarray, np.ndarray] | None:
    """(diagonal, first off-diagonal) if the operator is real tridiagonal, else None."""
    a = op.entries
    if np.max(np.abs(a.imag)) > 0.0:
        return None
    re = a.real
    off = re.copy()
    n = re.shape[0]
    idx = np.arange(n)
    off[idx, idx] = 0.0
    off[idx[:-1], idx[:-1] + 1] = 0.0
    off[idx[:-1] + 1, idx[:-1]] = 0.0
    if np.any(off != 0.0):
        return None
    return re.diagonal().copy(), re.diagonal(1).copy()


def parity_conjugate(entries: np.ndarray, parity_map: np.ndarray) -> np.ndarray:
    """P M P for the basis permutation P given by parity_map."""
    return entries[np.ix_(parity_map, parity_map)]


def parity_expectation(rho: DensityMatrix, parity_map: np.ndarray) -> float:
    """tr(rho P): +1 for parity-even states."""
    val = complex(np.sum(rho.entries[np.arange(rho.dim), parity_map]))
    if abs(val.imag) > IMAG_RESIDUE_TOL:
        raise NumericalIntegrityError(f"imaginary residue {val.imag:.3e} in parity expectation")
    return float(val.real)
