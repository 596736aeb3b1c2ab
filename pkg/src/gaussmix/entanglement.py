"""Separability of two-mode Gaussian states via the PPT criterion.

A two-mode Gaussian state is entangled iff the minimum symplectic eigenvalue
lambda_tilde of the partially transposed covariance matrix falls below 1/2
(in the vacuum = I/2 normalization). Partial transposition acts in phase
space as a momentum sign flip on mode 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NumericError
from .states import (
    TwoModeState,
    _block_invariants,
    _spectrum_from_invariants,
    two_mode_symplectic_eigenvalues,
)

# Strict inequality in the separability test: floating-point ties at the
# boundary are deterministically classified as separable.
BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class EntanglementReport:
    """PPT verdict for a two-mode state."""

    lambda_tilde: float
    entangled: bool
    margin: float  # lambda_tilde - 1/2, negative inside the entangled region


def symplectic_eigenvalues(cm: np.ndarray) -> tuple[float, float]:
    """Symplectic spectrum {nu-, nu+} of a symmetric 4x4 matrix.

    Accepts physical covariance matrices and their partial transposes.
    Raises NumericError when the block discriminant is negative beyond
    tolerance (non-symmetric or corrupted input).
    """
    cm = np.asarray(cm, dtype=float)
    if cm.shape != (4, 4):
        raise InvalidParameterError(f"expected a 4x4 matrix, got shape {cm.shape}")
    return two_mode_symplectic_eigenvalues(cm)


def partial_transpose(t: TwoModeState) -> np.ndarray:
    """Covariance matrix of the partially transposed state: L cm L with
    L = diag(1, 1, 1, -1) (momentum flip on mode 2)."""
    out = np.array(t.cm, copy=True)
    out[:3, 3] *= -1.0
    out[3, :3] *= -1.0
    return out


def is_entangled(t: TwoModeState) -> EntanglementReport:
    """PPT test: entangled iff min PT symplectic eigenvalue < 1/2 - BOUNDARY_TOL.

    Partial transposition flips the sign of det C and leaves det A, det B and
    the full determinant unchanged, so the PT spectrum comes straight from the
    block invariants; the result is bit-identical to running
    symplectic_eigenvalues(partial_transpose(t)).
    """
    a, b, c, det = _block_invariants(t.cm.ravel().tolist())
    lam, _ = _spectrum_from_invariants(a + b - 2.0 * c, det)
    return EntanglementReport(
        lambda_tilde=lam,
        entangled=lam < 0.5 - BOUNDARY_TOL,
        margin=lam - 0.5,
    )


def lambda_min_closed_form(r1: float, r2: float, mu1: float, mu2: float, tau: float) -> float:
    """Minimum over the squeezing phase of the PT symplectic eigenvalue.

    The minimum occurs at phase pi and evaluates to

        sqrt(gamma - sqrt(gamma^2 - (2 mu1 mu2)^2)) / (2 sqrt(2) mu1 mu2)

    with gamma = (mu1^2 + mu2^2)(1 - 2 tau)^2
               + 8 mu1 mu2 tau (1 - tau) cosh(2 (r1 + r2)).
    """
    if r1 < 0.0 or r2 < 0.0:
        raise InvalidParameterError("squeezing magnitudes must be >= 0")
    if not (0.0 < mu1 <= 1.0 and 0.0 < mu2 <= 1.0):
        raise InvalidParameterError("purities must lie in (0, 1]")
    if not 0.0 <= tau <= 1.0:
        raise InvalidParameterError("coupling tau must lie in [0, 1]")
    m = mu1 * mu2
    gamma = (mu1 * mu1 + mu2 * mu2) * (1.0 - 2.0 * tau) ** 2 \
        + 8.0 * m * tau * (1.0 - tau) * math.cosh(2.0 * (r1 + r2))
    disc = gamma * gamma - 4.0 * m * m
    if disc < -1e-12:
        raise NumericError(f"gamma^2 < (2 mu1 mu2)^2 by {disc:.3e}; arguments are inconsistent")
    return math.sqrt(gamma - math.sqrt(max(disc, 0.0))) / (2.0 * math.sqrt(2.0) * m)
