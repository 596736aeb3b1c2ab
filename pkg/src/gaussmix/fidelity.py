"""Uhlmann fidelity between single-mode Gaussian states and the critical
fidelity below which (and only below which) mixing entangles the output.

For covariances sigma1, sigma2 and means X1, X2 the fidelity is

    F = Gamma / (sqrt(Delta + delta) - sqrt(delta))

with Delta = det(sigma1 + sigma2), delta = 4 (det sigma1 - 1/4)(det sigma2 - 1/4)
and Gamma = exp(-1/2 d^T (sigma1 + sigma2)^{-1} d), d = X1 - X2.

The threshold for zero-mean inputs depends only on the purities mu1, mu2 and
the coupling tau:

    F_e = 4 mu1 mu2 sqrt(tau (1-tau))
          / (sqrt(g- + 4 tau (1-tau) g+) - sqrt(4 tau (1-tau) g-)),

g+- = (1 +- mu1^2)(1 +- mu2^2). With nonzero means the threshold picks up the
same Gamma factor: F < Gamma * F_e iff the mixed output is entangled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidParameterError, NumericError
from .states import SingleModeState, _det2, purity

# Entanglement window kinds returned by psi_threshold.
WINDOW_INTERVAL = "interval"  # entangled exactly for psi in (psi_e, 2 pi - psi_e)
WINDOW_ALL = "all"            # entangled for every psi
WINDOW_NONE = "none"          # separable for every psi


@dataclass(frozen=True)
class FidelityBreakdown:
    """Fidelity value plus the intermediates that produced it."""

    fidelity: float
    delta_cap: float      # det(sigma1 + sigma2)
    delta_small: float    # 4 prod_k (det sigma_k - 1/4), clamped at 0
    gamma_factor: float   # mean-displacement overlap factor, 1 for equal means
    mean_diff: np.ndarray


@dataclass(frozen=True)
class PsiThreshold:
    """Result of the critical-phase computation.

    kind is one of WINDOW_INTERVAL / WINDOW_ALL / WINDOW_NONE. psi_e is the
    boundary phase in [0, pi] when kind == WINDOW_INTERVAL, else None.
    argument is the raw arccos argument (None when a squeezing magnitude
    vanishes and the argument is undefined).
    """

    kind: str
    psi_e: float | None
    argument: float | None

    def entangled_at(self, psi: float) -> bool:
        """Verdict for a given phase of state 2 (state 1 at phase 0)."""
        if self.kind == WINDOW_ALL:
            return True
        if self.kind == WINDOW_NONE:
            return False
        psi = psi % (2.0 * math.pi)
        return self.psi_e < psi < 2.0 * math.pi - self.psi_e


@dataclass(frozen=True)
class ThresholdReport:
    """F_e and the quantities that certify it.

    fidelity_threshold populates the purity-only fields; the phase-dependent
    ones (psi_e, f_min, lambda_min, gamma_proof) require the squeezing
    magnitudes and are filled by threshold_report.
    """

    f_e: float
    f_coupling: float
    g_minus: float
    g_plus: float
    psi_e: float | None = None
    psi_e_kind: str | None = None
    f_min: float | None = None
    lambda_min: float | None = None
    gamma_proof: float | None = None


def _overlap_core(s1: SingleModeState, s2: SingleModeState) -> tuple[float, float, float, float, float]:
    """(sum11, sum12, sum22, d0, d1): entries of sigma1 + sigma2 and the mean gap."""
    e1 = s1.cm.ravel().tolist()
    e2 = s2.cm.ravel().tolist()
    return (e1[0] + e2[0], e1[1] + e2[1], e1[3] + e2[3],
            float(s1.mean[0]) - float(s2.mean[0]), float(s1.mean[1]) - float(s2.mean[1]))


def _gamma_from_core(sum11: float, sum12: float, sum22: float, d0: float, d1: float) -> float:
    if d0 == 0.0 and d1 == 0.0:
        return 1.0
    det = sum11 * sum22 - sum12 * sum12
    if det <= 0.0:
        raise NumericError("sigma1 + sigma2 is singular; input states are corrupted")
    # quadratic form through the explicit 2x2 inverse
    quad = (sum22 * d0 * d0 - 2.0 * sum12 * d0 * d1 + sum11 * d1 * d1) / det
    return math.exp(-0.5 * quad)


def mean_overlap_factor(s1: SingleModeState, s2: SingleModeState) -> float:
    """Gamma = exp(-1/2 d^T (sigma1 + sigma2)^{-1} d) with d = X1 - X2.

    Equals 1 iff the means coincide; always in (0, 1].
    """
    return _gamma_from_core(*_overlap_core(s1, s2))


def gaussian_fidelity(s1: SingleModeState, s2: SingleModeState) -> FidelityBreakdown:
    """Uhlmann fidelity between two single-mode Gaussian states."""
    sum11, sum12, sum22, d0, d1 = _overlap_core(s1, s2)
    delta_cap = sum11 * sum22 - sum12 * sum12
    if delta_cap <= 0.0:
        raise NumericError("sigma1 + sigma2 is singular; input states are corrupted")
    # clamp the tiny negative values produced for pure states
    delta_small = max(4.0 * (_det2(s1.cm) - 0.25) * (_det2(s2.cm) - 0.25), 0.0)
    gamma = _gamma_from_core(sum11, sum12, sum22, d0, d1)
    fid = gamma / (math.sqrt(delta_cap + delta_small) - math.sqrt(delta_small))
    return FidelityBreakdown(
        fidelity=fid,
        delta_cap=delta_cap,
        delta_small=delta_small,
        gamma_factor=gamma,
        mean_diff=s1.mean - s2.mean,
    )


def _check_purities(mu1: float, mu2: float) -> None:
    if not (0.0 < mu1 <= 1.0 and 0.0 < mu2 <= 1.0):
        raise InvalidParameterError(f"purities must lie in (0, 1], got {mu1!r}, {mu2!r}")


def _check_open_tau(tau: float) -> None:
    if not 0.0 <= tau <= 1.0:
        raise InvalidParameterError(f"coupling tau must lie in [0, 1], got {tau!r}")
    if tau == 0.0 or tau == 1.0:
        raise DomainError("no interaction at tau in {0, 1}: threshold quantities are undefined")


def coupling_function(mu1: float, mu2: float, tau: float) -> float:
    """f(mu1, mu2, tau), the coupling-dependent scalar the critical phase
    compares against; >= 1 for all valid arguments.

        f = [1 + mu1^2 mu2^2 - (mu1^2 + mu2^2)(1 - 2 tau)^2]
            / [8 mu1 mu2 tau (1 - tau)]
    """
    _check_purities(mu1, mu2)
    _check_open_tau(tau)
    num = 1.0 + (mu1 * mu2) ** 2 - (mu1 * mu1 + mu2 * mu2) * (1.0 - 2.0 * tau) ** 2
    return num / (8.0 * mu1 * mu2 * tau * (1.0 - tau))


def psi_threshold(r1: float, r2: float, mu1: float, mu2: float, tau: float) -> PsiThreshold:
    """Critical squeezing phase separating entangling from non-entangling mixes.

    With state 1 at phase 0 and state 2 at phase psi, the output is entangled
    iff cosh(2 r1) cosh(2 r2) - cos(psi) sinh(2 r1) sinh(2 r2) > f(mu1, mu2, tau).
    When the arccos argument

        (cosh(2 r1) cosh(2 r2) - f) / (sinh(2 r1) sinh(2 r2))

    lies in [-1, 1] the boundary phase psi_e = arccos(...) exists and the
    entangled window is (psi_e, 2 pi - psi_e). An argument > 1 means even
    psi = 0 entangles (window "all"); an argument < -1 means not even
    psi = pi does (window "none"). Out-of-range arguments are reported as
    such, never clamped.

    If r1 = 0 or r2 = 0 the phase is immaterial and the verdict follows the
    sign of cosh(2 r1) cosh(2 r2) - f alone.
    """
    if r1 < 0.0 or r2 < 0.0:
        raise InvalidParameterError("squeezing magnitudes must be >= 0")
    f = coupling_function(mu1, mu2, tau)
    gap = math.cosh(2.0 * r1) * math.cosh(2.0 * r2) - f
    denom = math.sinh(2.0 * r1) * math.sinh(2.0 * r2)
    if denom == 0.0:
        return PsiThreshold(kind=WINDOW_ALL if gap > 0.0 else WINDOW_NONE, psi_e=None, argument=None)
    arg = gap / denom
    if arg > 1.0:
        return PsiThreshold(kind=WINDOW_ALL, psi_e=None, argument=arg)
    if arg < -1.0:
        return PsiThreshold(kind=WINDOW_NONE, psi_e=None, argument=arg)
    return PsiThreshold(kind=WINDOW_INTERVAL, psi_e=math.acos(arg), argument=arg)


def fidelity_threshold(mu1: float, mu2: float, tau: float) -> ThresholdReport:
    """Critical input fidelity F_e(mu1, mu2; tau) for zero-mean inputs.

    Independent of the squeezing magnitudes; symmetric under mu1 <-> mu2 and
    tau <-> 1 - tau; equals 1 when both inputs are pure.
    """
    _check_purities(mu1, mu2)
    _check_open_tau(tau)
    g_minus = (1.0 - mu1 * mu1) * (1.0 - mu2 * mu2)
    g_plus = (1.0 + mu1 * mu1) * (1.0 + mu2 * mu2)
    x = 4.0 * tau * (1.0 - tau)
    f_e = 4.0 * mu1 * mu2 * math.sqrt(tau * (1.0 - tau)) \
        / (math.sqrt(g_minus + x * g_plus) - math.sqrt(x * g_minus))
    return ThresholdReport(
        f_e=f_e,
        f_coupling=coupling_function(mu1, mu2, tau),
        g_minus=g_minus,
        g_plus=g_plus,
    )


def fidelity_min_over_psi(r1: float, r2: float, mu1: float, mu2: float) -> float:
    """Minimum over the squeezing phase of the input-input fidelity
    (attained at phase pi):

        F_min = 2 mu1 mu2 / (sqrt(1 + mu1^2 mu2^2
                + 2 mu1 mu2 cosh(2 (r1 + r2))) - sqrt(g-))
    """
    if r1 < 0.0 or r2 < 0.0:
        raise InvalidParameterError("squeezing magnitudes must be >= 0")
    _check_purities(mu1, mu2)
    m = mu1 * mu2
    g_minus = (1.0 - mu1 * mu1) * (1.0 - mu2 * mu2)
    inner = 1.0 + m * m + 2.0 * m * math.cosh(2.0 * (r1 + r2))
    return 2.0 * m / (math.sqrt(inner) - math.sqrt(g_minus))


def displaced_threshold(s1: SingleModeState, s2: SingleModeState, tau: float) -> float:
    """Entanglement threshold for inputs with arbitrary means:
    Gamma(X1, X2) * F_e(mu1, mu2; tau), purities taken from the covariances."""
    f_e = fidelity_threshold(purity(s1), purity(s2), tau).f_e
    return mean_overlap_factor(s1, s2) * f_e


def threshold_report(r1: float, r2: float, mu1: float, mu2: float, tau: float) -> ThresholdReport:
    """Fully populated ThresholdReport including the phase-dependent fields."""
    base = fidelity_threshold(mu1, mu2, tau)
    window = psi_threshold(r1, r2, mu1, mu2, tau)
    m = mu1 * mu2
    gamma_proof = (mu1 * mu1 + mu2 * mu2) * (1.0 - 2.0 * tau) ** 2 \
        + 8.0 * m * tau * (1.0 - tau) * math.cosh(2.0 * (r1 + r2))
    from .entanglement import lambda_min_closed_form

    return ThresholdReport(
        f_e=base.f_e,
        f_coupling=base.f_coupling,
        g_minus=base.g_minus,
        g_plus=base.g_plus,
        psi_e=window.psi_e,
        psi_e_kind=window.kind,
        f_min=fidelity_min_over_psi(r1, r2, mu1, mu2),
        lambda_min=lambda_min_closed_form(r1, r2, mu1, mu2, tau),
        gamma_proof=gamma_proof,
    )
