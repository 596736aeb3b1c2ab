"""Empirical certification harness for the entanglement-iff-fidelity claim.

Each sample runs two independent verdict chains on the same inputs:

* fidelity side: input-input fidelity against the purity-only threshold
  (never touches the output covariance spectrum);
* Simon side: minimum PT symplectic eigenvalue of the mixed output
  (never touches fidelity).

Outside a narrow floating-point boundary band the two verdicts must agree;
a disagreement is a test failure, not a statistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import bisect

from .entanglement import is_entangled, symplectic_eigenvalues, partial_transpose
from .errors import InvalidParameterError, NumericError
from .evolution import mix, reduce_mode
from .fidelity import fidelity_threshold, gaussian_fidelity, mean_overlap_factor
from .states import GaussianParams, state_from_params

# Samples this close to either strict-inequality boundary are excluded from
# iff-counting: sign flips there reflect arithmetic, not physics.
FIDELITY_BAND = 1e-7   # relative to the threshold
LAMBDA_BAND = 1e-9

# Default seed for randomized campaigns; override with --seed or GAUSSMIX_SEED.
DEFAULT_SEED = 42

# Random draw ranges for certification campaigns.
R_RANGE = (0.0, 2.0)
N_RANGE = (0.0, 2.0)
ALPHA_MAX = 2.0

PSI_BISECTION_TOL = 1e-12


@dataclass(frozen=True)
class SweepSample:
    """One fully evaluated parameter point with both verdict chains."""

    params1: GaussianParams
    params2: GaussianParams
    tau: float
    fidelity: float
    threshold: float          # F_e, or Gamma * F_e with means; nan at tau in {0, 1}
    lambda_tilde: float
    verdict_fidelity: bool    # fidelity < threshold
    verdict_simon: bool       # PPT verdict of the mixed output
    boundary_excluded: bool
    io_fidelities: tuple[float, float, float, float] | None = None

    @property
    def agree(self) -> bool:
        return self.verdict_fidelity == self.verdict_simon


@dataclass(frozen=True)
class IoFidelityReport:
    """Input-output fidelities F(in_h, out_k) and their numeric thresholds.

    Index order: (1,1), (1,2), (2,1), (2,2) with the input index first.
    thresholds is None when lambda_tilde - 1/2 does not change sign on the
    phase interval (output entangled everywhere or nowhere).
    """

    fidelities: tuple[float, float, float, float]
    thresholds: tuple[float, float, float, float] | None
    psi_e_numeric: float | None


@dataclass(frozen=True)
class CertifySummary:
    samples: int
    checks: int
    disagreements: int
    boundary_excluded_count: int
    max_margin_violation: float


def _no_interaction(tau: float) -> bool:
    return tau == 0.0 or tau == 1.0


def _boundary_flags(fid: float, threshold: float, lam: float) -> bool:
    return abs(fid - threshold) < FIDELITY_BAND * threshold or abs(lam - 0.5) < LAMBDA_BAND


def _evaluate(params1: GaussianParams, params2: GaussianParams, tau: float,
              displaced: bool) -> SweepSample:
    s1 = state_from_params(params1)
    s2 = state_from_params(params2)
    fid = gaussian_fidelity(s1, s2).fidelity
    report = is_entangled(mix(s1, s2, tau))
    if _no_interaction(tau):
        return SweepSample(
            params1=params1, params2=params2, tau=tau,
            fidelity=fid, threshold=math.nan, lambda_tilde=report.lambda_tilde,
            verdict_fidelity=False, verdict_simon=False, boundary_excluded=False,
        )
    threshold = fidelity_threshold(params1.purity, params2.purity, tau).f_e
    if displaced:
        threshold *= mean_overlap_factor(s1, s2)
    return SweepSample(
        params1=params1, params2=params2, tau=tau,
        fidelity=fid, threshold=threshold, lambda_tilde=report.lambda_tilde,
        verdict_fidelity=fid < threshold,
        verdict_simon=report.entangled,
        boundary_excluded=_boundary_flags(fid, threshold, report.lambda_tilde),
    )


def check_theorem(params1: GaussianParams, params2: GaussianParams, tau: float) -> SweepSample:
    """Zero-mean iff check: (F < F_e) vs the PPT verdict.

    tau in {0, 1} short-circuits to a separable verdict on both sides
    (no interaction; the threshold is undefined there).
    """
    if params1.has_mean or params2.has_mean:
        raise InvalidParameterError("theorem check requires zero-mean inputs; use check_corollary")
    return _evaluate(params1, params2, tau, displaced=False)


def check_corollary(params1: GaussianParams, params2: GaussianParams, tau: float) -> SweepSample:
    """Displaced-input iff check: (F < Gamma * F_e) vs the PPT verdict.

    Also recomputes lambda_tilde from the zero-mean twin of the same draw and
    demands agreement to 1e-12, since covariance evolution ignores means.
    """
    sample = _evaluate(params1, params2, tau, displaced=True)
    zero1 = replace(params1, alpha_re=0.0, alpha_im=0.0)
    zero2 = replace(params2, alpha_re=0.0, alpha_im=0.0)
    lam_zero, _ = symplectic_eigenvalues(
        partial_transpose(mix(state_from_params(zero1), state_from_params(zero2), tau))
    )
    if abs(lam_zero - sample.lambda_tilde) > 1e-12:
        raise NumericError(
            f"lambda_tilde changed by {abs(lam_zero - sample.lambda_tilde):.3e} "
            "when means were removed; covariance evolution is corrupted"
        )
    return sample


def _lambda_at_relative_phase(params1: GaussianParams, params2: GaussianParams,
                              tau: float, delta: float) -> float:
    p2 = replace(params2, psi=params1.psi + delta)
    lam, _ = symplectic_eigenvalues(
        partial_transpose(mix(state_from_params(params1), state_from_params(p2), tau))
    )
    return lam


def _io_fidelities(params1: GaussianParams, params2: GaussianParams,
                   tau: float) -> tuple[float, float, float, float]:
    s1 = state_from_params(params1)
    s2 = state_from_params(params2)
    out = mix(s1, s2, tau)
    o1 = reduce_mode(out, 1)
    o2 = reduce_mode(out, 2)
    return (
        gaussian_fidelity(s1, o1).fidelity,
        gaussian_fidelity(s1, o2).fidelity,
        gaussian_fidelity(s2, o1).fidelity,
        gaussian_fidelity(s2, o2).fidelity,
    )


def io_fidelity_thresholds(params1: GaussianParams, params2: GaussianParams,
                           tau: float) -> IoFidelityReport:
    """Numeric recovery of the input-output fidelity thresholds.

    The entanglement boundary phase is found by bisection of
    lambda_tilde(psi) - 1/2 over the decreasing branch psi in [0, pi]
    (phase of state 2 relative to state 1) to an interval below 1e-12;
    each threshold is the corresponding input-output fidelity evaluated
    exactly at that boundary. Without a sign change there is no boundary
    and thresholds is None.
    """
    fids = _io_fidelities(params1, params2, tau)
    f0 = _lambda_at_relative_phase(params1, params2, tau, 0.0) - 0.5
    f_pi = _lambda_at_relative_phase(params1, params2, tau, math.pi) - 0.5
    if f0 == 0.0 or f_pi == 0.0 or (f0 < 0.0) == (f_pi < 0.0):
        return IoFidelityReport(fidelities=fids, thresholds=None, psi_e_numeric=None)
    root = bisect(
        lambda d: _lambda_at_relative_phase(params1, params2, tau, d) - 0.5,
        0.0, math.pi, xtol=PSI_BISECTION_TOL,
    )
    psi_e = params1.psi + float(root)
    thresholds = _io_fidelities(params1, replace(params2, psi=psi_e), tau)
    return IoFidelityReport(fidelities=fids, thresholds=thresholds, psi_e_numeric=psi_e)


def sweep_psi(params1: GaussianParams, params2: GaussianParams, tau: float,
              n_points: int, psi_from: float = 0.0, psi_to: float = 2.0 * math.pi,
              mode: str = "theorem") -> list[SweepSample]:
    """Evaluate a uniform grid over the squeezing phase of state 2.

    mode selects the threshold chain: "theorem" (zero-mean), "corollary"
    (displaced), or "io-fidelity" (adds the four input-output fidelities
    to each sample; threshold chain picked from the means).
    """
    if n_points < 2:
        raise InvalidParameterError(f"a sweep needs at least 2 points, got {n_points}")
    samples = []
    for psi in np.linspace(psi_from, psi_to, n_points):
        p2 = replace(params2, psi=float(psi))
        samples.append(_sweep_point(params1, p2, tau, mode))
    return samples


def sweep_tau(params1: GaussianParams, params2: GaussianParams,
              tau_from: float, tau_to: float, n_points: int,
              mode: str = "theorem") -> list[SweepSample]:
    """Evaluate a uniform grid over the coupling at fixed input states."""
    if n_points < 2:
        raise InvalidParameterError(f"a sweep needs at least 2 points, got {n_points}")
    return [_sweep_point(params1, params2, float(t), mode)
            for t in np.linspace(tau_from, tau_to, n_points)]


def _sweep_point(params1: GaussianParams, params2: GaussianParams, tau: float,
                 mode: str) -> SweepSample:
    displaced = params1.has_mean or params2.has_mean
    if mode == "theorem":
        sample = check_theorem(params1, params2, tau)
    elif mode == "corollary":
        sample = check_corollary(params1, params2, tau)
    elif mode == "io-fidelity":
        sample = _evaluate(params1, params2, tau, displaced=displaced)
        sample = replace(sample, io_fidelities=_io_fidelities(params1, params2, tau))
    else:
        raise InvalidParameterError(f"unknown mode {mode!r}")
    return sample


def _draw_params(u: np.ndarray, with_means: bool) -> GaussianParams:
    """Map uniform [0,1) variates to one state draw (5 variates consumed)."""
    r = R_RANGE[0] + (R_RANGE[1] - R_RANGE[0]) * u[0]
    psi = 2.0 * math.pi * u[1]
    n_th = N_RANGE[0] + (N_RANGE[1] - N_RANGE[0]) * u[2]
    if with_means:
        mag = ALPHA_MAX * math.sqrt(u[3])  # uniform over the disc
        ang = 2.0 * math.pi * u[4]
        return GaussianParams(alpha_re=mag * math.cos(ang), alpha_im=mag * math.sin(ang),
                              r=r, psi=psi, n_th=n_th)
    return GaussianParams(r=r, psi=psi, n_th=n_th)


def draw_sample(rng: np.random.Generator, with_means: bool) -> tuple[GaussianParams, GaussianParams, float]:
    """One random parameter draw within the certification ranges."""
    u = rng.random(11).tolist()
    p1 = _draw_params(u[0:5], with_means)
    p2 = _draw_params(u[5:10], with_means)
    return p1, p2, float(u[10])


def certify(samples: int, seed: int, mode: str = "both") -> tuple[CertifySummary, list[tuple[str, SweepSample]]]:
    """Randomized iff certification.

    mode "theorem" draws zero-mean pairs, "corollary" draws displaced pairs,
    "both" runs one of each per sample. Returns the summary plus every
    evaluated row tagged with its chain. max_margin_violation is, over the
    disagreeing samples, the largest distance from both decision boundaries
    (0.0 when there are none).
    """
    if samples < 1:
        raise InvalidParameterError(f"samples must be >= 1, got {samples}")
    if mode not in ("theorem", "corollary", "both"):
        raise InvalidParameterError(f"unknown certify mode {mode!r}")
    rng = np.random.default_rng(seed)
    chains = ("theorem", "corollary") if mode == "both" else (mode,)
    # one bulk draw: same variate stream as repeated draw_sample calls
    variates = rng.random((samples, 11 * len(chains)))
    rows: list[tuple[str, SweepSample]] = []
    disagreements = 0
    excluded = 0
    worst = 0.0
    for i in range(samples):
        u_row = variates[i].tolist()
        for j, chain in enumerate(chains):
            u = u_row[11 * j:11 * (j + 1)]
            with_means = chain == "corollary"
            p1 = _draw_params(u[0:5], with_means)
            p2 = _draw_params(u[5:10], with_means)
            tau = u[10]
            check = check_theorem if chain == "theorem" else check_corollary
            sample = check(p1, p2, tau)
            rows.append((chain, sample))
            if sample.boundary_excluded:
                excluded += 1
            elif not sample.agree:
                disagreements += 1
                worst = max(worst, min(abs(sample.fidelity - sample.threshold),
                                       abs(sample.lambda_tilde - 0.5)))
    summary = CertifySummary(
        samples=samples,
        checks=len(rows),
        disagreements=disagreements,
        boundary_excluded_count=excluded,
        max_margin_violation=worst,
    )
    return summary, rows
