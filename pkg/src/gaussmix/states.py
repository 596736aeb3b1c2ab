"""Single- and two-mode Gaussian states in phase-space form.

Conventions (used everywhere in this package):

* quadratures q = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)), hbar = 1,
  so the vacuum covariance matrix is I/2 and the separability boundary for
  the minimum partially-transposed symplectic eigenvalue sits at 1/2;
* mean vector X = sqrt(2) (Re alpha, Im alpha);
* two-mode ordering (q1, p1, q2, p2), so mode blocks are contiguous 2x2
  submatrices of the 4x4 covariance matrix.

A single mode is parametrized by a displacement alpha, a squeezing
xi = r exp(i psi) and a mean thermal occupation N, giving purity
mu = 1/(1 + 2N) and covariance entries

    sigma_11 = (cosh 2r + cos(psi) sinh 2r) / (2 mu)
    sigma_22 = (cosh 2r - cos(psi) sinh 2r) / (2 mu)
    sigma_12 = -sin(psi) sinh 2r / (2 mu)

Determinants and symplectic spectra of these small fixed-size matrices are
computed with explicit scalar kernels; parameter sweeps call them millions of
times and generic linear-algebra routines dominate the runtime otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NonPhysicalStateError, NumericError

TWO_PI = 2.0 * math.pi

# Floating-point CM algebra near pure states produces O(1e-14) violations of
# the uncertainty bound; 1e-10 accepts those while rejecting real violations.
PHYSICALITY_TOL = 1e-10
SYMMETRY_TOL = 1e-12

# JSON field names for GaussianParams are part of the external interface.
PARAM_FIELDS = ("alpha_re", "alpha_im", "r", "psi", "n_th")


@dataclass(frozen=True)
class GaussianParams:
    """Physical parametrization of one mode: displacement, squeezing, thermal noise.

    psi is stored normalized into [0, 2pi). r and n_th must be nonnegative.
    """

    alpha_re: float = 0.0
    alpha_im: float = 0.0
    r: float = 0.0
    psi: float = 0.0
    n_th: float = 0.0

    def __post_init__(self) -> None:
        for name in PARAM_FIELDS:
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.r < 0.0:
            raise InvalidParameterError(f"squeezing magnitude r must be >= 0, got {self.r}")
        if self.n_th < 0.0:
            raise InvalidParameterError(f"thermal occupation n_th must be >= 0, got {self.n_th}")
        object.__setattr__(self, "psi", self.psi % TWO_PI)

    @property
    def alpha(self) -> complex:
        return complex(self.alpha_re, self.alpha_im)

    @property
    def purity(self) -> float:
        """mu = 1/(1 + 2 n_th), in (0, 1]."""
        return 1.0 / (1.0 + 2.0 * self.n_th)

    @property
    def has_mean(self) -> bool:
        return self.alpha_re != 0.0 or self.alpha_im != 0.0

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in PARAM_FIELDS}

    @classmethod
    def from_dict(cls, data: dict) -> "GaussianParams":
        """Strict JSON-object constructor: unknown keys are rejected,
        alpha components default to zero."""
        if not isinstance(data, dict):
            raise InvalidParameterError(f"state parameters must be an object, got {type(data).__name__}")
        unknown = set(data) - set(PARAM_FIELDS)
        if unknown:
            raise InvalidParameterError(f"unknown state parameter field(s): {sorted(unknown)}")
        missing = {"r", "psi", "n_th"} - set(data)
        if missing:
            raise InvalidParameterError(f"missing state parameter field(s): {sorted(missing)}")
        values = {}
        for name in PARAM_FIELDS:
            raw = data.get(name, 0.0)
            if isinstance(raw, bool) or not isinstance(raw, (int, float)):
                raise InvalidParameterError(f"state parameter {name} must be a number, got {raw!r}")
            values[name] = float(raw)
        return cls(**values)


def _as_readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float, copy=True)
    out.setflags(write=False)
    return out


def _det2(m: np.ndarray) -> float:
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def _det4(e: list) -> float:
    """Determinant of a 4x4 matrix given as a row-major scalar list
    (expansion in complementary 2x2 minors of the top and bottom row pairs)."""
    p01 = e[0] * e[5] - e[1] * e[4]
    p02 = e[0] * e[6] - e[2] * e[4]
    p03 = e[0] * e[7] - e[3] * e[4]
    p12 = e[1] * e[6] - e[2] * e[5]
    p13 = e[1] * e[7] - e[3] * e[5]
    p23 = e[2] * e[7] - e[3] * e[6]
    q01 = e[8] * e[13] - e[9] * e[12]
    q02 = e[8] * e[14] - e[10] * e[12]
    q03 = e[8] * e[15] - e[11] * e[12]
    q12 = e[9] * e[14] - e[10] * e[13]
    q13 = e[9] * e[15] - e[11] * e[13]
    q23 = e[10] * e[15] - e[11] * e[14]
    return p01 * q23 - p02 * q13 + p03 * q12 + p12 * q03 - p13 * q02 + p23 * q01


def _spectrum_from_invariants(delta: float, det: float) -> tuple[float, float]:
    """{nu-, nu+} from nu^2 = (delta +- sqrt(delta^2 - 4 det)) / 2."""
    disc = delta * delta - 4.0 * det
    if disc < -PHYSICALITY_TOL:
        raise NumericError(f"negative symplectic discriminant {disc:.3e}; input is corrupted")
    root = math.sqrt(max(disc, 0.0))
    hi = math.sqrt(max((delta + root) / 2.0, 0.0))
    lo = math.sqrt(max((delta - root) / 2.0, 0.0))
    return lo, hi


def _block_invariants(e: list) -> tuple[float, float, float, float]:
    """(det A, det B, det C, det M) for a row-major 4x4 scalar list."""
    a = e[0] * e[5] - e[1] * e[4]
    b = e[10] * e[15] - e[11] * e[14]
    c = e[2] * e[7] - e[3] * e[6]
    return a, b, c, _det4(e)


def two_mode_symplectic_eigenvalues(cm: np.ndarray) -> tuple[float, float]:
    """Symplectic spectrum {nu-, nu+} of a symmetric 4x4 matrix.

    Uses the block closed form nu+-^2 = (D +- sqrt(D^2 - 4 det cm)) / 2 with
    D = det A + det B + 2 det C for blocks A, B (diagonal) and C (off-diagonal).
    Valid for physical covariance matrices and their partial transposes.
    """
    e = np.asarray(cm, dtype=float).ravel().tolist()
    a, b, c, det = _block_invariants(e)
    return _spectrum_from_invariants(a + b + 2.0 * c, det)


def _is_symmetric2(e: list) -> bool:
    return abs(e[1] - e[2]) <= SYMMETRY_TOL


def _is_symmetric4(e: list) -> bool:
    return (abs(e[1] - e[4]) <= SYMMETRY_TOL and abs(e[2] - e[8]) <= SYMMETRY_TOL
            and abs(e[3] - e[12]) <= SYMMETRY_TOL and abs(e[6] - e[9]) <= SYMMETRY_TOL
            and abs(e[7] - e[13]) <= SYMMETRY_TOL and abs(e[11] - e[14]) <= SYMMETRY_TOL)


def validate_physical(cm: np.ndarray, modes: int) -> bool:
    """True iff cm is a bona-fide covariance matrix for the given mode count,
    i.e. all symplectic eigenvalues >= 1/2 - PHYSICALITY_TOL."""
    cm = np.asarray(cm, dtype=float)
    if modes not in (1, 2):
        raise InvalidParameterError(f"modes must be 1 or 2, got {modes}")
    expected = (2 * modes, 2 * modes)
    if cm.shape != expected:
        raise InvalidParameterError(f"covariance matrix shape {cm.shape} does not match {modes} mode(s)")
    e = cm.ravel().tolist()
    bound = 0.5 - PHYSICALITY_TOL
    if modes == 1:
        if not _is_symmetric2(e):
            raise NonPhysicalStateError("covariance matrix is not symmetric")
        det = e[0] * e[3] - e[1] * e[2]
        if e[0] <= 0.0 or e[3] <= 0.0 or det <= 0.0 or math.isnan(det):
            return False
        return math.sqrt(det) >= bound
    if not _is_symmetric4(e):
        raise NonPhysicalStateError("covariance matrix is not symmetric")
    if e[0] <= 0.0 or e[5] <= 0.0 or e[10] <= 0.0 or e[15] <= 0.0:
        return False
    try:
        a, b, c, det = _block_invariants(e)
        lo, _ = _spectrum_from_invariants(a + b + 2.0 * c, det)
    except NumericError:
        return False
    return not math.isnan(lo) and lo >= bound


@dataclass(frozen=True)
class SingleModeState:
    """One mode in phase space: mean 2-vector and symmetric 2x2 covariance."""

    mean: np.ndarray
    cm: np.ndarray

    def __post_init__(self) -> None:
        mean = np.asarray(self.mean, dtype=float)
        cm = np.asarray(self.cm, dtype=float)
        if mean.shape != (2,):
            raise InvalidParameterError(f"single-mode mean must have shape (2,), got {mean.shape}")
        if cm.shape != (2, 2):
            raise InvalidParameterError(f"single-mode covariance must be 2x2, got {cm.shape}")
        if not validate_physical(cm, modes=1):
            raise NonPhysicalStateError(
                f"2x2 covariance violates the uncertainty relation (det = {_det2(cm):.6g} < 1/4)"
            )
        object.__setattr__(self, "mean", _as_readonly(mean))
        object.__setattr__(self, "cm", _as_readonly(cm))


@dataclass(frozen=True)
class TwoModeState:
    """Two modes in phase space, ordering (q1, p1, q2, p2)."""

    mean: np.ndarray
    cm: np.ndarray

    def __post_init__(self) -> None:
        mean = np.asarray(self.mean, dtype=float)
        cm = np.asarray(self.cm, dtype=float)
        if mean.shape != (4,):
            raise InvalidParameterError(f"two-mode mean must have shape (4,), got {mean.shape}")
        if cm.shape != (4, 4):
            raise InvalidParameterError(f"two-mode covariance must be 4x4, got {cm.shape}")
        if not validate_physical(cm, modes=2):
            raise NonPhysicalStateError("4x4 covariance violates the uncertainty relation")
        object.__setattr__(self, "mean", _as_readonly(mean))
        object.__setattr__(self, "cm", _as_readonly(cm))

    @classmethod
    def _from_symplectic_image(cls, mean: np.ndarray, cm: np.ndarray) -> "TwoModeState":
        """Internal fast path for covariances produced by a symplectic map of
        validated inputs; physicality holds by construction and is enforced
        separately by the property-test suite."""
        obj = object.__new__(cls)
        mean.setflags(write=False)
        cm.setflags(write=False)
        object.__setattr__(obj, "mean", mean)
        object.__setattr__(obj, "cm", cm)
        return obj

    @property
    def sigma1(self) -> np.ndarray:
        """Mode-1 diagonal block."""
        return self.cm[:2, :2]

    @property
    def sigma2(self) -> np.ndarray:
        """Mode-2 diagonal block."""
        return self.cm[2:, 2:]

    @property
    def sigma12(self) -> np.ndarray:
        """Intermode covariance block (upper right)."""
        return self.cm[:2, 2:]


def state_from_params(p: GaussianParams) -> SingleModeState:
    """Build the phase-space state for a displaced squeezed thermal mode."""
    pref = (1.0 + 2.0 * p.n_th) / 2.0  # = 1/(2 mu)
    ch = math.cosh(2.0 * p.r)
    sh = math.sinh(2.0 * p.r)
    c11 = pref * (ch + math.cos(p.psi) * sh)
    c22 = pref * (ch - math.cos(p.psi) * sh)
    c12 = -pref * math.sin(p.psi) * sh
    mean = np.array([math.sqrt(2.0) * p.alpha_re, math.sqrt(2.0) * p.alpha_im])
    return SingleModeState(mean=mean, cm=np.array([[c11, c12], [c12, c22]]))


def purity(s: SingleModeState) -> float:
    """mu = (2 sqrt(det cm))^-1, in (0, 1]."""
    det = _det2(s.cm)
    if det < 0.25 - PHYSICALITY_TOL:
        raise NonPhysicalStateError(f"det cm = {det:.6g} < 1/4; state is not physical")
    return 1.0 / (2.0 * math.sqrt(det))
