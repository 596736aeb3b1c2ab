"""Phase-space evolution under the bilinear exchange (beam-splitter) coupling.

The interaction is parametrized by an effective coupling tau = cos^2(g t)
in [0, 1]. The mode operators mix through the real orthogonal convention
a -> sqrt(tau) a + sqrt(1-tau) b (no extra -i phase); a phase-space rotation
of mode 2 maps between this and other beam-splitter conventions and does not
affect any entanglement verdict.

For input covariances sigma1, sigma2 the output blocks are

    Sigma1  = tau sigma1 + (1-tau) sigma2
    Sigma2  = tau sigma2 + (1-tau) sigma1
    Sigma12 = sqrt(tau (1-tau)) (sigma2 - sigma1)

The sqrt coefficient on Sigma12 is the one generated by a symplectic
(unitary) propagation matrix; it also reproduces the standard two-mode
squeezing spectrum e^{+-2r}/2 when mixing pure +-r squeezed vacua at
tau = 1/2, which pins the convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .states import SingleModeState, TwoModeState


@dataclass(frozen=True)
class CouplingSpec:
    """Effective coupling tau in [0, 1]."""

    tau: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.tau) or not 0.0 <= self.tau <= 1.0:
            raise InvalidParameterError(f"coupling tau must lie in [0, 1], got {self.tau!r}")
        object.__setattr__(self, "tau", float(self.tau))

    @classmethod
    def from_interaction(cls, g: float, t: float) -> "CouplingSpec":
        """tau = cos^2(g t) for a coupling rate g acting for time t."""
        return cls(tau=math.cos(g * t) ** 2)


def _coerce_coupling(c: "CouplingSpec | float") -> CouplingSpec:
    return c if isinstance(c, CouplingSpec) else CouplingSpec(tau=float(c))


def mix(s1: SingleModeState, s2: SingleModeState, c: "CouplingSpec | float") -> TwoModeState:
    """Mix two uncorrelated single-mode states; returns the joint output."""
    tau = _coerce_coupling(c).tau
    rt = math.sqrt(tau)
    rr = math.sqrt(1.0 - tau)
    st = rt * rr
    a11, a12, a22 = float(s1.cm[0, 0]), float(s1.cm[0, 1]), float(s1.cm[1, 1])
    b11, b12, b22 = float(s2.cm[0, 0]), float(s2.cm[0, 1]), float(s2.cm[1, 1])
    one = 1.0 - tau
    s1_11 = tau * a11 + one * b11
    s1_12 = tau * a12 + one * b12
    s1_22 = tau * a22 + one * b22
    s2_11 = tau * b11 + one * a11
    s2_12 = tau * b12 + one * a12
    s2_22 = tau * b22 + one * a22
    o11 = st * (b11 - a11)
    o12 = st * (b12 - a12)
    o22 = st * (b22 - a22)
    cm = np.array([
        [s1_11, s1_12, o11, o12],
        [s1_12, s1_22, o12, o22],
        [o11, o12, s2_11, s2_12],
        [o12, o22, s2_12, s2_22],
    ])
    m10, m11 = float(s1.mean[0]), float(s1.mean[1])
    m20, m21 = float(s2.mean[0]), float(s2.mean[1])
    mean = np.array([
        rt * m10 + rr * m20,
        rt * m11 + rr * m21,
        -rr * m10 + rt * m20,
        -rr * m11 + rt * m21,
    ])
    return TwoModeState._from_symplectic_image(mean, cm)


def reduce_mode(t: TwoModeState, keep: int) -> SingleModeState:
    """Trace out one mode of a two-mode state; keep is 1 or 2."""
    if keep == 1:
        return SingleModeState(mean=t.mean[:2], cm=t.sigma1)
    if keep == 2:
        return SingleModeState(mean=t.mean[2:], cm=t.sigma2)
    raise InvalidParameterError(f"keep must be 1 or 2, got {keep!r}")
