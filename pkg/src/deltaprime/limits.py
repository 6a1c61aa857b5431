"""Numerical zero-range limits of the barrier-well pair along squeeze paths.

The transfer-matrix entries are traced along a geometrically shrinking
sequence of widths, each entry's limit is classified as divergent or
convergent from a log-log slope fit plus Richardson extrapolation, and the
outcome is compared against the analytic prediction: separated half-lines
everywhere except on resonance-carrying paths at resonant couplings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .boundary import ConnectionMatrix, resonant_matrix
from .errors import InvariantViolation, PrecisionFloorError
from .paths import BARRIER_FIRST, POWER, SqueezePath
from .profile import RectProfile
from .resonance import (chi_adjacent, chi_linear, g_quadratic,
                        _bracket, _solve_bracketed)
from .transfer import PRECISION_FLOOR, scattering, transfer_matrix

__all__ = [
    "LimitTrace",
    "EntryVerdict",
    "LimitVerdict",
    "Peak",
    "SweepResult",
    "trace",
    "classify",
    "predict",
    "transmission_sweep",
]

ENTRY_NAMES = ("L11", "L12", "L21", "L22")

DIVERGENT = "divergent"
CONVERGES = "converges"

# The slowest divergence among the power-law squeeze rules is the
# l**(tau-2) growth of the lower-left entry, exponent -0.5 at tau = 1.5,
# while genuinely convergent entries fit flat or decaying slopes; the
# default threshold splits that gap.
DIVERGENCE_SLOPE = -0.25


@dataclass(frozen=True)
class LimitTrace:
    """Transfer-matrix entries along a shrinking-width sequence.

    ``entries`` has shape (points, 4) ordered (L11, L12, L21, L22); entries
    are stored as reals (for positive coupling and energy the closed forms
    are real, which is checked at build time).
    """

    path: SqueezePath
    lam: float
    E: float
    l_values: np.ndarray
    rho_values: np.ndarray
    entries: np.ndarray

    @property
    def points(self) -> int:
        return len(self.l_values)

    @property
    def ratio(self) -> float:
        """Common ratio l[i]/l[i+1] > 1 of the geometric grid."""
        return float(self.l_values[0] / self.l_values[1])


@dataclass(frozen=True)
class EntryVerdict:
    """Limit classification of one matrix entry.

    Divergent verdicts carry the fitted growth exponent (log|entry| per
    log l, negative when the entry grows as l shrinks); convergent ones the
    extrapolated value and an error estimate.
    """

    kind: str
    exponent: float | None = None
    value: float | None = None
    error: float | None = None

    @property
    def is_divergent(self) -> bool:
        return self.kind == DIVERGENT


@dataclass(frozen=True)
class LimitVerdict:
    """Per-entry verdicts for one trace."""

    entries: dict[str, EntryVerdict] = field(default_factory=dict)

    @property
    def all_converge(self) -> bool:
        return all(not v.is_divergent for v in self.entries.values())

    @property
    def separated(self) -> bool:
        return self.entries["L21"].is_divergent

    @property
    def variant(self) -> str:
        if self.separated:
            return "separated"
        if self.all_converge:
            return "resonant"
        return "mixed"


def trace(path: SqueezePath, lam: float, E: float,
          l_start: float, l_end: float, points: int) -> LimitTrace:
    """Evaluate the transfer matrix on a geometric width grid along ``path``.

    Requires points >= 8 and l_end >= the double-precision floor; every
    record is checked against the unit-determinant invariant.
    """
    if points < 8:
        raise ValueError(f"need at least 8 trace points, got {points}")
    if l_end < PRECISION_FLOOR:
        raise PrecisionFloorError(
            f"l_end = {l_end} below the precision floor {PRECISION_FLOOR}")
    if not l_start > l_end:
        raise ValueError(f"need l_start > l_end, got {l_start} <= {l_end}")
    if lam < 0:
        raise ValueError(f"coupling must be >= 0, got {lam}")
    if E <= 0:
        raise ValueError(f"energy must be positive, got {E}")

    ls = np.geomspace(l_start, l_end, points)
    rhos = np.array([path.rho_of(l) for l in ls])
    raw = np.empty((points, 4), dtype=complex)
    for i, (l, rho) in enumerate(zip(ls, rhos)):
        tm = transfer_matrix(RectProfile(l=l, rho=rho, lam=lam), E)
        if tm.det_residual() > 1e-10:
            raise InvariantViolation(
                f"determinant residual {tm.det_residual()} at l = {l}")
        raw[i] = (tm.l11, tm.l12, tm.l21, tm.l22)

    scale = max(1.0, abs(raw).max())
    if abs(raw.imag).max() > 1e-9 * scale:
        raise InvariantViolation("trace entries acquired imaginary parts")
    return LimitTrace(path=path, lam=lam, E=E, l_values=ls,
                      rho_values=rhos, entries=raw.real.copy())


def _richardson(values: np.ndarray, ratio: float,
                max_depth: int = 8) -> tuple[float, float]:
    """Limit estimate for a geometric-grid sequence with a power-series
    error model; the error estimate is the smallest change produced by an
    extrapolation level."""
    prev = [float(v) for v in values]
    best = prev[-1]
    best_err = abs(prev[-1] - prev[-2])
    for j in range(1, min(len(values), max_depth + 1)):
        f = ratio ** j
        cur = [(f * prev[i] - prev[i - 1]) / (f - 1.0)
               for i in range(1, len(prev))]
        err = abs(cur[-1] - prev[-1])
        if err < best_err:
            best, best_err = cur[-1], err
        prev = cur
    return best, best_err


def classify(tr: LimitTrace, *, divergence_slope: float = DIVERGENCE_SLOPE,
             tiny: float = 1e-6) -> LimitVerdict:
    """Classify each entry's limit from the trace.

    An entry is divergent when the log-log slope of its magnitude against l
    over the last half of the trace is at or below ``divergence_slope``
    (magnitudes growing as l shrinks give negative slopes).  Entries that
    stay below ``tiny`` in the tail, or change sign there, carry no usable
    slope and are classified by their extrapolated value instead.
    """
    half = tr.points // 2
    lt = tr.l_values[half:]
    verdicts: dict[str, EntryVerdict] = {}
    for j, name in enumerate(ENTRY_NAMES):
        v = tr.entries[:, j]
        vt = v[half:]
        crosses = bool(np.any(vt[:-1] * vt[1:] <= 0.0))
        if np.all(np.abs(vt) < tiny) or crosses:
            est, err = _richardson(v, tr.ratio)
            verdicts[name] = EntryVerdict(kind=CONVERGES, value=est, error=err)
            continue
        slope = float(np.polyfit(np.log(lt), np.log(np.abs(vt)), 1)[0])
        if slope <= divergence_slope:
            verdicts[name] = EntryVerdict(kind=DIVERGENT, exponent=slope)
        else:
            est, err = _richardson(v, tr.ratio)
            verdicts[name] = EntryVerdict(kind=CONVERGES, value=est, error=err)
    return LimitVerdict(entries=verdicts)


def _matching_root(lam: float, f, match_tol: float) -> float | None:
    """Root of the bracketed resonance equation with sigma**2 within
    ``match_tol`` of ``lam``, if any."""
    guess = int(math.sqrt(lam) // math.pi)
    for n in (guess, guess + 1):
        if n < 1:
            continue
        sigma = _solve_bracketed(f, *_bracket(n))
        if abs(lam - sigma * sigma) <= match_tol:
            return sigma
    return None


def predict(path: SqueezePath, lam: float, *,
            match_tol: float = 1e-9) -> ConnectionMatrix | None:
    """Analytic zero-range limit of ``path`` at coupling ``lam``.

    Returns the limiting connection matrix when the path carries resonances
    and ``lam`` sits on one (within ``match_tol``), else None, meaning the
    half-lines decouple and the point is opaque.
    """
    if lam <= 0:
        raise ValueError(f"coupling must be positive, got {lam}")
    if path.kind == BARRIER_FIRST:
        return None
    if path.kind == POWER and path.tau < 2.0 and path.tau != 1.0:
        return None

    if path.kind == POWER and path.tau == 1.0:
        c = path.c

        def f(s: float) -> float:
            th = math.tanh(s)
            return th / (1.0 + c * s * th) - math.tan(s)

        sigma = _matching_root(lam, f, match_tol)
        if sigma is None:
            return None
        return resonant_matrix(chi_linear(sigma, c), 0.0)

    # adjacent and power laws with tau >= 2 share the adjacent root set
    sigma = _matching_root(lam, lambda s: math.tanh(s) - math.tan(s), match_tol)
    if sigma is None:
        return None
    chi = chi_adjacent(sigma)
    g = g_quadratic(sigma, path.c) if (path.kind == POWER and path.tau == 2.0) else 0.0
    return resonant_matrix(chi, g)


@dataclass(frozen=True)
class Peak:
    """Refined location of a strict local transmission maximum."""

    lam: float
    T2: float


@dataclass(frozen=True)
class SweepResult:
    """Transmission curve over a coupling grid at fixed geometry."""

    path: SqueezePath
    l: float
    E: float
    lambdas: np.ndarray
    T2: np.ndarray
    R2: np.ndarray
    peaks: list[Peak]


def transmission_sweep(path: SqueezePath, l: float, lam_min: float,
                       lam_max: float, samples: int, E: float = 1.0) -> SweepResult:
    """|T|^2 and |R|^2 over an evenly spaced coupling grid at width ``l``.

    Peaks are strict local maxima of |T|^2 over the grid, refined by a
    parabola through the three surrounding samples (the refinement never
    leaves the neighbouring half-intervals).
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    if l < PRECISION_FLOOR:
        raise PrecisionFloorError(
            f"l = {l} below the precision floor {PRECISION_FLOOR}")
    if not lam_max > lam_min:
        raise ValueError(f"need lam_max > lam_min, got {lam_max} <= {lam_min}")
    if E <= 0:
        raise ValueError(f"energy must be positive, got {E}")

    lams = np.linspace(lam_min, lam_max, samples)
    rho = path.rho_of(l)
    k = math.sqrt(E)
    t2 = np.empty(samples)
    r2 = np.empty(samples)
    for i, lam in enumerate(lams):
        amp = scattering(transfer_matrix(RectProfile(l=l, rho=rho, lam=lam), E), k)
        if amp.conservation_residual > 1e-10:
            raise InvariantViolation(
                f"conservation residual {amp.conservation_residual} at lam = {lam}")
        t2[i], r2[i] = amp.T2, amp.R2

    h = lams[1] - lams[0]
    peaks = []
    for i in range(1, samples - 1):
        if t2[i] > t2[i - 1] and t2[i] > t2[i + 1]:
            denom = t2[i - 1] - 2.0 * t2[i] + t2[i + 1]
            off = 0.5 * h * (t2[i - 1] - t2[i + 1]) / denom if denom != 0.0 else 0.0
            peaks.append(Peak(lam=float(lams[i] + off), T2=float(t2[i])))
    return SweepResult(path=path, l=l, E=E, lambdas=lams, T2=t2, R2=r2,
                       peaks=peaks)
