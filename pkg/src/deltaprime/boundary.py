"""Point-interaction connection matrices and what they scatter and bind.

A point interaction at the origin is a real 2x2 unit-determinant matrix
(optionally with an overall phase) linking (psi, psi') on the left of the
origin to the right.  This module builds the matrices that arise from the
squeezed barrier-well limits, from the symmetrized distributional product,
and from the two-parameter weighted product that reconciles the two, plus
the scattering amplitudes and bound states carried by any such matrix.

The weighted product assigns the weights (1-alpha, alpha) to the one-sided
values of psi multiplying the dipole term, the swapped weights to the
one-sided derivatives multiplying the delta term, and adds beta times the
jump of psi to the delta term.  The resulting matrix is diagonal
(A, 1/A) with a lower-left entry B:

    A = (1 + (1-alpha)*lam) / (1 - alpha*lam),
    B = beta*lam**2 / ((1 - alpha*lam) * (1 + (1-alpha)*lam)).

Inverting A = chi, B = g at a resonance gives

    alpha = 1/lam + 1/(1-chi),    beta = chi*g/(1-chi)**2.

The map alpha -> A is violently ill-conditioned exactly where those fits
live (1 - alpha*lam is tiny when |chi| is huge), so alpha is carried with a
double-double tail and the two denominators are evaluated with compensated
arithmetic; see :class:`ProductParams`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _ddouble as dd
from .errors import InvariantViolation, SingularParameterError
from .transfer import ScatteringAmplitudes

__all__ = [
    "ConnectionMatrix",
    "ProductParams",
    "BoundaryData",
    "resonant_matrix",
    "seba_matrix",
    "delta_prime_delta_matrix",
    "bc_from_product",
    "params_from_resonance",
    "scattering_from_matrix",
    "bound_state",
    "propagate",
    "matching_residual",
    "side_swap",
]


@dataclass(frozen=True)
class ConnectionMatrix:
    """Boundary conditions (psi, psi')(+0) = exp(i*theta) * M (psi, psi')(-0).

    The real part M must have unit determinant; the phase theta in [0, pi)
    is stored but only theta = 0 matrices are analyzed for scattering and
    bound states.
    """

    l11: float
    l12: float
    l21: float
    l22: float
    theta: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta < math.pi:
            raise ValueError(f"theta must lie in [0, pi), got {self.theta}")
        if self.det_residual() > 1e-12:
            raise InvariantViolation(
                f"connection matrix determinant {self.det} != 1")

    @property
    def det(self) -> float:
        return self.l11 * self.l22 - self.l12 * self.l21

    def det_residual(self) -> float:
        scale = max(1.0, abs(self.l11 * self.l22), abs(self.l12 * self.l21))
        return abs(self.det - 1.0) / scale

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.l11, self.l12, self.l21, self.l22


@dataclass(frozen=True)
class ProductParams:
    """Weights (alpha, beta) of the two-parameter product rule.

    ``alpha_lo`` is an optional extended-precision tail of alpha: the
    resonance fits place 1 - alpha*lam within ~1/chi of zero, so a bare
    double loses up to half the significand in the matrix round trip.
    Fits populate it; hand-built parameters can leave it at 0.
    """

    alpha: float
    beta: float
    alpha_lo: float = 0.0

    def alpha_dd(self) -> tuple[float, float]:
        return self.alpha, self.alpha_lo


def resonant_matrix(chi: float, g: float = 0.0) -> ConnectionMatrix:
    """Limiting matrix of a resonant squeeze: diag(chi, 1/chi) plus
    lower-left g."""
    if chi == 0:
        raise ValueError("chi must be nonzero")
    return ConnectionMatrix(chi, 0.0, g, 1.0 / chi)


def seba_matrix(lam: float) -> ConnectionMatrix:
    """Diagonal matrix diag(A, 1/A), A = (2+lam)/(2-lam), of the
    symmetrized (half/half) distributional product."""
    if lam == 2.0 or lam == -2.0:
        raise SingularParameterError(
            f"lam = {lam} is a pole of A = (2+lam)/(2-lam)")
    a = (2.0 + lam) / (2.0 - lam)
    return ConnectionMatrix(a, 0.0, 0.0, (2.0 - lam) / (2.0 + lam))


def delta_prime_delta_matrix(gamma: float, lam: float) -> ConnectionMatrix:
    """The symmetrized-product matrix with an added delta term of strength
    gamma: lower-left entry gamma / (1 - lam**2/4)."""
    if lam == 2.0 or lam == -2.0:
        raise SingularParameterError(
            f"lam = {lam} is a pole of A = (2+lam)/(2-lam)")
    a = (2.0 + lam) / (2.0 - lam)
    b = gamma / (1.0 - lam * lam / 4.0)
    return ConnectionMatrix(a, 0.0, b, (2.0 - lam) / (2.0 + lam))


def bc_from_product(params: ProductParams, lam: float) -> ConnectionMatrix:
    """Connection matrix of the weighted product rule at coupling ``lam``.

    Raises :class:`SingularParameterError` on the two poles 1 - alpha*lam = 0
    and 1 + (1-alpha)*lam = 0.
    """
    d1 = dd.sub(dd.from_float(1.0), dd.mul_f(params.alpha_dd(), lam))
    d2 = dd.add(d1, dd.from_float(lam))
    if dd.to_float(d1) == 0.0:
        raise SingularParameterError(
            f"1 - alpha*lam = 0 at alpha = {params.alpha}, lam = {lam}")
    if dd.to_float(d2) == 0.0:
        raise SingularParameterError(
            f"1 + (1-alpha)*lam = 0 at alpha = {params.alpha}, lam = {lam}")
    a = dd.to_float(dd.div(d2, d1))
    a_inv = dd.to_float(dd.div(d1, d2))
    b = params.beta * lam * lam / dd.to_float(d1) / dd.to_float(d2)
    return ConnectionMatrix(a, 0.0, b, a_inv)


def params_from_resonance(lam_n: float, chi_n: float, g_n: float) -> ProductParams:
    """Product weights reproducing the resonance data (chi_n, g_n).

    alpha = 1/lam + 1/(1-chi) and beta = chi*g/(1-chi)**2; the matrix round
    trip through :func:`bc_from_product` recovers (chi_n, g_n) to double
    precision.  chi = 1 (the pure-delta regime) has no inverse here.
    """
    if chi_n == 1.0:
        raise SingularParameterError(
            "chi = 1 is the pure-delta regime; 1/(1-chi) is undefined")
    if lam_n == 0.0:
        raise SingularParameterError("lam = 0 has no product-rule inverse")
    alpha = dd.add(dd.reciprocal(dd.from_float(lam_n)),
                   dd.reciprocal(dd.two_sum(1.0, -chi_n)))
    one_minus_chi = 1.0 - chi_n
    beta = chi_n * g_n / (one_minus_chi * one_minus_chi) + 0.0  # drop -0.0
    return ProductParams(alpha=alpha[0], beta=beta, alpha_lo=alpha[1])


def scattering_from_matrix(cm: ConnectionMatrix, k: float) -> ScatteringAmplitudes:
    """Reflection/transmission amplitudes of a zero-range connection matrix.

    Same extraction as for finite-range transfer matrices, with the support
    collapsed to a point (no propagation phase).  Only phase-free matrices
    are supported.
    """
    if k <= 0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    if cm.theta != 0.0:
        raise ValueError("scattering for theta != 0 matrices is not defined here")
    delta = cm.l11 + cm.l22 - 1j * (k * cm.l12 - cm.l21 / k)
    R = -(cm.l11 - cm.l22 + 1j * (k * cm.l12 + cm.l21 / k)) / delta
    T = 2.0 / delta
    return ScatteringAmplitudes(R=R, T=T)


def bound_state(cm: ConnectionMatrix) -> list[float]:
    """Decay constants kappa > 0 of bound states (energy -kappa**2).

    Matching exp(kappa*x) on the left to exp(-kappa*x) on the right through
    the matrix yields l12*kappa**2 + (l11+l22)*kappa + l21 = 0.  For unit
    determinant the discriminant is (l11-l22)**2 + 4 > 0, so the roots are
    always real; only strictly positive ones are normalizable and returned.
    """
    if cm.theta != 0.0:
        raise ValueError("bound states for theta != 0 matrices are not defined here")
    a, b, c = cm.l12, cm.l11 + cm.l22, cm.l21
    if a == 0.0:
        roots = [] if b == 0.0 else [-c / b]
    elif c == 0.0:
        roots = [0.0, -b / a]
    else:
        disc = b * b - 4.0 * a * c
        if disc < 0:
            return []
        q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
        roots = [q / a, c / q]
    return sorted(r for r in roots if r > 0.0)


@dataclass(frozen=True)
class BoundaryData:
    """One-sided limits (psi, psi') on the two sides of the origin."""

    psi_minus: complex
    dpsi_minus: complex
    psi_plus: complex
    dpsi_plus: complex


def propagate(cm: ConnectionMatrix, psi_minus: complex, dpsi_minus: complex) -> BoundaryData:
    """Boundary data whose right side is the matrix image of the left side."""
    phase = complex(math.cos(cm.theta), math.sin(cm.theta))
    return BoundaryData(
        psi_minus=psi_minus,
        dpsi_minus=dpsi_minus,
        psi_plus=phase * (cm.l11 * psi_minus + cm.l12 * dpsi_minus),
        dpsi_plus=phase * (cm.l21 * psi_minus + cm.l22 * dpsi_minus),
    )


def matching_residual(cm: ConnectionMatrix, data: BoundaryData) -> float:
    """How far boundary data is from satisfying the matrix conditions."""
    ref = propagate(cm, data.psi_minus, data.dpsi_minus)
    scale = max(1.0, abs(data.psi_plus), abs(data.dpsi_plus))
    return max(abs(data.psi_plus - ref.psi_plus),
               abs(data.dpsi_plus - ref.dpsi_plus)) / scale


def side_swap(data: BoundaryData, chi: float) -> BoundaryData:
    """Swap-and-scale map psi(+-0) -> chi*psi(-+0), psi'(+-0) -> psi'(-+0)/chi.

    Data satisfying the g = 0 matrix diag(chi, 1/chi) is carried onto data
    satisfying its inverse diag(1/chi, chi), i.e. the map permutes the
    diagonal family among itself.
    """
    if chi == 0:
        raise ValueError("chi must be nonzero")
    return BoundaryData(
        psi_minus=chi * data.psi_plus,
        dpsi_minus=data.dpsi_plus / chi,
        psi_plus=chi * data.psi_minus,
        dpsi_plus=data.dpsi_minus / chi,
    )
