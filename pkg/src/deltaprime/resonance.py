"""Resonance sets of the squeezed barrier-well pair.

On squeeze rules that close the gap fast enough (adjacent, or rho = c*l**tau
with tau >= 2) the couplings that transmit in the zero-range limit solve

    tanh(s) = tan(s),        s = sqrt(lam),

one root per bracket (n*pi, n*pi + pi/2), n >= 1.  On the linear rule
rho = c*l the condition becomes tanh(s) / (1 + c*s*tanh(s)) = tan(s).  Each
root carries the limiting connection-matrix data (chi, g) and, when g != 0,
a bound state with decay constant kappa.

Several of the limiting quantities have redundant closed forms; they are
evaluated side by side and their agreement doubles as a built-in self test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotARootError
from .paths import ADJACENT, POWER, SqueezePath
from .transfer import ScatteringAmplitudes

__all__ = [
    "Resonance",
    "solve_adjacent",
    "solve_linear",
    "chi_adjacent",
    "chi_linear",
    "g_quadratic",
    "resonant_scattering",
    "bound_state_kappa",
    "resonance_set",
]

# Bracket endpoints are pulled in to keep clear of tan's zero and pole.
_MARGIN = 1e-9
_WIDTH_TOL = 1e-13


@dataclass(frozen=True)
class Resonance:
    """One member of a resonance set.

    Attributes:
        n: bracket index, >= 1.
        sigma: root of the path's resonance equation.
        lam: resonant coupling, sigma**2.
        chi: limiting upper-left connection-matrix entry; sign (-1)**n.
        g: limiting lower-left entry (0 except on the quadratic path).
        kappa: bound-state decay constant, -g/(chi + 1/chi) if positive,
            else 0.
        path: the squeeze rule this resonance belongs to.
    """

    n: int
    sigma: float
    lam: float
    chi: float
    g: float
    kappa: float
    path: SqueezePath


def _bracket(n: int) -> tuple[float, float]:
    return n * math.pi + _MARGIN, n * math.pi + math.pi / 2 - _MARGIN


def _solve_bracketed(f, lo: float, hi: float) -> float:
    """Bisection to a 1e-13 bracket, then one guarded secant polish.

    tan's poles make unguarded Newton-style iteration unsafe; inside a
    width-1e-13 bracket the secant step is harmless and shaves the last
    couple of ulps.
    """
    flo, fhi = f(lo), f(hi)
    if not (flo > 0 > fhi):
        raise NotARootError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > _WIDTH_TOL:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm > 0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    root, fr = (lo, flo) if abs(flo) < abs(fhi) else (hi, fhi)
    if fhi != flo:
        cand = hi - fhi * (hi - lo) / (fhi - flo)
        if lo <= cand <= hi:
            fc = f(cand)
            if abs(fc) < abs(fr):
                root, fr = cand, fc
    return root


def _index_of(sigma: float) -> int:
    n = int(sigma // math.pi)
    if n < 1:
        raise NotARootError(f"{sigma} lies below the first root bracket")
    return n


def solve_adjacent(count: int) -> list[Resonance]:
    """First ``count`` resonances of the adjacent squeeze rule (gap = 0)."""
    return solve_linear(0.0, count)


def solve_linear(c: float, count: int) -> list[Resonance]:
    """First ``count`` resonances of the linear rule rho = c*l.

    At c = 0 this coincides with :func:`solve_adjacent`.  The left side of
    tanh(s)/(1 + c*s*tanh(s)) = tan(s) stays inside (0, 1), so every bracket
    (n*pi, n*pi + pi/2) holds exactly one root.
    """
    if c < 0:
        raise ValueError(f"path constant c must be >= 0, got {c}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")

    def f(s: float) -> float:
        th = math.tanh(s)
        return th / (1.0 + c * s * th) - math.tan(s)

    path = SqueezePath.power_law(c, 1.0)
    out = []
    for n in range(1, count + 1):
        sigma = _solve_bracketed(f, *_bracket(n))
        chi = chi_linear(sigma, c) if c > 0 else chi_adjacent(sigma)
        out.append(Resonance(n=n, sigma=sigma, lam=sigma * sigma,
                             chi=chi, g=0.0, kappa=0.0, path=path))
    return out


def _consistent(forms: list[float], tol: float) -> bool:
    scale = max(1.0, *(abs(v) for v in forms))
    spread = max(forms) - min(forms)
    return spread <= tol * scale


def chi_adjacent(sigma: float) -> float:
    """Limiting upper-left entry at a root of tanh(s) = tan(s).

    The three equivalent expressions cosh/cos, sinh/sin and the signed
    square root of cosh(2s) are all evaluated; a relative spread beyond
    1e-6 means the input was not actually a root.
    """
    n = _index_of(sigma)
    forms = [
        math.cosh(sigma) / math.cos(sigma),
        math.sinh(sigma) / math.sin(sigma),
        (-1.0) ** n * math.sqrt(math.cosh(2.0 * sigma)),
    ]
    if not _consistent(forms, 1e-6):
        raise NotARootError(
            f"sigma = {sigma} is not a root: chi forms spread {forms}")
    return forms[2]


def chi_linear(sigma: float, c: float) -> float:
    """Limiting upper-left entry at a root of the linear-rule equation."""
    if c < 0:
        raise ValueError(f"path constant c must be >= 0, got {c}")
    n = _index_of(sigma)
    u = math.cosh(sigma) + c * sigma * math.sinh(sigma)
    forms = [
        u / math.cos(sigma),
        math.sinh(sigma) / math.sin(sigma),
        (-1.0) ** n * math.sqrt(u * u + math.sinh(sigma) ** 2),
    ]
    if not _consistent(forms, 1e-6):
        raise NotARootError(
            f"sigma = {sigma} is not a root at c = {c}: chi forms spread {forms}")
    return forms[2]


def g_quadratic(sigma: float, c: float, n: int | None = None) -> float:
    """Limiting lower-left entry on the quadratic rule rho = c*l**2.

    Two equivalent forms, -c*s**2*sinh(s)*sin(s) and
    (-1)**(n+1)*c*s**2*sinh(s)**2/sqrt(cosh(2s)); the first is returned.
    The quadratic rule keeps tanh(s) = tan(s) as its resonance condition.
    """
    if n is None:
        n = _index_of(sigma)
    g = -c * sigma * sigma * math.sinh(sigma) * math.sin(sigma)
    return g + 0.0  # normalize -0.0 at c = 0


def g_quadratic_forms(sigma: float, c: float, n: int | None = None) -> tuple[float, float]:
    """Both closed forms of the quadratic-rule g, for consistency checks."""
    if n is None:
        n = _index_of(sigma)
    direct = -c * sigma * sigma * math.sinh(sigma) * math.sin(sigma)
    signed = ((-1.0) ** (n + 1) * c * sigma * sigma
              * math.sinh(sigma) ** 2 / math.sqrt(math.cosh(2.0 * sigma)))
    return direct + 0.0, signed + 0.0


def resonant_scattering(chi: float, g: float, k: float) -> ScatteringAmplitudes:
    """Amplitudes of the limiting point interaction diag(chi, 1/chi) + g.

    For g = 0 both amplitudes are real and independent of k; at adjacent
    resonances they reduce to R = -tanh(s)**2 and
    T = (-1)**n * sqrt(1 - tanh(s)**4).
    """
    if chi == 0:
        raise ValueError("chi must be nonzero")
    if k <= 0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    denom = 1.0 / chi + chi + 1j * g / k
    return ScatteringAmplitudes(R=(1.0 / chi - chi - 1j * g / k) / denom,
                                T=2.0 / denom)


def bound_state_kappa(chi: float, g: float) -> float | None:
    """Decay constant of the bound state carried by diag(chi, 1/chi) + g.

    kappa = -g/(chi + 1/chi); returned only when positive (a normalizable
    state with energy -kappa**2), else None.  On the quadratic rule at a
    resonance this equals (c/2)*s**2*tanh(s)**2.
    """
    if isinstance(chi, complex):
        raise ValueError("chi must be real")
    if chi == 0:
        raise ValueError("chi must be nonzero")
    kappa = -g / (chi + 1.0 / chi)
    return kappa if kappa > 0 else None


def resonance_set(path: SqueezePath, count: int) -> list[Resonance]:
    """Resonance data for a squeeze rule that admits resonances.

    Adjacent and power laws with tau > 2 share the adjacent resonance set
    with g = 0; tau = 2 adds the nonzero g (and a bound state); tau = 1 has
    its own roots.  Other rules give separated half-lines and raise.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if path.kind == ADJACENT:
        return solve_adjacent(count)
    if path.kind == POWER:
        if path.tau == 1.0:
            return solve_linear(path.c, count)
        if path.tau == 2.0:
            out = []
            for r in solve_adjacent(count):
                g = g_quadratic(r.sigma, path.c, r.n)
                kappa = bound_state_kappa(r.chi, g) or 0.0
                out.append(Resonance(n=r.n, sigma=r.sigma, lam=r.lam,
                                     chi=r.chi, g=g, kappa=kappa, path=path))
            return out
        if path.tau > 2.0:
            return [Resonance(n=r.n, sigma=r.sigma, lam=r.lam, chi=r.chi,
                              g=0.0, kappa=0.0, path=path)
                    for r in solve_adjacent(count)]
    raise ValueError(
        f"squeeze rule {path.describe()} admits no resonance set")
