"""Exact wavefunctions of the oscillator pair and their contour transform.

The general radial solution is a two-coefficient combination of Kummer
functions multiplying branch powers r**(+-alpha + 1/2) and the Gaussian
exp(-omega r^2 / 2).  Bound states arise when the first Kummer parameter
is a non-positive integer, collapsing the series to a generalized Laguerre
polynomial.  The partner wavefunction on the bent contour is
phi(x) = psi(r) / sqrt(r) with r = -i exp(ix).
"""

import cmath
from dataclasses import dataclass, replace

from .contour import map_to_r
from .errors import DomainError
from .specfun import complex_power, kummer_1f1, laguerre
from .spectra import ho_energy


def _finite(value: complex, where: str) -> complex:
    if not cmath.isfinite(value):
        raise OverflowError("wavefunction overflowed at %s" % where)
    return value

__all__ = [
    "GeneralSolutionParams",
    "BoundState",
    "general_solution",
    "bound_wavefunction",
    "morse_wavefunction",
    "normalize_at",
    "ode_residual",
]


@dataclass(frozen=True)
class GeneralSolutionParams:
    """Energy, singularity strength, and the two solution coefficients."""

    energy: float
    alpha: float
    omega: float
    c1: complex = 0.0 + 0.0j
    c2: complex = 0.0 + 0.0j

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError("alpha must be positive, got %s" % self.alpha)
        if not self.omega > 0:
            raise DomainError("omega must be positive, got %s" % self.omega)


@dataclass(frozen=True)
class BoundState:
    """A terminating solution labelled by (n, q); energy is implied.

    The implied energy omega (4n + 2 - 2 q alpha) makes the first Kummer
    parameter exactly -n, so the radial factor is the Laguerre polynomial
    L_n^(-q alpha).  Normalization is caller-chosen (see normalize_at).
    """

    n: int
    q: int
    alpha: float
    omega: float
    normalization: complex = 1.0 + 0.0j

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("n must be non-negative, got %s" % self.n)
        if self.q not in (1, -1):
            raise DomainError("quasi-parity must be +1 or -1, got %s" % self.q)
        if not self.alpha > 0:
            raise DomainError("alpha must be positive, got %s" % self.alpha)
        if not self.omega > 0:
            raise DomainError("omega must be positive, got %s" % self.omega)

    @property
    def energy(self) -> float:
        return ho_energy(self.n, self.q, self.alpha, self.omega)


def general_solution(p: GeneralSolutionParams, r: complex) -> complex:
    """Evaluate the two-coefficient radial solution at r != 0.

    Branches with a zero coefficient are skipped, so a Kummer pole in the
    unused branch (integer alpha) does not spuriously raise.
    """
    r = complex(r)
    if r == 0:
        raise DomainError("general solution is singular at r = 0")
    z = p.omega * r * r
    eow = p.energy / p.omega
    total = 0.0 + 0.0j
    if p.c1 != 0:
        a1 = (2.0 - 2.0 * p.alpha - eow) / 4.0
        total += p.c1 * complex_power(r, -p.alpha + 0.5) * kummer_1f1(a1, 1.0 - p.alpha, z)
    if p.c2 != 0:
        a2 = (2.0 + 2.0 * p.alpha - eow) / 4.0
        total += p.c2 * complex_power(r, p.alpha + 0.5) * kummer_1f1(a2, 1.0 + p.alpha, z)
    return _finite(cmath.exp(-z / 2.0) * total, "r = %s" % r)


def bound_wavefunction(b: BoundState, r: complex) -> complex:
    """norm * r**(-q alpha + 1/2) * exp(-omega r^2/2) * L_n^(-q alpha)(omega r^2)."""
    r = complex(r)
    if r == 0:
        raise DomainError("bound wavefunction is singular at r = 0")
    z = b.omega * r * r
    power = complex_power(r, -b.q * b.alpha + 0.5)
    value = b.normalization * power * cmath.exp(-z / 2.0) * laguerre(b.n, -b.q * b.alpha, z)
    return _finite(value, "r = %s" % r)


def morse_wavefunction(state, x: complex) -> complex:
    """phi(x) = psi(r)/sqrt(r) at r = -i exp(ix), for either state type."""
    r = map_to_r(x)
    if isinstance(state, BoundState):
        psi = bound_wavefunction(state, r)
    else:
        psi = general_solution(state, r)
    return psi / complex_power(r, 0.5)


def normalize_at(b: BoundState, r0: complex = -1j) -> BoundState:
    """Rescale so the wavefunction equals 1 at r0 (default the c = 1 midpoint)."""
    raw = bound_wavefunction(replace(b, normalization=1.0 + 0.0j), r0)
    if raw == 0:
        raise DomainError("cannot normalize at a node (psi(%s) = 0)" % r0)
    return replace(b, normalization=1.0 / raw)


def _potential_gap(problem, energy: float, z: complex) -> complex:
    """energy - V at z for the problem's differential equation."""
    if problem.equation == "ho_line":
        coef = problem.alpha * problem.alpha - 0.25
        return energy - problem.omega**2 * z * z - coef / (z * z)
    e2 = cmath.exp(2j * z)
    return energy + problem.omega**2 * e2 * e2 + problem.D * e2


def ode_residual(problem, func, energy: float, point: complex, h: float | None = None) -> float:
    """Normalized second-order residual of `func` at one path point.

    A central-difference second derivative is taken along the local path
    direction (the contour's velocity at Re point); the residual
    f'' + (energy - V) f is scaled by the magnitudes of its two terms.
    """
    point = complex(point)
    if h is None:
        h = 1e-4 * (1.0 + abs(point))
    if not h > 0:
        raise DomainError("step h must be positive, got %s" % h)
    vel = problem.contour.velocity(point.real)
    d = vel / abs(vel)
    zp = point + h * d
    zm = point - h * d
    if problem.equation == "ho_line":
        if min(abs(point), abs(zp), abs(zm)) < 10 * h:
            raise DomainError("stencil at %s touches the r = 0 singularity" % point)
    f0 = func(point)
    second = (func(zp) - 2.0 * f0 + func(zm)) / ((h * d) * (h * d))
    gap = _potential_gap(problem, energy, point)
    residual = second + gap * f0
    scale = abs(second) + abs(gap * f0) + 1e-300
    return abs(residual) / scale
