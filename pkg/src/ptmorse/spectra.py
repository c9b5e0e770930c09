"""Closed-form level generators for the oscillator pair.

The complexified radial oscillator has energies E = omega (4n + 2 - 2 q
alpha) with quasi-parity q = +-1.  Its Morse partner at coupling D has
epsilon_m^[+-] = (2m + 1 -+ D/(2 omega))^2.  For D > 0 the coupling ratio
splits as D/(4 omega) = M + sigma - 1/2 with sigma in (0, 1), which sorts
the levels into a finite descending quasi-even family, an infinite rising
quasi-even family, and the quasi-odd family.  This module generates levels,
performs that decomposition, detects exact level crossings, and maps
oscillator data onto Morse data.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, StateError

__all__ = [
    "HOLevel",
    "SpectralLevel",
    "FamilyDecomposition",
    "DegeneratePair",
    "PLUS",
    "MINUS",
    "ho_energy",
    "ho_levels",
    "morse_energy",
    "decompose_coupling",
    "family_energy",
    "spectrum",
    "find_degeneracies",
    "ho_to_morse",
    "sqrt_ladder",
]

INTEGER_TOL = 1e-12
DEGENERACY_TOL = 1e-9

PLUS = "plus"
MINUS = "minus"
FINITE_PLUS = "finite_plus"
INFINITE_PLUS = "infinite_plus"


@dataclass(frozen=True)
class HOLevel:
    """One oscillator level: radial number n, quasi-parity q, and energy."""

    n: int
    q: int
    alpha: float
    omega: float
    energy: float


@dataclass(frozen=True)
class SpectralLevel:
    """One Morse level with its family tag when the decomposition exists."""

    m: int
    sign: str
    epsilon: float
    family: str | None = None
    family_index: int | None = None


@dataclass(frozen=True)
class FamilyDecomposition:
    """Split of the coupling ratio: D/(4 omega) = M + sigma - 1/2."""

    M: int
    sigma: float
    t: float  # D / (2 omega)
    degenerate: bool


@dataclass(frozen=True)
class DegeneratePair:
    """Two distinct (m, sign) labels sharing one epsilon value."""

    level_a: tuple[int, str]
    level_b: tuple[int, str]
    epsilon: float


def _check_omega(omega: float) -> None:
    if not omega > 0:
        raise DomainError("omega must be positive, got %s" % omega)


def ho_energy(n: int, q: int, alpha: float, omega: float) -> float:
    """Oscillator energy omega (4n + 2 - 2 q alpha) for quasi-parity q = +-1."""
    _check_omega(omega)
    if not alpha > 0:
        raise DomainError("alpha must be positive, got %s" % alpha)
    if n < 0:
        raise DomainError("n must be non-negative, got %s" % n)
    if q not in (1, -1):
        raise DomainError("quasi-parity must be +1 or -1, got %s" % q)
    return omega * (4 * n + 2 - 2 * q * alpha)


def ho_levels(alpha: float, omega: float, count: int) -> list[HOLevel]:
    """The lowest `count` oscillator levels over both quasi-parities.

    Ties are ordered q = +1 before q = -1, then by n.
    """
    if count < 1:
        raise DomainError("count must be positive, got %s" % count)
    levels = []
    for n in range(count + 2):
        for q in (1, -1):
            levels.append(HOLevel(n, q, alpha, omega, ho_energy(n, q, alpha, omega)))
    levels.sort(key=lambda s: (s.energy, 0 if s.q == 1 else 1, s.n))
    return levels[:count]


def morse_energy(m: int, sign: str, D: float, omega: float) -> float:
    """Morse level (2m + 1 -+ D/(2 omega))^2; minus sign of -+ for `plus`."""
    _check_omega(omega)
    if m < 0:
        raise DomainError("m must be non-negative, got %s" % m)
    t = D / (2.0 * omega)
    if sign == PLUS:
        root = 2 * m + 1 - t
    elif sign == MINUS:
        root = 2 * m + 1 + t
    else:
        raise DomainError("sign must be 'plus' or 'minus', got %r" % (sign,))
    return root * root


def decompose_coupling(D: float, omega: float) -> FamilyDecomposition:
    """Split D/(4 omega) + 1/2 into integer M plus fractional sigma.

    The decomposition is flagged degenerate when D/(4 omega) + 1/2 is an
    integer within 1e-12 (sigma = 0); family labels are withheld there.
    """
    _check_omega(omega)
    if not D > 0:
        raise DomainError("family decomposition requires D > 0, got %s" % D)
    t = D / (2.0 * omega)
    x = D / (4.0 * omega) + 0.5
    nearest = round(x)
    if abs(x - nearest) <= INTEGER_TOL:
        return FamilyDecomposition(M=int(nearest), sigma=x - nearest, t=t, degenerate=True)
    M = math.floor(x)
    return FamilyDecomposition(M=int(M), sigma=x - M, t=t, degenerate=False)


def family_energy(
    family: str, k: int, dec: FamilyDecomposition, omega: float
) -> tuple[float, int]:
    """Level of one family member, as (epsilon, Morse index m).

    finite_plus:   epsilon = 4 (k + sigma)^2,      m = M - k - 1,  k < M
    infinite_plus: epsilon = 4 (k + 1 - sigma)^2,  m = M + k
    minus:         epsilon = 4 (k + M + sigma)^2,  m = k
    """
    _check_omega(omega)
    if dec.degenerate:
        raise StateError("family labels are undefined for a degenerate decomposition")
    if k < 0:
        raise DomainError("family index must be non-negative, got %s" % k)
    M, sigma = dec.M, dec.sigma
    if family == FINITE_PLUS:
        if k >= M:
            raise IndexError("finite_plus has %d members, index %d out of range" % (M, k))
        root = 2.0 * (k + sigma)
        return root * root, M - k - 1
    if family == INFINITE_PLUS:
        root = 2.0 * (k + 1 - sigma)
        return root * root, M + k
    if family == MINUS:
        root = 2.0 * (k + M + sigma)
        return root * root, k
    raise DomainError("unknown family %r" % (family,))


def _family_label(m: int, sign: str, dec: FamilyDecomposition | None):
    if dec is None or dec.degenerate:
        return None, None
    if sign == MINUS:
        return MINUS, m
    if m <= dec.M - 1:
        return FINITE_PLUS, dec.M - 1 - m
    return INFINITE_PLUS, m - dec.M


def spectrum(D: float, omega: float, count: int) -> list[SpectralLevel]:
    """The `count` lowest Morse levels over both signs, sorted by epsilon.

    Ties are grouped with plus before minus, then m ascending.  Family tags
    are attached when the (M, sigma) decomposition exists and is not
    degenerate; for D <= 0 or sigma = 0 the tags are omitted.
    """
    _check_omega(omega)
    if count < 1:
        raise DomainError("count must be positive, got %s" % count)
    dec = None
    if D > 0:
        dec = decompose_coupling(D, omega)
    t = D / (2.0 * omega)
    m_max = count + math.ceil(abs(t) / 2.0) + 2
    levels = []
    for m in range(m_max):
        for sign in (PLUS, MINUS):
            eps = morse_energy(m, sign, D, omega)
            family, k = _family_label(m, sign, dec)
            levels.append(SpectralLevel(m, sign, eps, family, k))
    levels.sort(key=lambda s: (s.epsilon, 0 if s.sign == PLUS else 1, s.m))
    return levels[:count]


def find_degeneracies(D: float, omega: float, max_m: int) -> list[DegeneratePair]:
    """All pairs of distinct (m, sign) labels with equal epsilon, m <= max_m.

    Equality is tested to 1e-9 relative; pairs exist exactly when
    t = D/(2 omega) is a positive integer.
    """
    _check_omega(omega)
    if max_m < 0:
        raise DomainError("max_m must be non-negative, got %s" % max_m)
    labels = [(m, sign) for m in range(max_m + 1) for sign in (PLUS, MINUS)]
    values = {lab: morse_energy(lab[0], lab[1], D, omega) for lab in labels}
    pairs = []
    for i, la in enumerate(labels):
        for lb in labels[i + 1 :]:
            ea, eb = values[la], values[lb]
            if abs(ea - eb) <= DEGENERACY_TOL * (1.0 + abs(ea) + abs(eb)):
                pairs.append(DegeneratePair(la, lb, ea))
    pairs.sort(key=lambda p: (p.epsilon, p.level_a, p.level_b))
    return pairs


def ho_to_morse(n: int, q: int, alpha: float, omega: float) -> tuple[float, float]:
    """Map an oscillator level to Morse data: coupling D = E, energy alpha^2."""
    return ho_energy(n, q, alpha, omega), alpha * alpha


def sqrt_ladder(D: float, omega: float, count: int) -> list[float]:
    """Sorted square roots of the lowest `count` Morse levels."""
    return [math.sqrt(level.epsilon) for level in spectrum(D, omega, count)]
