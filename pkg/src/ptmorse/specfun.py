"""Complex special functions used by the exact oscillator solutions.

Three primitives: Kummer's confluent hypergeometric function 1F1 evaluated
by its power series, generalized Laguerre polynomials by the three-term
recurrence, and complex powers on a fixed branch whose cut runs up the
positive imaginary axis (argument range (-3*pi/2, pi/2]).  That branch
keeps the lower half-plane, where all integration paths live, cut-free.
"""

import cmath
import math

from .errors import DomainError, NonConvergenceError, PoleError

__all__ = ["kummer_1f1", "laguerre", "complex_power", "branch_arg"]

INTEGER_TOL = 1e-12
SERIES_TOL = 1e-17
SERIES_CAP = 10_000
MAX_ABS_Z = 200.0

# branch cut along the positive imaginary axis; arg in (-3*pi/2, pi/2]
_HALF_PI = math.pi / 2.0


def _nonpositive_int(w: complex) -> int | None:
    """Return n >= 0 such that w == -n within INTEGER_TOL, else None."""
    if abs(w.imag) > INTEGER_TOL:
        return None
    k = round(w.real)
    if k > 0 or abs(w.real - k) > INTEGER_TOL:
        return None
    return -int(k)


def kummer_1f1(a: complex, b: complex, z: complex) -> complex:
    """Confluent hypergeometric function 1F1(a, b; z) by power series.

    When ``a`` is within 1e-12 of a non-positive integer -n the series is
    summed exactly as the degree-n polynomial.  Otherwise terms are added
    with compensated summation until three consecutive terms fall below
    1e-17 of the partial sum.

    Raises
    ------
    PoleError
        ``b`` is a non-positive integer and the series does not terminate
        before the offending term.
    NonConvergenceError
        |z| exceeds 200 (outside the supported range) or the series fails
        to converge within 10000 terms.
    """
    a, b, z = complex(a), complex(b), complex(z)
    if abs(z) > MAX_ABS_Z:
        raise NonConvergenceError(
            "1F1 series not supported for |z| = %.3g > %g" % (abs(z), MAX_ABS_Z)
        )
    n_term = _nonpositive_int(a)
    n_pole = _nonpositive_int(b)
    if n_pole is not None and (n_term is None or n_term > n_pole):
        raise PoleError("1F1 pole: b = %s is a non-positive integer" % b)

    if n_term is not None:
        # terminating case: exact degree-n polynomial, n+1 terms
        a = complex(-n_term)
        term = 1.0 + 0.0j
        total = 1.0 + 0.0j
        comp = 0.0j
        for k in range(n_term):
            term *= (a + k) * z / ((b + k) * (k + 1))
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
        return total

    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    comp = 0.0j
    small = 0
    for k in range(SERIES_CAP):
        term *= (a + k) * z / ((b + k) * (k + 1))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) < SERIES_TOL * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NonConvergenceError(
        "1F1 series did not converge within %d terms (a=%s, b=%s, z=%s)"
        % (SERIES_CAP, a, b, z)
    )


def laguerre(n: int, a: float, z: complex) -> complex:
    """Generalized Laguerre polynomial L_n^(a)(z) by the n-recurrence.

    The recurrence (k+1) L_{k+1} = (2k+1+a-z) L_k - (k+a) L_{k-1} is exact
    for polynomials and stable at the moderate degrees used here.
    """
    if n < 0:
        raise DomainError("Laguerre degree must be non-negative, got %s" % n)
    z = complex(z)
    prev = 1.0 + 0.0j
    if n == 0:
        return prev
    cur = 1.0 + a - z
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + a - z) * cur - (k + a) * prev) / (k + 1)
    return cur


def branch_arg(r: complex) -> float:
    """Argument of r in (-3*pi/2, pi/2], cut along the positive imaginary axis."""
    theta = math.atan2(r.imag, r.real)
    if theta > _HALF_PI:
        theta -= 2.0 * math.pi
    return theta


def complex_power(r: complex, p: complex) -> complex:
    """r**p = exp(p (ln|r| + i arg r)) with arg r taken from branch_arg.

    Continuous on the lower half-plane and across the negative real axis;
    the only discontinuity is across the positive imaginary axis.
    """
    r, p = complex(r), complex(p)
    if r == 0:
        if p.real > 0:
            return 0.0 + 0.0j
        raise DomainError("0**p undefined for Re p <= 0 (p=%s)" % p)
    return cmath.exp(p * complex(math.log(abs(r)), branch_arg(r)))
