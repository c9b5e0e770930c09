"""Pure-Python shooting kernel: one Dormand-Prince 5(4) sweep per path piece.

This is the fallback for environments without the compiled extension; the
Cython module ptmorse._kernel implements the same entry point with the
same coefficients and step-control rules.

A piece is a smooth stretch of integration path, identified by `kind`:

    0  shifted line       r(t) = t - ic                 (radial equation)
    1  logarithmic branch x(t) = t - i ln(c/|cos t|)    (Morse equation)
    2  straight joiner    x(t) = t - i ln c             (Morse equation)

State is (y1, y2) = (solution, d solution / d t).  Error control targets
`rtol` per unit path length; the pair is renormalized when its magnitude
passes 1e100, accumulating the discarded scale in log form.
"""

import math

BACKEND_NAME = "python"

STATUS_OK = 0
STATUS_STEP_FAIL = 1
STATUS_OVERFLOW = 2

KIND_LINE = 0
KIND_BRANCH = 1
KIND_STRAIGHT = 2

RENORM_LIMIT = 1e100
LOG_SCALE_CAP = 1e4
MAX_STEPS = 2_000_000

# Dormand-Prince 5(4) tableau
_A21 = 0.2
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = (
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
)
_A61, _A62, _A63, _A64, _A65 = (
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
)
_B1, _B3, _B4, _B5, _B6 = (
    35.0 / 384.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
)
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71.0 / 57600.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)


def _rhs(kind, omega, c, pcoef, trial, t, y1, y2):
    if kind == KIND_LINE:
        r = complex(t, -c)
        rr = r * r
        q = omega * omega * rr + pcoef / rr - trial
        return y2, q * y1
    if kind == KIND_BRANCH:
        cv = math.cos(t)
        sv = math.sin(t)
        inv2 = 1.0 / (cv * cv)
        ei = complex(cv, sv)
        e2 = (c * c) * inv2 * (ei * ei)
        e4 = e2 * e2
        q = -(trial + omega * omega * e4 + pcoef * e2)
        g2 = complex(cv, -sv) * complex(cv, -sv) * inv2
        gpg = -1j * ei / cv
        return y2, q * g2 * y1 + gpg * y2
    # straight joiner at height ln c
    e2 = (c * c) * complex(math.cos(2.0 * t), math.sin(2.0 * t))
    e4 = e2 * e2
    q = -(trial + omega * omega * e4 + pcoef * e2)
    return y2, q * y1


def _step(kind, omega, c, pcoef, trial, t, h, y1, y2, k1):
    """One DP5 step; returns (y1n, y2n, k7, err1, err2)."""
    f = _rhs
    a1, b1 = k1
    u1 = y1 + h * _A21 * a1
    u2 = y2 + h * _A21 * b1
    a2, b2 = f(kind, omega, c, pcoef, trial, t + 0.2 * h, u1, u2)
    u1 = y1 + h * (_A31 * a1 + _A32 * a2)
    u2 = y2 + h * (_A31 * b1 + _A32 * b2)
    a3, b3 = f(kind, omega, c, pcoef, trial, t + 0.3 * h, u1, u2)
    u1 = y1 + h * (_A41 * a1 + _A42 * a2 + _A43 * a3)
    u2 = y2 + h * (_A41 * b1 + _A42 * b2 + _A43 * b3)
    a4, b4 = f(kind, omega, c, pcoef, trial, t + 0.8 * h, u1, u2)
    u1 = y1 + h * (_A51 * a1 + _A52 * a2 + _A53 * a3 + _A54 * a4)
    u2 = y2 + h * (_A51 * b1 + _A52 * b2 + _A53 * b3 + _A54 * b4)
    a5, b5 = f(kind, omega, c, pcoef, trial, t + (8.0 / 9.0) * h, u1, u2)
    u1 = y1 + h * (_A61 * a1 + _A62 * a2 + _A63 * a3 + _A64 * a4 + _A65 * a5)
    u2 = y2 + h * (_A61 * b1 + _A62 * b2 + _A63 * b3 + _A64 * b4 + _A65 * b5)
    a6, b6 = f(kind, omega, c, pcoef, trial, t + h, u1, u2)
    y1n = y1 + h * (_B1 * a1 + _B3 * a3 + _B4 * a4 + _B5 * a5 + _B6 * a6)
    y2n = y2 + h * (_B1 * b1 + _B3 * b3 + _B4 * b4 + _B5 * b5 + _B6 * b6)
    a7, b7 = f(kind, omega, c, pcoef, trial, t + h, y1n, y2n)
    err1 = h * (_E1 * a1 + _E3 * a3 + _E4 * a4 + _E5 * a5 + _E6 * a6 + _E7 * a7)
    err2 = h * (_E1 * b1 + _E3 * b3 + _E4 * b4 + _E5 * b5 + _E6 * b6 + _E7 * b7)
    return y1n, y2n, (a7, b7), err1, err2


def integrate_piece(kind, omega, c, pcoef, trial, t0, t1, y1, y2, rtol):
    """Integrate one piece from t0 to t1 (either direction).

    Returns (status, y1, y2, log_scale, nsteps).
    """
    trial = complex(trial)
    y1 = complex(y1)
    y2 = complex(y2)
    log_scale = 0.0
    span = t1 - t0
    if span == 0.0:
        return STATUS_OK, y1, y2, 0.0, 0

    t = t0
    h = span * 1e-3
    h_floor = abs(span) * 1e-15
    forward = span > 0
    nsteps = 0
    k1 = _rhs(kind, omega, c, pcoef, trial, t, y1, y2)

    while (t < t1) if forward else (t > t1):
        if (t + h > t1) if forward else (t + h < t1):
            h = t1 - t
        if abs(h) < h_floor or nsteps > MAX_STEPS:
            return STATUS_STEP_FAIL, y1, y2, log_scale, nsteps
        y1n, y2n, k7, err1, err2 = _step(kind, omega, c, pcoef, trial, t, h, y1, y2, k1)
        errn = abs(err1) + abs(err2)
        sc = max(abs(y1) + abs(y2), abs(y1n) + abs(y2n), 1e-290)
        tol = rtol * abs(h) * sc
        if math.isfinite(errn) and errn <= tol:
            t += h
            y1, y2, k1 = y1n, y2n, k7
            nsteps += 1
            mag = max(abs(y1), abs(y2))
            if mag > RENORM_LIMIT:
                y1 /= mag
                y2 /= mag
                k1 = (k1[0] / mag, k1[1] / mag)
                log_scale += math.log(mag)
                if log_scale > LOG_SCALE_CAP:
                    return STATUS_OVERFLOW, y1, y2, log_scale, nsteps
            if errn == 0.0:
                fac = 5.0
            else:
                fac = min(5.0, max(0.2, 0.9 * (tol / errn) ** 0.2))
        else:
            if not math.isfinite(errn):
                fac = 0.1
            else:
                fac = max(0.1, min(0.9, 0.9 * (tol / errn) ** 0.2))
        h *= fac

    return STATUS_OK, y1, y2, log_scale, nsteps
