# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled shooting kernel.

Same entry point, tableau, and step-control rules as the pure-Python
reference in ptmorse._kernel_py; that module's docstring documents the
piece kinds and the return convention.
"""

from libc.math cimport cos, sin, log, fabs, isfinite, pow

BACKEND_NAME = "compiled"

STATUS_OK = 0
STATUS_STEP_FAIL = 1
STATUS_OVERFLOW = 2

KIND_LINE = 0
KIND_BRANCH = 1
KIND_STRAIGHT = 2

cdef double RENORM_LIMIT = 1e100
cdef double LOG_SCALE_CAP = 1e4
cdef long MAX_STEPS = 2000000

ctypedef double complex dc

cdef double A21 = 0.2
cdef double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0
cdef double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0
cdef double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0
cdef double A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0
cdef double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0
cdef double A63 = 46732.0 / 5247.0, A64 = 49.0 / 176.0, A65 = -5103.0 / 18656.0
cdef double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0
cdef double B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0
cdef double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0
cdef double E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0


cdef inline void rhs(int kind, double omega, double c, double pcoef, dc trial,
                     double t, dc y1, dc y2, dc* f1, dc* f2) noexcept nogil:
    cdef dc r, rr, q, ei, e2, e4, g2, gpg
    cdef double cv, sv, inv2
    if kind == 0:
        r = t - c * 1j
        rr = r * r
        q = omega * omega * rr + pcoef / rr - trial
        f1[0] = y2
        f2[0] = q * y1
    elif kind == 1:
        cv = cos(t)
        sv = sin(t)
        inv2 = 1.0 / (cv * cv)
        ei = cv + sv * 1j
        e2 = (c * c) * inv2 * (ei * ei)
        e4 = e2 * e2
        q = -(trial + omega * omega * e4 + pcoef * e2)
        g2 = (cv - sv * 1j) * (cv - sv * 1j) * inv2
        gpg = -1j * ei / cv
        f1[0] = y2
        f2[0] = q * g2 * y1 + gpg * y2
    else:
        e2 = (c * c) * (cos(2.0 * t) + sin(2.0 * t) * 1j)
        e4 = e2 * e2
        q = -(trial + omega * omega * e4 + pcoef * e2)
        f1[0] = y2
        f2[0] = q * y1


cdef inline void dp_step(int kind, double omega, double c, double pcoef, dc trial,
                         double t, double h, dc y1, dc y2, dc a1, dc b1,
                         dc* k7a, dc* k7b,
                         dc* y1n, dc* y2n, dc* err1, dc* err2) noexcept nogil:
    cdef dc a2, b2, a3, b3, a4, b4, a5, b5, a6, b6, a7, b7, u1, u2
    u1 = y1 + h * A21 * a1
    u2 = y2 + h * A21 * b1
    rhs(kind, omega, c, pcoef, trial, t + 0.2 * h, u1, u2, &a2, &b2)
    u1 = y1 + h * (A31 * a1 + A32 * a2)
    u2 = y2 + h * (A31 * b1 + A32 * b2)
    rhs(kind, omega, c, pcoef, trial, t + 0.3 * h, u1, u2, &a3, &b3)
    u1 = y1 + h * (A41 * a1 + A42 * a2 + A43 * a3)
    u2 = y2 + h * (A41 * b1 + A42 * b2 + A43 * b3)
    rhs(kind, omega, c, pcoef, trial, t + 0.8 * h, u1, u2, &a4, &b4)
    u1 = y1 + h * (A51 * a1 + A52 * a2 + A53 * a3 + A54 * a4)
    u2 = y2 + h * (A51 * b1 + A52 * b2 + A53 * b3 + A54 * b4)
    rhs(kind, omega, c, pcoef, trial, t + (8.0 / 9.0) * h, u1, u2, &a5, &b5)
    u1 = y1 + h * (A61 * a1 + A62 * a2 + A63 * a3 + A64 * a4 + A65 * a5)
    u2 = y2 + h * (A61 * b1 + A62 * b2 + A63 * b3 + A64 * b4 + A65 * b5)
    rhs(kind, omega, c, pcoef, trial, t + h, u1, u2, &a6, &b6)
    y1n[0] = y1 + h * (B1 * a1 + B3 * a3 + B4 * a4 + B5 * a5 + B6 * a6)
    y2n[0] = y2 + h * (B1 * b1 + B3 * b3 + B4 * b4 + B5 * b5 + B6 * b6)
    rhs(kind, omega, c, pcoef, trial, t + h, y1n[0], y2n[0], &a7, &b7)
    err1[0] = h * (E1 * a1 + E3 * a3 + E4 * a4 + E5 * a5 + E6 * a6 + E7 * a7)
    err2[0] = h * (E1 * b1 + E3 * b3 + E4 * b4 + E5 * b5 + E6 * b6 + E7 * b7)
    k7a[0] = a7
    k7b[0] = b7


def integrate_piece(int kind, double omega, double c, double pcoef, trial,
                    double t0, double t1, y1_in, y2_in, double rtol):
    """See ptmorse._kernel_py.integrate_piece."""
    cdef dc trialc = trial
    cdef dc y1 = y1_in
    cdef dc y2 = y2_in
    cdef dc k1a, k1b, k7a, k7b, y1n, y2n, err1, err2
    cdef double log_scale = 0.0
    cdef double span = t1 - t0
    cdef double t, h, h_floor, errn, sc, tol, fac, mag
    cdef long nsteps = 0
    cdef bint forward

    if span == 0.0:
        return STATUS_OK, complex(y1), complex(y2), 0.0, 0

    t = t0
    h = span * 1e-3
    h_floor = fabs(span) * 1e-15
    forward = span > 0
    rhs(kind, omega, c, pcoef, trialc, t, y1, y2, &k1a, &k1b)

    while (t < t1) if forward else (t > t1):
        if (t + h > t1) if forward else (t + h < t1):
            h = t1 - t
        if fabs(h) < h_floor or nsteps > MAX_STEPS:
            return STATUS_STEP_FAIL, complex(y1), complex(y2), log_scale, nsteps
        dp_step(kind, omega, c, pcoef, trialc, t, h, y1, y2,
                k1a, k1b, &k7a, &k7b, &y1n, &y2n, &err1, &err2)
        errn = abs(err1) + abs(err2)
        sc = max(abs(y1) + abs(y2), abs(y1n) + abs(y2n), 1e-290)
        tol = rtol * fabs(h) * sc
        if isfinite(errn) and errn <= tol:
            t += h
            y1 = y1n
            y2 = y2n
            k1a = k7a
            k1b = k7b
            nsteps += 1
            mag = max(abs(y1), abs(y2))
            if mag > RENORM_LIMIT:
                y1 /= mag
                y2 /= mag
                k1a /= mag
                k1b /= mag
                log_scale += log(mag)
                if log_scale > LOG_SCALE_CAP:
                    return STATUS_OVERFLOW, complex(y1), complex(y2), log_scale, nsteps
            if errn == 0.0:
                fac = 5.0
            else:
                fac = min(5.0, max(0.2, 0.9 * pow(tol / errn, 0.2)))
        else:
            if not isfinite(errn):
                fac = 0.1
            else:
                fac = max(0.1, min(0.9, 0.9 * pow(tol / errn, 0.2)))
        h *= fac

    return STATUS_OK, complex(y1), complex(y2), log_scale, nsteps
