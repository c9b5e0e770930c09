"""Independent eigensolver: bidirectional shooting along complex paths.

Both equations are integrated as first-order systems in a real path
parameter, from decay-truncated endpoints toward the match point, starting
from the recessive (Gaussian-decaying) asymptotic.  The normalized
Wronskian of the two half-solutions vanishes exactly at eigenvalues; a
grid scan locates candidates and each is refined.

Both problems are PT-symmetric about the match point, so for a real trial
value the right half-solution is the complex-conjugate mirror of the left
one and the mismatch is exactly real.  That structure matters at couplings
where two levels cross: there the mismatch has a double root, which no
sign change can bracket.  Candidates are therefore split into

* bracketed sign changes, refined by Brent's method, and
* dips (local minima without sign change), refined by Newton iteration on
  the numerical derivative of the mismatch; the local parabola then
  classifies the dip as a double root (reported once, at the vertex), a
  close pair of simple roots (split and bracketed), or a complex-conjugate
  pair (chased by a complex secant, which flags any imaginary part).

A bracketed root whose mismatch does not change sign a short distance away
is one member of a numerically split double zero; it is snapped to the
parabola vertex, which restores the crossing eigenvalue to the accuracy of
the integration itself.  Dip refinements abort if they wander out of their
own grid basin.  Complex trial values are supported throughout (the mirror
shortcut only applies on the real axis), so spectral reality is observed,
not assumed.
"""

import math
from dataclasses import dataclass
from statistics import median

from . import backend as _backend
from .contour import BENT_C, GENERALIZED_C, SHIFTED_LINE, Contour
from .errors import DomainError, StepFailureError

__all__ = [
    "ProblemSpec",
    "ShootingConfig",
    "ShootingResult",
    "Report",
    "integrate_half",
    "mismatch",
    "find_eigenvalues",
    "verify_spectrum",
    "run_verification",
    "ho_reference",
    "morse_reference",
]

HO_LINE = "ho_line"
MORSE_CONTOUR = "morse_contour"

_HALF_PI = math.pi / 2.0

PROMOTE_FRACTION = 0.1  # dip promotion: local |W| minimum vs median grid |W|
DEDUP_TOL = 1e-8
VERTEX_RHO = 0.25  # |W0| / (curvature d^2) boundary for dip classification
TOUCH_FRACTION = 0.75  # promote a dip when its parabola dips this far toward zero
SUBSCAN_POINTS = 17
BASIN_FACTOR = 1.5  # dip refinements stay within this many grid steps
# converged requires mismatch <= refine_tolerance * local scale; the local
# scale is 1e4 * max(1, median grid |W|): double roots bottom out at the
# integration error, a few decades above the secant floor of simple roots.
LOCAL_SCALE_FACTOR = 1e4


@dataclass(frozen=True)
class ProblemSpec:
    """Which equation to shoot, its parameters, and the integration path."""

    equation: str
    omega: float
    contour: Contour
    alpha: float | None = None
    D: float | None = None
    decay_exponent_cap: float = 70.0

    def __post_init__(self):
        if not self.omega > 0:
            raise DomainError("omega must be positive, got %s" % self.omega)
        if not self.decay_exponent_cap > 0:
            raise DomainError("decay_exponent_cap must be positive")
        if self.equation == HO_LINE:
            if self.contour.kind != SHIFTED_LINE:
                raise DomainError("ho_line requires a shifted_line contour")
            if self.alpha is None or not self.alpha > 0:
                raise DomainError("ho_line requires alpha > 0")
        elif self.equation == MORSE_CONTOUR:
            if self.contour.kind not in (BENT_C, GENERALIZED_C):
                raise DomainError("morse_contour requires a bent or generalized contour")
            if self.D is None:
                raise DomainError("morse_contour requires the coupling D")
        else:
            raise DomainError("unknown equation %r" % (self.equation,))


@dataclass(frozen=True)
class ShootingConfig:
    """Scan grid and tolerances for the eigenvalue search."""

    grid: tuple[float, float, int]
    match_parameter: float = 0.0
    step_tolerance: float = 1e-10
    refine_tolerance: float = 1e-10
    max_refinements: int = 60
    imag_tolerance: float = 1e-6

    def __post_init__(self):
        lo, hi, count = self.grid
        if not lo < hi:
            raise DomainError("grid needs lo < hi, got (%s, %s)" % (lo, hi))
        if count < 2:
            raise DomainError("grid needs at least 2 points, got %s" % count)


@dataclass(frozen=True)
class ShootingResult:
    """A refined eigenvalue candidate with its convergence record."""

    eigenvalue: complex
    mismatch_magnitude: float
    iterations: int
    converged: bool
    imag_flagged: bool


# ---------------------------------------------------------------------------
# geometry: truncation, pieces, initial data


def _kl(p: ProblemSpec) -> tuple[int, int]:
    if p.contour.kind == GENERALIZED_C:
        return p.contour.k, p.contour.l
    return 1, 1


def _endpoints(p: ProblemSpec) -> tuple[float, float]:
    """Decay-truncated parameter endpoints (left, right)."""
    c = p.contour.c
    cap = p.decay_exponent_cap
    if p.equation == HO_LINE:
        s_max = math.sqrt(2.0 * cap / p.omega + c * c)
        return -s_max, s_max
    # |cos v| at which the Morse decay exponent equals the cap
    cos_e = c * math.sqrt(p.omega / (2.0 * (cap + p.omega * c * c)))
    w = math.asin(min(1.0, cos_e))
    k, l = _kl(p)
    return -k * _HALF_PI + w, l * _HALF_PI - w


def _half_pieces(p: ProblemSpec, side: str, match: float):
    """Smooth kernel pieces from the side's endpoint to the match point."""
    kern = _backend.kernel
    t_lo, t_hi = _endpoints(p)
    if p.equation == HO_LINE:
        pcoef = p.alpha * p.alpha - 0.25
        if not t_lo < match < t_hi:
            raise DomainError("match parameter %s outside (%g, %g)" % (match, t_lo, t_hi))
        start = t_lo if side == "left" else t_hi
        return [(kern.KIND_LINE, start, match, pcoef)]
    k, l = _kl(p)
    jl, jr = -(k - 1) * _HALF_PI, (l - 1) * _HALF_PI
    if not jl <= match <= jr:
        raise DomainError("match parameter %s outside the joiner [%g, %g]" % (match, jl, jr))
    pieces = []
    if side == "left":
        pieces.append((kern.KIND_BRANCH, t_lo, jl, p.D))
        if jl != match:
            pieces.append((kern.KIND_STRAIGHT, jl, match, p.D))
    else:
        pieces.append((kern.KIND_BRANCH, t_hi, jr, p.D))
        if jr != match:
            pieces.append((kern.KIND_STRAIGHT, jr, match, p.D))
    return pieces


def _init_state(p: ProblemSpec, trial: complex, t_end: float) -> tuple[complex, complex]:
    """Unit value and recessive-asymptotic slope at a truncated endpoint."""
    c = p.contour.c
    if p.equation == HO_LINE:
        r = complex(t_end, -c)
        return 1.0 + 0.0j, -p.omega * r
    cv = math.cos(t_end)
    sv = math.sin(t_end)
    scale = c / abs(cv)
    r = scale * complex(sv, -cv)
    g = complex(1.0, -sv / cv)
    return 1.0 + 0.0j, -1j * g * (p.omega * r * r + 0.5)


def _integrate_half(p, trial, side, cfg, kern):
    pieces = _half_pieces(p, side, cfg.match_parameter)
    y1, y2 = _init_state(p, trial, pieces[0][1])
    log_scale = 0.0
    for i, (kind, ta, tb, pcoef) in enumerate(pieces):
        status, y1, y2, dls, _ = kern.integrate_piece(
            kind, p.omega, p.contour.c, pcoef, trial, ta, tb, y1, y2, cfg.step_tolerance
        )
        if status == kern.STATUS_STEP_FAIL:
            raise StepFailureError(
                "step control failed on %s piece %d at trial %s" % (side, i, trial)
            )
        if status == kern.STATUS_OVERFLOW:
            raise OverflowError(
                "renormalization cap exceeded on %s piece %d at trial %s" % (side, i, trial)
            )
        log_scale += dls
    return y1, y2, log_scale


def integrate_half(p: ProblemSpec, trial: complex, side: str, cfg: ShootingConfig):
    """Value and path-derivative of the decaying half-solution at the match point.

    The returned pair carries an arbitrary positive overall scale (the
    solution is renormalized en route); only its direction is meaningful.
    """
    if side not in ("left", "right"):
        raise DomainError("side must be 'left' or 'right', got %r" % (side,))
    y1, y2, _ = _integrate_half(p, complex(trial), side, cfg, _backend.kernel)
    return y1, y2


def _is_symmetric(p: ProblemSpec, cfg: ShootingConfig) -> bool:
    if cfg.match_parameter != 0.0:
        return False
    if p.equation == HO_LINE:
        return True
    k, l = _kl(p)
    return k == l


def _mismatch_core(p, trial, cfg, kern) -> complex:
    trial = complex(trial)
    if _is_symmetric(p, cfg) and trial.imag == 0.0:
        # right half is the conjugate mirror of the left: W is exactly real
        v, d, _ = _integrate_half(p, trial, "left", cfg, kern)
        den = abs(v) * abs(v) + abs(d) * abs(d)
        return complex(-2.0 * (v * d.conjugate()).real / den, 0.0)
    vl, dl, _ = _integrate_half(p, trial, "left", cfg, kern)
    vr, dr, _ = _integrate_half(p, trial, "right", cfg, kern)
    den = abs(vl) * abs(vr) + abs(dl) * abs(dr)
    return (vl * dr - dl * vr) / den


def mismatch(p: ProblemSpec, trial: complex, cfg: ShootingConfig) -> complex:
    """Wronskian of the two half-solutions at the match point, scale-normalized."""
    return _mismatch_core(p, complex(trial), cfg, _backend.kernel)


# ---------------------------------------------------------------------------
# root refinement


def _bracket_ftol(fa: float, fb: float) -> float:
    """Accept-as-root floor, relative to the bracket's own mismatch scale.

    A probe this far below the endpoint values is indistinguishable from a
    zero; an absolute floor would misfire where the mismatch scale
    collapses (small contour depths at large trial values).
    """
    return 1e-6 * min(abs(fa), abs(fb))


def _brent(f, a, b, fa, fb, tol_rel, maxit, ftol=0.0):
    """Classic Brent root bracketing on real f; (root, f(root), iters, ok).

    `ftol` is the mismatch noise floor: an endpoint already below it is a
    root (this is how grid points landing exactly on eigenvalues exit
    immediately instead of grinding the bracket down).
    """
    if abs(fa) <= ftol:
        return a, fa, 0, True
    if abs(fb) <= ftol:
        return b, fb, 0, True
    if fa * fb > 0:
        return 0.5 * (a + b), fa, 0, False
    c_, fc = a, fa
    d = e = b - a
    it = 0
    while it < maxit:
        it += 1
        if fb * fc > 0:
            c_, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c_ = b, c_, b
            fa, fb, fc = fb, fc, fb
        tol1 = 0.5 * tol_rel * (1.0 + abs(b))
        xm = 0.5 * (c_ - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b, fb, it, True
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c_:
                pnum = 2.0 * xm * s
                pden = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                pnum = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                pden = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if pnum > 0:
                pden = -pden
            pnum = abs(pnum)
            if 2.0 * pnum < min(3.0 * xm * pden - abs(tol1 * pden), abs(e * pden)):
                e = d
                d = pnum / pden
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)
        if abs(fb) <= ftol:
            return b, fb, it, True
    return b, fb, it, False


def _secant_complex(f, z0, z1, tol_rel, maxit):
    f0, f1 = f(z0), f(z1)
    it = 0
    while it < maxit:
        it += 1
        if f1 == f0:
            return z1, abs(f1), it, False
        step = -f1 * (z1 - z0) / (f1 - f0)
        cap = 0.5 * (1.0 + abs(z1))
        if abs(step) > cap:
            step *= cap / abs(step)
        z0, f0 = z1, f1
        z1 = z1 + step
        f1 = f(z1)
        if abs(step) <= tol_rel * (1.0 + abs(z1)):
            return z1, abs(f1), it, True
    return z1, abs(f1), it, False


def _vertex_newton(f, x, d, basin, cfg):
    """Walk to the stationary point of f via central differences.

    Near a (possibly split) double root the stationary point is the
    crossing eigenvalue; the zero-touching members of a split pair are
    deliberately not accepted, only the vertex is.  Aborts when the
    iteration leaves `basin`, which means the dip belonged to some other
    feature of the mismatch.
    """
    lo_b, hi_b = basin
    step_ok = False
    it = 0
    for _ in range(cfg.max_refinements):
        it += 1
        w0 = f(x)
        wp, wm = f(x + d), f(x - d)
        wp2, wm2 = f(x + 2.0 * d), f(x - 2.0 * d)
        # 5-point first derivative: the 3-point form would bias the vertex
        # by O(d^2 W'''/W''), which is visible at the 1e-6 scale
        d1 = (-wp2 + 8.0 * wp - 8.0 * wm + wm2) / (12.0 * d)
        d2 = (wp - 2.0 * w0 + wm) / d
        if d2 == 0.0:
            break
        step = -d1 * d / d2
        cap = hi_b - lo_b
        if abs(step) > cap:
            step = math.copysign(cap, step)
        x += step
        if not lo_b <= x <= hi_b:
            return x, it, False, False
        if abs(step) <= 10.0 * cfg.refine_tolerance * (1.0 + abs(x)):
            step_ok = True
            break
    return x, it, step_ok, True


def _parabola(f, x, d):
    w0, wp, wm = f(x), f(x + d), f(x - d)
    curv = 0.5 * (wp - 2.0 * w0 + wm)  # C d^2 of the local parabola
    return w0, wp, wm, curv


def _make_result(p, cfg, kern, x, iters, step_converged, med):
    try:
        mag = abs(_mismatch_core(p, complex(x), cfg, kern))
    except (StepFailureError, OverflowError):
        mag = math.inf
    local_scale = LOCAL_SCALE_FACTOR * max(1.0, med)
    converged = bool(step_converged) and mag <= cfg.refine_tolerance * local_scale
    x = complex(x)
    flagged = abs(x.imag) > cfg.imag_tolerance * (1.0 + abs(x.real))
    return ShootingResult(x, mag, iters, converged, flagged)


def _bracket_root(p, cfg, kern, f, a, b, fa, fb, med):
    """Brent plus a vertex snap when the root is half of a split double zero."""
    root, fr, iters, ok = _brent(
        f, a, b, fa, fb, cfg.refine_tolerance, cfg.max_refinements, _bracket_ftol(fa, fb)
    )
    if not ok:
        return None
    d = 1e-3 * (1.0 + abs(root))
    wp, wm = f(root + d), f(root - d)
    if wp * wm > 0:
        # no sign change across the root: a collapsed crossing; snap to vertex
        x, it2, step_ok, inside = _vertex_newton(
            f, root, d, (root - 10.0 * d, root + 10.0 * d), cfg
        )
        if inside:
            return _make_result(p, cfg, kern, x, iters + it2, step_ok or ok, med)
    return _make_result(p, cfg, kern, root, iters, ok, med)


def _refine_dip(p, cfg, kern, f, x0, hgrid, med, window):
    """Refine a no-sign-change dip: double root, near pair, or complex pair."""
    basin = (
        max(window[0] - 0.5 * hgrid, x0 - BASIN_FACTOR * hgrid),
        min(window[1] + 0.5 * hgrid, x0 + BASIN_FACTOR * hgrid),
    )

    # sub-scan the dip basin first: resolvable sign changes are plain roots
    xs = [x0 - hgrid + 2.0 * hgrid * i / (SUBSCAN_POINTS - 1) for i in range(SUBSCAN_POINTS)]
    xs = [x for x in xs if basin[0] <= x <= basin[1]]
    fs = [f(x) for x in xs]
    results = []
    crossings = [i for i in range(len(xs) - 1) if fs[i] * fs[i + 1] < 0]
    if crossings:
        for i in crossings:
            res = _bracket_root(p, cfg, kern, f, xs[i], xs[i + 1], fs[i], fs[i + 1], med)
            if res is not None:
                results.append(res)
        return results

    x = xs[min(range(len(xs)), key=lambda i: abs(fs[i]))]
    d = 1e-3 * (1.0 + abs(x))
    x, iters, step_ok, inside = _vertex_newton(f, x, d, basin, cfg)
    if not inside:
        return results
    w0, wp, wm, curv = _parabola(f, x, d)
    if curv == 0.0:
        return results
    rho = w0 / curv

    if abs(rho) <= VERTEX_RHO:
        # double root at the vertex; one eigenvalue carrying two labels
        res = _make_result(p, cfg, kern, x, iters, step_ok, med)
        if res.mismatch_magnitude <= PROMOTE_FRACTION * max(med, 1e-300):
            results.append(res)
        return results

    if rho < -VERTEX_RHO:
        # two resolvable real roots around the vertex
        s = d * math.sqrt(-rho)
        for a, b in ((x - 1.5 * s - d, x), (x, x + 1.5 * s + d)):
            if not basin[0] <= a <= basin[1] or not basin[0] <= b <= basin[1]:
                continue
            res = _bracket_root(p, cfg, kern, f, a, b, f(a), f(b), med)
            if res is not None:
                results.append(res)
        return results

    # minimum well above zero: a conjugate pair off the real axis, if anything
    def fc(z):
        return _mismatch_core(p, z, cfg, kern)

    y = d * math.sqrt(rho)
    z, _, it2, ok = _secant_complex(
        fc, complex(x, y), complex(x, 1.25 * y), cfg.refine_tolerance, cfg.max_refinements
    )
    if ok and basin[0] <= z.real <= basin[1]:
        results.append(_make_result(p, cfg, kern, z, iters + it2, ok, med))
    return results


def find_eigenvalues(p: ProblemSpec, cfg: ShootingConfig) -> list[ShootingResult]:
    """Scan the trial grid, refine every candidate, deduplicate, and sort.

    Candidates whose integration fails outright are recorded with
    converged=False and an infinite mismatch; refinements that stall are
    returned with converged=False.
    """
    kern = _backend.kernel
    lo, hi, count = cfg.grid
    step = (hi - lo) / (count - 1)
    grid = [lo + i * step for i in range(count)]
    wvals: list[complex | None] = []
    for e in grid:
        try:
            wvals.append(_mismatch_core(p, complex(e, 0.0), cfg, kern))
        except (StepFailureError, OverflowError):
            wvals.append(None)
    mags = [abs(w) for w in wvals if w is not None]
    if not mags:
        return []
    med = median(mags)

    results = []

    def guarded(refiner, *args):
        try:
            results.extend(refiner(*args))
        except (StepFailureError, OverflowError):
            results.append(
                ShootingResult(complex(args[-3] if args else 0.0), math.inf, 0, False, False)
            )

    if _is_symmetric(p, cfg):

        def f(x):
            return _mismatch_core(p, complex(x, 0.0), cfg, kern).real

        def refine_bracket(a, b, fa, fb):
            res = _bracket_root(p, cfg, kern, f, a, b, fa, fb, med)
            return [res] if res is not None else []

        wr = [w.real if w is not None else math.nan for w in wvals]
        bracketed = set()
        for i in range(count - 1):
            if math.isnan(wr[i]) or math.isnan(wr[i + 1]):
                continue
            if wr[i] == 0.0 or wr[i] * wr[i + 1] < 0:
                bracketed.update((i, i + 1))
                guarded(refine_bracket, grid[i], grid[i + 1], wr[i], wr[i + 1])
        for i in range(count):
            if i in bracketed or math.isnan(wr[i]):
                continue
            left = abs(wr[i - 1]) if i > 0 and not math.isnan(wr[i - 1]) else math.inf
            right = abs(wr[i + 1]) if i < count - 1 and not math.isnan(wr[i + 1]) else math.inf
            if abs(wr[i]) > min(left, right):
                continue
            promote = abs(wr[i]) < PROMOTE_FRACTION * med
            if not promote and math.isfinite(left) and math.isfinite(right):
                # scale-free check: does the local parabola predict a zero
                # touch?  The median rule alone misses crossings when part
                # of the window has a collapsed mismatch scale.
                w1, w0, w2 = wr[i - 1], wr[i], wr[i + 1]
                curv = w1 - 2.0 * w0 + w2
                if curv * w0 > 0:
                    v_ext = w0 - (w2 - w1) ** 2 / (8.0 * curv)
                    promote = abs(v_ext) <= TOUCH_FRACTION * abs(w0)
            if promote:
                if (i - 1) in bracketed or (i + 1) in bracketed:
                    continue
                guarded(_refine_dip, p, cfg, kern, f, grid[i], step, med, (lo, hi))
    else:
        # asymmetric path: complex mismatch, secant refinement from dips
        def fz(z):
            return _mismatch_core(p, z, cfg, kern)

        for i in range(count):
            if wvals[i] is None:
                continue
            mag = abs(wvals[i])
            left = abs(wvals[i - 1]) if i > 0 and wvals[i - 1] is not None else math.inf
            right = abs(wvals[i + 1]) if i < count - 1 and wvals[i + 1] is not None else math.inf
            if mag > min(left, right):
                continue
            promote = mag < PROMOTE_FRACTION * med
            if not promote and math.isfinite(left) and math.isfinite(right):
                curv = left - 2.0 * mag + right
                if curv > 0:
                    v_ext = mag - (right - left) ** 2 / (8.0 * curv)
                    promote = abs(v_ext) <= TOUCH_FRACTION * mag
            if promote:
                z, _, iters, ok = _secant_complex(
                    fz,
                    complex(grid[i], 0.0),
                    complex(grid[i] + 0.25 * step, 0.0),
                    cfg.refine_tolerance,
                    cfg.max_refinements,
                )
                if abs(z.real - grid[i]) <= BASIN_FACTOR * step:
                    results.append(_make_result(p, cfg, kern, z, iters, ok, med))

    margin = 1e-6
    results = [
        r
        for r in results
        if lo - margin * (1.0 + abs(lo)) <= r.eigenvalue.real <= hi + margin * (1.0 + abs(hi))
    ]
    results.sort(key=lambda r: (r.eigenvalue.real, r.eigenvalue.imag))
    deduped: list[ShootingResult] = []
    for r in results:
        if deduped:
            prev = deduped[-1]
            if abs(r.eigenvalue - prev.eigenvalue) <= DEDUP_TOL * (1.0 + abs(r.eigenvalue)):
                better = (prev.converged, -prev.mismatch_magnitude) < (
                    r.converged,
                    -r.mismatch_magnitude,
                )
                if better:
                    deduped[-1] = r
                continue
        deduped.append(r)
    return deduped


# ---------------------------------------------------------------------------
# spectrum comparison reports


@dataclass(frozen=True)
class Report:
    """Pairing of found eigenvalues against analytic values."""

    found: list[dict]
    analytic: list[dict]
    matched: int
    spurious: int
    missing: int
    passed: bool

    def to_dict(self, problem: dict | None = None, config: dict | None = None) -> dict:
        return {
            "problem": problem or {},
            "config": config or {},
            "found": self.found,
            "analytic": self.analytic,
            "summary": {
                "matched": self.matched,
                "spurious": self.spurious,
                "missing": self.missing,
                "pass": self.passed,
            },
        }


def verify_spectrum(
    analytic: list[float],
    found: list[ShootingResult],
    tol: float,
    required: list[bool] | None = None,
) -> Report:
    """Pair found eigenvalues with nearest analytic values and judge the run.

    A found value matches when |found - analytic| <= tol (1 + |analytic|);
    unmatched found values are spurious, unmatched analytic values are
    missing.  The run passes when nothing is spurious and every required
    analytic value is matched.  Only converged results take part; the
    caller restricts `analytic` to the scanned window.
    """
    if not tol > 0:
        raise DomainError("tolerance must be positive, got %s" % tol)
    if required is None:
        required = [True] * len(analytic)
    if len(required) != len(analytic):
        raise DomainError("required mask length does not match analytic values")

    # merge duplicated analytic values (level crossings share one number)
    merged: list[tuple[float, bool]] = []
    for val, req in sorted(zip(analytic, required)):
        if merged and abs(val - merged[-1][0]) <= 1e-12 * (1.0 + abs(val)):
            merged[-1] = (merged[-1][0], merged[-1][1] or req)
        else:
            merged.append((val, req))

    hit = [False] * len(merged)
    found_entries = []
    spurious = 0
    for r in sorted(found, key=lambda r: (r.eigenvalue.real, r.eigenvalue.imag)):
        if not r.converged:
            continue
        re = r.eigenvalue.real
        status = "spurious"
        if merged:
            j = min(range(len(merged)), key=lambda i: abs(merged[i][0] - re))
            if abs(merged[j][0] - re) <= tol * (1.0 + abs(merged[j][0])):
                status = "matched"
                hit[j] = True
        if status == "spurious":
            spurious += 1
        found_entries.append(
            {
                "re": re,
                "im": r.eigenvalue.imag,
                "mismatch": r.mismatch_magnitude,
                "status": status,
            }
        )

    analytic_entries = []
    missing = 0
    for (val, req), ok in zip(merged, hit):
        if not ok:
            missing += 1
        analytic_entries.append(
            {"value": val, "required": req, "status": "found" if ok else "missing"}
        )
    matched = sum(1 for e in found_entries if e["status"] == "matched")
    passed = spurious == 0 and all(ok or not req for (_, req), ok in zip(merged, hit))
    return Report(found_entries, analytic_entries, matched, spurious, missing, passed)


def ho_reference(alpha: float, omega: float, lo: float, hi: float):
    """Oscillator energies in [lo, hi]; all required.  (values, required)."""
    values = []
    n = 0
    while True:
        done = True
        for q in (1, -1):
            e = omega * (4 * n + 2 - 2 * q * alpha)
            if e <= hi:
                done = False
                if e >= lo:
                    values.append(e)
        if done:
            break
        n += 1
    values.sort()
    return values, [True] * len(values)


def morse_reference(D: float, omega: float, lo: float, hi: float):
    """Morse levels in [lo, hi]; plus-family required, minus informational."""
    t = D / (2.0 * omega)
    values: list[tuple[float, bool]] = []
    m_cap = int((math.sqrt(max(hi, 0.0)) + abs(t)) / 2.0) + 2
    for m in range(m_cap + 1):
        for sign_req, root in ((True, 2 * m + 1 - t), (False, 2 * m + 1 + t)):
            eps = root * root
            if lo <= eps <= hi:
                values.append((eps, sign_req))
    values.sort()
    return [v for v, _ in values], [r for _, r in values]


def run_verification(
    p: ProblemSpec, cfg: ShootingConfig, tol: float
) -> tuple[Report, list[ShootingResult]]:
    """Shoot, compare against the closed-form levels, and report."""
    lo, hi, _ = cfg.grid
    if p.equation == HO_LINE:
        analytic, required = ho_reference(p.alpha, p.omega, lo, hi)
    else:
        analytic, required = morse_reference(p.D, p.omega, lo, hi)
    results = find_eigenvalues(p, cfg)
    report = verify_spectrum(analytic, results, tol, required)
    return report, results
