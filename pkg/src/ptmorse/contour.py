"""Complex integration paths and the exponential map between planes.

Three path kinds: the shifted line r = s - ic in the radial plane, the
down-bent curve C(c) given by x(v) = v - i ln(c / cos v) on v in
(-pi/2, pi/2), and the generalized curves C(-k, l, c) whose two
logarithmic branches (odd k, l) are joined by a straight segment at height
ln c.  The map r = -i exp(ix) carries C(c) exactly onto the shifted line.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Contour",
    "PathPoint",
    "build_C",
    "build_generalized",
    "build_line",
    "map_to_r",
    "sample",
]

SHIFTED_LINE = "shifted_line"
BENT_C = "bent_C"
GENERALIZED_C = "generalized_C"

DEFAULT_CLIP = 1e-3
_HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class PathPoint:
    """A sampled path point: parameter, position, and d(position)/d(parameter).

    The position lives in the path's own plane: x for the bent and
    generalized curves, r for the shifted line.
    """

    parameter: float
    x: complex
    dx: complex


@dataclass(frozen=True)
class Contour:
    kind: str
    c: float
    k: int = 1
    l: int = 1
    half_width: float = 8.0  # sampling window for the shifted line

    @property
    def domain(self) -> tuple[float, float]:
        """Open parameter interval (closed for the shifted line)."""
        if self.kind == SHIFTED_LINE:
            return (-self.half_width, self.half_width)
        return (-self.k * _HALF_PI, self.l * _HALF_PI)

    @property
    def joiner(self) -> tuple[float, float]:
        """Parameter range of the straight segment (empty for C(c))."""
        return (-(self.k - 1) * _HALF_PI, (self.l - 1) * _HALF_PI)

    def height(self, v: float) -> float:
        """u(v) such that the position is v - i u(v) (bent/generalized only)."""
        jl, jr = self.joiner
        if jl <= v <= jr:
            return math.log(self.c)
        return math.log(self.c / abs(math.cos(v)))

    def position(self, v: float) -> complex:
        if self.kind == SHIFTED_LINE:
            return complex(v, -self.c)
        return complex(v, -self.height(v))

    def velocity(self, v: float) -> complex:
        if self.kind == SHIFTED_LINE:
            return 1.0 + 0.0j
        jl, jr = self.joiner
        if jl <= v <= jr:
            return 1.0 + 0.0j
        return complex(1.0, -math.tan(v))


def build_C(c: float) -> Contour:
    """The bent curve C(c): x(v) = v - i ln(c / cos v), x'(v) = 1 - i tan v."""
    if not c > 0:
        raise DomainError("contour depth c must be positive, got %s" % c)
    return Contour(BENT_C, float(c))


def build_generalized(k: int, l: int, c: float) -> Contour:
    """C(-k, l, c): two log branches joined by a straight segment.

    The branches span v in (-k pi/2, -(k-1) pi/2) and ((l-1) pi/2, l pi/2);
    the joiner runs between them at the constant height ln c, which matches
    both branch endpoints since |cos| = 1 there.  k = l = 1 reduces to C(c).
    """
    if not c > 0:
        raise DomainError("contour depth c must be positive, got %s" % c)
    for name, val in (("k", k), ("l", l)):
        if val < 1 or val % 2 == 0:
            raise DomainError("%s must be a positive odd integer, got %s" % (name, val))
    return Contour(GENERALIZED_C, float(c), int(k), int(l))


def build_line(c: float, half_width: float = 8.0) -> Contour:
    """The shifted line r = s - ic with a finite sampling window |s| <= half_width."""
    if not c > 0:
        raise DomainError("line depth c must be positive, got %s" % c)
    if not half_width > 0:
        raise DomainError("half_width must be positive, got %s" % half_width)
    return Contour(SHIFTED_LINE, float(c), half_width=float(half_width))


def map_to_r(x: complex) -> complex:
    """The plane map r = -i exp(ix)."""
    return -1j * cmath.exp(1j * complex(x))


def x_from_r(r: complex) -> complex:
    """Inverse of map_to_r landing in the principal strip Re x in (-pi/2, pi/2]."""
    if r == 0:
        raise DomainError("r = 0 has no preimage under the exponential map")
    w = 1j * complex(r)  # exp(ix)
    return complex(math.atan2(w.imag, w.real), -math.log(abs(w)))


def sample(contour: Contour, n: int, clip: float = DEFAULT_CLIP) -> list[PathPoint]:
    """n path points, parameters clipped `clip` away from log-singular ends.

    The shifted line has no singular endpoints and ignores `clip`.
    """
    if n < 2:
        raise DomainError("need at least 2 sample points, got %s" % n)
    lo, hi = contour.domain
    if contour.kind != SHIFTED_LINE:
        if not 0 < clip < (hi - lo) / 2:
            raise DomainError("clip %s incompatible with domain (%g, %g)" % (clip, lo, hi))
        lo, hi = lo + clip, hi - clip
    step = (hi - lo) / (n - 1)
    points = []
    for i in range(n):
        v = lo + i * step if i < n - 1 else hi
        points.append(PathPoint(v, contour.position(v), contour.velocity(v)))
    return points
