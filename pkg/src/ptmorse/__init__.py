"""Solvable-model toolkit for the PT-symmetric Morse oscillator.

Closed-form spectra and wavefunctions for the complexified oscillator pair,
the bent integration contours connecting them, and an independent shooting
eigensolver that verifies the exact results numerically.
"""

from .backend import backend_name
from .contour import (
    Contour,
    PathPoint,
    build_C,
    build_generalized,
    build_line,
    map_to_r,
    sample,
)
from .errors import (
    DomainError,
    NonConvergenceError,
    PoleError,
    StateError,
    StepFailureError,
)
from .specfun import complex_power, kummer_1f1, laguerre
from .spectra import (
    FamilyDecomposition,
    HOLevel,
    SpectralLevel,
    decompose_coupling,
    family_energy,
    find_degeneracies,
    ho_energy,
    ho_to_morse,
    morse_energy,
    spectrum,
    sqrt_ladder,
)
from .verifier import (
    ProblemSpec,
    Report,
    ShootingConfig,
    ShootingResult,
    find_eigenvalues,
    integrate_half,
    mismatch,
    run_verification,
    verify_spectrum,
)
from .wavefun import (
    BoundState,
    GeneralSolutionParams,
    bound_wavefunction,
    general_solution,
    morse_wavefunction,
    normalize_at,
    ode_residual,
)

__version__ = "0.1.0"
