"""Acceptance suite: every numbered criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with pytest -s or in the -v
summary through the test outcome).  Run via `pytest tests/test_acceptance.py`.
"""

import math

import numpy as np
import pytest

from ptmorse.contour import build_C, build_line, map_to_r, sample
from ptmorse.spectra import (
    decompose_coupling,
    family_energy,
    find_degeneracies,
    ho_energy,
    morse_energy,
    spectrum,
)
from ptmorse.verifier import (
    ProblemSpec,
    ShootingConfig,
    find_eigenvalues,
    morse_reference,
    run_verification,
)
from ptmorse.wavefun import (
    BoundState,
    GeneralSolutionParams,
    bound_wavefunction,
    general_solution,
    morse_wavefunction,
    ode_residual,
)
from test_specfun import binom_general, horner_1f1_terminating

from ptmorse.specfun import complex_power, kummer_1f1, laguerre


def report(num, label, ok):
    print("ACCEPTANCE %2d %-38s %s" % (num, label, "PASS" if ok else "FAIL"))
    assert ok, "criterion %d (%s) failed" % (num, label)


def ho_problem(alpha, c=1.0):
    return ProblemSpec("ho_line", 1.0, build_line(c), alpha=alpha)


def morse_problem(D, c=1.0):
    return ProblemSpec("morse_contour", 1.0, build_C(c), D=D)


def grid_for(lo, hi):
    return (lo, hi, max(41, int(math.ceil((hi - lo) / 0.25)) + 1))


def test_c01_ho_shooting_vs_closed_form():
    ok = True
    for alpha in (0.5, 0.7, 1.3):
        cfg = ShootingConfig(grid=grid_for(0.0, 14.0))
        report_, results = run_verification(ho_problem(alpha), cfg, 1e-6)
        ok = ok and report_.passed
        for r in results:
            if r.converged:
                ok = ok and abs(r.eigenvalue.imag) < 1e-6
    report(1, "HO shooting vs closed form", ok)


MORSE_COUPLINGS = (0.0, 2.0, 4.0, 5.0, 6.0)


def _morse_run(D, c):
    cfg = ShootingConfig(grid=grid_for(0.0, 40.0))
    return run_verification(morse_problem(D, c), cfg, 1e-6)


def test_c02_morse_shooting_vs_level_formula():
    ok = True
    for D in MORSE_COUPLINGS:
        rep, _ = _morse_run(D, 1.0)
        ok = ok and rep.passed
        informational = [
            (e["value"], e["status"]) for e in rep.analytic if not e["required"]
        ]
        print("   D=%g minus-family status: %s" % (D, informational))
    report(2, "Morse shooting vs level formula", ok)


def test_c03_contour_depth_invariance():
    ok = True
    base = {}
    for D in MORSE_COUPLINGS:
        rep, results = _morse_run(D, 1.0)
        base[D] = [r.eigenvalue.real for r in results if r.converged]
        ok = ok and rep.passed
    for c in (0.5, 2.0):
        for D in MORSE_COUPLINGS:
            rep, results = _morse_run(D, c)
            ok = ok and rep.passed
            for r in results:
                if not r.converged:
                    continue
                val = r.eigenvalue.real
                nearest = min(base[D], key=lambda b: abs(b - val))
                ok = ok and abs(val - nearest) <= 1e-6 * (1.0 + abs(nearest))
    report(3, "contour-depth invariance", ok)


def test_c04_family_formula_equivalence():
    rng = np.random.default_rng(101)
    ok = True
    checked = 0
    while checked < 1000:
        D = float(rng.uniform(1e-3, 40.0))
        omega = float(rng.uniform(0.1, 5.0))
        dec = decompose_coupling(D, omega)
        if dec.degenerate or min(dec.sigma, 1.0 - dec.sigma) < 1e-9:
            continue
        for k in range(dec.M):
            eps, m = family_energy("finite_plus", k, dec, omega)
            want = morse_energy(m, "plus", D, omega)
            ok = ok and abs(eps - want) <= 1e-12 * (1.0 + abs(want))
        for k in range(8):
            eps, m = family_energy("infinite_plus", k, dec, omega)
            want = morse_energy(m, "plus", D, omega)
            ok = ok and abs(eps - want) <= 1e-12 * (1.0 + abs(want))
            eps, m = family_energy("minus", k, dec, omega)
            want = morse_energy(m, "minus", D, omega)
            ok = ok and abs(eps - want) <= 1e-12 * (1.0 + abs(want))
        checked += 1
    report(4, "family/formula equivalence (1000 draws)", ok)


def brute_force_pairs(t, max_m):
    labels = [(m, s) for m in range(max_m + 1) for s in ("plus", "minus")]
    vals = {lab: morse_energy(lab[0], lab[1], 2.0 * t, 1.0) for lab in labels}
    found = set()
    for i, la in enumerate(labels):
        for lb in labels[i + 1 :]:
            if abs(vals[la] - vals[lb]) <= 1e-9 * (1 + abs(vals[la]) + abs(vals[lb])):
                found.add(frozenset((la, lb)))
    return found


def test_c05_degeneracy_law():
    ok = True
    max_m = 50
    for t in range(1, 11):
        got = brute_force_pairs(float(t), max_m)
        want = set()
        for m in range(max_m + 1):
            for mp in range(max_m + 1):
                if m != mp and m + mp + 1 == t:
                    want.add(frozenset(((m, "plus"), (mp, "plus"))))
                if m - mp == t:
                    want.add(frozenset(((m, "plus"), (mp, "minus"))))
        ok = ok and got == want
        lib = {
            frozenset((p.level_a, p.level_b))
            for p in find_degeneracies(2.0 * t, 1.0, max_m)
        }
        ok = ok and lib == want
    rng = np.random.default_rng(102)
    tested = 0
    while tested < 100:
        t = float(rng.uniform(0.05, 12.0))
        if abs(t - round(t)) < 1e-3:
            continue
        ok = ok and not brute_force_pairs(t, max_m)
        tested += 1
    report(5, "degeneracy law (brute force)", ok)


def test_c06_duality_identity():
    rng = np.random.default_rng(103)
    ok = True
    for _ in range(100):
        alpha = float(rng.uniform(0.4, 4.0))
        omega = float(rng.uniform(0.1, 5.0))
        for q in (1, -1):
            for n in range(31):
                got = morse_energy(n, "plus", ho_energy(n, q, alpha, omega), omega)
                ok = ok and abs(got - alpha * alpha) <= 1e-12 * alpha * alpha
    report(6, "duality identity", ok)


def test_c07_exact_solution_residuals():
    rng = np.random.default_rng(104)
    ok = True
    prob_line = ho_problem(0.8)
    b = BoundState(2, -1, 0.8, 1.0)
    gen = GeneralSolutionParams(4.3, 0.8, 1.0, c1=0.7 - 0.2j, c2=1.1 + 0.4j)
    for _ in range(100):
        r = complex(rng.uniform(-3.0, 3.0), -1.0)
        res_b = ode_residual(prob_line, lambda z: bound_wavefunction(b, z), b.energy, r)
        res_g = ode_residual(prob_line, lambda z: general_solution(gen, z), gen.energy, r)
        ok = ok and res_b < 1e-6 and res_g < 1e-6
    prob_morse = ProblemSpec("morse_contour", 1.0, build_C(1.0), D=b.energy)
    pts = sample(build_C(1.0), 100, clip=0.25)
    for pt in pts:
        res_m = ode_residual(
            prob_morse, lambda x: morse_wavefunction(b, x), b.alpha**2, pt.x
        )
        ok = ok and res_m < 1e-6
    report(7, "exact-solution residuals", ok)


def test_c08_contour_map_identity():
    ok = True
    for c in (0.5, 1.0, 2.0):
        for pt in sample(build_C(c), 10000, clip=0.01):
            r = map_to_r(pt.x)
            ok = ok and abs(r.imag + c) <= 1e-12
            ok = ok and abs(r.real - c * math.tan(pt.parameter)) <= 1e-12
    report(8, "contour map identity", ok)


def test_c09_special_function_suite():
    ok = True
    # terminating series against the Horner oracle
    for n in range(21):
        for a in (0.1, 0.7, 1.5, 2.2, 3.0):
            for z in (0.9, -3.0, 1.1 + 0.6j):
                got = kummer_1f1(-n, a, z)
                want = horner_1f1_terminating(n, a, z)
                ok = ok and abs(got - want) <= 1e-12 * max(abs(want), 1e-290)
    # Laguerre against Kummer
    rng = np.random.default_rng(105)
    for _ in range(80):
        n = int(rng.integers(0, 16))
        a = float(rng.uniform(-0.9, 3.0))
        z = complex(rng.uniform(-7, 7), rng.uniform(-7, 7))
        if abs(z) > 10:
            continue
        lhs = laguerre(n, a, z)
        rhs = binom_general(a, n) * kummer_1f1(-n, a + 1.0, z)
        ok = ok and abs(lhs - rhs) <= 1e-10 * max(abs(rhs), 1e-280)
    # Kummer transformation
    import cmath

    done = 0
    while done < 60:
        a = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        bpar = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        if abs(bpar.imag) < 0.05 and bpar.real < 0.5:
            continue
        z = complex(rng.uniform(-8, 8), rng.uniform(-5, 5))
        if abs(z) > 10:
            continue
        lhs = cmath.exp(z) * kummer_1f1(a, bpar, -z)
        rhs = kummer_1f1(bpar - a, bpar, z)
        ok = ok and abs(lhs - rhs) <= 1e-9 * abs(rhs)
        done += 1
    report(9, "special-function suite", ok)


def test_c10_sqrt_ladder_equidistance():
    ok = True
    for ratio in (1.0, 3.0, 5.0):
        levels = spectrum(4.0 * ratio, 1.0, 12)
        for s in levels:
            half = math.sqrt(s.epsilon) / 2.0
            ok = ok and abs(half - (math.floor(half) + 0.5)) <= 1e-12
    report(10, "sqrt-ladder equidistance", ok)
