"""Command-line front end emitting JSON, CSV, or text for the toolkit.

Exit codes: 0 success, 1 usage error, 2 verification failed, 3 numerical
failure.  Floats are printed with 15 significant digits so identical
invocations produce byte-identical output.
"""

import argparse
import json
import math
import sys

from .contour import build_C, build_generalized, build_line, map_to_r, sample, x_from_r
from .errors import DomainError, NonConvergenceError, PoleError, StepFailureError
from .spectra import (
    decompose_coupling,
    family_energy,
    find_degeneracies,
    ho_levels,
    spectrum,
)
from .verifier import ProblemSpec, ShootingConfig, run_verification
from .wavefun import BoundState, bound_wavefunction, morse_wavefunction, normalize_at

VERSION = "0.1.0"

ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["command", "params", "data", "version"],
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "version": {"type": "string"},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["problem", "config", "found", "analytic", "summary"],
    "properties": {
        "problem": {"type": "object"},
        "config": {"type": "object"},
        "found": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["re", "im", "mismatch", "status"],
                "properties": {
                    "re": {"type": "number"},
                    "im": {"type": "number"},
                    "mismatch": {"type": "number"},
                    "status": {"type": "string", "enum": ["matched", "spurious"]},
                },
            },
        },
        "analytic": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["value", "required", "status"],
                "properties": {
                    "value": {"type": "number"},
                    "required": {"type": "boolean"},
                    "status": {"type": "string", "enum": ["found", "missing"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["matched", "spurious", "missing", "pass"],
            "properties": {
                "matched": {"type": "integer"},
                "spurious": {"type": "integer"},
                "missing": {"type": "integer"},
                "pass": {"type": "boolean"},
            },
        },
    },
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.15g" % v
    if v is None:
        return ""
    return str(v)


def _round15(obj):
    """Clamp every float to 15 significant digits for stable JSON output."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float("%.15g" % obj)
    if isinstance(obj, dict):
        return {k: _round15(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round15(v) for v in obj]
    return obj


def _sign_char(sign: str) -> str:
    return "+" if sign == "plus" else "-"


def _parse_window(text: str) -> tuple[float, float]:
    try:
        lo_s, hi_s = text.split(":")
        return float(lo_s), float(hi_s)
    except ValueError:
        raise _UsageError("window must look like 'lo:hi', got %r" % text)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ptmorse", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--omega", type=float, default=1.0)
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--output", default="-")

    sp = sub.add_parser("spectrum", help="lowest Morse levels with family tags")
    sp.add_argument("--coupling", type=float, required=True)
    sp.add_argument("--levels", type=int, default=10)
    common(sp)

    sp = sub.add_parser("families", help="coupling-ratio decomposition and families")
    sp.add_argument("--coupling", type=float, required=True)
    sp.add_argument("--levels", type=int, default=8)
    common(sp)

    sp = sub.add_parser("crossings", help="exact level degeneracies")
    sp.add_argument("--coupling", type=float, required=True)
    sp.add_argument("--max-m", type=int, default=50)
    common(sp)

    sp = sub.add_parser("table", help="label ordering columns over a coupling-ratio range")
    sp.add_argument("--ratio-min", type=float, default=1.0)
    sp.add_argument("--ratio-max", type=float, default=8.0)
    sp.add_argument("--ratio-step", type=float, default=1.0)
    sp.add_argument("--levels", type=int, default=10)
    common(sp)

    sp = sub.add_parser("ho-spectrum", help="lowest oscillator levels")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--levels", type=int, default=10)
    common(sp)

    sp = sub.add_parser("wavefunction", help="sample a bound state along its path")
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--q", type=int, choices=(1, -1), default=-1)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--depth", type=float, default=1.0)
    sp.add_argument("--samples", type=int, default=201)
    sp.add_argument("--clip", type=float, default=1e-3)
    sp.add_argument("--picture", choices=("morse", "ho"), default="morse")
    sp.add_argument("--half-width", type=float, default=6.0)
    common(sp)

    sp = sub.add_parser("contour", help="sample an integration path and its image")
    sp.add_argument("--kind", choices=("bent", "generalized", "line"), default="bent")
    sp.add_argument("--depth", type=float, default=1.0)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--samples", type=int, default=201)
    sp.add_argument("--clip", type=float, default=1e-3)
    sp.add_argument("--half-width", type=float, default=8.0)
    common(sp)

    sp = sub.add_parser("verify", help="shooting eigenvalues vs the closed forms")
    sp.add_argument("--equation", choices=("ho", "morse"), required=True)
    sp.add_argument("--alpha", type=float)
    sp.add_argument("--coupling", type=float)
    sp.add_argument("--depth", type=float, default=1.0)
    sp.add_argument("--window", type=str, required=True)
    sp.add_argument("--grid-count", type=int, default=0)
    sp.add_argument("--tolerance", type=float, default=1e-6)
    sp.add_argument("--step-tolerance", type=float, default=1e-10)
    sp.add_argument("--cap", type=float, default=70.0)
    sp.add_argument("--contour", choices=("bent", "generalized"), default="bent")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--l", type=int, default=1)
    common(sp)

    return parser


def _cmd_spectrum(ns):
    levels = spectrum(ns.coupling, ns.omega, ns.levels)
    params = {"coupling": ns.coupling, "omega": ns.omega, "levels": ns.levels}
    data = [
        {
            "m": s.m,
            "sign": _sign_char(s.sign),
            "epsilon": s.epsilon,
            "family": s.family,
            "k": s.family_index,
        }
        for s in levels
    ]
    header = ["m", "sign", "epsilon", "family", "k"]
    rows = [[s.m, _sign_char(s.sign), s.epsilon, s.family, s.family_index] for s in levels]
    text = ["m sign epsilon family k"] + [
        " ".join(_fmt(x) for x in row) for row in rows
    ]
    return params, data, header, rows, text, 0


def _cmd_families(ns):
    dec = decompose_coupling(ns.coupling, ns.omega)
    params = {"coupling": ns.coupling, "omega": ns.omega, "levels": ns.levels}
    fams = {}
    rows = []
    if not dec.degenerate:
        for name in ("finite_plus", "infinite_plus", "minus"):
            k_hi = min(ns.levels, dec.M) if name == "finite_plus" else ns.levels
            entries = []
            for k in range(k_hi):
                eps, m = family_energy(name, k, dec, ns.omega)
                entries.append({"k": k, "m": m, "epsilon": eps})
                rows.append([name, k, m, eps])
            fams[name] = entries
    data = {
        "M": dec.M,
        "sigma": dec.sigma,
        "t": dec.t,
        "degenerate": dec.degenerate,
        "families": fams if not dec.degenerate else None,
    }
    header = ["family", "k", "m", "epsilon"]
    text = [
        "M=%s sigma=%s t=%s degenerate=%s"
        % (_fmt(dec.M), _fmt(dec.sigma), _fmt(dec.t), _fmt(dec.degenerate))
    ] + [" ".join(_fmt(x) for x in row) for row in rows]
    return params, data, header, rows, text, 0


def _cmd_crossings(ns):
    pairs = find_degeneracies(ns.coupling, ns.omega, ns.max_m)
    params = {"coupling": ns.coupling, "omega": ns.omega, "max_m": ns.max_m}
    data = [
        {
            "epsilon": p.epsilon,
            "levels": [
                {"m": p.level_a[0], "sign": _sign_char(p.level_a[1])},
                {"m": p.level_b[0], "sign": _sign_char(p.level_b[1])},
            ],
        }
        for p in pairs
    ]
    header = ["epsilon", "m_a", "sign_a", "m_b", "sign_b"]
    rows = [
        [p.epsilon, p.level_a[0], _sign_char(p.level_a[1]), p.level_b[0], _sign_char(p.level_b[1])]
        for p in pairs
    ]
    text = (["no crossings"] if not pairs else []) + [
        " ".join(_fmt(x) for x in row) for row in rows
    ]
    return params, data, header, rows, text, 0


def _tie_groups(levels):
    groups = []
    for s in levels:
        label = "%s%d" % (_sign_char(s.sign), s.m)
        if groups and abs(s.epsilon - groups[-1]["epsilon"]) <= 1e-12 * (1.0 + abs(s.epsilon)):
            groups[-1]["labels"].append(label)
        else:
            groups.append({"epsilon": s.epsilon, "labels": [label]})
    return groups


def _cmd_table(ns):
    if ns.ratio_step <= 0:
        raise DomainError("ratio-step must be positive, got %s" % ns.ratio_step)
    ratios = []
    r = ns.ratio_min
    while r <= ns.ratio_max + 1e-12:
        ratios.append(r)
        r += ns.ratio_step
    params = {
        "ratio_min": ns.ratio_min,
        "ratio_max": ns.ratio_max,
        "ratio_step": ns.ratio_step,
        "omega": ns.omega,
        "levels": ns.levels,
    }
    data = []
    rows = []
    text = []
    for ratio in ratios:
        levels = spectrum(4.0 * ns.omega * ratio, ns.omega, ns.levels)
        groups = _tie_groups(levels)
        data.append({"ratio": ratio, "groups": groups})
        cells = " ".join("[%s]" % " ".join(g["labels"]) for g in groups)
        text.append("D/4w=%s: %s" % (_fmt(ratio), cells))
        for rank, g in enumerate(groups):
            rows.append([ratio, rank, g["epsilon"], "|".join(g["labels"])])
    header = ["ratio", "rank", "epsilon", "labels"]
    return params, data, header, rows, text, 0


def _cmd_ho_spectrum(ns):
    levels = ho_levels(ns.alpha, ns.omega, ns.levels)
    params = {"alpha": ns.alpha, "omega": ns.omega, "levels": ns.levels}
    data = [{"n": s.n, "q": s.q, "energy": s.energy} for s in levels]
    header = ["n", "q", "energy"]
    rows = [[s.n, s.q, s.energy] for s in levels]
    text = ["n q energy"] + [" ".join(_fmt(x) for x in row) for row in rows]
    return params, data, header, rows, text, 0


def _cmd_wavefunction(ns):
    state = BoundState(ns.n, ns.q, ns.alpha, ns.omega)
    params = {
        "n": ns.n,
        "q": ns.q,
        "alpha": ns.alpha,
        "omega": ns.omega,
        "depth": ns.depth,
        "samples": ns.samples,
        "picture": ns.picture,
    }
    state = normalize_at(state, complex(0.0, -ns.depth))
    rows = []
    if ns.picture == "morse":
        path = build_C(ns.depth)
        for pt in sample(path, ns.samples, ns.clip):
            phi = morse_wavefunction(state, pt.x)
            rows.append([pt.parameter, pt.x.real, pt.x.imag, phi.real, phi.imag, abs(phi)])
    else:
        path = build_line(ns.depth, ns.half_width)
        for pt in sample(path, ns.samples):
            psi = bound_wavefunction(state, pt.x)
            rows.append([pt.parameter, pt.x.real, pt.x.imag, psi.real, psi.imag, abs(psi)])
    header = ["param", "re_x", "im_x", "re_phi", "im_phi", "abs_phi"]
    data = [dict(zip(header, row)) for row in rows]
    text = [" ".join(header)] + [" ".join(_fmt(x) for x in row) for row in rows]
    return params, data, header, rows, text, 0


def _cmd_contour(ns):
    if ns.kind == "bent":
        path = build_C(ns.depth)
    elif ns.kind == "generalized":
        path = build_generalized(ns.k, ns.l, ns.depth)
    else:
        path = build_line(ns.depth, ns.half_width)
    params = {
        "kind": ns.kind,
        "depth": ns.depth,
        "k": ns.k,
        "l": ns.l,
        "samples": ns.samples,
    }
    rows = []
    for pt in sample(path, ns.samples, ns.clip):
        if ns.kind == "line":
            r = pt.x
            x = x_from_r(r)
        else:
            x = pt.x
            r = map_to_r(x)
        rows.append([pt.parameter, x.real, x.imag, r.real, r.imag])
    header = ["param", "re_x", "im_x", "re_r", "im_r"]
    data = [dict(zip(header, row)) for row in rows]
    text = [" ".join(header)] + [" ".join(_fmt(x) for x in row) for row in rows]
    return params, data, header, rows, text, 0


def _cmd_verify(ns):
    lo, hi = _parse_window(ns.window)
    count = ns.grid_count
    if count <= 0:
        count = max(41, int(math.ceil((hi - lo) / 0.25)) + 1)
    if ns.equation == "ho":
        if ns.alpha is None:
            raise _UsageError("verify --equation ho requires --alpha")
        problem = ProblemSpec(
            "ho_line", ns.omega, build_line(ns.depth), alpha=ns.alpha,
            decay_exponent_cap=ns.cap,
        )
    else:
        if ns.coupling is None:
            raise _UsageError("verify --equation morse requires --coupling")
        if ns.contour == "generalized":
            path = build_generalized(ns.k, ns.l, ns.depth)
        else:
            path = build_C(ns.depth)
        problem = ProblemSpec(
            "morse_contour", ns.omega, path, D=ns.coupling, decay_exponent_cap=ns.cap
        )
    cfg = ShootingConfig(grid=(lo, hi, count), step_tolerance=ns.step_tolerance)
    report, _ = run_verification(problem, cfg, ns.tolerance)
    params = {
        "equation": ns.equation,
        "omega": ns.omega,
        "alpha": ns.alpha,
        "coupling": ns.coupling,
        "depth": ns.depth,
        "window": [lo, hi],
        "tolerance": ns.tolerance,
    }
    problem_desc = {
        "equation": problem.equation,
        "omega": ns.omega,
        "alpha": ns.alpha,
        "coupling": ns.coupling,
        "contour": {"kind": problem.contour.kind, "c": ns.depth, "k": ns.k, "l": ns.l},
        "decay_exponent_cap": ns.cap,
    }
    config_desc = {
        "grid": [lo, hi, count],
        "match_parameter": cfg.match_parameter,
        "step_tolerance": cfg.step_tolerance,
        "refine_tolerance": cfg.refine_tolerance,
        "max_refinements": cfg.max_refinements,
        "imag_tolerance": cfg.imag_tolerance,
        "tolerance": ns.tolerance,
    }
    data = report.to_dict(problem=problem_desc, config=config_desc)
    header = ["re", "im", "mismatch", "status"]
    rows = [[e["re"], e["im"], e["mismatch"], e["status"]] for e in report.found]
    text = [
        "pass=%s matched=%d spurious=%d missing=%d"
        % (_fmt(report.passed), report.matched, report.spurious, report.missing)
    ]
    for e in report.found:
        text.append(
            "found %s %s mismatch=%s %s"
            % (_fmt(e["re"]), _fmt(e["im"]), _fmt(e["mismatch"]), e["status"])
        )
    for e in report.analytic:
        text.append(
            "analytic %s required=%s %s"
            % (_fmt(e["value"]), _fmt(e["required"]), e["status"])
        )
    return params, data, header, rows, text, 0 if report.passed else 2


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "families": _cmd_families,
    "crossings": _cmd_crossings,
    "table": _cmd_table,
    "ho-spectrum": _cmd_ho_spectrum,
    "wavefunction": _cmd_wavefunction,
    "contour": _cmd_contour,
    "verify": _cmd_verify,
}


def _render(ns, params, data, header, rows, text) -> str:
    if ns.format == "json":
        payload = {
            "command": ns.command,
            "params": _round15(params),
            "data": _round15(data),
            "version": VERSION,
        }
        return json.dumps(payload, indent=2) + "\n"
    if ns.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(x) for x in row) for row in rows]
        return "\n".join(lines) + "\n"
    return "\n".join(text) + "\n"


def run(argv=None) -> int:
    """Parse argv, dispatch, and write the chosen format; returns the exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print("ptmorse: error: %s" % exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        params, data, header, rows, text, code = _COMMANDS[ns.command](ns)
    except _UsageError as exc:
        print("ptmorse: error: %s" % exc, file=sys.stderr)
        return 1
    except DomainError as exc:
        print("ptmorse: error: %s" % exc, file=sys.stderr)
        return 1
    except (PoleError, NonConvergenceError, StepFailureError, OverflowError) as exc:
        print("ptmorse: numerical failure: %s" % exc, file=sys.stderr)
        return 3
    out = _render(ns, params, data, header, rows, text)
    if ns.output == "-":
        sys.stdout.write(out)
    else:
        with open(ns.output, "w") as fh:
            fh.write(out)
    return code


def main() -> None:
    sys.exit(run())
