"""Command-line front end: build representations, run checks and studies,
simulate orbits, and write CSV/JSON reports.

Every run writes a single output file that starts with a manifest echoing the
resolved configuration (tool version, command, parameters, tolerance) and, for
CSV, `# check name=value` lines for scalar results ahead of the data table.
All computations are deterministic, so identical configurations produce
byte-identical files.  Exit codes: 0 success, 2 invalid configuration,
3 tolerance breach in a requested check.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import build_h1_rep, build_su2_rep, build_su11_rep, check_algebra_relations
from .contraction import (
    deformed_commutator_check,
    hamiltonian_identity_check,
    holstein_primakoff,
    run_contraction_study,
)
from .evolution import EvolutionParams, geometric_phase_check, spectrum_via_dft
from .operators import max_entry
from .orbits import (
    CircleDynamics,
    continuous_position,
    density_metrics,
    simulate_torus,
    thooft_system,
    touch_points,
)
from .twomode import (
    DissipativeParams,
    build_two_mode,
    casimir_interior_residual,
    dissipative_residuals,
    l2_relation_check,
    sector_decompose,
    sector_match_residual,
    sector_operators,
)

TOOL = "ladderlab"
GOLDEN_ROTATION = math.pi * (math.sqrt(5.0) - 1.0)  # 2*pi*(sqrt(5)-1)/2


@dataclass
class CommandResult:
    columns: tuple[str, ...]
    rows: list[tuple]
    checks: dict[str, object] = field(default_factory=dict)
    breaches: list[str] = field(default_factory=list)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL, description="ladder-algebra representations, contraction studies, "
        "cyclic evolution spectra, deterministic orbits, and two-mode checks"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (default: <command>.<format>)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--tolerance", type=float, default=1e-12,
                        help="breach threshold for requested checks (default 1e-12)")

    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("rep", parents=[common], help="build a representation and dump elements")
    rep.add_argument("--algebra", choices=("su2", "su11", "h1"), required=True)
    rep.add_argument("--l", type=float, help="spin label (su2)")
    rep.add_argument("--k", type=float, help="discrete-series weight (su11)")
    rep.add_argument("--dim", type=int, help="truncation cutoff (su11, h1)")
    rep.add_argument("--interior", type=int, help="states used for the relation check")

    contract = sub.add_parser("contract", parents=[common],
                              help="contraction sweeps, the k=1/2 boson mapping, identities")
    contract.add_argument("--family", choices=("su2", "su11"))
    contract.add_argument("--params", help="comma-separated sweep values, ascending")
    contract.add_argument("--n", type=int, default=3, help="ladder level for the rate fit")
    contract.add_argument("--hp", action="store_true", help="compare the k=1/2 mapping with h(1)")
    contract.add_argument("--identities", action="store_true",
                          help="deformed commutator and Hamiltonian identities")
    contract.add_argument("--dim", type=int, help="cutoff for --hp (default 64)")
    contract.add_argument("--l", type=float, help="spin label for --identities")
    contract.add_argument("--tau", type=float, default=1.0, help="time step for --identities")

    evolve = sub.add_parser("evolve", parents=[common], help="cyclic evolution spectrum and phase")
    evolve.add_argument("--N", type=int, required=True, help="number of states")
    evolve.add_argument("--tau", type=float, default=1.0, help="time step")
    evolve.add_argument("--units", choices=("energy", "omega"), default="energy")

    orbit = sub.add_parser("orbit", parents=[common], help="circle and torus orbit traces")
    orbit.add_argument("--thooft-N", dest="thooft_n", type=int,
                       help="N-site single-cover circle system")
    orbit.add_argument("--two-circle", dest="two_circle", action="store_true")
    orbit.add_argument("--torus", action="store_true")
    orbit.add_argument("--alpha", type=float, default=1.0, help="envelope frequency")
    orbit.add_argument("--curve-samples", dest="curve_samples", type=int, default=0,
                       help="samples of the underlying continuous curve")
    orbit.add_argument("--steps", type=int, default=1000)
    orbit.add_argument("--q-num", dest="q_num", type=int, help="rational ratio numerator")
    orbit.add_argument("--q-den", dest="q_den", type=int, help="rational ratio denominator")
    orbit.add_argument("--q-irr-add", dest="q_irr_add", default="0",
                       help="irrational ratio offset, e.g. 'pi/40' or a float")
    orbit.add_argument("--ratio", choices=("golden",), help="torus rotation preset")
    orbit.add_argument("--rot1", type=float, help="torus rotation per step, coordinate 1 (rad)")
    orbit.add_argument("--rot2", type=float, help="torus rotation per step, coordinate 2 (rad)")
    orbit.add_argument("--phi0", default="0,0", help="torus start angles 'phi1,phi2'")

    schwinger = sub.add_parser("schwinger", parents=[common],
                               help="two-mode realization checks and sector dumps")
    schwinger.add_argument("--nmax", type=int, required=True, help="per-mode cutoff")
    schwinger.add_argument("--check", choices=("all", "casimir", "sectors", "hamiltonian", "l2"),
                           default="all")
    schwinger.add_argument("--sector", type=float, help="sector label j for --dump")
    schwinger.add_argument("--dump", action="store_true", help="dump one sector's ladder table")
    schwinger.add_argument("--Omega", type=float, default=1.0)
    schwinger.add_argument("--Gamma", type=float, default=0.5)
    return parser


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _element_rows(ops) -> list[tuple]:
    rows = []
    for op in ops:
        for r, c in zip(*np.nonzero(op.entries)):
            v = op.entries[r, c]
            rows.append((op.label, int(r), int(c), float(v.real), float(v.imag)))
    return rows


def cmd_rep(args) -> CommandResult:
    if args.algebra == "su2":
        if args.l is None:
            raise ValueError("su2 requires --l")
        rep = build_su2_rep(args.l)
        default_interior = rep.dim
    elif args.algebra == "su11":
        if args.k is None or args.dim is None:
            raise ValueError("su11 requires --k and --dim")
        rep = build_su11_rep(args.k, args.dim)
        default_interior = rep.dim - 1
    else:
        if args.dim is None:
            raise ValueError("h1 requires --dim")
        rep = build_h1_rep(args.dim)
        default_interior = rep.dim - 1
    interior = default_interior if args.interior is None else args.interior
    residual = check_algebra_relations(rep, interior)
    result = CommandResult(
        columns=("operator", "row", "col", "re", "im"),
        rows=_element_rows([rep.L3, rep.Lplus, rep.Lminus]),
        checks={"dim": rep.dim, "interior": interior, "relations_residual": residual},
    )
    if residual > args.tolerance:
        result.breaches.append("relations_residual")
    return result


def cmd_contract(args) -> CommandResult:
    chosen = [args.family is not None, args.hp, args.identities]
    if sum(chosen) != 1:
        raise ValueError("choose exactly one of --family, --hp, --identities")

    if args.hp:
        dim = 64 if args.dim is None else args.dim
        rep = build_su11_rep(0.5, dim)
        a, adag = holstein_primakoff(rep)
        osc = build_h1_rep(dim)
        deviation = max(
            max_entry(a.entries - osc.Lminus.entries),
            max_entry(adag.entries - osc.Lplus.entries),
        )
        result = CommandResult(
            columns=("operator", "row", "col", "re", "im"),
            rows=_element_rows([a, adag]),
            checks={"hp_max_deviation": deviation},
        )
        if deviation > args.tolerance:
            result.breaches.append("hp_max_deviation")
        return result

    if args.identities:
        if args.l is None:
            raise ValueError("--identities requires --l")
        rep = build_su2_rep(args.l)
        residuals = {
            "deformed_commutator": deformed_commutator_check(rep, args.tau),
            "hamiltonian_decomposition": hamiltonian_identity_check(rep, args.tau),
        }
        result = CommandResult(
            columns=("l", "tau", "identity", "residual"),
            rows=[(args.l, args.tau, name, value) for name, value in residuals.items()],
        )
        result.breaches = [name for name, value in residuals.items() if value > args.tolerance]
        return result

    if not args.params:
        raise ValueError("--family requires --params")
    params = [float(tok) for tok in args.params.split(",") if tok.strip()]
    report = run_contraction_study(args.family, params, args.n + 1)
    rows = [
        (p, n, float(report.deviations[i, n]))
        for i, p in enumerate(report.params)
        for n in range(report.interior)
    ]
    return CommandResult(
        columns=("param", "n", "deviation"),
        rows=rows,
        checks={
            "fit_n": report.fit_n,
            "fitted_slope": report.fitted_slope,
            "fit_residual": report.fit_residual,
        },
    )


def cmd_evolve(args) -> CommandResult:
    params = EvolutionParams(args.N, args.tau)
    spectrum = spectrum_via_dft(params)
    phase = geometric_phase_check(params)
    scale = params.omega if args.units == "omega" else 1.0
    rows = [(n, float(e) / scale) for n, e in enumerate(spectrum.values)]
    result = CommandResult(
        columns=("n", "energy"),
        rows=rows,
        checks={
            "omega": params.omega,
            "phase_re": phase.real,
            "phase_im": phase.imag,
        },
    )
    if abs(phase + 1.0) > args.tolerance:
        result.breaches.append("phase")
    return result


def _parse_offset(text: str) -> float:
    t = text.strip()
    if t in ("", "0", "none"):
        return 0.0
    if t == "pi":
        return math.pi
    if t.startswith("pi/"):
        return math.pi / float(t[3:])
    if t.startswith("pi*"):
        return math.pi * float(t[3:])
    return float(t)


def _trace_rows(dynamics, trace, curve_samples: int) -> list[tuple]:
    rows = [
        ("touch", j + 1, float(trace.times[j]), float(trace.points[j, 0]),
         float(trace.points[j, 1]), float(trace.angles[j]))
        for j in range(len(trace.angles))
    ]
    if curve_samples > 0:
        times = np.linspace(0.0, float(trace.times[-1]), curve_samples)
        xs, ys = continuous_position(dynamics, times)
        rows.extend(
            ("curve", i, float(times[i]), float(xs[i]), float(ys[i]), None)
            for i in range(curve_samples)
        )
    return rows


def _min_circular_gap(angles: np.ndarray) -> float:
    ordered = np.sort(angles)
    if ordered.size < 2:
        return 2.0 * math.pi
    gaps = np.diff(ordered)
    wrap = ordered[0] + 2.0 * math.pi - ordered[-1]
    return float(min(np.min(gaps), wrap))


def cmd_orbit(args) -> CommandResult:
    chosen = [args.thooft_n is not None, args.two_circle, args.torus]
    if sum(chosen) != 1:
        raise ValueError("choose exactly one of --thooft-N, --two-circle, --torus")

    if args.torus:
        if args.ratio == "golden":
            rot1 = rot2 = GOLDEN_ROTATION
        elif args.rot1 is not None and args.rot2 is not None:
            rot1, rot2 = args.rot1, args.rot2
        else:
            raise ValueError("--torus requires --ratio golden or both --rot1 and --rot2")
        try:
            phi0 = tuple(float(tok) for tok in args.phi0.split(","))
        except ValueError as exc:
            raise ValueError(f"bad --phi0: {args.phi0!r}") from exc
        if len(phi0) != 2:
            raise ValueError("--phi0 needs two comma-separated angles")
        orbit = simulate_torus(rot1, rot2, 1.0, args.steps, phi0)
        gap1, gap2 = density_metrics(orbit)
        rows = [
            (j + 1, float(orbit.angles[j, 0]), float(orbit.angles[j, 1]))
            for j in range(orbit.steps)
        ]
        return CommandResult(
            columns=("step", "phi1", "phi2"),
            rows=rows,
            checks={"max_gap_1": gap1, "max_gap_2": gap2},
        )

    if args.thooft_n is not None:
        dynamics = thooft_system(args.thooft_n, alpha=args.alpha)
        trace = touch_points(dynamics, args.thooft_n)
    else:
        if args.q_num is None or args.q_den is None:
            raise ValueError("--two-circle requires --q-num and --q-den")
        offset = _parse_offset(args.q_irr_add)
        if offset == 0.0:
            dynamics = CircleDynamics.rational(args.alpha, args.q_num, args.q_den)
        else:
            ratio = args.q_num / args.q_den + offset
            dynamics = CircleDynamics.irrational(args.alpha, args.alpha * ratio)
        trace = touch_points(dynamics, args.steps)

    radius_error = max_entry(
        (trace.points[:, 0] ** 2 + trace.points[:, 1] ** 2 - 1.0).reshape(1, -1)
    )
    result = CommandResult(
        columns=("record", "index", "t", "x", "y", "theta"),
        rows=_trace_rows(dynamics, trace, args.curve_samples),
        checks={
            "period_steps": trace.period_steps,
            "radius_error": radius_error,
            "min_touch_gap": _min_circular_gap(trace.angles),
        },
    )
    if radius_error > args.tolerance:
        result.breaches.append("radius_error")
    return result


def cmd_schwinger(args) -> CommandResult:
    space = build_two_mode(args.nmax)

    if args.dump:
        if args.sector is None:
            raise ValueError("--dump requires --sector")
        decomp = sector_decompose(space)
        if args.sector not in decomp.sectors:
            raise ValueError(f"no sector with j = {args.sector}")
        indices = decomp.sectors[args.sector]
        ops = sector_operators(space, indices)
        return CommandResult(
            columns=("operator", "row", "col", "re", "im"),
            rows=_element_rows(ops),
            checks={
                "sector_j": args.sector,
                "sector_size": len(indices),
                "induced_k": decomp.induced_k[args.sector],
            },
        )

    selected = args.check
    checks: dict[str, object] = {}
    if selected in ("all", "casimir"):
        checks["casimir_interior"] = casimir_interior_residual(space)
    if selected in ("all", "sectors"):
        decomp = sector_decompose(space)
        comparable = [j for j, idx in decomp.sectors.items() if len(idx) >= 2]
        checks["sector_match"] = max(sector_match_residual(space, j) for j in comparable)
    if selected in ("all", "hamiltonian"):
        params = DissipativeParams(Omega=args.Omega, Gamma=args.Gamma)
        checks.update(dissipative_residuals(space, params))
    if selected in ("all", "l2"):
        res1, res2 = l2_relation_check(space, space.n_max)
        checks["l2_commutator"] = res1
        checks["l2_double_commutator"] = res2
    result = CommandResult(
        columns=("check", "residual"),
        rows=[(name, value) for name, value in checks.items()],
        checks=checks,
    )
    result.breaches = [name for name, value in checks.items() if value > args.tolerance]
    return result


COMMANDS = {
    "rep": cmd_rep,
    "contract": cmd_contract,
    "evolve": cmd_evolve,
    "orbit": cmd_orbit,
    "schwinger": cmd_schwinger,
}


def _json_safe(value):
    if value is None:
        return None
    if isinstance(value, float):
        return None if math.isnan(value) else value
    return value


def write_output(path: str, fmt: str, command: str, parameters: dict,
                 tolerance: float, result: CommandResult) -> None:
    if fmt == "csv":
        lines = [f"# {TOOL} {__version__}", f"# command={command}"]
        lines.extend(f"# param {key}={_fmt(val)}" for key, val in parameters.items())
        lines.append(f"# tolerance={_fmt(tolerance)}")
        lines.extend(f"# check {key}={_fmt(val)}" for key, val in result.checks.items())
        lines.append(",".join(result.columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in result.rows)
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "manifest": {
                "tool": TOOL,
                "version": __version__,
                "command": command,
                "parameters": {k: _json_safe(v) for k, v in parameters.items()},
                "tolerance": tolerance,
            },
            "checks": {k: _json_safe(v) for k, v in result.checks.items()},
            "rows": [
                {col: _json_safe(v) for col, v in zip(result.columns, row)}
                for row in result.rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        result = COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"{TOOL}: {exc}", file=sys.stderr)
        return 2

    out = args.out or f"{args.command}.{args.format}"
    parameters = {k: v for k, v in vars(args).items() if k not in ("command", "out")}
    parameters["out"] = out
    write_output(out, args.format, args.command, parameters, args.tolerance, result)
    print(out)
    if result.breaches:
        for name in result.breaches:
            print(f"{TOOL}: tolerance breach in check {name!r}", file=sys.stderr)
        return 3
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
