"""Batch command-line interface: spectrum sweeps, point eigensolutions and
randomized rotor-vs-oracle verification.

Output is byte-deterministic for a fixed command line (and seed): floats are
printed in shortest round-trip form, samples are emitted in index order.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from . import models, oracle
from .models import ModelParams

__all__ = ["main", "build_parser"]


def _fmt(x: float) -> str:
    # adding 0.0 folds -0.0 into 0.0 for stable sweep output
    return repr(float(x) + 0.0)


def _sweep_energies(model: str, x: float, args) -> list[float]:
    if model == "monolayer":
        return [-x, x]
    if model == "qw":
        return sorted([x * x / 2.0 - x * args.alpha, x * x / 2.0 + x * args.alpha])
    if model == "atoms":
        # x is the coupling constant Gamma; level splitting comes from --omega
        root = math.hypot(args.omega, x)
        return sorted([-x, x, -root, root])
    return models.bilayer_spectrum(x, args.bias_u, args.gamma1)


def cmd_spectrum(args, out) -> int:
    if args.samples < 2:
        raise SystemExit2("--samples must be at least 2")
    if args.kmin > args.kmax:
        raise SystemExit2("--kmin must not exceed --kmax")
    sweep_name = "Gamma" if args.model == "atoms" else "k"
    n_bands = 4 if args.model in ("atoms", "bilayer") else 2
    rows = []
    for i in range(args.samples):
        x = args.kmin + (args.kmax - args.kmin) * i / (args.samples - 1)
        energies = [e + 0.0 for e in _sweep_energies(args.model, x, args)]
        rows.append((x + 0.0, energies))
    if args.format == "csv":
        header = sweep_name + "," + ",".join(f"E{j + 1}" for j in range(n_bands))
        out.write(header + "\n")
        for x, energies in rows:
            out.write(",".join([_fmt(x)] + [_fmt(e) for e in energies]) + "\n")
    else:
        json_rows = []
        for x, energies in rows:
            row = {sweep_name: x, "energies": energies}
            # the rotor construction is singular here, so no eigenspinors
            if abs(x) <= models.DEGENERACY_TOL:
                row["degenerate"] = True
            json_rows.append(row)
        doc = {"model": args.model, "sweep": sweep_name, "rows": json_rows}
        out.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _point_params(args) -> ModelParams:
    return ModelParams(
        model=args.model,
        kx=args.kx,
        ky=args.ky,
        alphaR=args.alpha,
        omega=args.omega,
        Gamma=args.gamma,
        gamma1=args.gamma1,
        U=args.bias_u,
        eta=args.eta,
    )


def cmd_eigens(args, out) -> int:
    params = _point_params(args)
    doc = {"model": params.model, "params": params.to_json_dict()}
    try:
        if params.model == "monolayer":
            sols = models.solve_monolayer(params.kx, params.ky)
        elif params.model == "qw":
            sols = models.solve_qw(params.kx, params.ky, params.alphaR)
        elif params.model == "atoms":
            sols = models.solve_two_atoms(params.omega, params.Gamma)
        else:
            sols = models.solve_bilayer(params)
    except ValueError as exc:
        doc["degenerate"] = True
        doc["reason"] = str(exc)
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    records = []
    for s in sols:
        rec = s.to_json_dict()
        if s.spinor is not None and params.model in ("monolayer", "qw"):
            avg = models.pseudospin_average(s.spinor)
            key = "pseudospin" if params.model == "monolayer" else "spin"
            rec[key] = [float(v) for v in avg]
        records.append(rec)
    doc["solutions"] = records
    out.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _draw_params(model: str, rng: random.Random) -> ModelParams:
    def coupling() -> float:
        return rng.uniform(0.01, 2.0)

    k = 10.0 ** rng.uniform(math.log10(0.01), math.log10(5.0))
    phi = rng.uniform(0.0, 2.0 * math.pi)
    kx, ky = k * math.cos(phi), k * math.sin(phi)
    if model == "monolayer":
        return ModelParams("monolayer", kx=kx, ky=ky)
    if model == "qw":
        return ModelParams("qw", kx=kx, ky=ky, alphaR=coupling())
    if model == "atoms":
        return ModelParams("atoms", omega=coupling(), Gamma=coupling())
    return ModelParams(
        "bilayer", kx=kx, ky=ky, gamma1=coupling(), U=coupling(),
        eta=rng.choice([1, -1]),
    )


def cmd_verify(args, out) -> int:
    if args.trials < 1:
        raise SystemExit2("--trials must be at least 1")
    rng = random.Random(args.seed)
    all_pass = True
    first_failure = None
    for model in models.MODELS:
        max_delta = 0.0
        max_residual = 0.0
        ok = True
        for _ in range(args.trials):
            report = oracle.cross_check(_draw_params(model, rng), tol=args.tol)
            max_delta = max(max_delta, report.max_delta)
            if report.residuals:
                max_residual = max(max_residual, max(report.residuals))
            if not report.passed:
                ok = False
                if first_failure is None:
                    first_failure = report
        all_pass = all_pass and ok
        out.write(
            f"model={model} trials={args.trials} max_delta={_fmt(max_delta)} "
            f"max_residual={_fmt(max_residual)} "
            f"status={'pass' if ok else 'FAIL'}\n"
        )
    if all_pass:
        out.write(
            f"verify: PASS (seed={args.seed}, trials={args.trials}, "
            f"tol={_fmt(args.tol)})\n"
        )
        return 0
    out.write("verify: FAIL; first failing report:\n")
    out.write(json.dumps(first_failure.to_json_dict(), indent=2) + "\n")
    return 1


class SystemExit2(Exception):
    """Usage error surfaced with exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotoreig",
        description="Rotor-equation quantum eigensolvers with matrix-oracle "
        "verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model(p):
        p.add_argument("--model", required=True,
                       choices=["monolayer", "qw", "atoms", "bilayer"])
        p.add_argument("--alpha", type=float, default=0.0,
                       help="Rashba coupling (qw)")
        p.add_argument("--omega", type=float, default=0.0,
                       help="level splitting (atoms)")
        p.add_argument("--gamma", type=float, default=0.0,
                       help="dipole coupling (atoms)")
        p.add_argument("--gamma1", type=float, default=0.0,
                       help="interlayer coupling (bilayer)")
        p.add_argument("--bias-u", type=float, default=0.0,
                       help="half interlayer bias U (bilayer)")
        p.add_argument("--eta", type=int, default=1, choices=[1, -1],
                       help="valley index (bilayer)")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_spec = sub.add_parser("spectrum", help="band-energy sweep (CSV or JSON)")
    add_model(p_spec)
    p_spec.add_argument("--kmin", type=float, required=True,
                        help="sweep start (Gamma start for atoms)")
    p_spec.add_argument("--kmax", type=float, required=True,
                        help="sweep end (Gamma end for atoms)")
    p_spec.add_argument("--samples", type=int, default=101)
    p_spec.add_argument("--format", choices=["csv", "json"], default="csv")
    p_spec.set_defaults(func=cmd_spectrum)

    p_eig = sub.add_parser("eigens", help="eigensolutions at one point (JSON)")
    add_model(p_eig)
    p_eig.add_argument("--kx", type=float, default=0.0)
    p_eig.add_argument("--ky", type=float, default=0.0)
    p_eig.set_defaults(func=cmd_eigens)

    p_ver = sub.add_parser("verify", help="randomized rotor-vs-oracle check")
    p_ver.add_argument("--trials", type=int, default=100)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--tol", type=float, default=1e-10)
    p_ver.add_argument("--out", default=None)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.out:
            with open(args.out, "w", newline="") as fh:
                return args.func(args, fh)
        return args.func(args, sys.stdout)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
