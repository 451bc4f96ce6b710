"""Command line front end: jpr suite | eval | poincare | list-relations."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import ConfigError, JacobiPeriodsError, UnknownFunctionError
from .functions import (
    appell_G,
    appell_K1,
    appell_Phi,
    e21_star,
    eta,
    lerch_mu,
    mordell_h,
    theta_int,
    theta_odd,
    zwegers_R,
)
from .group import point
from .numerics import TruncationPolicy
from .relations import build_catalogue, catalogue_json
from .report import SuiteConfig, report_exit_code, run_suite

FUNCTIONS = {
    "theta_odd": (1, lambda tau, zs, pol: theta_odd(tau, zs[0], pol)),
    "theta0": (1, lambda tau, zs, pol: theta_int("theta0", tau, zs[0], pol)),
    "theta1": (1, lambda tau, zs, pol: theta_int("theta1", tau, zs[0], pol)),
    "eta": (0, lambda tau, zs, pol: eta(tau, pol)),
    "mordell_h": (1, lambda tau, zs, pol: mordell_h(tau, zs[0], pol)),
    "zwegers_R": (1, lambda tau, zs, pol: zwegers_R(tau, zs[0], pol)),
    "e21_star": (1, lambda tau, zs, pol: e21_star(tau, zs[0], 12, pol)),
    "lerch_mu": (2, lambda tau, zs, pol: lerch_mu(tau, zs[0], zs[1], pol)),
    "appell_k1": (2, lambda tau, zs, pol: appell_K1(tau, zs[0], zs[1], pol)),
    "appell_g": (2, lambda tau, zs, pol: appell_G(tau, zs[0], zs[1], pol)),
    "appell_phi": (1, lambda tau, zs, pol: appell_Phi(tau, zs[0], pol)),
}


def _parse_complex_pair(text: str) -> list[complex]:
    parts = [float(x) for x in text.split(",")]
    if len(parts) % 2:
        raise ConfigError(f"expected RE,IM pairs, got {text!r}")
    return [complex(parts[i], parts[i + 1]) for i in range(0, len(parts), 2)]


def cmd_suite(args) -> int:
    config = SuiteConfig.from_json(args.config)
    report = run_suite(config)
    payload = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        print(payload)
    summary = report["summary"]
    print(f"pass={summary['pass']} fail={summary['fail']} skipped={summary['skipped']}",
          file=sys.stderr)
    return report_exit_code(report)


def cmd_eval(args) -> int:
    if args.fn not in FUNCTIONS:
        raise UnknownFunctionError(
            f"unknown function {args.fn!r}; choices: {sorted(FUNCTIONS)}")
    arity, fn = FUNCTIONS[args.fn]
    tau = _parse_complex_pair(args.tau)[0]
    zs = _parse_complex_pair(args.z) if args.z else []
    if len(zs) < arity:
        raise ConfigError(f"{args.fn} needs {arity} elliptic argument(s)")
    pol = TruncationPolicy(abs_tol=args.tol)
    val = fn(tau, zs, pol)
    print(f"{args.fn}(tau={tau}, z={zs}) = {val!r}")
    print(f"abs_tol={pol.abs_tol} max_terms={pol.max_terms}")
    return 0


def cmd_poincare(args) -> int:
    from .automorphy import AutomorphyContext, EvalFunction
    from .functions import theta_ml
    from .group import T_ELT
    from .poincare import (
        coboundary_cocycle,
        construct_F_residual,
        eisenstein_g,
        functional_eq_residual,
        poincare_phi,
    )

    tau, z = _parse_complex_pair(args.point)
    p = point(tau, z)
    r_ctx = AutomorphyContext(2.0, 1.0)
    psi = EvalFunction(lambda q: theta_ml(1, 0, q.tau, q.z), r_ctx, label="theta_{1,0}")
    cocycle = coboundary_cocycle(psi)
    k_ctx = AutomorphyContext(float(args.k), 1.0)
    g_val = eisenstein_g(k_ctx, p, args.C, args.L)
    phi_val = poincare_phi(cocycle, k_ctx, p, args.C, args.L)
    fe = functional_eq_residual(cocycle, k_ctx, T_ELT, p, args.C, args.L)
    fr = construct_F_residual(cocycle, k_ctx, T_ELT, p, args.C, args.L)
    print(f"eisenstein g({tau}, {z}) = {g_val!r}")
    print(f"poincare Phi({tau}, {z}) = {phi_val!r}")
    print(f"functional-equation residual (gamma = inversion): {fe:.3e}")
    print(f"F = -Phi/g construction residual: {fr:.3e}")
    return 0


def cmd_list_relations(args) -> int:
    if args.json:
        print(catalogue_json())
    else:
        for rel in build_catalogue().values():
            print(f"{rel.tag:15s} {rel.description}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jpr",
                                     description="verify Jacobi-integral period relations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_suite = sub.add_parser("suite", help="run a relation suite over a point grid")
    p_suite.add_argument("--config", required=True)
    p_suite.add_argument("--out")
    p_suite.set_defaults(func=cmd_suite)

    p_eval = sub.add_parser("eval", help="evaluate a registered function at a point")
    p_eval.add_argument("--fn", required=True)
    p_eval.add_argument("--tau", required=True, help="RE,IM")
    p_eval.add_argument("--z", help="RE,IM[,RE,IM]")
    p_eval.add_argument("--tol", type=float, default=1e-12)
    p_eval.set_defaults(func=cmd_eval)

    p_poin = sub.add_parser("poincare", help="run the coset-sum construction")
    p_poin.add_argument("--k", type=int, default=20)
    p_poin.add_argument("--C", type=int, default=40)
    p_poin.add_argument("--L", type=int, default=10)
    p_poin.add_argument("--point", default="0,1,0.1,0", help="tau RE,IM, z RE,IM")
    p_poin.set_defaults(func=cmd_poincare)

    p_list = sub.add_parser("list-relations", help="print the relation catalogue")
    p_list.add_argument("--json", action="store_true")
    p_list.set_defaults(func=cmd_list_relations)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except UnknownFunctionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except JacobiPeriodsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
