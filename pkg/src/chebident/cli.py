"""Command-line front end.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import theta
from .sequences import seq_u, seq_v, seq_w
from .verify import IDENTITIES, SuiteConfig, render_json, render_text, run_suite

_IDENTITY_GROUPS = {
    "all": IDENTITIES,
    "theorem1": ("theorem1",),
    "fundamental": ("fundamental",),
    "corollary1": ("corollary1",),
    "corollary2": ("corollary2_vs_m2",),
    "lemma": ("lemma1",),
    "waring": ("waring_vs_newton",),
    "chu": ("chu_vandermonde", "pochhammer_transforms"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebident", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity grids and report pass/fail")
    verify.add_argument("identity", choices=sorted(_IDENTITY_GROUPS))
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--m-max", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--j-max", type=int, default=None)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.add_argument("--seed", type=int, default=1, help="seed for the random corpus")
    verify.add_argument(
        "--timings",
        action="store_true",
        help="emit measured per-check timings (breaks byte-for-byte determinism)",
    )
    verify.set_defaults(func=_cmd_verify)

    theta_cmd = sub.add_parser("theta", help="print one coefficient polynomial")
    theta_cmd.add_argument("--k", type=int, required=True)
    theta_cmd.add_argument("--r", type=int, required=True)
    theta_cmd.add_argument("--m", type=int, default=None)
    theta_cmd.add_argument("--source", choices=theta.SOURCES, default="general")
    theta_cmd.set_defaults(func=_cmd_theta)

    seq_cmd = sub.add_parser("seq", help="print one sequence polynomial")
    seq_cmd.add_argument("--kind", choices=("U", "V", "W"), required=True)
    seq_cmd.add_argument("--n", type=int, required=True)
    seq_cmd.set_defaults(func=_cmd_seq)

    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = SuiteConfig(
        k_max=args.k_max,
        m_max=args.m_max,
        n_max=args.n_max,
        j_max=args.j_max,
        identities=_IDENTITY_GROUPS[args.identity],
        jobs=args.jobs,
        format=args.format,
        rng_seed=args.seed,
    )
    reports, summary = run_suite(cfg)
    render = render_json if args.format == "json" else render_text
    sys.stdout.write(render(reports, summary, timings=args.timings))
    return 0 if summary["fail"] == 0 else 1


def _cmd_theta(args: argparse.Namespace) -> int:
    implied = {"m1": 1, "m2": 2, "gp": 2}
    if args.source == "general":
        if args.m is None:
            raise ValueError("--m is required with --source general")
    elif args.m is not None and args.m != implied[args.source]:
        raise ValueError(f"--source {args.source} implies m={implied[args.source]}")
    print(theta.theta_by_source(args.source, args.k, args.r, args.m).serialize())
    return 0


def _cmd_seq(args: argparse.Namespace) -> int:
    fn = {"U": seq_u, "V": seq_v, "W": seq_w}[args.kind]
    print(fn(args.n).serialize())
    return 0


def main(argv: list[str] | None = None) -> int:
    fault = os.environ.get("CHEBIDENT_THETA_FAULT")
    if fault:
        theta._set_fault_bias(int(fault))  # test-only hook
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
