"""Command-line front end. JSON on stdout is the machine contract.

Exit codes: 0 success, 1 failed verification, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from fractions import Fraction
from typing import Sequence

from . import arthur as ar
from . import cocycles as cc
from . import exterior as ex
from . import partitions as pt
from . import polyfock as pf
from . import verify as vf
from . import vz
from .gaussian import GaussianRational


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _partition(text: str) -> pt.Partition:
    try:
        return pt.Partition.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {err}")


def _intlist(text: str) -> list[int]:
    text = text.strip().strip("[]")
    return [int(x) for x in text.split(",")] if text else []


def _ambient(args) -> pf.Ambient:
    return pf.Ambient(args.p, args.q, args.n)


def _poly_json(P: pf.SparsePoly) -> dict:
    return {"text": pf.to_text(P), "json": pf.to_json(P)}


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"--{what} is not valid JSON: {err}")


# handlers

def cmd_partition(args):
    lam = args.parts
    out = {"partition": list(lam), "conjugate": list(lam.conjugate()), "size": lam.size(), "length": lam.length()}
    if args.n is not None:
        out["schur_dim"] = pt.schur_dim(lam, args.n)
    if args.m is not None:
        out["so_harmonic_dim"] = pt.so_harmonic_dim(lam, args.m)
    return out


def cmd_lr(args):
    value = pt.lr_coefficient(args.lam, args.mu, args.nu)
    return {"lam": list(args.lam), "mu": list(args.mu), "nu": list(args.nu), "lr_coefficient": value,
            "method": "skew LR tableau enumeration"}


def cmd_branch(args):
    out = {"mu": list(args.mu)}
    if args.nu is not None:
        out["nu"] = list(args.nu)
        out["multiplicity"] = pt.littlewood_so_multiplicity(args.mu, args.nu)
    if args.p is not None:
        pred = vf.littlewood_prediction(args.mu, args.p)
        out["p"] = args.p
        out["decomposition"] = [{"highest_weight": [Fraction(x, 2).numerator for x in wt], "multiplicity": c}
                                for wt, c in sorted(pred.items(), reverse=True)]
        if args.check:
            oracle = vf.so_decompose(vf.restricted_character(args.mu, args.p), args.p)
            out["matches_character_oracle"] = oracle == pred
            if oracle != pred:
                raise VerificationFailed(out)
    if args.nu is None and args.p is None:
        raise UsageError("give --nu and/or --p")
    return out


def cmd_cauchy(args):
    pairs = pt.cauchy_decompose(args.p, args.q, args.R)
    total = sum(pt.schur_dim(mu, args.p) * pt.schur_dim(mus, args.q) for mu, mus in pairs)
    return {"p": args.p, "q": args.q, "R": args.R,
            "pairs": [[list(mu), list(mus)] for mu, mus in pairs],
            "dimension_sum": total, "binomial": comb(args.p * args.q, args.R)}


def cmd_poly(args):
    amb = _ambient(args)
    op = args.op
    if op == "witt":
        P = pf.witt_w(args.kind, args.alpha, args.j, amb)
        return _poly_json(P)
    if op == "t":
        return _poly_json(pf.t_var(args.j, amb))
    A = pf.parse_text(args.expr, amb)
    if op == "show":
        return _poly_json(A)
    if op in ("add", "mul"):
        B = pf.parse_text(args.other, amb)
        return _poly_json(A + B if op == "add" else A * B)
    if op == "partial":
        return _poly_json(pf.partial(A, (args.alpha, args.j)))
    if op == "laplacian":
        return _poly_json(pf.laplacian(A, args.i, args.j))
    if op == "pluriharmonic":
        return {"pluriharmonic": pf.is_pluriharmonic(A)}
    if op == "sp":
        return _poly_json(pf.sp_generator(A, args.kind, args.i, args.j))
    raise UsageError(f"unknown poly operation {op}")


def cmd_harmonic_dim(args):
    amb = pf.Ambient(args.p, 0, args.n)
    dim = pf.harmonic_space_dim(amb, args.ell)
    out = {"p": args.p, "n": args.n, "ell": args.ell, "dimension": dim}
    if args.n <= args.p // 2:
        out["partition_sum"] = vf.kv_rhs(args.p, args.n, args.ell)
    return out


def cmd_minor(args):
    amb = _ambient(args)
    P = pf.minor_delta(args.k, amb)
    return {**_poly_json(P), "pluriharmonic": pf.is_pluriharmonic(P)}


def cmd_cocycle(args):
    amb = _ambient(args)
    a = _intlist(args.a) if args.a else []
    if args.op == "verify":
        if any(a):
            rep = cc.verify_full(a, amb)
        else:
            rep = cc.verify_top(amb)
        norm = rep.value.evaluate_at(cc.dual_frame(amb))
        out = {"ambient": amb.to_json(), "a": list(a), "value": pf.to_text(rep.value),
               "closed_form": pf.to_text(rep.reference), "matches_closed_form": rep.matches,
               "pluriharmonic": rep.pluriharmonic, "value_at_dual_frame": str(norm)}
        if not (rep.matches and rep.pluriharmonic and norm == 1):
            raise VerificationFailed(out)
        return out
    if args.op == "top":
        return _poly_json(cc.km_value_on_vz(amb))
    if args.op == "fm":
        return _poly_json(cc.fm_highest_weight_value(a, amb))
    if args.op == "ktype":
        lam = pt.Partition.parse(args.lam or "")
        kt = cc.vz_ktype_weight(amb.n, amb.q, lam, amb.p)
        return {"weight": list(kt.weight), "det_twist": str(kt.det_twist)}
    raise UsageError(f"unknown cocycle operation {args.op}")


def cmd_euler(args):
    e = ex.euler_form((args.p, args.q))
    if args.power != 1:
        e = e.power(args.power)
    return {"p": args.p, "q": args.q, "power": args.power, "zero": e.is_zero(),
            "terms": len(e.terms), "multivector": e.to_json()}


def _levi(args) -> vz.LeviDatum:
    if not args.levi:
        raise UsageError("--levi is required")
    return vz.LeviDatum.from_json(_load_json(args.levi, "levi"))


def cmd_vz(args):
    if args.op == "rootcount":
        lev = _levi(args)
        return {"levi": lev.to_json(), "p": lev.p, "q": lev.q, "R": vz.dim_u_cap_p(lev),
                "two_rho_u_cap_p": [list(x) for x in vz.two_rho_u_cap_p(lev)]}
    if args.op == "low-degree":
        levis = vz.low_degree_levis(args.R, args.p, args.q)
        return {"R": args.R, "p": args.p, "q": args.q,
                "levis": [{**l.to_json(), "label": l.label(), "shape": vz.shape_of(l)} for l in levis]}
    if args.op == "cohomology":
        params = {k: getattr(args, k) for k in ("n", "q", "r", "sign") if getattr(args, k) is not None}
        table = vz.cohomology_degrees(args.family, **params)
        return {"family": args.family, "params": params,
                "degrees": {str(k): v for k, v in sorted(table.items())}}
    raise UsageError(f"unknown vz operation {args.op}")


def _param(args) -> ar.ArchArthurParameter:
    if args.param:
        return ar.ArchArthurParameter.from_json(_load_json(args.param, "param"))
    if args.levi:
        return ar.aj_parameter(_levi(args))
    raise UsageError("give --param or --levi")


def cmd_arthur(args):
    if args.op == "aj-param":
        psi = ar.aj_parameter(_levi(args))
        return {**psi.to_json(), "N": psi.N, "valid": psi.is_valid()}
    if args.op == "infchar":
        psi = _param(args)
        ic = ar.infinitesimal_character(psi)
        return {"parameter": psi.to_json(), "infinitesimal_character": ic.to_json(), "regular": ic.is_regular()}
    if args.op == "exponents":
        psi = _param(args)
        exps = ar.exponents(psi, reading=args.reading)
        return {"parameter": psi.to_json(), "exponents": [str(x) for x in exps], "reading": args.reading}
    if args.op == "predicates":
        psi = _param(args) if (args.param or args.levi) else None
        rep = ar.predicates(psi, n=args.n, p=args.p, q=args.q, r=args.r, m=args.m)
        return rep.to_json()
    raise UsageError(f"unknown arthur operation {args.op}")


def cmd_verify(args):
    if not args.all and not args.criterion:
        raise UsageError("give --all or --criterion N")
    selected = None if args.all else args.criterion
    results = vf.run_all(selected)
    out = {"results": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    if args.format == "text":
        out["lines"] = [r.line() for r in results]
    if not out["passed"]:
        raise VerificationFailed(out)
    return out


# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artifact", description=__doc__)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    # also accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def sig(sp, n=True, q_default=0):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, default=q_default)
        if n:
            sp.add_argument("--n", type=int, default=1)

    sp = sub.add_parser("partition", help="conjugate, size and dimensions")
    sp.add_argument("--parts", type=_partition, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lam_{mu,nu}")
    for name in ("lam", "mu", "nu"):
        sp.add_argument(f"--{name}", type=_partition, required=True)
    sp.set_defaults(func=cmd_lr)

    sp = sub.add_parser("branch", help="GL to SO branching multiplicities")
    sp.add_argument("--mu", type=_partition, required=True)
    sp.add_argument("--nu", type=_partition)
    sp.add_argument("--p", type=int)
    sp.add_argument("--check", action="store_true", help="compare with the character oracle")
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("cauchy", help="pairs (mu, mu*) in the p x q box")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--R", type=int, required=True)
    sp.set_defaults(func=cmd_cauchy)

    sp = sub.add_parser("poly", help="polynomial operations")
    sp.add_argument("op", choices=("show", "add", "mul", "partial", "laplacian", "pluriharmonic", "witt", "t", "sp"))
    sig(sp)
    sp.add_argument("--expr", default="0")
    sp.add_argument("--other", default="0")
    sp.add_argument("--kind", default="w''")
    sp.add_argument("--alpha", type=int, default=1)
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--j", type=int, default=1)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("harmonic-dim", help="dimension of degree-ell pluriharmonics")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--ell", type=int, required=True)
    sp.set_defaults(func=cmd_harmonic_dim)

    sp = sub.add_parser("minor", help="leading principal minor of W''")
    sig(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_minor)

    sp = sub.add_parser("cocycle", help="cocycle values and their closed forms")
    sp.add_argument("op", choices=("verify", "top", "fm", "ktype"))
    sig(sp, q_default=1)
    sp.add_argument("--a", help="fundamental weight coefficients, e.g. 1,0")
    sp.add_argument("--lam", help="partition for ktype")
    sp.set_defaults(func=cmd_cocycle)

    sp = sub.add_parser("euler", help="Euler form e_q and its powers")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--power", type=int, default=1)
    sp.set_defaults(func=cmd_euler)

    sp = sub.add_parser("vz", help="theta-stable parabolic bookkeeping")
    sp.add_argument("op", choices=("rootcount", "low-degree", "cohomology"))
    sp.add_argument("--levi")
    sp.add_argument("--R", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--sign", type=int)
    sp.add_argument("--family", choices=vz.FAMILIES)
    sp.set_defaults(func=cmd_vz)

    sp = sub.add_parser("arthur", help="archimedean Arthur parameter calculus")
    sp.add_argument("op", choices=("infchar", "exponents", "predicates", "aj-param"))
    sp.add_argument("--param")
    sp.add_argument("--levi")
    sp.add_argument("--reading", choices=("multiplicity", "scaled"), default="multiplicity")
    for name in ("n", "p", "q", "r", "m"):
        sp.add_argument(f"--{name}", type=int)
    sp.set_defaults(func=cmd_arthur)

    sp = sub.add_parser("verify", help="run the identity suites")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--criterion", type=int, action="append")
    sp.set_defaults(func=cmd_verify)
    return parser


def _emit(payload, fmt: str, stream):
    if fmt == "text" and isinstance(payload, dict) and "lines" in payload:
        stream.write("\n".join(payload["lines"]) + "\n")
        return
    if fmt == "text" and isinstance(payload, dict):
        for k, v in payload.items():
            stream.write(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True)}\n")
        return
    stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = args.func(args)
    except VerificationFailed as err:
        _emit(err.payload, args.format, stdout)
        return 1
    except (UsageError, ValueError, KeyError, TypeError) as err:
        stderr.write(f"error: {err}\n")
        return 2
    _emit(payload, args.format, stdout)
    return 0


def main():
    sys.exit(run())
