"""Command-line interface: ``hamnodal <command> ...``.

JSON goes to stdout (sorted keys); ``--verbose`` tables go to stderr.
Exit codes: 0 success, 2 unsupported (open case or outside the proven range),
1 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import catalog, equitable, minimizer, nodal
from .core import GraphParams, GridFunction, load_function, save_function
from .errors import HamnodalError, Unsupported
from .spectra import eigenspace_basis, is_eigenfunction

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2


@dataclass
class CommandOutcome:
    command: str
    status: str
    payload: dict
    exit_code: int


class UsageError(Exception):
    def __init__(self, message, usage=""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


def _note(args, text: str) -> None:
    if getattr(args, "verbose", False):
        print(text, file=sys.stderr)


def _components_listing(sets) -> list[list[list[int]]]:
    return [[list(c) for c in s.coords()] for s in sets]


def _courant_block(f: GridFunction, lam) -> dict | None:
    """Courant report when lam = q*i for an index i and f is a lam-eigenfunction."""
    lam = Fraction(lam)
    q = f.params.q
    if lam.denominator != 1 or lam.numerator % q or not 0 <= lam.numerator // q <= f.params.n:
        return None
    i = lam.numerator // q
    if not is_eigenfunction(f, lam.numerator):
        return None
    return nodal.check_courant(f, i).to_json()


def cmd_construct(args) -> CommandOutcome:
    try:
        cert = catalog.construct_snd2(args.n, args.q, args.i)
    except Unsupported as exc:
        payload = {
            "n": args.n, "q": args.q, "i": args.i,
            "status": "unsupported", "reason": exc.reason,
            "provenance": {"recipe": None},
        }
        return CommandOutcome("construct", "Unsupported", payload, EXIT_UNSUPPORTED)
    if args.out:
        save_function(cert.f, args.out)
    report = nodal.check_courant(cert.f, cert.eigen_index)
    payload = {
        "n": args.n, "q": args.q, "i": args.i,
        "eigenvalue": cert.eigenvalue,
        "route": str(cert.recipe),
        "snd": cert.snd,
        "wnd": cert.wnd,
        "courant": report.to_json(),
        "provenance": {"recipe": cert.recipe.to_json()},
    }
    if args.out:
        payload["out"] = str(args.out)
    _note(args, f"H({args.n},{args.q}) i={args.i} lambda={cert.eigenvalue}: route {cert.recipe}\n"
                f"  SND={cert.snd} WND={cert.wnd}  Courant k={report.k} r={report.r} "
                f"SND slack={report.snd_slack} WND slack={report.wnd_slack}")
    return CommandOutcome("construct", "Ok", payload, EXIT_OK)


def cmd_verify(args) -> CommandOutcome:
    f = load_function(args.input)
    lam = Fraction(args.lam)
    ok = is_eigenfunction(f, lam)
    payload = {
        "n": f.params.n, "q": f.params.q,
        "lambda": str(lam if lam.denominator != 1 else lam.numerator),
        "is_eigenfunction": ok,
        "snd": nodal.snd(f) if not f.is_zero() else None,
        "wnd": nodal.wnd(f) if not f.is_zero() else None,
        "courant": _courant_block(f, lam) if ok else None,
        "provenance": {"source": str(args.input)},
    }
    _note(args, f"eigenfunction({payload['lambda']}): {ok}  SND={payload['snd']} WND={payload['wnd']}")
    return CommandOutcome("verify", "Ok", payload, EXIT_OK)


def _count_command(args, which: str) -> CommandOutcome:
    f = load_function(args.input)
    if which == "snd":
        pos, neg = nodal.strong_domains(f)
    else:
        pos, neg = nodal.weak_domains(f)
    payload = {
        "n": f.params.n, "q": f.params.q,
        which: len(pos) + len(neg),
        "positive": len(pos),
        "negative": len(neg),
        "provenance": {"source": str(args.input)},
    }
    if args.verbose:
        payload["positive_components"] = _components_listing(pos)
        payload["negative_components"] = _components_listing(neg)
        for sign, comps in (("+", pos), ("-", neg)):
            for k, comp in enumerate(comps):
                print(f"{sign}{k}: {' '.join(''.join(map(str, c)) for c in comp.coords())}", file=sys.stderr)
    return CommandOutcome(which, "Ok", payload, EXIT_OK)


def cmd_partition(args) -> CommandOutcome:
    if args.type == "a":
        if args.k is None:
            raise UsageError("--type a needs --k")
        part = equitable.type_a_partition(args.k)
        if (args.n is not None and args.n != 3 * args.k) or (args.q is not None and args.q != 2):
            raise UsageError("type A lives on H(3k, 2)")
    else:
        if args.n is None or args.q is None:
            raise UsageError(f"--type {args.type} needs --n and --q")
        params = GraphParams(args.n, args.q)
        if args.type == "b":
            part = equitable.type_b_partition(params)
        else:
            part = equitable.level_band_partition(params)
    if args.translate is not None:
        part = equitable.translate_partition(part, args.translate)
    payload = part.to_json()
    payload["provenance"] = {"type": args.type, "k": args.k, "translate": args.translate}
    _note(args, f"quotient matrix {part.quotient}, |C1|={len(part.c1)}, |C2|={len(part.c2)}")
    return CommandOutcome("partition", "Ok", payload, EXIT_OK)


def cmd_basis(args) -> CommandOutcome:
    params = GraphParams(args.n, args.q)
    basis = eigenspace_basis(params, args.i)
    payload = {
        "n": args.n, "q": args.q, "i": args.i,
        "eigenvalue": args.q * args.i,
        "basis": [b.to_json() for b in basis],
        "provenance": {"order": "coordinate subsets colex, then labels lexicographic"},
    }
    _note(args, f"{len(basis)} basis functions for eigenvalue {args.q * args.i}")
    return CommandOutcome("basis", "Ok", payload, EXIT_OK)


def cmd_search(args) -> CommandOutcome:
    cfg = minimizer.SearchConfig(
        n=args.n, q=args.q, i=args.i, mode=args.mode, coeff_range=args.range,
        samples=args.samples, local_steps=args.local_steps, seed=args.seed,
        jobs=args.jobs, stop_at=args.stop_at,
    )
    res = minimizer.search(cfg)
    payload = res.to_json()
    payload["courant"] = nodal.check_courant(res.certificate, args.i).to_json()
    _note(args, f"best SND {res.best_snd} ({res.label}) after {res.evaluations} evaluations")
    return CommandOutcome("search", "Ok", payload, EXIT_OK)


def cmd_figure5(args) -> CommandOutcome:
    entries = []
    for f in catalog.figure5_functions():
        lam = 3 * f.params.n
        entries.append({
            "function": f.to_json(),
            "eigenvalue": lam,
            "is_eigenfunction": is_eigenfunction(f, lam),
            "snd": nodal.snd(f),
            "wnd": nodal.wnd(f),
            "courant": nodal.check_courant(f, f.params.n).to_json(),
        })
        _note(args, f"H({f.params.n},3): SND={entries[-1]['snd']} WND={entries[-1]['wnd']}")
    payload = {"n": [2, 3], "q": 3, "functions": entries, "provenance": {"source": "hard-coded figure values"}}
    return CommandOutcome("figure5", "Ok", payload, EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamnodal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--verbose", "-v", action="store_true")
        return p

    p = common(sub.add_parser("construct", help="build a certified SND=2 eigenfunction"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("verify", help="check a function file against an eigenvalue"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_verify)

    for name in ("snd", "wnd"):
        p = common(sub.add_parser(name, help=f"count {'strong' if name == 'snd' else 'weak'} nodal domains"))
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=lambda a, name=name: _count_command(a, name))

    p = common(sub.add_parser("partition", help="emit an equitable 2-partition"))
    p.add_argument("--type", choices=["a", "b", "band"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--translate", type=int)
    p.set_defaults(func=cmd_partition)

    p = common(sub.add_parser("basis", help="emit the integer eigenspace basis"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = common(sub.add_parser("search", help="minimise SND within an eigenspace"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="random")
    p.add_argument("--range", type=int, default=4)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--local-steps", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stop-at", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = common(sub.add_parser("figure5", help="emit the two hard-coded 3n-eigenfunctions"))
    p.set_defaults(func=cmd_figure5)
    return parser


def run(argv=None) -> CommandOutcome:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "verbose", False):
            logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
        return args.func(args)
    except UsageError as exc:
        usage = exc.usage or parser.format_usage()
        return CommandOutcome("usage", "Invalid", {"error": str(exc), "usage": usage}, EXIT_INVALID)
    except OSError as exc:
        path = getattr(exc, "filename", None)
        return CommandOutcome("io", "Invalid", {"error": f"{path}: {exc.strerror or exc}"}, EXIT_INVALID)
    except (HamnodalError, ValueError, json.JSONDecodeError) as exc:
        return CommandOutcome("error", "Invalid", {"error": str(exc)}, EXIT_INVALID)


def main(argv=None) -> int:
    outcome = run(argv)
    if outcome.status == "Invalid":
        print(f"error: {outcome.payload['error']}", file=sys.stderr)
        if "usage" in outcome.payload:
            print(outcome.payload["usage"], file=sys.stderr, end="")
    print(json.dumps(outcome.payload, sort_keys=True))
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
