"""Command-line entry point.

Subcommands: solve, verify, reg, enumerate, intersect.  JSON mode is the
stable machine interface; text mode is for humans.  Exit codes: 0 success
or claim verified, 1 claim refuted, 2 usage error, 3 cap exceeded,
4 search exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus, oracle, witness
from .errors import (
    BadParams,
    CapExceeded,
    DegreeCapExceeded,
    DegreeTooSmall,
    NotSolvable,
    PermbaseError,
    SearchExhausted,
)
from .groups import PermGroup, intersect_conjugates
from .oracle import Caps
from .perms import Permutation

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_EXHAUSTED = 4


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="search seed (default 0)")
    p.add_argument(
        "--budget",
        type=int,
        default=10**5,
        help="candidate budget for searches (default 1e5)",
    )
    p.add_argument(
        "--cap-order",
        type=int,
        default=10**6,
        help="group order cap for enumeration (default 1e6)",
    )
    p.add_argument(
        "--cap-index",
        type=int,
        default=10**5,
        help="coset index cap (default 1e5)",
    )
    p.add_argument(
        "--cap-iterations",
        type=int,
        default=10**8,
        help="iteration cap for exact reg counts (default 1e8)",
    )
    p.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="output format (default json)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permbase",
        description=(
            "Witnesses for trivial intersections of at most five conjugates "
            "of a solvable permutation group, with brute-force verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="construct a verified witness certificate")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ambient", choices=("symmetric", "alternating"),
                   default="symmetric")
    p.add_argument("--gens", nargs="+", required=True,
                   help="generators in cycle notation")
    _add_common(p)

    p = sub.add_parser("verify", help="re-check a certificate (file or '-')")
    p.add_argument("certificate", help="path to certificate JSON, or - for stdin")
    _add_common(p)

    p = sub.add_parser("reg", help="count regular orbits on coset-space powers")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ambient", choices=("symmetric", "alternating"),
                   default="symmetric")
    p.add_argument("--gens", nargs="+", required=True)
    p.add_argument("-m", type=int, default=5, help="tuple length, 1..5")
    p.add_argument("--mode", choices=("exact", "bound"), default="exact")
    _add_common(p)

    p = sub.add_parser("enumerate",
                       help="catalog solvable subgroups up to conjugacy")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--out", default="-", help="output path (default stdout)")
    _add_common(p)

    p = sub.add_parser("intersect",
                       help="intersection of conjugates G^x over given conjugators")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--gens", nargs="+", required=True)
    p.add_argument("--conj", nargs="+", required=True,
                   help="conjugators in cycle notation (first usually '()')")
    _add_common(p)

    return parser


def _caps(args) -> Caps:
    return Caps(
        order=args.cap_order, index=args.cap_index, iterations=args.cap_iterations
    )


def _group(args) -> PermGroup:
    return PermGroup(
        args.degree,
        [Permutation.parse(s, args.degree) for s in args.gens],
    )


def _emit(doc: dict, args, text: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(text if text is not None else repr(doc) + "\n")


def _run_solve(args) -> int:
    group = _group(args)
    cert = witness.solve(
        group,
        args.ambient,
        budget=args.budget,
        seed=args.seed,
        cap=args.cap_order,
    )
    text = (
        f"degree {cert.degree}, ambient {cert.ambient}\n"
        f"conjugators: {' '.join(cert.conjugators)}\n"
        f"trace: {' -> '.join(cert.trace)}\nverified: {cert.verified}\n"
    )
    _emit(cert.to_json_dict(), args, text)
    return EXIT_OK


def _run_verify(args) -> int:
    if args.certificate == "-":
        payload = sys.stdin.read()
    else:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            payload = fh.read()
    cert = witness.WitnessCertificate.from_json(payload)
    report = oracle.verify_certificate(cert, _caps(args))
    text = (
        f"certificate_ok: {report.certificate_ok}\n"
        f"intersection_order: {report.intersection_order}\n"
        f"caps_hit: {report.caps_hit}\nelapsed: {report.elapsed:.3f}s\n"
    )
    _emit(report.to_json_dict(), args, text)
    if report.caps_hit:
        return EXIT_CAP
    return EXIT_OK if report.certificate_ok else EXIT_REFUTED


def _run_reg(args) -> int:
    group = _group(args)
    result = oracle.reg_count(
        group,
        args.ambient,
        args.m,
        mode=args.mode,
        budget=args.budget,
        seed=args.seed,
        caps=_caps(args),
    )
    doc = {"degree": args.degree, "ambient": args.ambient}
    doc.update(result.to_json_dict())
    if result.mode == "exact":
        text = f"Reg(S, {args.m}) = {result.value}\n"
    else:
        text = f"Reg(S, {args.m}) >= {result.at_least}\n"
    _emit(doc, args, text)
    return EXIT_OK


def _run_enumerate(args) -> int:
    catalog = corpus.enumerate_solvable(args.degree)
    payload = catalog.to_json()
    if args.out == "-":
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        sys.stdout.write(
            f"wrote {len(catalog.entries)} entries to {args.out}\n"
            if args.format == "text"
            else json.dumps(
                {"degree": args.degree, "entries": len(catalog.entries),
                 "path": args.out}
            )
            + "\n"
        )
    return EXIT_OK


def _run_intersect(args) -> int:
    group = _group(args)
    conjugators = [Permutation.parse(s, args.degree) for s in args.conj]
    result = intersect_conjugates(group, conjugators, cap=args.cap_order)
    doc = {
        "degree": args.degree,
        "order": result.order(),
        "generators": [str(g) for g in result.generators] or ["()"],
    }
    text = f"order {doc['order']}, generators: {' '.join(doc['generators'])}\n"
    _emit(doc, args, text)
    return EXIT_OK


_RUNNERS = {
    "solve": _run_solve,
    "verify": _run_verify,
    "reg": _run_reg,
    "enumerate": _run_enumerate,
    "intersect": _run_intersect,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _RUNNERS[args.command](args)
    except (CapExceeded, DegreeCapExceeded) as exc:
        print(f"error: cap-exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SearchExhausted as exc:
        print(f"error: search-exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (BadParams, DegreeTooSmall, NotSolvable, PermbaseError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
