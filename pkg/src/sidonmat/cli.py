"""Command-line interface.

    sidonmat check    --set 1,2,3 --h 3 --k 1
    sidonmat classify --set 1,2,3 --h 3
    sidonmat matroid  --set 1,14,19,20,25,38 --h 2 rank
    sidonmat matroid  --set 1,2,3 --h 2 mu 2,1
    sidonmat maximal  --set 1,2,3,4,5,6,7 --h 2
    sidonmat verify   --gen interval:7 --h 2

Exit status: 0 affirmative/success, 1 negative answer or witnessed failure,
2 usage or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import generators, oracle, sidon
from .combinat import DEFAULT_CAP, GroundSet
from .errors import NotGeneralizedSidonError, ResourceLimitError, SidonError, UsageError
from .group import INTEGERS, AmbientGroup
from .matroid import PartitionMu, new_matroid

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_set_arg(text: str) -> List[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError(f"--set expects comma-separated integers, got {text!r}") from None


def parse_set_file(path: str) -> List[int]:
    values = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(int(line))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: not an integer: {line!r}") from None
    return values


def load_ground_set(args) -> GroundSet:
    group = AmbientGroup(args.mod) if args.mod is not None else INTEGERS
    given = [x for x in (args.set, args.file, getattr(args, "gen", None)) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --set, --file" + (", --gen" if hasattr(args, "gen") else ""))
    if args.set is not None:
        return GroundSet.of(parse_set_arg(args.set), group)
    if args.file is not None:
        try:
            return GroundSet.of(parse_set_file(args.file), group)
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e}") from None
    return generators.from_spec(args.gen, group, seed=args.seed)


def _header(X: GroundSet, args) -> dict:
    return {"command": args.command, "set": list(X.elements), "modulus": X.group.modulus, "h": args.h}


def _sets(parts) -> list:
    return [sorted(p) for p in parts]


def _fmt_set(s) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def _emit(args, payload: dict, lines: List[str]):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


# -- commands ---------------------------------------------------------------

def cmd_check(args) -> int:
    X = load_ground_set(args)
    h = args.h
    k = h if args.k is None else args.k
    if not 1 <= k <= h:
        raise UsageError(f"need 1 <= k <= h, got h={h}, k={k}")
    w = sidon.bhk_witness(X, h, k, args.cap)
    label = f"B_{h}" if k == h else f"B_{{{h},{k}}}"
    payload = _header(X, args) | {"k": k, "member": w is None, "witness": w.to_dict() if w else None}
    if w is None:
        lines = [f"{_fmt_set(X.elements)} is a {label} set in {X.group}"]
    else:
        lines = [f"{_fmt_set(X.elements)} is not a {label} set in {X.group}",
                 f"witness: {w.equation()}  (shared terms: {w.overlap} < {k})"]
    _emit(args, payload, lines)
    return EXIT_OK if w is None else EXIT_NO


def cmd_classify(args) -> int:
    X = load_ground_set(args)
    k = sidon.classify_max_k(X, args.h, args.cap)
    _emit(args, _header(X, args) | {"max_k": k},
          [f"largest k with {_fmt_set(X.elements)} in B_{{{args.h},k}}: {k}"])
    return EXIT_OK


def _matroid_oracle_only(args, X: GroundSet) -> int:
    h, g, vals = args.h, X.group, list(X.elements)
    head = _header(X, args) | {"query": args.query, "validated": False}
    if args.query in ("rank", "basis"):
        best = oracle.brute_maximal_independents(vals, h, g)[0]
        payload = head | {"rank": len(best), "basis": list(best)}
        _emit(args, payload, [f"rank {len(best)}", f"largest B_{h} subset {_fmt_set(best)}"]
              if args.query == "basis" else [str(len(best))])
        return EXIT_OK
    if args.query in ("profile", "cover"):
        rho = []
        while vals and (not rho or rho[-1] < len(vals)):
            rho.append(oracle.brute_union_rank(vals, h, len(rho) + 1, g))
        payload = head | {"rho": rho, "covering_number": len(rho)}
        _emit(args, payload, [f"rho = {rho}", f"covering number {len(rho)}"])
        return EXIT_OK
    mu = _parse_mu(args)
    ok = oracle.brute_mu_partition_exists(vals, h, mu.parts, g)
    _emit(args, head | {"mu": list(mu.parts), "exists": ok},
          [f"mu = {list(mu.parts)}: {'exists' if ok else 'no such covering'}"])
    return EXIT_OK if ok else EXIT_NO


def _parse_mu(args) -> PartitionMu:
    if not args.mu:
        raise UsageError("the mu query needs a partition, e.g. 'mu 2,1'")
    return PartitionMu(tuple(parse_set_arg(args.mu)))


def cmd_matroid(args) -> int:
    X = load_ground_set(args)
    if args.query != "mu" and args.mu:
        raise UsageError(f"unexpected argument {args.mu!r} for {args.query}")
    if args.no_validate:
        return _matroid_oracle_only(args, X)
    try:
        M = new_matroid(X, args.h, validate=True, cap=args.cap)
    except NotGeneralizedSidonError as e:
        w = e.witness
        _emit(args, _header(X, args) | {"query": args.query, "validated": False, "witness": w.to_dict()},
              [f"{_fmt_set(X.elements)} is not a B_{{{2 * args.h - 1},{args.h - 1}}} set",
               f"witness: {w.equation()}"])
        return EXIT_NO
    head = _header(X, args) | {"query": args.query, "validated": True}
    q = args.query
    if q == "rank":
        B = M.find_basis()
        _emit(args, head | {"rank": len(B), "basis": sorted(B)}, [str(len(B))])
    elif q == "basis":
        B = M.find_basis()
        _emit(args, head | {"rank": len(B), "basis": sorted(B)}, [_fmt_set(B)])
    elif q == "profile":
        p = M.rank_profile()
        _emit(args, head | {"rho": list(p.rho), "covering_number": p.covering_number},
              [f"rho = {list(p.rho)}", f"covering number {p.covering_number}"])
    elif q == "cover":
        c = M.covering_number()
        parts = M.union_partition(c) if c else []
        _emit(args, head | {"covering_number": c, "parts": _sets(parts)},
              [f"covering number {c}"] + [_fmt_set(p) for p in parts])
    else:
        mu = _parse_mu(args)
        cov = M.construct_mu_covering(mu)
        payload = head | {"mu": list(mu.parts), "exists": cov.exists, "parts": _sets(cov.parts),
                          "reason": cov.reason}
        lines = ([f"{list(mu.parts)}-covering:"] + [_fmt_set(p) for p in cov.parts]
                 if cov.exists else [f"no {list(mu.parts)}-covering: {cov.reason}"])
        _emit(args, payload, lines)
        return EXIT_OK if cov.exists else EXIT_NO
    return EXIT_OK


def cmd_maximal(args) -> int:
    X = load_ground_set(args)
    sets = oracle.brute_maximal_independents(list(X.elements), args.h, X.group)
    by_size: dict = {}
    for s in sets:
        by_size.setdefault(len(s), []).append(list(s))
    payload = _header(X, args) | {
        "by_size": {str(n): {"count": len(v), "sets": v} for n, v in sorted(by_size.items(), reverse=True)}
    }
    lines = []
    for n, v in sorted(by_size.items(), reverse=True):
        lines.append(f"size {n}: {len(v)} set(s)")
        lines.extend("  " + _fmt_set(s) for s in v)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    X = load_ground_set(args)
    if args.h < 2:
        raise UsageError("verify needs h >= 2")
    report = oracle.verify_paper(X, args.h)
    payload = _header(X, args) | report.to_dict()
    lines = [f"verify {_fmt_set(X.elements)} in {X.group}, h={args.h}"]
    for c in report.checks:
        line = f"  {c.status:<13} {c.name}"
        if c.detail:
            line += f"  ({c.detail})"
        lines.append(line)
        if c.status in ("fail", "expected-fail") and c.counterexample is not None:
            lines.append(f"                counterexample: {json.dumps(c.counterexample, sort_keys=True)}")
    lines.append("all applicable checks pass" if report.ok else "FAILED")
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--set", help="comma-separated elements, e.g. 1,2,3")
    common.add_argument("--file", help="file with one integer per line ('#' starts a comment)")
    common.add_argument("--h", type=int, required=True, help="order h")
    common.add_argument("--mod", type=int, default=None, help="work in Z/nZ instead of Z")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max multisets to materialize")
    common.add_argument("--seed", type=int, default=0, help="default seed for random generators")

    p = _Parser(prog="sidonmat", description="Sidon sets of order h and their matroids")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="B_h / B_{h,k} membership")
    c.add_argument("--k", type=int, default=None)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("classify", parents=[common], help="largest k with membership in B_{h,k}")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("matroid", parents=[common], help="matroid queries on a B_{2h-1,h-1} set")
    c.add_argument("query", choices=("rank", "basis", "profile", "cover", "mu"))
    c.add_argument("mu", nargs="?", default=None, help="partition for 'mu', e.g. 2,1")
    c.add_argument("--no-validate", action="store_true",
                   help="skip the B_{2h-1,h-1} check and answer by exhaustive search")
    c.set_defaults(func=cmd_matroid)

    c = sub.add_parser("maximal", parents=[common], help="all maximal B_h subsets")
    c.set_defaults(func=cmd_maximal)

    c = sub.add_parser("verify", parents=[common], help="run every structural check")
    c.add_argument("--gen", default=None, help="generator spec, e.g. interval:7 or powers:g=3,count=5")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.h < 1:
            raise UsageError(f"h must be >= 1, got {args.h}")
        if args.cap < 1:
            raise UsageError("--cap must be positive")
        return args.func(args)
    except (UsageError, ResourceLimitError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SidonError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
