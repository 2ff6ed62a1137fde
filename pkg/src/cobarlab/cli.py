"""Command-line front end.

Subcommands: ``validate``, ``homology``, ``triangulate``, ``cobar``,
``szczarba`` and ``verify``.  Exit codes: 0 on success, 1 when a check
produces a failing verdict (its witness is printed), 2 on input errors.
The environment variable ``COBARLAB_MAX_DIM`` caps default dimensions;
explicit flags override it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import loopgroup, ssetfile, szczarba, verify
from .cobar import CobarSet, compare_models
from .cubes import ProductCubicalSet, StandardCube
from .simplicial import Simplex, fixture, simplicial_chains
from .triangulate import triangulation_map
from .chains import check_chain_map, check_quasi_iso


class InputError(Exception):
    pass


def _env_cap(default: int) -> int:
    cap = os.environ.get("COBARLAB_MAX_DIM")
    if cap is None:
        return default
    try:
        return min(default, int(cap))
    except ValueError:
        raise InputError(f"bad COBARLAB_MAX_DIM value {cap!r}")


def _load_sset(source: str):
    if os.path.exists(source):
        try:
            return ssetfile.load(source)
        except ssetfile.ParseError as exc:
            raise InputError(f"{source}: {exc}")
    try:
        return fixture(source)
    except ValueError:
        raise InputError(f"{source!r} is neither a readable file nor a known"
                         " fixture")


def _cubical_fixture(name: str):
    if name.startswith("cube") and "x" not in name:
        return StandardCube(int(name[4:]))
    if name.startswith("cube") and "x" in name:
        a, b = name[4:].split("x")
        return ProductCubicalSet(StandardCube(int(a)), StandardCube(int(b)))
    if name.startswith("cobar-"):
        return CobarSet(_load_sset(name[6:]))
    raise InputError(f"unknown cubical fixture {name!r}; use cube<n>,"
                     " cube<k>x<l>, or cobar-<sset>")


def _emit(report, json_out):
    print(report.render())
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    return 0 if report.ok else 1


def cmd_validate(args) -> int:
    sset = _load_sset(args.input)
    max_dim = args.max_dim if args.max_dim is not None else _env_cap(4)
    verdict = sset.validate_presentation(max_dim)
    if verdict.ok:
        print(f"{sset.name}: valid up to dimension {max_dim}")
        return 0
    print(f"{sset.name}: INVALID: {verdict.witness!r}")
    return 1


def cmd_homology(args) -> int:
    sset = _load_sset(args.input)
    max_dim = args.max_dim if args.max_dim is not None else _env_cap(4)
    cx = simplicial_chains(sset, max_dim)
    for n in range(max_dim + 1):
        print(f"H_{n}({sset.name}) = {cx.homology(n)}")
    return 0


def cmd_triangulate(args) -> int:
    cset = _cubical_fixture(args.fixture)
    max_dim = args.max_dim if args.max_dim is not None else _env_cap(3)
    _, _, _, tmap = triangulation_map(cset, max_dim)
    checks = [
        ("chain-map", lambda: check_chain_map(tmap)),
        ("quasi-iso", lambda: check_quasi_iso(tmap, range(max_dim))),
    ]
    report = verify.run_checks(f"triangulate-{args.fixture}", checks)
    return _emit(report, args.json_out)


def cmd_cobar(args) -> int:
    sset = _load_sset(args.input)
    max_deg = args.max_deg if args.max_deg is not None else _env_cap(3)
    _, _, _, verdicts = compare_models(sset, max_deg)
    report = verify.run_checks(
        f"cobar-{sset.name}",
        [(name, lambda v=v: v) for name, v in verdicts.items()])
    return _emit(report, args.json_out)


def _format_chain(chain) -> str:
    if not chain:
        return "0"
    parts = []
    for word, coeff in sorted(chain.items(), key=repr):
        lead = "" if coeff == 1 else "-" if coeff == -1 else f"{coeff}*"
        parts.append(f"{lead}{word!r}")
    return " + ".join(parts).replace("+ -", "- ")


def cmd_szczarba(args) -> int:
    sset = _load_sset(args.input)
    if args.simplex not in sset.gens:
        raise InputError(f"unknown generator {args.simplex!r}")
    x = Simplex((), args.simplex, sset.gens[args.simplex])
    group = loopgroup.LoopGroup(sset)
    provider = szczarba.SzProvider(group)
    if x.dim > provider.max_n + 1:
        raise InputError(
            f"no closed operator words for dimension {x.dim} (max "
            f"{provider.max_n + 1})")
    print(f"t({x!r}) = {_format_chain(szczarba.t_sz(provider, x))}")
    return 0


def cmd_verify(args) -> int:
    suites = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    status = 0
    for name in suites:
        if name not in verify.SUITES:
            raise InputError(f"unknown suite {name!r}; known: "
                             + ", ".join(sorted(verify.SUITES)))
        report = verify.run_suite(name, args.max_dim)
        status = max(status, _emit(report, args.json_out))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobarlab",
        description="exact checks for simplicial/cubical loop-space models")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check a presentation file or fixture")
    sp.add_argument("input")
    sp.add_argument("--max-dim", type=int)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("homology", help="integral homology of a presentation")
    sp.add_argument("input")
    sp.add_argument("--max-dim", type=int)
    sp.set_defaults(fn=cmd_homology)

    sp = sub.add_parser("triangulate",
                        help="triangulation checks on a cubical fixture")
    sp.add_argument("--fixture", required=True)
    sp.add_argument("--max-dim", type=int)
    sp.add_argument("--json-out")
    sp.set_defaults(fn=cmd_triangulate)

    sp = sub.add_parser("cobar", help="cobar model comparison on an input")
    sp.add_argument("input")
    sp.add_argument("--max-deg", type=int)
    sp.add_argument("--json-out")
    sp.set_defaults(fn=cmd_cobar)

    sp = sub.add_parser("szczarba",
                        help="print the operator cochain on a generator")
    sp.add_argument("input")
    sp.add_argument("--simplex", required=True)
    sp.set_defaults(fn=cmd_szczarba)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--max-dim", type=int)
    sp.add_argument("--seed", type=int, default=0,
                    help="fixes sampled checks (exhaustive ones ignore it)")
    sp.add_argument("--json-out")
    sp.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
