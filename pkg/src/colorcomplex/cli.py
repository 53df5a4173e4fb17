"""Command-line interface.

Subcommands: homology (build a complex and print its homology report),
verify (run closed-form dimension checks), chromatic (chromatic polynomial
of a hypergraph).  Exit codes: 0 success / all checks pass, 1 verification
failure, 2 usage or input error, 3 resource bound exceeded.
"""

import argparse
import sys

from .chromatic import chromatic_hypergraph
from .complexes import ComplexSpec, build_complex
from .errors import (
    DefinitionError,
    ParameterError,
    ResourceError,
    StructureError,
)
from .homology import homology_dims
from .hypergraphs import (
    Hypergraph,
    complete_uniform,
    diagonal,
    looped_complete,
    star,
    vertex_star,
)
from .jsonutil import canonical_json
from .theorems import THEOREMS, run_suite

FAMILIES = ("complete", "vertex-star", "star", "diagonal", "looped-complete")


def _add_source_args(p, with_k=True):
    p.add_argument("--family", choices=FAMILIES, help="built-in hypergraph family")
    p.add_argument("--n", type=int, help="number of vertices")
    if with_k:
        p.add_argument("--k", type=int, help="edge size for uniform families")
    p.add_argument(
        "--covered",
        type=int,
        help="for --family star: highest covered vertex (default n)",
    )
    p.add_argument(
        "--center", type=int, default=1, help="for --family vertex-star (default 1)"
    )
    p.add_argument("--file", help="hypergraph JSON file ('-' for stdin)")


def _load_hypergraph(args):
    if args.file is not None and args.family is not None:
        raise ParameterError("give either --family or --file, not both")
    if args.file is not None:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        return Hypergraph.from_json_text(text)
    if args.family is None:
        raise ParameterError("a hypergraph source is required: --family or --file")
    if args.n is None:
        raise ParameterError("--family needs --n")
    k = getattr(args, "k", None)
    if args.family == "complete":
        if k is None:
            raise ParameterError("--family complete needs --k")
        return complete_uniform(args.n, k)
    if args.family == "vertex-star":
        if k is None:
            raise ParameterError("--family vertex-star needs --k")
        return vertex_star(args.n, k, center=args.center)
    if args.family == "star":
        if k is None:
            raise ParameterError("--family star needs --k")
        return star(args.n, k, covered=args.covered)
    if args.family == "diagonal":
        if k is None:
            raise ParameterError("--family diagonal needs --k")
        return diagonal(args.n, k)
    return looped_complete(args.n)


def _parse_vertex_set(text):
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ParameterError(f"bad vertex set {text!r}; expected like '2,3'")


def _make_spec(args):
    kind = args.complex
    if kind == "full-cyclic":
        if args.n is None:
            raise ParameterError("--complex full-cyclic needs --n")
        return ComplexSpec.full_cyclic(args.n)
    if kind == "restricted":
        if args.n is None:
            raise ParameterError("--complex restricted needs --n")
        if not args.forbidden:
            raise ParameterError("--complex restricted needs at least one --forbidden")
        forbidden = [_parse_vertex_set(t) for t in args.forbidden]
        required = _parse_vertex_set(args.required) if args.required else None
        return ComplexSpec.restricted(args.n, forbidden, required=required)
    h = _load_hypergraph(args)
    if kind == "lambda":
        return ComplexSpec.lambda_(h)
    if kind == "delta":
        return ComplexSpec.delta(h)
    return ComplexSpec.delta_complement(h)


def _parse_degree_range(text, n):
    lo, hi = -1, n - 2
    if text:
        parts = text.split(":")
        try:
            if len(parts) == 1:
                lo = hi = int(parts[0])
            elif len(parts) == 2:
                lo = int(parts[0]) if parts[0] else lo
                hi = int(parts[1]) if parts[1] else hi
            else:
                raise ValueError
        except ValueError:
            raise ParameterError(f"bad degree range {text!r}; expected 'LO:HI'")
    return lo, hi


def cmd_homology(args):
    if args.n is not None and args.n > args.max_n:
        raise ResourceError(f"n={args.n} exceeds the ceiling --max-n {args.max_n}")
    spec = _make_spec(args)
    if spec.n > args.max_n:
        raise ResourceError(f"n={spec.n} exceeds the ceiling --max-n {args.max_n}")
    cx = build_complex(spec)
    if args.dump_complex:
        text = cx.dump()
        if args.dump_complex == "-":
            sys.stdout.write(text)
        else:
            with open(args.dump_complex, "w") as f:
                f.write(text)
    report = homology_dims(
        cx, method=args.method, prime=args.prime, jobs=args.jobs
    )
    lo, hi = _parse_degree_range(args.degrees, spec.n)
    shown = [d for d in report.degrees if lo <= d.r <= hi]
    if args.format == "json":
        out = report.to_json_dict()
        out["degrees"] = [d.to_json_dict() for d in shown]
        print(canonical_json(out))
    else:
        print(f"complex {spec.describe()}")
        if report.method == "modular":
            print(
                f"method modular prime {report.prime} "
                "(dims are upper bounds, not certified)"
            )
        print(f"{'r':>3}  {'basis':>7}  {'rank_down':>9}  {'rank_up':>7}  {'h':>7}")
        for d in shown:
            print(
                f"{d.r:>3}  {d.basis:>7}  {d.rank_down:>9}  {d.rank_up:>7}  {d.h:>7}"
            )
        print(f"euler {report.euler}")
    return 0


def cmd_verify(args):
    if args.all:
        theorems = None
        instance = None
    elif args.theorem:
        theorems = [args.theorem]
        instance = {}
        for key in ("n", "k", "l"):
            val = getattr(args, key)
            if val is not None:
                instance[key] = val
        if not instance:
            instance = None
        else:
            missing = [
                k for k in THEOREMS[args.theorem].param_keys if k not in instance
            ]
            if missing:
                raise ParameterError(
                    f"--theorem {args.theorem} with explicit parameters needs "
                    f"--{' --'.join(missing)} as well"
                )
    else:
        raise ParameterError("verify needs --all or --theorem ID")
    report = run_suite(
        theorems=theorems, max_n=args.max_n, jobs=args.jobs, instance=instance
    )
    if args.format == "json":
        print(report.to_json_text())
    else:
        print(report.table())
    return 0 if report.ok else 1


def cmd_chromatic(args):
    h = _load_hypergraph(args)
    poly = chromatic_hypergraph(h, method=args.method)
    if args.format == "json":
        print(canonical_json(poly.to_json_dict()))
    else:
        print(f"coeffs {list(poly.coeffs)}")
        for x in args.eval or ():
            print(f"chi({x}) = {poly.evaluate(x)}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="colorcomplex",
        description="Exact homology of coloring complexes of uniform hypergraphs",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("homology", help="compute homology of one complex")
    _add_source_args(p)
    p.add_argument(
        "--complex",
        choices=("lambda", "delta", "delta-complement", "full-cyclic", "restricted"),
        default="delta",
        help="complex kind (default delta)",
    )
    p.add_argument(
        "--forbidden",
        action="append",
        help="restricted kind: vertex set like '2,3'; repeatable",
    )
    p.add_argument("--required", help="restricted kind: vertex set like '1,4'")
    p.add_argument("--method", choices=("exact", "modular"), default="exact")
    p.add_argument("--prime", type=int, help="prime for --method modular")
    p.add_argument("--jobs", type=int, default=1, help="parallel rank computations")
    p.add_argument("--degrees", help="restrict printed degrees, 'LO:HI' or 'R'")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument(
        "--max-n", type=int, default=16, help="resource ceiling on n (default 16)"
    )
    p.add_argument(
        "--dump-complex",
        metavar="PATH",
        help="also write the basis/boundary dump ('-' for stdout)",
    )
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", help="check closed-form dimension claims")
    p.add_argument("--all", action="store_true", help="run every registered check")
    p.add_argument(
        "--theorem",
        choices=tuple(THEOREMS),
        help="run one registered check id",
    )
    p.add_argument("--n", type=int, help="explicit instance parameter")
    p.add_argument("--k", type=int, help="explicit instance parameter")
    p.add_argument("--l", type=int, help="explicit instance parameter")
    p.add_argument(
        "--max-n", type=int, default=6, help="bound for default grids (default 6)"
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a hypergraph")
    _add_source_args(p)
    p.add_argument(
        "--method",
        choices=("auto", "inclusion-exclusion", "partitions", "interpolation"),
        default="auto",
    )
    p.add_argument(
        "--eval",
        type=int,
        action="append",
        help="also evaluate at this integer; repeatable",
    )
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_chromatic)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParameterError, StructureError, DefinitionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
