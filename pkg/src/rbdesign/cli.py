"""Command-line interface.

Verbs: generate, evaluate, search, robustness, isomorphic, autorder,
sylvester-check, dual, catalog, export.  Design arguments are catalog names
(e.g. gamma-rc-8, theta-8) or paths to files in the plain-text format.
Randomized verbs take a seed (defaulted and echoed), so identical argv
yields identical bytes out.  Exit codes: 0 success/true, 1 false,
2 parse/usage error, 3 disconnected design, 4 wrong shape or invalid design.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .core import (
    DisconnectedDesignError,
    InvalidDesignError,
    ParseError,
    ResolvableDesign,
    ShapeMismatchError,
    dual,
    read_design,
    resolution,
    validate,
    write_design,
)
from .efficiency import (
    REPORTED_SEARCH_BOUND_R8,
    a_value_float,
    average_variance,
    efficiency_spectrum,
    robustness,
    round_decimal,
    square_lattice_bound,
)
from .families import catalog, catalog_entry, delta_design, gamma_design, is_semi_latin
from .isomorphism import (
    are_isomorphic,
    automorphism_order,
    is_sylvester_design,
)
from .search import SearchConfig, anneal
from .sylvester import sylvester_graph

EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_SHAPE = 4


def _duration(text: str) -> float:
    """Seconds, accepting a trailing 's' (e.g. '60' or '60s')."""
    return float(text.rstrip("s"))


def _load_design(spec: str) -> ResolvableDesign:
    """Catalog name first, then file path."""
    try:
        return catalog_entry(spec).design
    except KeyError:
        pass
    if not os.path.exists(spec):
        raise ParseError(f"{spec!r} is neither a catalog name nor an existing file")
    with open(spec) as fh:
        design = read_design(fh.read())
    violations = validate(design)
    if violations:
        raise InvalidDesignError(violations)
    return design


def _emit(pairs: list[tuple[str, str]], fmt: str, out) -> None:
    if fmt == "kv":
        for key, val in pairs:
            print(f"{key}: {val}", file=out)
    elif fmt == "csv":
        print(",".join(k for k, _ in pairs), file=out)
        print(",".join(v for _, v in pairs), file=out)
    else:  # table
        width = max(len(k) for k, _ in pairs)
        for key, val in pairs:
            print(f"{key.ljust(width)}  {val}", file=out)


def _cmd_generate(args, out) -> int:
    ctor = {"gamma": gamma_design, "delta": delta_design}[args.family]
    design = ctor(args.r, args.variant)
    text = write_design(design)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _spectrum_lines(design, precision: int) -> list[tuple[str, str]]:
    spec = efficiency_spectrum(design)
    pairs: list[tuple[str, str]] = []
    pairs.append(("connected", "yes" if spec.connected else "no"))
    if not spec.connected:
        pairs.append(("zero-multiplicity", str(spec.zero_multiplicity)))
        return pairs
    a = spec.a_value
    assert a is not None
    pairs.append(("A-exact", f"{a.numerator}/{a.denominator}"))
    pairs.append(("A-decimal", round_decimal(a, precision)))
    pairs.append(("A-float-oracle", f"{a_value_float(design):.12f}"))
    for f in spec.factors:
        if isinstance(f.value, Fraction):
            shown = f"{f.value.numerator}/{f.value.denominator}"
        else:
            shown = f"{f.value:.12g} (non-exact)"
        pairs.append((f"factor x{f.multiplicity}", shown))
    return pairs


def _cmd_evaluate(args, out) -> int:
    design = _load_design(args.design)
    pairs = [("design", design.label or args.design),
             ("v", str(design.v)), ("k", str(design.k)), ("r", str(design.r))]
    pairs += _spectrum_lines(design, args.precision)
    spec = efficiency_spectrum(design)
    if spec.connected and spec.a_value is not None:
        pairs.append(("avg-variance(sigma2=1)",
                      f"{average_variance(spec.a_value, design.r):.6f}"))
        if design.v == 36 and design.k == 6 and 2 <= design.r <= 7:
            bound = square_lattice_bound(6, design.r)
            pairs.append(("square-lattice-bound", round_decimal(bound, args.precision)))
        if design.v == 36 and design.k == 6 and design.r == 8:
            pairs.append(("reported-search-bound", f"{REPORTED_SEARCH_BOUND_R8}"))
    _emit(pairs, args.format, out)
    if not spec.connected:
        return EXIT_DISCONNECTED
    return 0


def _cmd_search(args, out) -> int:
    config = SearchConfig(
        v=args.v, k=args.k, r=args.r,
        initial_temperature=args.t0, cooling_rate=args.cooling,
        moves_per_temperature=args.moves, min_temperature=args.tmin,
        restarts=args.restarts, seed=args.seed,
        time_budget=args.budget, workers=args.workers,
    )
    result = anneal(config)
    pairs = [
        ("seed", str(args.seed)),
        ("restarts", str(args.restarts)),
        ("A-exact", f"{result.a_exact.numerator}/{result.a_exact.denominator}"),
        ("A-decimal", round_decimal(result.a_exact, args.precision)),
        ("A-float", f"{result.a_float:.12f}"),
        ("objective", f"{result.objective:.9f}"),
        ("winning-restart", str(result.restart_index)),
        ("evaluations", str(result.evaluations)),
        ("budget-exhausted", "yes" if result.budget_exhausted else "no"),
    ]
    _emit(pairs, args.format, out)
    # wall-clock time is not part of the deterministic output contract
    print(f"elapsed: {result.elapsed_seconds:.2f}s", file=sys.stderr)
    text = write_design(result.design)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(result.trace_csv())
    return 0


def _cmd_robustness(args, out) -> int:
    design = _load_design(args.design)
    report = robustness(design)
    pairs = [("design", design.label or args.design), ("r", str(design.r))]
    for i, a in enumerate(report.per_replicate, start=1):
        shown = "disconnected" if a is None else round_decimal(a, args.precision)
        pairs.append((f"without-replicate-{i}", shown))
    pairs.append(("worst", "undefined" if report.worst is None
                  else round_decimal(report.worst, args.precision)))
    pairs.append(("average", "undefined" if report.average is None
                  else round_decimal(report.average, args.precision)))
    _emit(pairs, args.format, out)
    return 0


def _cmd_isomorphic(args, out) -> int:
    d1, d2 = _load_design(args.design_a), _load_design(args.design_b)
    shape1 = (d1.v, d1.k, d1.r)
    shape2 = (d2.v, d2.k, d2.r)
    if shape1 != shape2:
        print(f"not isomorphic: shapes differ {shape1} vs {shape2}", file=out)
        return EXIT_FALSE
    iso = are_isomorphic(d1, d2)
    print("isomorphic" if iso else "not isomorphic", file=out)
    return 0 if iso else EXIT_FALSE


def _cmd_autorder(args, out) -> int:
    design = _load_design(args.design)
    print(automorphism_order(design), file=out)
    return 0


def _cmd_sylvester_check(args, out) -> int:
    design = _load_design(args.design)
    witness = is_sylvester_design(design)
    if witness is None:
        print("not a Sylvester design", file=out)
        return EXIT_FALSE
    print("Sylvester design", file=out)
    if args.witness:
        print("witness: " + " ".join(str(x) for x in witness.permutation), file=out)
    return 0


def _cmd_dual(args, out) -> int:
    design = _load_design(args.design)
    bd = dual(design)
    grouping = resolution(bd)
    print(f"# {bd.label}", file=out)
    print(f"# varieties: {bd.v}, blocks: {len(bd.blocks)}, block size: {bd.block_size()}", file=out)
    sls = is_semi_latin(bd) if design.v == 36 and design.k == 6 else None
    print(f"# semi-latin: {'yes' if sls else 'no'}", file=out)
    if grouping is None:
        print("# resolvable: no (blocks listed flat)", file=out)
        for block in bd.blocks:
            print(" ".join(str(x) for x in block), file=out)
    else:
        print("# resolvable: yes", file=out)
        for gi, cls in enumerate(grouping):
            if gi:
                print(file=out)
            for block in cls:
                print(" ".join(str(x) for x in block), file=out)
    return 0


def _cmd_catalog(args, out) -> int:
    from .efficiency import a_value

    for entry in catalog():
        d = entry.design
        line = f"{entry.name}  v={d.v} k={d.k} r={d.r}"
        if args.evaluate:
            line += f"  A={round_decimal(a_value(d), args.precision)}"
        line += f"  [{entry.provenance}]"
        print(line, file=out)
    return 0


def _cmd_export(args, out) -> int:
    if args.what == "sylvester-edges":
        for u, v in sylvester_graph().edge_list():
            print(f"{u} {v}", file=out)
        return 0
    # concurrence matrix of a design
    from .core import concurrence_matrix

    if not args.design:
        raise ParseError("export concurrence needs a design argument")
    design = _load_design(args.design)
    lam = concurrence_matrix(design)
    for row in lam.tolist():
        print(" ".join(str(x) for x in row), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbdesign",
        description="Resolvable incomplete-block designs: construction, exact "
                    "A-criterion evaluation, annealing search, and isomorphism analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, precision_default=4):
        p.add_argument("--format", choices=("kv", "table", "csv"), default="table")
        p.add_argument("--precision", type=int, default=precision_default,
                       help="decimal places for reported values")

    p = sub.add_parser("generate", help="construct a family design")
    p.add_argument("--family", choices=("gamma", "delta"), required=True)
    p.add_argument("--variant", choices=("plain", "R", "C", "RC"), default="plain")
    p.add_argument("--r", type=int, required=True, dest="r")
    p.add_argument("--out", help="write design text to a file instead of stdout")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("evaluate", help="exact A, spectrum, connectivity")
    p.add_argument("design", help="catalog name or design file")
    add_common(p)
    p.set_defaults(func=_cmd_evaluate)

    defaults = SearchConfig()
    p = sub.add_parser("search", help="simulated-annealing design search")
    p.add_argument("--v", type=int, default=defaults.v)
    p.add_argument("--k", type=int, default=defaults.k)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--restarts", type=int, default=defaults.restarts)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--budget", type=_duration, default=None,
                   help="time budget in seconds (e.g. 60 or 60s)")
    p.add_argument("--workers", type=int, default=defaults.workers)
    p.add_argument("--t0", type=float, default=defaults.initial_temperature,
                   help="initial temperature")
    p.add_argument("--cooling", type=float, default=defaults.cooling_rate)
    p.add_argument("--moves", type=int, default=defaults.moves_per_temperature,
                   help="moves per temperature")
    p.add_argument("--tmin", type=float, default=defaults.min_temperature)
    p.add_argument("--out", help="write the best design to a file")
    p.add_argument("--trace", help="write the objective trace as CSV")
    add_common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("robustness", help="A after every single-replicate loss")
    p.add_argument("design")
    add_common(p)
    p.set_defaults(func=_cmd_robustness)

    p = sub.add_parser("isomorphic", help="design isomorphism (exit 0 iff yes)")
    p.add_argument("design_a")
    p.add_argument("design_b")
    p.set_defaults(func=_cmd_isomorphic)

    p = sub.add_parser("autorder", help="automorphism group order")
    p.add_argument("design")
    p.set_defaults(func=_cmd_autorder)

    p = sub.add_parser("sylvester-check", help="Sylvester-design predicate (exit 0 iff yes)")
    p.add_argument("design")
    p.add_argument("--witness", action="store_true", help="print the witness permutation")
    p.set_defaults(func=_cmd_sylvester_check)

    p = sub.add_parser("dual", help="interchange blocks and varieties")
    p.add_argument("design")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("catalog", help="list the named designs")
    p.add_argument("--evaluate", action="store_true", help="include A values")
    p.add_argument("--precision", type=int, default=4)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("export", help="export graph/matrix data")
    p.add_argument("what", choices=("sylvester-edges", "concurrence"))
    p.add_argument("design", nargs="?", help="design (for concurrence)")
    p.set_defaults(func=_cmd_export)

    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedDesignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (ShapeMismatchError, InvalidDesignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE


def main() -> None:
    sys.exit(run())
