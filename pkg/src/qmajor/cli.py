"""Command line interface.

Subcommands:

* enumerate: brute-force a family and print its statistic polynomial and
  cardinality.
* closed-form: evaluate one of the closed-form generating functions.
* verify: sweep the named checks over a bounded grid and print a report;
  exits 1 if any record mismatches.
* bijection: walk one of the statistic-preserving maps over a family and
  print a trace line per element with round-trip status.

Exit codes: 0 success, 1 mismatch or failed round trip, 2 usage/config
errors (including exceeded enumeration budgets).
"""

from __future__ import annotations

import argparse
import sys

from . import bijections, formulas, paths, tableaux
from .harness import (
    BudgetExceededError,
    CHECKS,
    SweepConfig,
    render_report,
    run_sweep,
    select_checks,
)
from .paths import StepOrder
from .qseries import gf_from_exponents
from .tableaux import SkewShape, parse_partition, parse_shape

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

_CONFIG_INT_KEYS = {
    "max_n",
    "max_r",
    "max_m",
    "max_k",
    "max_cells",
    "max_hook",
    "max_partition_size",
    "max_partition_rows",
    "max_inner_size",
    "jobs",
}


def parse_config_file(path: str) -> dict:
    """Flat key = value format, '#' comments, blank lines ignored."""
    values: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key in _CONFIG_INT_KEYS:
                values[key] = int(value)
            elif key == "timing":
                values[key] = value.lower() in ("1", "true", "yes", "on")
            elif key == "checks":
                values[key] = tuple(v.strip() for v in value.split(",") if v.strip())
            elif key == "format":
                values["fmt"] = value
            elif key == "order":
                values["order"] = StepOrder.parse(value)
            else:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmajor",
        description="Exact statistics of lattice paths and tableaux, with verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, include_r=True, include_k=True):
        if include_r:
            p.add_argument("-r", type=int, default=0, help="start abscissa / inner row length")
        p.add_argument("-n", type=int, default=None, help="first row length / end abscissa")
        p.add_argument("-m", type=int, default=None, help="second row length / end ordinate")
        if include_k:
            p.add_argument("-k", type=int, default=0, help="diagonal steps / repeated values")

    enum = sub.add_parser("enumerate", help="brute-force a family")
    enum.add_argument(
        "family", choices=["schroeder", "catalan", "rinc", "inc", "syt", "rt"]
    )
    add_params(enum)
    enum.add_argument("--shape", help='skew shape such as "(4,3)/(1)"')
    enum.add_argument("--mu", help="partition for reverse tableaux")
    enum.add_argument("--bound", type=int, help="entry bound for reverse tableaux")
    enum.add_argument("--stat", choices=["maj", "amaj"], default="maj")
    enum.add_argument("--order", default="E>D>N", help='step order such as "E>D>N"')
    enum.add_argument(
        "--labelled",
        action="store_true",
        help="use the diagonal-reverse labelling for path major index",
    )
    enum.add_argument("--list", action="store_true", help="print the family elements")
    enum.add_argument("--max-n", type=int, default=6)
    enum.add_argument("--max-cells", type=int, default=12)

    closed = sub.add_parser("closed-form", help="evaluate a closed form")
    closed.add_argument(
        "formula",
        choices=[
            "schroeder-maj",
            "catalan-maj",
            "rinc-maj",
            "rinc-amaj",
            "inc-maj",
            "rinc-rect-maj",
            "two-row-maj",
            "hook-skew-maj",
            "hook-straight-maj",
            "syt-maj",
            "skew-syt-maj",
        ],
    )
    add_params(closed)
    closed.add_argument("--case", choices=list(formulas.CASES), default="EgtN")
    closed.add_argument("--lam", help="outer partition for the tableau formulas")
    closed.add_argument("--mu", help="inner partition for skew-syt-maj")
    closed.add_argument("--bound", type=int, help="entry bound for skew-syt-maj")

    verify = sub.add_parser("verify", help="run verification sweeps")
    verify.add_argument(
        "--checks",
        default="all",
        help="comma-separated check names, or 'all' (see --list-checks)",
    )
    verify.add_argument("--list-checks", action="store_true")
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--max-cells", type=int, default=None)
    verify.add_argument("--max-hook", type=int, default=None)
    verify.add_argument("--format", choices=["table", "json", "csv"], default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--order", default=None)
    verify.add_argument("--timing", action="store_true")
    verify.add_argument("--config", help="flat key = value config file")

    bij = sub.add_parser("bijection", help="trace a statistic-preserving map")
    bij.add_argument(
        "name",
        choices=[
            "tableau-to-path",
            "diagonal-relabel",
            "inc-to-hook",
            "rinc-to-inc",
            "jdt",
            "rectify-pair",
            "rinc-to-syt",
        ],
    )
    add_params(bij)
    bij.add_argument("--shape", help="skew shape for jdt traces")
    bij.add_argument("--order", default="E>D>N")
    bij.add_argument("--max-cells", type=int, default=12)
    return parser


def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"missing required parameter(s): {', '.join('-' + n for n in missing)}")


def _print_family(elements, poly, show_list, out):
    if show_list:
        for e in elements:
            print(e, file=out)
    if poly is not None:
        print(poly, file=out)
    print(f"count {len(elements)}", file=out)


def _cmd_enumerate(args, out) -> int:
    order = StepOrder.parse(args.order)
    if args.family in ("schroeder", "catalan"):
        _require(args, "n", "m")
        k = 0 if args.family == "catalan" else args.k
        if max(args.n, args.m) > args.max_n:
            raise BudgetExceededError(
                f"n, m up to {args.max_n} allowed; raise --max-n to go larger"
            )
        family = paths.enumerate_schroeder(args.r, args.n, args.m, k)
        if args.labelled:
            exps = (
                paths.major_index(paths.diagonal_reverse_labelling(p, order))
                for p in family
            )
        else:
            exps = (paths.path_major_index(p, order) for p in family)
        _print_family([p.word for p in family], gf_from_exponents(exps), args.list, out)
        return EXIT_OK
    if args.family == "rt":
        if not args.mu or args.bound is None:
            raise ValueError("reverse tableaux need --mu and --bound")
        mu = parse_partition(args.mu)
        if mu.size > args.max_cells or args.bound > 2 * args.max_n:
            raise BudgetExceededError("reverse tableau instance exceeds the budget")
        family = tableaux.reverse_tableaux(mu, args.bound)
        _print_family([t.to_string() for t in family], None, args.list, out)
        return EXIT_OK
    shape = _shape_from_args(args)
    if shape.size > args.max_cells:
        raise BudgetExceededError(
            f"shape has {shape.size} cells; raise --max-cells to go larger"
        )
    family = tableaux.generate_family(args.family, shape, args.k if args.family != "syt" else 0)
    gf = gf_from_exponents(
        (tableaux.major_index if args.stat == "maj" else tableaux.amajor_index)(t)
        for t in family
    )
    _print_family([t.to_string() for t in family], gf, args.list, out)
    return EXIT_OK


def _shape_from_args(args) -> SkewShape:
    if args.shape:
        return parse_shape(args.shape)
    _require(args, "n", "m")
    shape = SkewShape.try_new((args.n, args.m), (args.r,))
    if shape is None:
        raise ValueError(f"({args.n},{args.m})/({args.r}) is not a valid shape")
    return shape


def _cmd_closed_form(args, out) -> int:
    name = args.formula
    if name in ("schroeder-maj", "catalan-maj", "rinc-maj", "rinc-amaj", "inc-maj"):
        _require(args, "n", "m")
    if name == "schroeder-maj":
        res = formulas.schroeder_maj_closed(args.r, args.n, args.m, args.k, args.case)
    elif name == "catalan-maj":
        res = formulas.catalan_maj_closed(args.r, args.n, args.m, args.case)
    elif name == "rinc-maj":
        res = formulas.rinc_maj_closed(args.r, args.n, args.m, args.k)
    elif name == "rinc-amaj":
        res = formulas.rinc_amaj_closed(args.r, args.n, args.m, args.k)
    elif name == "inc-maj":
        res = formulas.inc_maj_closed(args.r, args.n, args.m, args.k)
    elif name == "rinc-rect-maj":
        _require(args, "n", "m")
        res = formulas.rinc_rect_maj_closed(args.n, args.m, args.k)
    elif name == "two-row-maj":
        _require(args, "n", "m")
        res = formulas.two_row_syt_maj_closed(args.n, args.m)
    elif name == "hook-skew-maj":
        _require(args, "n", "m")
        res = formulas.skew_hook_maj_closed(args.r, args.n, args.m, args.k)
    elif name == "hook-straight-maj":
        _require(args, "n", "m")
        res = formulas.straight_hook_maj_closed(args.n, args.m, args.k)
    elif name == "syt-maj":
        if not args.lam:
            raise ValueError("syt-maj needs --lam")
        res = formulas.syt_maj_gf(parse_partition(args.lam))
    else:
        if not args.lam:
            raise ValueError("skew-syt-maj needs --lam")
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu) if args.mu else tableaux.Partition()
        bound = args.bound if args.bound is not None else len(lam)
        res = formulas.skew_syt_maj_gf(lam, mu, bound)
    print(res.poly, file=out)
    if res.family_empty:
        print("family empty", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.list_checks:
        for name, check in CHECKS.items():
            print(f"{name}: {check.describe}", file=out)
        return EXIT_OK
    values: dict = {}
    if args.config:
        values.update(parse_config_file(args.config))
    if args.max_n is not None:
        values["max_n"] = args.max_n
    if args.max_cells is not None:
        values["max_cells"] = args.max_cells
    if args.max_hook is not None:
        values["max_hook"] = args.max_hook
    if args.format is not None:
        values["fmt"] = args.format
    if args.jobs is not None:
        values["jobs"] = args.jobs
    if args.order is not None:
        values["order"] = StepOrder.parse(args.order)
    if args.timing:
        values["timing"] = True
    if args.checks != "all" or "checks" not in values:
        values["checks"] = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    cfg = SweepConfig(**values)
    select_checks(cfg.checks)
    records, summary = run_sweep(cfg)
    out.write(render_report(records, summary, cfg.fmt))
    return EXIT_MISMATCH if summary["mismatched"] else EXIT_OK


def _trace(out, left, right, stats, ok) -> bool:
    flag = "ok" if ok else "FAIL"
    print(f"{left} -> {right} | {stats} | roundtrip {flag}", file=out)
    return ok


def _cmd_bijection(args, out) -> int:
    order = StepOrder.parse(args.order)
    all_ok = True
    if args.name == "jdt":
        if not args.shape:
            raise ValueError("jdt traces need --shape")
        shape = parse_shape(args.shape)
        if shape.size > args.max_cells:
            raise BudgetExceededError("shape exceeds --max-cells")
        for t in tableaux.standard_tableaux(shape):
            for corner in shape.inner_corners():
                slid = bijections.jdt_in(t, corner)
                removed = (
                    set(shape.cells()) | {corner}
                ) - set(slid.shape.cells())
                back = bijections.jdt_out(slid, removed.pop())
                ok = back == t
                all_ok &= _trace(
                    out, t.to_string(), slid.to_string(), f"slide in at {corner}", ok
                )
        return EXIT_OK if all_ok else EXIT_MISMATCH

    _require(args, "n", "m")
    n, m, k, r = args.n, args.m, args.k, args.r
    if n + m - r > args.max_cells:
        raise BudgetExceededError("family exceeds --max-cells")
    if args.name == "tableau-to-path":
        shape = _shape_from_args(args)
        for t in tableaux.row_increasing_tableaux(shape, k):
            p = bijections.tableau_to_path(t)
            ok = bijections.path_to_tableau(p) == t
            w_maj = paths.major_index(paths.diagonal_reverse_labelling(p, order))
            stats = f"maj {tableaux.major_index(t)} -> labelled maj {w_maj} ({order})"
            all_ok &= _trace(out, t.to_string(), p.word, stats, ok)
    elif args.name == "diagonal-relabel":
        for p in paths.enumerate_schroeder(r, n, m, k):
            word = paths.relabel_diagonals(p)
            key = paths.relabeled_step_key(order)
            d_word = paths.descent_set(word, key)
            d_label = paths.descent_set(paths.diagonal_reverse_labelling(p, order))
            ok = d_word == d_label
            stats = f"descents {sorted(d_word)} == labelling {sorted(d_label)}"
            all_ok &= _trace(out, p.word, " ".join(word), stats, ok)
    elif args.name == "inc-to-hook":
        shape = _shape_from_args(args)
        for t in tableaux.increasing_tableaux(shape, k):
            s = bijections.inc_to_hook_syt(t)
            ok = bijections.hook_syt_to_inc(s, n, m, k) == t
            stats = f"maj {tableaux.major_index(t)} -> {tableaux.major_index(s)}"
            all_ok &= _trace(out, t.to_string(), s.to_string(), stats, ok)
    elif args.name == "rinc-to-inc":
        shape = _shape_from_args(args)
        for t in tableaux.row_increasing_tableaux(shape, k):
            s = bijections.rinc_to_inc(t)
            ok = bijections.inc_to_rinc(s, m) == t
            stats = f"maj {tableaux.major_index(t)} -> {tableaux.major_index(s)}"
            all_ok &= _trace(out, t.to_string(), s.to_string(), stats, ok)
    elif args.name == "rectify-pair":
        shape = SkewShape.try_new((n - k + 1, m - k + 1) + (1,) * k, (1, 1))
        if shape is None:
            raise ValueError(f"no padded shape for (n,m,k)=({n},{m},{k})")
        for t in tableaux.standard_tableaux(shape):
            s = bijections.rectify_pair(t)
            ok = bijections.unrectify_pair(s, n, m, k) == t
            stats = f"maj {tableaux.major_index(t)} -> {tableaux.major_index(s)}"
            all_ok &= _trace(out, t.to_string(), s.to_string(), stats, ok)
    elif args.name == "rinc-to-syt":
        shape = _shape_from_args(args)
        for t in tableaux.row_increasing_tableaux(shape, k):
            s = bijections.rinc_to_syt(t)
            ok = bijections.syt_to_rinc(s) == t
            stats = f"maj {tableaux.major_index(t)} -> {tableaux.major_index(s)}"
            all_ok &= _trace(out, t.to_string(), s.to_string(), stats, ok)
    else:
        raise ValueError(f"unknown bijection {args.name!r}")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        if args.command == "closed-form":
            return _cmd_closed_form(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "bijection":
            return _cmd_bijection(args, out)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, OSError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
