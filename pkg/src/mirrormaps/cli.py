"""Command line front end.

Four commands: check one document, batch a directory of documents,
inspect the packaged planar vertex sets, and a small demo on the
classical one-parameter family.  Exit codes are part of the contract:
0 all requested checks passed, 1 at least one check failed, 2 the
input could not be parsed or validated.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import dataset, plots
from .checker import (CHECK_NAMES, BatchResult, CheckReport, CheckRequest,
                      run_batch, run_check)
from .inputdoc import ParseError, load_request
from .maps import (collapse_to_generator, log_ratio, naive_mirror_map,
                   principal_period, quintic_config, quintic_q_series)
from .reports import RENDERERS
from .series import integrality_verdict, nonnegativity_verdict

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _request_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision", "-P", type=int, default=None,
                   help="number of series coefficients to verify per slot "
                        "(overrides the document header)")
    p.add_argument("--checks", default=None, metavar="LIST",
                   help="comma-separated subset of: %s" % ", ".join(CHECK_NAMES))
    p.add_argument("--d", type=int, default=None,
                   help="override the global enumeration bound")
    p.add_argument("--dprime", type=int, default=None,
                   help="override the per-slot enumeration bound")
    p.add_argument("--sampling-denominator", type=int, default=None,
                   help="grid denominator for the sampled convexity criterion")
    p.add_argument("--cross-check", action="store_true", default=None,
                   help="also recompute each true map in one exponential "
                        "and require exact agreement")


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=None,
                   help="write the report here instead of stdout; a PNG "
                        "figure is written next to it")
    p.add_argument("--format", choices=sorted(RENDERERS), default="report",
                   help="report is the machine-readable document (default)")
    p.add_argument("--no-figure", action="store_true",
                   help="suppress the figure that normally accompanies --out")


def _overrides(args) -> dict:
    checks = None
    if args.checks is not None:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    return {
        "precision": args.precision,
        "checks": checks,
        "d": args.d,
        "dprime": args.dprime,
        "sampling_denominator": args.sampling_denominator,
        "cross_check": args.cross_check,
    }


def _emit(args, text: str, figure_source) -> None:
    if args.out is None:
        sys.stdout.write(text)
        return
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(text)
    print("report written to %s" % args.out, file=sys.stderr)
    if not args.no_figure:
        png = args.out.with_suffix(".png")
        if isinstance(figure_source, BatchResult):
            plots.batch_figure(figure_source, png)
        else:
            plots.report_figure(figure_source, png)
        print("figure written to %s" % png, file=sys.stderr)


def _load(path: Path, args) -> CheckRequest:
    request = load_request(path, **_overrides(args))
    if not request.label:
        request = dataclasses.replace(request, label=path.stem)
    return request


def cmd_check(args) -> int:
    try:
        request = _load(args.input, args)
    except (ParseError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = run_check(request)
    _emit(args, RENDERERS[args.format](report), report)
    if report.error is not None:
        print("error: %s" % report.error, file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_PASS if report.ok else EXIT_CHECK_FAILED


def cmd_batch(args) -> int:
    if args.bundled:
        if args.directory is not None:
            print("error: give a directory or --bundled, not both",
                  file=sys.stderr)
            return EXIT_INPUT_ERROR
        directory = Path(dataset.bundled_documents_dir())
    elif args.directory is not None:
        directory = args.directory
    else:
        print("error: batch needs a directory or --bundled", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if not directory.is_dir():
        print("error: %s is not a directory" % directory, file=sys.stderr)
        return EXIT_INPUT_ERROR

    files = sorted(p for p in directory.iterdir()
                   if p.is_file() and p.suffix == ".txt")
    slots: list[CheckReport | None] = []
    todo: list[tuple[int, CheckRequest]] = []
    for path in files:
        try:
            todo.append((len(slots), _load(path, args)))
            slots.append(None)
        except (ParseError, OSError, ValueError) as exc:
            print("error in %s: %s" % (path.name, exc), file=sys.stderr)
            slots.append(CheckReport(
                label=path.name, config=None, precision=0, ok=False,
                error="unreadable input: %s" % exc))
    ran = run_batch([r for _, r in todo], workers=args.workers)
    for (index, _), report in zip(todo, ran.reports):
        slots[index] = report
    batch = BatchResult(reports=tuple(slots))
    _emit(args, RENDERERS[args.format](batch), batch)
    print(batch.summary_line, file=sys.stderr)
    if batch.invalid:
        return EXIT_INPUT_ERROR
    return EXIT_CHECK_FAILED if batch.failed else EXIT_PASS


def cmd_dataset(args) -> int:
    if args.action == "list":
        for e in dataset.entries():
            reduced = "" if e.span_index == 1 else \
                "  (vertex span has index %d)" % e.span_index
            print("%-6s %d vertices, %d boundary points, dual of %s%s"
                  % (e.key, e.vertex_count, e.boundary_points,
                     e.dual_key, reduced))
        return EXIT_PASS
    if args.action == "show":
        try:
            e = dataset.get(args.key)
        except KeyError as exc:
            print("error: %s" % exc.args[0], file=sys.stderr)
            return EXIT_INPUT_ERROR
        print("%s: %s" % (e.key, e.label))
        print("vertices: %s" % (", ".join(str(v) for v in e.vertices)))
        print("boundary lattice points: %d" % e.boundary_points)
        print("dual class: %s" % e.dual_key)
        if e.span_index != 1:
            cfg = e.config()
            print("vertex span has index %d; computations use the "
                  "re-expressed vectors %s"
                  % (e.span_index,
                     ", ".join(str(v) for v in cfg.groups[0])))
        return EXIT_PASS
    if args.action == "verify":
        rows = dataset.verify()
        good = 0
        for key, reflexive, fano in rows:
            ok = reflexive and fano
            good += ok
            print("%-6s reflexive=%s fano=%s" % (key,
                  "pass" if reflexive else "FAIL",
                  "pass" if fano else "FAIL"))
        print("%d/%d reflexive and Fano" % (good, len(rows)))
        return EXIT_PASS if good == len(rows) else EXIT_CHECK_FAILED
    # export: regenerate the bundled batch documents
    written = dataset.write_batch_documents(args.directory,
                                            precision=args.precision)
    print("wrote %d documents to %s" % (len(written), args.directory))
    return EXIT_PASS


def cmd_quintic(args) -> int:
    p = args.precision
    if p < 1:
        print("error: precision must be >= 1", file=sys.stderr)
        return EXIT_INPUT_ERROR
    cfg = quintic_config()
    bound = 5 * p
    gen = (1, 1, 1, 1, 1)
    phi0 = collapse_to_generator(principal_period(cfg, bound), gen)
    ratio = collapse_to_generator(log_ratio(cfg, 0, bound), gen)
    psi = collapse_to_generator(naive_mirror_map(cfg, 0, bound), gen)
    qser = quintic_q_series(5 * p)

    def row(series, orders, scale=1):
        return ", ".join(str(series.coefficient((scale * n,)))
                         for n in orders)

    print("principal period, orders 0..%d:" % (p - 1))
    print("  " + row(phi0, range(p)))
    print("log ratio of the first slot, orders 1..%d:" % p)
    print("  " + row(ratio, range(1, p + 1)))
    print("naive map of the first slot, orders 0..%d:" % (p - 1))
    print("  " + row(psi, range(p)))
    print("one-parameter combination, orders 5, 10, .., %d:" % (5 * p))
    print("  " + row(qser, range(1, p + 1), scale=5))

    verdicts = [
        ("naive map integral", integrality_verdict(psi)),
        ("log ratio nonnegative", nonnegativity_verdict(ratio)),
        ("one-parameter combination integral", integrality_verdict(qser)),
    ]
    failed = False
    for name, verdict in verdicts:
        if verdict.ok:
            print("%s: pass" % name)
        else:
            failed = True
            print("%s: FAIL at %s (%s)" % (name, verdict.offender,
                                           verdict.coefficient))
    if args.figure is not None:
        series = {
            "naive map": [psi.coefficient((n,)) for n in range(p)],
            "one-parameter combination":
                [qser.coefficient((5 * n,)) for n in range(1, p + 1)],
        }
        path = plots.growth_figure(series, args.figure)
        print("figure written to %s" % path, file=sys.stderr)
    return EXIT_CHECK_FAILED if failed else EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mirrormaps",
        description="Exact-arithmetic integrality and positivity checks "
                    "for the mirror maps of lattice vector families.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run checks on one input document")
    c.add_argument("input", type=Path, help="input document path")
    _request_flags(c)
    _output_flags(c)
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("batch",
                       help="run checks on every .txt document in a directory")
    b.add_argument("directory", type=Path, nargs="?",
                   help="directory of input documents")
    b.add_argument("--bundled", action="store_true",
                   help="use the packaged planar dataset documents")
    b.add_argument("--workers", type=int, default=None,
                   help="worker processes for the batch (default: serial)")
    _request_flags(b)
    _output_flags(b)
    b.set_defaults(func=cmd_batch)

    d = sub.add_parser("dataset",
                       help="inspect the packaged planar vertex sets")
    dsub = d.add_subparsers(dest="action", required=True)
    dsub.add_parser("list", help="one line per class")
    show = dsub.add_parser("show", help="echo one class in full")
    show.add_argument("key")
    dsub.add_parser("verify",
                    help="recheck reflexivity and the Fano property "
                         "for every class")
    export = dsub.add_parser("export",
                             help="write the classes as batch input documents")
    export.add_argument("directory", type=Path)
    export.add_argument("--precision", "-P", type=int, default=50)
    d.set_defaults(func=cmd_dataset)

    q = sub.add_parser("quintic",
                       help="print the classical one-parameter family's "
                            "series with verdicts")
    q.add_argument("--precision", "-P", type=int, default=5,
                   help="coefficients to print per series")
    q.add_argument("--figure", type=Path, default=None,
                   help="also write a coefficient growth figure here")
    q.set_defaults(func=cmd_quintic)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # keep batch scripts alive, but say why
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
