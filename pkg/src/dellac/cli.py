"""Command-line front end.

Subcommands: enumerate (configuration families to JSONL/CSV), stats
(statistic histograms over a configuration file), poincare (polynomials by
one or both routes), verify (the cross-check suite), sequence (embedded
reference prefixes). Exit codes: 0 success, 1 verification failure or
method disagreement, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from .cache import ENV_CACHE_DIR, cached_enumeration, resolve_cache_dir
from .configurations import (
    MalformedConfiguration,
    NotSymmetricError,
    inv,
    inv_prime,
    inv_tilde,
)
from .flags import Family
from .parallel import KINDS
from .poincare import (
    euler_characteristic,
    expected_dimension,
    format_polynomial,
    is_unimodal,
    poincare_polynomial,
    reference_sequence,
)
from .serialize import (
    ParseError,
    histogram_to_csv_lines,
    polynomial_to_dict,
    read_configurations,
    write_configurations,
)
from .verify import run_verify

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

STATISTICS = {"inv": inv, "inv-tilde": inv_tilde, "inv-prime": inv_prime}


@dataclass(frozen=True)
class JobSpec:
    command: str
    threads: int = 1
    cache_dir: Path | None = None
    out: Path | None = None
    fmt: str = "text"
    plot: bool = False
    kind: str | None = None  # enumerate: dellac | symmetric
    family: Family | None = None
    n_cols: int | None = None
    method: str = "both"
    statistic: str | None = None
    input_path: Path | None = None
    max_even: int = 8
    max_odd: int = 9
    sequence_name: str | None = None

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError(f"--threads must be >= 1, got {self.threads}")
        if self.n_cols is not None and self.n_cols < 1:
            raise ValueError(f"--n must be >= 1, got {self.n_cols}")
        if self.plot and self.out is None:
            raise ValueError("--plot needs --out to know where the figure goes")


@contextmanager
def _open_out(spec: JobSpec):
    if spec.out is None:
        yield sys.stdout
    else:
        with open(spec.out, "w") as stream:
            yield stream


def _figure_path(spec: JobSpec) -> Path:
    return spec.out.with_suffix(".png")


def run_enumerate(spec: JobSpec) -> int:
    cfgs = cached_enumeration(
        spec.kind, spec.n_cols, threads=spec.threads, cache_dir=spec.cache_dir
    )
    with _open_out(spec) as stream:
        count = write_configurations(stream, cfgs, spec.fmt)
    print(f"count={count}", file=sys.stderr)
    return EXIT_OK


def run_stats(spec: JobSpec) -> int:
    with open(spec.input_path) as stream:
        cfgs = read_configurations(stream)
    statistic = STATISTICS[spec.statistic]
    counts: dict[int, int] = {}
    for cfg in cfgs:
        value = statistic(cfg)
        counts[value] = counts.get(value, 0) + 1
    with _open_out(spec) as stream:
        if spec.fmt == "json":
            payload = {
                "statistic": spec.statistic,
                "histogram": [[v, counts[v]] for v in sorted(counts)],
            }
            stream.write(json.dumps(payload, separators=(",", ":")) + "\n")
        else:
            for line in histogram_to_csv_lines(counts):
                stream.write(line + "\n")
    print(f"configurations={len(cfgs)} distinct_values={len(counts)}", file=sys.stderr)
    if spec.plot:
        from .plotting import save_histogram_figure

        save_histogram_figure(
            counts,
            _figure_path(spec),
            title=f"{spec.statistic} over {spec.input_path.name}",
            xlabel=spec.statistic,
        )
        print(f"figure={_figure_path(spec)}", file=sys.stderr)
    return EXIT_OK


def run_poincare(spec: JobSpec) -> int:
    methods = ("statistic", "cells") if spec.method == "both" else (spec.method,)
    polys = {m: poincare_polynomial(spec.family, spec.n_cols, m) for m in methods}
    agree = len(set(polys.values())) == 1
    reference = next(iter(polys.values()))

    with _open_out(spec) as stream:
        if spec.fmt == "json":
            payload = polynomial_to_dict(spec.family, spec.n_cols, reference)
            payload.update(
                methods={m: list(p.coeffs) for m, p in polys.items()},
                agree=agree,
                euler_characteristic=reference.evaluate(1),
                expected_dimension=expected_dimension(spec.family, spec.n_cols),
                unimodal=is_unimodal(reference),
            )
            stream.write(json.dumps(payload, separators=(",", ":")) + "\n")
        elif spec.fmt == "csv":
            stream.write("degree," + ",".join(methods) + "\n")
            for degree in range(reference.degree, -1, -1):
                row = [str(degree)] + [
                    str(p.coeffs[degree] if degree <= p.degree else 0)
                    for p in polys.values()
                ]
                stream.write(",".join(row) + "\n")
        else:
            stream.write(
                f"# variety={spec.family.value} n={spec.n_cols} "
                f"expected_dimension={expected_dimension(spec.family, spec.n_cols)}\n"
            )
            for method, poly in polys.items():
                stream.write(f"{method}: {format_polynomial(poly)}\n")
            if len(methods) > 1:
                stream.write(f"agree: {'yes' if agree else 'NO'}\n")
            stream.write(f"euler: {reference.evaluate(1)}\n")
            stream.write(f"unimodal: {'yes' if is_unimodal(reference) else 'NO'}\n")

    if spec.plot:
        from .plotting import save_polynomial_figure

        save_polynomial_figure(
            polys,
            _figure_path(spec),
            title=f"{spec.family.value} N={spec.n_cols}",
        )
        print(f"figure={_figure_path(spec)}", file=sys.stderr)

    if not agree:
        print(
            "error: the two methods disagree; both polynomials were printed",
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED
    if not is_unimodal(reference):
        print(
            f"error: polynomial is not unimodal: {format_polynomial(reference)}",
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED
    return EXIT_OK


def run_verify_command(spec: JobSpec) -> int:
    report = run_verify(spec.max_even, spec.max_odd)
    with _open_out(spec) as stream:
        if spec.fmt == "json":
            stream.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
        else:
            for check in report.checks:
                stream.write(check.line() + "\n")
            stream.write(report.summary_line() + "\n")
    return report.exit_status


def run_sequence(spec: JobSpec) -> int:
    with _open_out(spec) as stream:
        for term in reference_sequence(spec.sequence_name):
            stream.write(f"{term}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, metavar="T",
                        help="worker count (default 1); output is identical for any value")
    common.add_argument("--cache-dir", default=None, metavar="DIR",
                        help=f"enumeration cache directory (default ${ENV_CACHE_DIR})")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default stdout)")

    parser = argparse.ArgumentParser(
        prog="dellac",
        description="Enumerate Dellac configurations and compute the flag-family polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common],
                       help="write a configuration family, one per line")
    p.add_argument("--family", required=True, choices=KINDS, dest="kind")
    p.add_argument("--n", required=True, type=int, dest="n_cols", metavar="N")
    p.add_argument("--format", default="json", choices=("json", "csv"), dest="fmt")

    p = sub.add_parser("stats", parents=[common],
                       help="histogram a statistic over a configuration file")
    p.add_argument("--in", required=True, dest="input_path", metavar="PATH")
    p.add_argument("--statistic", default="inv", choices=sorted(STATISTICS))
    p.add_argument("--format", default="csv", choices=("csv", "json"), dest="fmt")
    p.add_argument("--plot", action="store_true",
                   help="also render a bar-chart PNG next to --out")

    p = sub.add_parser("poincare", parents=[common],
                       help="Poincaré polynomial of a variety family")
    p.add_argument("--variety", required=True, dest="family",
                   choices=[f.value for f in Family])
    p.add_argument("--n", required=True, type=int, dest="n_cols", metavar="N")
    p.add_argument("--method", default="both", choices=("statistic", "cells", "both"))
    p.add_argument("--format", default="text", choices=("text", "json", "csv"), dest="fmt")
    p.add_argument("--plot", action="store_true",
                   help="also render a coefficient-profile PNG next to --out")

    p = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    p.add_argument("--max-even", type=int, default=8, metavar="N")
    p.add_argument("--max-odd", type=int, default=9, metavar="N")
    p.add_argument("--format", default="text", choices=("text", "json"), dest="fmt")

    p = sub.add_parser("sequence", parents=[common],
                       help="print an embedded reference count prefix")
    p.add_argument("--name", required=True, dest="sequence_name",
                   choices=("genocchi", "genocchi_normalized", "r", "l"))
    return parser


def _spec_from_args(args: argparse.Namespace) -> JobSpec:
    return JobSpec(
        command=args.command,
        threads=getattr(args, "threads", 1),
        cache_dir=resolve_cache_dir(getattr(args, "cache_dir", None)),
        out=Path(args.out) if getattr(args, "out", None) else None,
        fmt=getattr(args, "fmt", "text"),
        plot=getattr(args, "plot", False),
        kind=getattr(args, "kind", None),
        family=Family.from_tag(args.family) if getattr(args, "family", None) else None,
        n_cols=getattr(args, "n_cols", None),
        method=getattr(args, "method", "both"),
        statistic=getattr(args, "statistic", None),
        input_path=Path(args.input_path) if getattr(args, "input_path", None) else None,
        max_even=getattr(args, "max_even", 8),
        max_odd=getattr(args, "max_odd", 9),
        sequence_name=getattr(args, "sequence_name", None),
    )


_COMMANDS = {
    "enumerate": run_enumerate,
    "stats": run_stats,
    "poincare": run_poincare,
    "verify": run_verify_command,
    "sequence": run_sequence,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = _spec_from_args(args)
        return _COMMANDS[spec.command](spec)
    except (ValueError, ParseError, MalformedConfiguration, NotSymmetricError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
