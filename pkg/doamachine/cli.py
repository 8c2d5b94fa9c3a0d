"""
Documentation:

    ---
    Description:
        Command line surface:

            doamachine check    --layout FILE [--denominator-limit N]
            doamachine wpdp     --layout FILE [--grid G] [--out PATH]
            doamachine simulate --layout FILE --theta0 T [--snr LIST] [--trials N] [--seed S] [--grid G]
            doamachine search   --n N --max-aperture A --step S [--limit K]

        Standard output carries documents only; logs and diagnostics go to standard error.
        check encodes the verdict in its exit code: 0 Identifiable or
        IdentifiableByIncommensurability, 2 Unidentifiable, 3 BoundaryIdentifiable. Any parse or
        validation failure exits with 1.
"""
import argparse
import logging
import math
import sys
from fractions import Fraction

from . import __version__, config
from .documents import (
    RunManifest,
    load_layout,
    render_document,
    report_body,
    search_body,
    sweep_body,
)
from .errors import DoaMachineError
from .estimate.pattern import build_wpdp, write_wpdp
from .geometry.layout import format_rational, pair_distances
from .identify.condition import Verdict, report_from_distances
from .identify.search import LayoutSearcher
from .simulate.monte_carlo import rmse_sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNIDENTIFIABLE = 2
EXIT_BOUNDARY = 3

VERDICT_EXIT_CODES = {
    Verdict.IDENTIFIABLE: EXIT_OK,
    Verdict.IDENTIFIABLE_BY_INCOMMENSURABILITY: EXIT_OK,
    Verdict.UNIDENTIFIABLE: EXIT_UNIDENTIFIABLE,
    Verdict.BOUNDARY_IDENTIFIABLE: EXIT_BOUNDARY,
}


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    # exit code 2 belongs to the Unidentifiable verdict
    def error(self, message):
        raise UsageError(message)


def parse_theta0(text):
    """
    Documentation:

        ---
        Description:
            Direction in radians, either a real number or "asin:p/q" for arcsin of an exact
            rational sine.
    """
    text = text.strip()
    if text.startswith("asin:"):
        try:
            sine = Fraction(text[len("asin:"):].strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError("theta0 '{}' is not of the form asin:p/q".format(text))
        if not -1 < sine < 1:
            raise ValueError("theta0 sine must lie in (-1, 1), got {}".format(sine))
        return math.asin(sine)
    try:
        return float(text)
    except ValueError:
        raise ValueError("theta0 '{}' is neither a number nor asin:p/q".format(text))


def parse_snr_list(text):
    """
    Documentation:

        ---
        Description:
            Comma separated SNR values in dB; "inf" means noise-free.
    """
    values = []
    for item in text.split(","):
        item = item.strip()
        try:
            value = float(item)
        except ValueError:
            raise ValueError("snr entry '{}' is not a number or 'inf'".format(item))
        if math.isnan(value) or value == -math.inf:
            raise ValueError("snr entry '{}' is not allowed".format(item))
        values.append(value)
    if not values:
        raise ValueError("snr list is empty")
    return values


def _positive_int(name, value):
    if value < 1:
        raise ValueError("{} must be a positive integer, got {}".format(name, value))
    return value


def _layout_parameters(args, document):
    return {
        "layout": args.layout,
        "positions": [format_rational(p) for p in document.layout.positions],
        "pairs": [[u + 1, v + 1] for u, v in document.pairs] if document.pairs is not None else None,
        "denominator_limit": args.denominator_limit,
    }


def cmd_check(args, stdout):
    document = load_layout(args.layout)
    d = pair_distances(document.layout, pairs=document.pairs)
    report = report_from_distances(d, approx_denominator_limit=_positive_int("denominator-limit", args.denominator_limit))

    manifest = RunManifest(
        command="check",
        parameters=_layout_parameters(args, document),
        input_digest=document.digest,
    )
    stdout.write(render_document(manifest, report_body(report)))
    logger.info("verdict: %s", report.verdict.value)
    return VERDICT_EXIT_CODES[report.verdict]


def cmd_wpdp(args, stdout):
    document = load_layout(args.layout)
    d = pair_distances(document.layout, pairs=document.pairs)
    grid = build_wpdp(d, args.grid, n_jobs=args.n_jobs)

    parameters = _layout_parameters(args, document)
    parameters["grid_size"] = grid.grid_size
    manifest = RunManifest(command="wpdp", parameters=parameters, input_digest=document.digest)

    header = {
        "command": manifest.command,
        "tool_version": manifest.tool_version,
        "input_digest": manifest.input_digest,
        "positions": " ".join(parameters["positions"]),
        "pairs": " ".join("{}-{}".format(u + 1, v + 1) for u, v in d.pairs),
        "grid_size": grid.grid_size,
    }

    if args.out is None or args.out == "-":
        write_wpdp(grid, stdout, manifest=header)
    else:
        write_wpdp(grid, args.out, manifest=header)
        stdout.write(
            render_document(
                manifest,
                {"output": args.out, "rows": grid.grid_size, "columns": ["sine"] + [
                    "psi_{}".format(i + 1) for i in range(d.m)
                ]},
            )
        )
    return EXIT_OK


def cmd_simulate(args, stdout):
    document = load_layout(args.layout)
    theta0 = parse_theta0(args.theta0)
    snr_db_list = parse_snr_list(args.snr)
    trials = _positive_int("trials", args.trials)
    if args.seed < 0:
        raise ValueError("seed must be a non-negative integer, got {}".format(args.seed))

    sweep = rmse_sweep(
        document.layout,
        theta0,
        snr_db_list,
        trials=trials,
        grid_size=args.grid,
        seed=args.seed,
        pairs=document.pairs,
        candidate_aware=args.candidate_aware,
        n_jobs=args.n_jobs,
    )

    parameters = _layout_parameters(args, document)
    parameters.update(
        {
            "theta0": args.theta0,
            "snr_db": args.snr,
            "trials": trials,
            "seed": args.seed,
            "grid_size": args.grid,
            "candidate_aware": args.candidate_aware,
        }
    )
    manifest = RunManifest(command="simulate", parameters=parameters, input_digest=document.digest)
    stdout.write(render_document(manifest, sweep_body(document.layout, theta0, args.grid, trials, args.seed, sweep)))
    return EXIT_OK


def cmd_search(args, stdout):
    searcher = LayoutSearcher(
        n_sensors=args.n,
        max_aperture=args.max_aperture,
        step=args.step,
        approx_denominator_limit=_positive_int("denominator-limit", args.denominator_limit),
    )
    limit = None if args.limit is None else _positive_int("limit", args.limit)
    searcher.fit(max_results=limit, require_wrapping=args.require_wrapping, n_jobs=args.n_jobs)

    manifest = RunManifest(
        command="search",
        parameters={
            "n_sensors": searcher.n_sensors,
            "max_aperture": format_rational(searcher.max_aperture),
            "step": format_rational(searcher.step),
            "limit": limit,
            "require_wrapping": args.require_wrapping,
            "denominator_limit": args.denominator_limit,
        },
    )
    stdout.write(render_document(manifest, search_body(searcher.results, searcher.verdicts)))
    return EXIT_OK


def build_parser():
    parser = ArgumentParser(prog="doamachine", description="DOA identifiability of linear arrays.")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))

    common = ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug detail to standard error.")
    common.add_argument("--denominator-limit", type=int, default=config.DENOMINATOR_LIMIT,
                        help="Denominator limit for approximating non-exact distances.")
    common.add_argument("--n-jobs", type=int, default=config.N_JOBS, help="Number of joblib workers.")

    layout = ArgumentParser(add_help=False)
    layout.add_argument("--layout", required=True, help="Layout document (JSON).")

    subparsers = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    subparsers.required = True

    check = subparsers.add_parser("check", parents=[common, layout], help="Quick identifiability check.")
    check.set_defaults(handler=cmd_check)

    wpdp = subparsers.add_parser("wpdp", parents=[common, layout], help="Export the wrapped phase-difference pattern.")
    wpdp.add_argument("--grid", type=int, default=1001, help="Number of sine grid points.")
    wpdp.add_argument("--out", default=None, help="Output CSV path; standard output when omitted.")
    wpdp.set_defaults(handler=cmd_wpdp)

    simulate = subparsers.add_parser("simulate", parents=[common, layout], help="Monte Carlo RMSE sweep.")
    simulate.add_argument("--theta0", required=True, help="Direction in radians, or asin:p/q.")
    simulate.add_argument("--snr", default="inf", help="Comma separated SNR list in dB; 'inf' allowed.")
    simulate.add_argument("--trials", type=int, default=100)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--grid", type=int, default=4001)
    simulate.add_argument("--candidate-aware", action="store_true",
                          help="Score each trial with the candidate nearest to theta0.")
    simulate.set_defaults(handler=cmd_simulate)

    search = subparsers.add_parser("search", parents=[common], help="Search identifiable lattice layouts.")
    search.add_argument("--n", type=int, required=True, help="Number of sensors.")
    search.add_argument("--max-aperture", required=True, help="Largest aperture (decimal or p/q).")
    search.add_argument("--step", required=True, help="Lattice step (decimal or p/q).")
    search.add_argument("--limit", type=int, default=None, help="Keep this many layouts.")
    search.add_argument("--require-wrapping", action="store_true",
                        help="Skip layouts with a pair at distance <= 1.")
    search.set_defaults(handler=cmd_search)

    return parser


def main(argv=None, stdout=None):
    """
    Documentation:

        ---
        Description:
            Entry point of the doamachine console script.

        ---
        Parameters:
            argv : list of str, default=None
                Arguments; sys.argv[1:] when None.
            stdout : file-like, default=None
                Destination of documents; sys.stdout when None.

        ---
        Returns:
            exit_code : int
    """
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as error:
        parser.print_usage(sys.stderr)
        sys.stderr.write("doamachine: error: {}\n".format(error))
        return EXIT_ERROR

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.handler(args, stdout)
    except (DoaMachineError, ValueError, TypeError, OSError) as error:
        sys.stderr.write("doamachine {}: error: {}\n".format(args.command, error))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
