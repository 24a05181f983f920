import argparse
import logging
import sys
import typing

from treedissociation.cli.commands import (
    COMMANDS,
    EXIT_ARGUMENT_ERROR,
    EXIT_INPUT_ERROR,
    InputFileError,
    UsageError,
)
from treedissociation.cli.logging_setup import configure_logging
from treedissociation.core.errors import LabelOutOfRange, OracleLimitError
from treedissociation.core.settings import (
    BENCH_CLASSIFY_ALL_LIMIT,
    BENCH_REPETITIONS,
    ORACLE_MAX_ORDER,
    Settings,
)


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser that exits with code 3 on usage errors instead of argparse's 2."""

    def error(self, message: str) -> typing.NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGUMENT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """Builds the ``dissoc`` argument parser.

    Args:
        settings (Settings): Supplies the default worker count.

    Returns:
        argparse.ArgumentParser: The parser, one subcommand per entry of COMMANDS.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON run report instead of text")

    threads = argparse.ArgumentParser(add_help=False)
    threads.add_argument(
        "--threads",
        type=_positive_int,
        default=settings.threads,
        help=f"worker processes (default: {settings.threads})",
    )

    parser = _ArgumentParser(
        prog="dissoc",
        description="Classify tree vertices by membership in maximum dissociation sets.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    psi = subparsers.add_parser("psi", parents=[common], help="print the dissociation number")
    psi.add_argument("input", help='edge-list file, "-" for standard input')

    classify = subparsers.add_parser("classify", parents=[common], help="classify one vertex")
    classify.add_argument("input", help='edge-list file, "-" for standard input')
    classify.add_argument("--vertex", type=int, required=True, help="vertex label")

    classify_all = subparsers.add_parser("classify-all", parents=[common, threads], help="classify every vertex")
    classify_all.add_argument("input", help='edge-list file, "-" for standard input')

    prune = subparsers.add_parser("prune", parents=[common], help="print the pruned tree rooted at a vertex")
    prune.add_argument("input", help='edge-list file, "-" for standard input')
    prune.add_argument("--vertex", type=int, required=True, help="root of the pruning")

    oracle_check = subparsers.add_parser(
        "oracle-check", parents=[common, threads], help="cross-check the recognition algorithm against the oracles"
    )
    oracle_check.add_argument("--n-max", type=_positive_int, required=True, help="largest tree order")
    oracle_check.add_argument("--samples", type=_non_negative_int, default=0, help="random trees to draw")
    oracle_check.add_argument("--seed", type=int, default=0, help="seed of the random trees")
    oracle_check.add_argument(
        "--min-order",
        type=_positive_int,
        default=None,
        help="smallest order of the exhaustive sweep (default: only the largest swept order)",
    )

    bench = subparsers.add_parser("bench", parents=[common], help="time the recognition algorithm")
    bench.add_argument("--sizes", type=_positive_int, nargs="+", required=True, help="tree orders")
    bench.add_argument("--seed", type=int, default=0, help="seed of the random trees")
    bench.add_argument("--repetitions", type=_positive_int, default=BENCH_REPETITIONS, help="runs per measurement")
    bench.add_argument(
        "--classify-all-limit",
        type=_non_negative_int,
        default=BENCH_CLASSIFY_ALL_LIMIT,
        help="largest order for which classify-all is timed",
    )

    gen = subparsers.add_parser("gen", parents=[common], help="print a random labeled tree")
    gen.add_argument("n", type=_positive_int, help="vertex count")
    gen.add_argument("--seed", type=int, default=0, help="seed of the tree")

    return parser


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Runs the ``dissoc`` command line.

    Args:
        argv (Sequence[str], optional): Arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        int: 0 on success, 1 on a verification mismatch, 2 on an input error, 3 on an argument error.
    """
    try:
        settings = Settings.from_environment()
    except ValueError as error:
        print(f"dissoc: error: {error}", file=sys.stderr)
        return EXIT_ARGUMENT_ERROR
    configure_logging(settings.log_level)
    logger = logging.getLogger(f"{__name__}.main")

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code if isinstance(exit_request.code, int) else EXIT_ARGUMENT_ERROR

    if args.command == "oracle-check" and args.samples and args.n_max > ORACLE_MAX_ORDER:
        logger.info(f"Random trees above {ORACLE_MAX_ORDER} vertices are checked against the dynamic program only.")

    try:
        return COMMANDS[args.command](args)
    except InputFileError as error:
        print(f"dissoc: error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (LabelOutOfRange, OracleLimitError, UsageError) as error:
        print(f"dissoc: error: {error}", file=sys.stderr)
        return EXIT_ARGUMENT_ERROR


if __name__ == "__main__":
    sys.exit(main())
