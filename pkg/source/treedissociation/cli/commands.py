import argparse
import sys
import time
import typing

from treedissociation.algorithms.classifier import RecognitionClassifier
from treedissociation.algorithms.dissociation_dp import DissociationDP
from treedissociation.algorithms.pruning import TreePruner
from treedissociation.cli.bench import BenchmarkHarness
from treedissociation.cli.report import RunReport
from treedissociation.core.errors import TreeInputError
from treedissociation.core.rooted_tree import RootedTree
from treedissociation.core.settings import AGREEMENT_EXHAUSTIVE_CAP
from treedissociation.core.tree import Tree
from treedissociation.core.utils.edge_list_codec import EdgeListCodec
from treedissociation.core.utils.tree_generator import TreeGenerator
from treedissociation.verification.agreement import AgreementChecker, AgreementSummary

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2
EXIT_ARGUMENT_ERROR = 3

# Mismatches printed by oracle-check before the rest are only counted.
_MISMATCH_PRINT_LIMIT = 20


class UsageError(Exception):
    """A combination of arguments that argparse cannot reject on its own; maps to exit code 3."""


class InputFileError(Exception):
    """The input file could not be read or is not a valid tree; maps to exit code 2."""


def load_tree(path: str) -> Tree:
    """Reads an edge-list file, "-" meaning standard input.

    Raises:
        InputFileError: If the file cannot be opened or does not describe a tree.
    """
    try:
        if path == "-":
            return EdgeListCodec.parse_edge_list(sys.stdin)
        with open(path, encoding="utf-8") as file:
            return EdgeListCodec.parse_edge_list(file)
    except TreeInputError as error:
        raise InputFileError(f"{path}: {error}") from error
    except (OSError, UnicodeDecodeError) as error:
        raise InputFileError(f"{path}: {error}") from error


def _emit(args: argparse.Namespace, report: RunReport, text: str) -> None:
    if args.json:
        print(report.to_json())
    else:
        sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def cmd_psi(args: argparse.Namespace) -> int:
    tree = load_tree(args.input)
    start = time.perf_counter()
    psi = DissociationDP.dissociation_number(tree)
    report = RunReport.for_tree("psi", tree, {"psi": psi}, (time.perf_counter() - start) * 1000.0)
    _emit(args, report, str(psi))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    tree = load_tree(args.input)
    start = time.perf_counter()
    vertex_class = RecognitionClassifier.classify_vertex(tree, args.vertex)
    duration_ms = (time.perf_counter() - start) * 1000.0

    results = {"vertex": args.vertex, "class": vertex_class.value}
    if args.json:
        results["psi"] = DissociationDP.dissociation_number(tree)
    _emit(args, RunReport.for_tree("classify", tree, results, duration_ms), vertex_class.value)
    return EXIT_OK


def cmd_classify_all(args: argparse.Namespace) -> int:
    tree = load_tree(args.input)
    start = time.perf_counter()
    classes = RecognitionClassifier.classify_all(tree, workers=args.threads)
    duration_ms = (time.perf_counter() - start) * 1000.0

    results = [{"vertex": vertex, "class": vertex_class.value} for vertex, vertex_class in enumerate(classes)]
    text = "".join(f"{vertex}\t{vertex_class.value}\n" for vertex, vertex_class in enumerate(classes))
    _emit(args, RunReport.for_tree("classify-all", tree, results, duration_ms), text)
    return EXIT_OK


def cmd_prune(args: argparse.Namespace) -> int:
    tree = load_tree(args.input)
    start = time.perf_counter()
    state = TreePruner.prune(RootedTree.root_at(tree, args.vertex))
    pruned = state.materialize()
    duration_ms = (time.perf_counter() - start) * 1000.0

    labels = pruned.labels
    results = {
        "root": args.vertex,
        "steps": state.steps,
        "vertices": list(labels),
        "edges": [[labels[u], labels[v]] for u, v in pruned.tree.edges()],
    }
    mapping = " ".join(f"{new}={original}" for new, original in enumerate(labels))
    text = f"# root {pruned.root}\n# labels {mapping}\n" + EdgeListCodec.serialize(pruned.tree)
    _emit(args, RunReport.for_tree("prune", tree, results, duration_ms), text)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    top = min(args.n_max, AGREEMENT_EXHAUSTIVE_CAP)
    bottom = top if args.min_order is None else args.min_order
    if bottom > top:
        raise UsageError(f"--min-order {bottom} is above the exhaustive cap {top}")

    start = time.perf_counter()
    summary = AgreementSummary()
    summary.merge(AgreementChecker.exhaustive_agreement(range(bottom, top + 1), workers=args.threads))
    if args.samples:
        summary.merge(AgreementChecker.random_agreement(args.n_max, args.samples, args.seed, workers=args.threads))
    duration_ms = (time.perf_counter() - start) * 1000.0

    lines = [str(summary)]
    for mismatch in summary.mismatches[:_MISMATCH_PRINT_LIMIT]:
        verdicts = " ".join(f"{method}={vertex_class.value}" for method, vertex_class in mismatch.classes.items())
        lines.append(f"# mismatch at vertex {mismatch.vertex}: {verdicts}")
        lines.append(EdgeListCodec.serialize(mismatch.tree).rstrip("\n"))

    results = {
        "trees": summary.trees,
        "vertices": summary.vertices,
        "random_trees": summary.random_trees,
        "mismatches": len(summary.mismatches),
    }
    _emit(args, RunReport.for_tree("oracle-check", None, results, duration_ms), "\n".join(lines))
    return EXIT_MISMATCH if summary.mismatches else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    rows = BenchmarkHarness.run(args.sizes, args.seed, args.repetitions, args.classify_all_limit)
    duration_ms = (time.perf_counter() - start) * 1000.0

    text = "n\tsingle_ms\tall_ms\n" + "".join(row.to_tsv() + "\n" for row in rows)
    report = RunReport.for_tree("bench", None, [row.to_dict() for row in rows], duration_ms)
    _emit(args, report, text)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    tree = TreeGenerator.random_tree(args.n, args.seed)
    text = EdgeListCodec.serialize(tree)
    report = RunReport.for_tree("gen", tree, {"edges": [list(edge) for edge in tree.edges()]}, (time.perf_counter() - start) * 1000.0)
    _emit(args, report, text)
    return EXIT_OK


COMMANDS: typing.Dict[str, typing.Callable[[argparse.Namespace], int]] = {
    "psi": cmd_psi,
    "classify": cmd_classify,
    "classify-all": cmd_classify_all,
    "prune": cmd_prune,
    "oracle-check": cmd_oracle_check,
    "bench": cmd_bench,
    "gen": cmd_gen,
}
