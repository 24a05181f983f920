import concurrent.futures
import logging
import random
import time
import typing
from dataclasses import dataclass, field

from treedissociation.algorithms.classifier import RecognitionClassifier
from treedissociation.algorithms.dissociation_dp import DissociationDP
from treedissociation.algorithms.pruning import TreePruner
from treedissociation.core.rooted_tree import RootedTree
from treedissociation.core.settings import ORACLE_MAX_ORDER
from treedissociation.core.tree import Tree
from treedissociation.core.utils.tree_generator import TreeGenerator
from treedissociation.core.vertex_class import VertexClass
from treedissociation.oracle.exhaustive import ExhaustiveOracle
from treedissociation.oracle.labeled_trees import LabeledTreeEnumerator


@dataclass(frozen=True)
class Mismatch:
    """A vertex on which the classification methods disagree.

    Attributes:
        tree (Tree): The tree.
        vertex (int): The vertex.
        classes (Dict[str, VertexClass]): Class reported by each method.
    """

    tree: Tree
    vertex: int
    classes: typing.Dict[str, VertexClass]


@dataclass
class AgreementSummary:
    """Totals of an agreement run."""

    trees: int = 0
    vertices: int = 0
    random_trees: int = 0
    mismatches: typing.List[Mismatch] = field(default_factory=list)

    def merge(self, other: "AgreementSummary") -> None:
        self.trees += other.trees
        self.vertices += other.vertices
        self.random_trees += other.random_trees
        self.mismatches.extend(other.mismatches)

    def __str__(self) -> str:
        return (
            f"trees={self.trees} vertices={self.vertices} "
            f"random_trees={self.random_trees} mismatches={len(self.mismatches)}"
        )


class AgreementChecker:
    """Cross-checks the recognition algorithm against the dynamic program and the exhaustive oracle."""

    @staticmethod
    def check_tree(
        tree: Tree,
        use_enumeration: bool = True,
        vertices: typing.Optional[typing.Iterable[int]] = None,
    ) -> typing.List[Mismatch]:
        """Compares the methods on the given vertices of one tree.

        Args:
            tree (Tree): The tree.
            use_enumeration (bool, optional): Also compare with subset enumeration when the tree is
                small enough. Defaults to True.
            vertices (Iterable[int], optional): Vertices to check. Defaults to all of them.

        Returns:
            List[Mismatch]: One entry per disagreeing vertex.
        """
        enumerated = None
        if use_enumeration and tree.n <= ORACLE_MAX_ORDER:
            enumerated = ExhaustiveOracle.oracle_classify_all(tree)

        mismatches = []
        for vertex in range(tree.n) if vertices is None else vertices:
            classes = {
                "recognition": RecognitionClassifier.classify_vertex(tree, vertex),
                "dp": DissociationDP.oracle_classify_via_dp(tree, vertex),
            }
            if enumerated is not None:
                classes["enumeration"] = enumerated[vertex]
            if len(set(classes.values())) > 1:
                mismatches.append(Mismatch(tree, vertex, classes))
        return mismatches

    @staticmethod
    def pruning_invariance(tree: Tree, v: int) -> bool:
        """True when v has the same enumerated class in the tree and in its pruning rooted at v."""
        pruned = TreePruner.prune(RootedTree.root_at(tree, v)).materialize()
        before = ExhaustiveOracle.oracle_classify_all(tree)[v]
        after = ExhaustiveOracle.oracle_classify_all(pruned.tree)[pruned.root]
        return before == after

    @classmethod
    def _check_sequences(cls, n: int, first: int, count: int) -> AgreementSummary:
        # Checks the labeled trees of order n whose Prüfer index lies in [first, first + count).
        summary = AgreementSummary()
        for tree in LabeledTreeEnumerator.enumerate_labeled_trees(n, first, first + count):
            summary.trees += 1
            summary.vertices += tree.n
            summary.mismatches.extend(cls.check_tree(tree))
        return summary

    @classmethod
    def exhaustive_agreement(cls, orders: typing.Iterable[int], workers: int = 1) -> AgreementSummary:
        """Checks every vertex of every labeled tree of the given orders.

        Args:
            orders (Iterable[int]): Tree orders to sweep.
            workers (int, optional): Process count. Defaults to 1.

        Returns:
            AgreementSummary: Totals and mismatches.
        """
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.exhaustive_agreement")
        summary = AgreementSummary()
        for n in orders:
            start = time.perf_counter()
            total = LabeledTreeEnumerator.labeled_tree_count(n)
            if workers == 1 or total < workers:
                summary.merge(cls._check_sequences(n, 0, total))
            else:
                chunk = -(-total // workers)
                firsts = list(range(0, total, chunk))
                with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
                    for part in executor.map(cls._check_sequences, [n] * len(firsts), firsts, [chunk] * len(firsts)):
                        summary.merge(part)
            logger.info(f"Checked {total} trees of order {n} in {time.perf_counter() - start:.6f} seconds.")
        return summary

    @classmethod
    def _check_random(cls, n_max: int, seeds: typing.Sequence[int]) -> AgreementSummary:
        summary = AgreementSummary()
        for seed in seeds:
            n = random.Random(seed).randint(1, n_max)
            tree = TreeGenerator.random_tree(n, seed)
            summary.random_trees += 1
            summary.vertices += n
            summary.mismatches.extend(cls.check_tree(tree, use_enumeration=n <= ORACLE_MAX_ORDER))
        return summary

    @classmethod
    def random_agreement(cls, n_max: int, samples: int, seed: int, workers: int = 1) -> AgreementSummary:
        """Checks every vertex of random trees with orders uniform in [1, n_max].

        Trees above ORACLE_MAX_ORDER vertices are only compared against the dynamic program.

        Args:
            n_max (int): Largest order.
            samples (int): Number of trees.
            seed (int): Master seed; tree i uses a seed derived from it.
            workers (int, optional): Process count. Defaults to 1.

        Returns:
            AgreementSummary: Totals and mismatches.
        """
        if n_max < 1:
            raise ValueError(f"n_max must be positive, got {n_max}")
        master = random.Random(seed)
        seeds = [master.getrandbits(64) for _ in range(samples)]

        summary = AgreementSummary()
        if workers == 1 or samples < workers:
            summary.merge(cls._check_random(n_max, seeds))
            return summary

        chunk = -(-samples // workers)
        parts = [seeds[first:first + chunk] for first in range(0, samples, chunk)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            for part in executor.map(cls._check_random, [n_max] * len(parts), parts):
                summary.merge(part)
        return summary
