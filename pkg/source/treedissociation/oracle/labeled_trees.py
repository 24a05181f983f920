import itertools
import random
import typing

import networkx

from treedissociation.core.errors import OutOfSupportedRange
from treedissociation.core.settings import LABELED_TREE_MAX_ORDER
from treedissociation.core.tree import Tree


class LabeledTreeEnumerator:
    """Every labeled tree of a small order, decoded from Prüfer sequences by networkx."""

    @staticmethod
    def labeled_tree_count(n: int) -> int:
        """Cayley's count n^(n-2) of labeled trees on n vertices (1 for n <= 2)."""
        if n < 1:
            raise ValueError(f"A tree needs at least one vertex, got n={n}")
        return 1 if n <= 2 else n ** (n - 2)

    @staticmethod
    def _decode(sequence: typing.Sequence[int], n: int) -> Tree:
        if n <= 2:
            return Tree.path(n)
        graph = networkx.from_prufer_sequence(list(sequence))
        return Tree.from_edges(n, graph.edges())

    @classmethod
    def enumerate_labeled_trees(
        cls, n: int, start: int = 0, stop: typing.Optional[int] = None
    ) -> typing.Iterator[Tree]:
        """Yields each of the n^(n-2) labeled trees on n vertices exactly once.

        Args:
            n (int): Order, between 1 and LABELED_TREE_MAX_ORDER.
            start (int, optional): Index of the first Prüfer sequence to decode. Defaults to 0.
            stop (int, optional): Index after the last sequence to decode. Defaults to all.

        Returns:
            Iterator[Tree]: The trees, in lexicographic order of their Prüfer sequences.

        Raises:
            OutOfSupportedRange: If n is outside 1..LABELED_TREE_MAX_ORDER.
        """
        if not 1 <= n <= LABELED_TREE_MAX_ORDER:
            raise OutOfSupportedRange(f"labeled trees can be enumerated for 1..{LABELED_TREE_MAX_ORDER} vertices, got {n}")
        sequences = itertools.product(range(n), repeat=max(n - 2, 0))
        return (cls._decode(sequence, n) for sequence in itertools.islice(sequences, start, stop))

    @classmethod
    def sample_labeled_trees(cls, n: int, count: int, seed: int) -> typing.Iterator[Tree]:
        """Yields count labeled trees on n vertices drawn uniformly (with replacement).

        Args:
            n (int): Order, at least 1.
            count (int): Number of trees.
            seed (int): Seed of the generator.

        Yields:
            Tree: The sampled trees.
        """
        if n < 1:
            raise ValueError(f"A tree needs at least one vertex, got n={n}")
        rng = random.Random(seed)
        for _ in range(count):
            yield cls._decode([rng.randrange(n) for _ in range(n - 2)], n)
