import logging
import random
import time
import typing

from treedissociation.core.tree import Tree


class TreeGenerator:
    """Random labeled trees through Prüfer sequences."""

    @staticmethod
    def decode_prufer(sequence: typing.Sequence[int], n: typing.Optional[int] = None) -> Tree:
        """Decodes a Prüfer sequence in linear time.

        Args:
            sequence (Sequence[int]): Labels in 0..n-1, of length n-2.
            n (int, optional): Vertex count. Defaults to len(sequence) + 2.

        Returns:
            Tree: The labeled tree encoded by the sequence.
        """
        if n is None:
            n = len(sequence) + 2
        if n < 1:
            raise ValueError(f"A tree needs at least one vertex, got n={n}")
        if n <= 2:
            if sequence:
                raise ValueError(f"A tree on {n} vertices has an empty Prüfer sequence")
            return Tree.path(n)
        if len(sequence) != n - 2:
            raise ValueError(f"A tree on {n} vertices needs a sequence of length {n - 2}, got {len(sequence)}")

        degree = [1] * n
        for label in sequence:
            if not 0 <= label < n:
                raise ValueError(f"Prüfer label {label} is outside 0..{n - 1}")
            degree[label] += 1

        adjacency: typing.List[typing.List[int]] = [[] for _ in range(n)]
        pointer = degree.index(1)
        leaf = pointer
        for label in sequence:
            adjacency[leaf].append(label)
            adjacency[label].append(leaf)
            degree[label] -= 1
            if degree[label] == 1 and label < pointer:
                leaf = label
            else:
                pointer += 1
                while degree[pointer] != 1:
                    pointer += 1
                leaf = pointer
        adjacency[leaf].append(n - 1)
        adjacency[n - 1].append(leaf)

        return Tree.from_trusted_adjacency(n, [tuple(sorted(neighbors)) for neighbors in adjacency])

    @classmethod
    def random_tree(cls, n: int, seed: int) -> Tree:
        """Draws a uniformly random labeled tree on n vertices.

        The same (n, seed) pair always yields the same tree.

        Args:
            n (int): Vertex count, at least 1.
            seed (int): Seed of the generator.

        Returns:
            Tree: The random tree.
        """
        if n < 1:
            raise ValueError(f"A tree needs at least one vertex, got n={n}")
        start = time.perf_counter()

        rng = random.Random(seed)
        sequence = [rng.randrange(n) for _ in range(n - 2)]
        tree = cls.decode_prufer(sequence, n)

        logging.getLogger(f"{__name__}.{cls.__name__}.random_tree").debug(
            f"Finished random_tree({n}, {seed}) in {time.perf_counter() - start:.6f} seconds."
        )
        return tree
