import logging
import re
import time
import typing

from treedissociation.core.errors import MalformedLine
from treedissociation.core.tree import Tree, TreeBuilder

_LABEL = re.compile(r"-?\d+")


class EdgeListCodec:
    """Reads and writes the edge-list text format.

    The format is line oriented:

    * blank lines and lines starting with ``#`` are ignored;
    * an optional header ``n <count>`` may precede the first edge;
    * every other line holds two integer labels separated by whitespace.

    Without a header the vertex count is one more than the largest label. Labels must be
    dense: a label that never appears in an edge is reported as a disconnected vertex.
    """

    @classmethod
    def parse_edge_list(cls, text: typing.Union[str, typing.Iterable[str]]) -> Tree:
        """Parses an edge list into a validated tree.

        Args:
            text (Union[str, Iterable[str]]): Whole document or an iterable of lines (e.g. an open file).

        Returns:
            Tree: The parsed tree.

        Raises:
            MalformedLine: If a line cannot be read, or the input holds no header and no edges.
            LabelOutOfRange, SelfLoop, DuplicateEdge, CycleDetected, Disconnected: If the edges are not a tree.
        """
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.parse_edge_list")
        start = time.perf_counter()

        lines = text.splitlines() if isinstance(text, str) else text

        header: typing.Optional[int] = None
        edges: typing.List[typing.Tuple[int, int, int]] = []
        last_line = 0
        largest = -1

        for number, raw in enumerate(lines, start=1):
            last_line = number
            line = raw.lstrip("\ufeff").strip() if number == 1 else raw.strip()
            if not line or line.startswith("#"):
                continue

            tokens = line.split()
            if tokens[0] == "n":
                if header is not None or edges:
                    raise MalformedLine("the 'n <count>' header must come once, before any edge", number)
                if len(tokens) != 2 or not _LABEL.fullmatch(tokens[1]):
                    raise MalformedLine(f"expected 'n <count>', got {line!r}", number)
                header = int(tokens[1])
                if header < 1:
                    raise MalformedLine(f"vertex count must be at least 1, got {header}", number)
                continue

            if len(tokens) != 2 or not all(_LABEL.fullmatch(token) for token in tokens):
                raise MalformedLine(f"expected two integer labels, got {line!r}", number)
            u, v = int(tokens[0]), int(tokens[1])
            edges.append((u, v, number))
            largest = max(largest, u, v)

        if header is None:
            if not edges:
                raise MalformedLine("no header and no edges", last_line or None)
            n = largest + 1
        else:
            n = header

        # Short of n-1 edges the input is disconnected; only touched labels get builder state.
        builder = TreeBuilder(n, sparse=len(edges) < n - 1)
        for u, v, number in edges:
            builder.add_edge(u, v, number)
        tree = builder.build(last_line)

        logger.debug(f"Finished parsing {n} vertices in {time.perf_counter() - start:.6f} seconds.")
        return tree

    @staticmethod
    def serialize(tree: Tree) -> str:
        """Writes the canonical edge list of a tree.

        The single-vertex tree is written as the header ``n 1``; larger trees need no header
        because their labels are dense.

        Args:
            tree (Tree): Tree to write.

        Returns:
            str: One ``u v`` line per edge with u < v, ascending, newline terminated.
        """
        if tree.n == 1:
            return "n 1\n"
        return "".join(f"{u} {v}\n" for u, v in tree.edges())
