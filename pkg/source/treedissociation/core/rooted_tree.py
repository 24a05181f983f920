import itertools
import logging
import time
import typing

from treedissociation.core.tree import Tree


class RootedTree:
    """A tree together with a root and the breadth-first structure hanging from it.

    Attributes are computed once by root_at and never change afterwards:

    * parent: parent of every vertex, None for the root.
    * children: per-vertex children, ascending label.
    * depth: edge distance from the root.
    * order: breadth-first visiting order, starting with the root.
    * levels: vertices grouped by depth, each group in ascending label.
    """

    __slots__ = ("_base", "_root", "_parent", "_children", "_depth", "_order", "_levels")

    def __init__(
        self,
        base: Tree,
        root: int,
        parent: typing.Sequence[typing.Optional[int]],
        children: typing.Sequence[typing.Tuple[int, ...]],
        depth: typing.Sequence[int],
        levels: typing.Sequence[typing.Sequence[int]],
    ) -> None:
        self._base = base
        self._root = root
        self._parent = tuple(parent)
        self._children = tuple(children)
        self._depth = tuple(depth)
        self._levels = tuple(tuple(sorted(level)) for level in levels)
        self._order = tuple(itertools.chain.from_iterable(levels))

    @classmethod
    def root_at(cls, tree: Tree, v: int) -> "RootedTree":
        """Roots the tree at v with a breadth-first traversal.

        Args:
            tree (Tree): Tree to root.
            v (int): The root.

        Returns:
            RootedTree: Parent, children, depth and level structure of the rooted tree.

        Raises:
            LabelOutOfRange: If v is not a vertex of the tree.
        """
        tree.check_vertex(v)
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.root_at")
        start = time.perf_counter()

        n = tree.n
        adjacency = tree.adjacency
        parent: typing.List[typing.Optional[int]] = [None] * n
        depth = [0] * n
        children: typing.List[typing.Tuple[int, ...]] = [()] * n
        levels = [[v]]

        frontier = levels[0]
        while frontier:
            next_depth = len(levels)
            below_frontier: typing.List[int] = []
            for u in frontier:
                up = parent[u]
                below = tuple([w for w in adjacency[u] if w != up])
                if below:
                    for w in below:
                        parent[w] = u
                        depth[w] = next_depth
                    children[u] = below
                    below_frontier.extend(below)
            if below_frontier:
                levels.append(below_frontier)
            frontier = below_frontier

        rooted = cls(tree, v, parent, children, depth, levels)
        logger.debug(f"Finished root_at({v}) on {n} vertices in {time.perf_counter() - start:.6f} seconds.")
        return rooted

    @property
    def base(self) -> Tree:
        return self._base

    @property
    def root(self) -> int:
        return self._root

    @property
    def n(self) -> int:
        return self._base.n

    @property
    def parent(self) -> typing.Tuple[typing.Optional[int], ...]:
        return self._parent

    @property
    def children(self) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        return self._children

    @property
    def depth(self) -> typing.Tuple[int, ...]:
        return self._depth

    @property
    def order(self) -> typing.Tuple[int, ...]:
        return self._order

    @property
    def levels(self) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        return self._levels

    @property
    def height(self) -> int:
        """Largest depth."""
        return len(self._levels) - 1

    def subtree(self, u: int) -> typing.List[int]:
        """Returns D[u]: u followed by all of its descendants in breadth-first order."""
        self._base.check_vertex(u)
        found = [u]
        index = 0
        while index < len(found):
            found.extend(self._children[found[index]])
            index += 1
        return found

    def non_root_branch_vertices(self) -> typing.FrozenSet[int]:
        """Returns the branch vertices other than the root."""
        return self._base.branch_vertices() - {self._root}

    def is_spider(self) -> bool:
        """True when every non-root vertex has at most one child."""
        return all(len(self._children[u]) <= 1 for u in range(self.n) if u != self._root)

    def __repr__(self) -> str:
        return f"RootedTree(root={self._root}, n={self.n})"
