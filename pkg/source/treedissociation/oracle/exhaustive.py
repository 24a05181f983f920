import collections
import itertools
import logging
import time
import typing
from dataclasses import dataclass

import networkx

from treedissociation.core.errors import LabelOutOfRange, TooLarge
from treedissociation.core.settings import ORACLE_MAX_ORDER, SPLIT_SEARCH_THRESHOLD
from treedissociation.core.tree import Tree
from treedissociation.core.vertex_class import VertexClass

# State of the separator endpoint inside its own side.
_OUT, _IN_ALONE, _IN_PAIRED = 0, 1, 2


@dataclass(frozen=True)
class DissociationSet:
    """A vertex subset stored as a bit mask (bit v set when vertex v is a member)."""

    mask: int

    @classmethod
    def from_members(cls, members: typing.Iterable[int]) -> "DissociationSet":
        mask = 0
        for vertex in members:
            mask |= 1 << vertex
        return cls(mask)

    @property
    def members(self) -> typing.FrozenSet[int]:
        return frozenset(vertex for vertex in range(self.mask.bit_length()) if self.mask >> vertex & 1)

    def __contains__(self, vertex: object) -> bool:
        return isinstance(vertex, int) and vertex >= 0 and bool(self.mask >> vertex & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")


class ExhaustiveOracle:
    """Ground truth by exhaustive search over vertex subsets of small trees.

    Nothing here touches the recognition algorithm or the dynamic program; the definition-level
    checks run on an independent networkx graph.
    """

    @staticmethod
    def as_graph(tree: Tree) -> networkx.Graph:
        """Copies the tree into a networkx graph."""
        graph = networkx.Graph()
        graph.add_nodes_from(range(tree.n))
        graph.add_edges_from(tree.edges())
        return graph

    @staticmethod
    def _check_members(tree: Tree, members: typing.Collection[int]) -> None:
        for vertex in members:
            if not 0 <= vertex < tree.n:
                raise LabelOutOfRange(f"vertex {vertex} is outside 0..{tree.n - 1}")

    @classmethod
    def is_dissociation_set(cls, tree: Tree, members: typing.Iterable[int]) -> bool:
        """True iff every member has at most one neighbor inside the set.

        Args:
            tree (Tree): The tree.
            members (Iterable[int]): Candidate vertex subset.

        Returns:
            bool: Whether the induced subgraph has maximum degree at most 1.
        """
        members = set(members)
        cls._check_members(tree, members)
        induced = cls.as_graph(tree).subgraph(members)
        return all(degree <= 1 for _, degree in induced.degree())

    @classmethod
    def complement_is_three_path_cover(cls, tree: Tree, members: typing.Iterable[int]) -> bool:
        """True iff the vertices outside members meet every path on three vertices.

        Args:
            tree (Tree): The tree.
            members (Iterable[int]): Vertex subset whose complement is tested.

        Returns:
            bool: Whether the complement is a 3-path vertex cover.
        """
        members = set(members)
        cls._check_members(tree, members)
        graph = cls.as_graph(tree)
        for middle in graph.nodes:
            for first, last in itertools.combinations(graph.neighbors(middle), 2):
                if {first, middle, last} <= members:
                    return False
        return True

    @classmethod
    def enumerate_max_diss_sets(cls, tree: Tree) -> typing.List[DissociationSet]:
        """Lists every maximum dissociation set of a small tree.

        Subsets are grown vertex by vertex in breadth-first order, so the only decided neighbor of
        a new vertex is its parent; a choice that gives a vertex a second selected neighbor is
        rejected at once, and branches that cannot reach the best size found so far are cut.
        Above SPLIT_SEARCH_THRESHOLD vertices the tree is cut at its most balanced edge and the
        two halves are searched separately, then joined.

        Args:
            tree (Tree): A tree with at most ORACLE_MAX_ORDER vertices.

        Returns:
            List[DissociationSet]: All maximum dissociation sets, ordered by mask.

        Raises:
            TooLarge: If the tree has more than ORACLE_MAX_ORDER vertices.
        """
        if tree.n > ORACLE_MAX_ORDER:
            raise TooLarge(f"exhaustive enumeration supports at most {ORACLE_MAX_ORDER} vertices, got {tree.n}")
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.enumerate_max_diss_sets")
        start = time.perf_counter()

        if tree.n > SPLIT_SEARCH_THRESHOLD:
            masks = cls._split_search(tree)
        else:
            _, masks = cls._side_search(tree, 0, None)[None]

        found = [DissociationSet(mask) for mask in sorted(masks)]
        logger.debug(
            f"Finished enumerating {len(found)} maximum sets on {tree.n} vertices "
            f"in {time.perf_counter() - start:.6f} seconds."
        )
        return found

    @classmethod
    def oracle_classify_all(cls, tree: Tree) -> typing.List[VertexClass]:
        """Classifies every vertex straight from the enumerated maximum sets.

        Args:
            tree (Tree): A tree with at most ORACLE_MAX_ORDER vertices.

        Returns:
            List[VertexClass]: Class of each vertex, indexed by label.

        Raises:
            TooLarge: If the tree has more than ORACLE_MAX_ORDER vertices.
        """
        sets = cls.enumerate_max_diss_sets(tree)
        in_all = -1
        in_any = 0
        for found in sets:
            in_all &= found.mask
            in_any |= found.mask

        classes = []
        for vertex in range(tree.n):
            if in_all >> vertex & 1:
                classes.append(VertexClass.ALL)
            elif in_any >> vertex & 1:
                classes.append(VertexClass.SOME)
            else:
                classes.append(VertexClass.NONE)
        return classes

    @staticmethod
    def _side_search(
        tree: Tree, start: int, blocked: typing.Optional[int]
    ) -> typing.Dict[typing.Optional[int], typing.Tuple[int, typing.List[int]]]:
        # Searches the component of start once the edge start-blocked is removed. Without a
        # blocked vertex the whole tree is one group keyed None; otherwise the best sets are
        # grouped by the state of start (_OUT, _IN_ALONE, _IN_PAIRED).
        adjacency = tree.adjacency
        order = [start]
        parent = {start: None}
        queue = collections.deque((start,))
        while queue:
            vertex = queue.popleft()
            for neighbor in adjacency[vertex]:
                if neighbor != blocked and neighbor not in parent:
                    parent[neighbor] = vertex
                    order.append(neighbor)
                    queue.append(neighbor)

        size = len(order)
        position = {vertex: index for index, vertex in enumerate(order)}
        parent_index = [0 if parent[vertex] is None else position[parent[vertex]] for vertex in order]
        selected = [False] * size
        paired = [False] * size
        best: typing.Dict[typing.Optional[int], typing.Tuple[int, typing.List[int]]] = {}

        def reachable_groups() -> typing.Tuple[typing.Optional[int], ...]:
            if blocked is None:
                return (None,)
            if not selected[0]:
                return (_OUT,)
            if paired[0]:
                return (_IN_PAIRED,)
            return (_IN_ALONE, _IN_PAIRED)

        def visit(index: int, count: int, mask: int) -> None:
            if index == size:
                key = reachable_groups()[0]
                current, masks = best.get(key, (-1, []))
                if count > current:
                    best[key] = (count, [mask])
                elif count == current:
                    masks.append(mask)
                return

            # A branch survives while it can still tie the best size of some group it may end in.
            if index > 0 and all(count + size - index < best.get(key, (-1,))[0] for key in reachable_groups()):
                return

            vertex = order[index]
            up = parent_index[index]
            if index == 0 or not selected[up]:
                selected[index] = True
                visit(index + 1, count + 1, mask | 1 << vertex)
                selected[index] = False
            elif not paired[up]:
                selected[index] = True
                paired[index] = paired[up] = True
                visit(index + 1, count + 1, mask | 1 << vertex)
                paired[index] = paired[up] = False
                selected[index] = False

            visit(index + 1, count, mask)

        visit(0, 0, 0)
        return best

    @classmethod
    def _split_search(cls, tree: Tree) -> typing.List[int]:
        left, right = cls._balanced_edge(tree)
        left_best = cls._side_search(tree, left, right)
        right_best = cls._side_search(tree, right, left)

        best = -1
        masks: typing.List[int] = []
        for (left_state, (left_size, left_masks)), (right_state, (right_size, right_masks)) in itertools.product(
            left_best.items(), right_best.items()
        ):
            both_in = left_state != _OUT and right_state != _OUT
            if both_in and (left_state == _IN_PAIRED or right_state == _IN_PAIRED):
                continue
            total = left_size + right_size
            if total < best:
                continue
            if total > best:
                best = total
                masks = []
            masks.extend(left_mask | right_mask for left_mask in left_masks for right_mask in right_masks)
        return masks

    @staticmethod
    def _balanced_edge(tree: Tree) -> typing.Tuple[int, int]:
        # Subtree sizes from vertex 0 give, for each edge, the size of the side below it.
        n = tree.n
        adjacency = tree.adjacency
        parent = [-1] * n
        order = [0]
        seen = [False] * n
        seen[0] = True
        for vertex in order:
            for neighbor in adjacency[vertex]:
                if not seen[neighbor]:
                    seen[neighbor] = True
                    parent[neighbor] = vertex
                    order.append(neighbor)
        below = [1] * n
        for vertex in reversed(order[1:]):
            below[parent[vertex]] += below[vertex]

        child = min(order[1:], key=lambda vertex: (max(below[vertex], n - below[vertex]), vertex))
        return parent[child], child
