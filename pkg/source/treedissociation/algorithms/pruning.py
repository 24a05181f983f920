import logging
import time
import typing
from dataclasses import dataclass

from treedissociation.algorithms.path_rules import PathRules, WitnessMode
from treedissociation.core.errors import (
    ChildNotPath,
    DescendantDegreeViolation,
    IsRoot,
    NotABranchVertex,
    NotASpider,
)
from treedissociation.core.rooted_tree import RootedTree
from treedissociation.core.tree import Tree


@dataclass(frozen=True)
class ChildClassCounts:
    """Children of a vertex split by the order of their (path) subtree modulo 3.

    Attributes:
        c0 (int): Children whose path has order ≡ 0 (mod 3).
        c1 (int): Children whose path has order ≡ 1 (mod 3).
        c2 (int): Children whose path has order ≡ 2 (mod 3).
        c1_member (int, optional): The child counted in c1 when c1 == 1, else None.
    """

    c0: int
    c1: int
    c2: int
    c1_member: typing.Optional[int] = None

    @staticmethod
    def admits_vertex(c1: int, c2: int) -> bool:
        return c2 == 0 and c1 <= 1

    def keeps_vertex(self) -> bool:
        """True when no child forbids adding the vertex on top of maximum sets of its child paths."""
        return self.admits_vertex(self.c1, self.c2)


@dataclass(frozen=True)
class MaterializedPruning:
    """A pruned tree relabeled densely so it can be used as an ordinary Tree.

    Attributes:
        tree (Tree): The surviving vertices, relabeled in ascending original label.
        root (int): The root's new label.
        labels (Tuple[int, ...]): Original label of every new label.
    """

    tree: Tree
    root: int
    labels: typing.Tuple[int, ...]


class PrunedTree:
    """Mutable state of the pruning process on one rooted tree.

    A vertex is deleted by clearing its ``surviving`` flag; child lists are compacted lazily the
    next time they are read. ``pathlen`` holds the order of T_u for every surviving vertex u
    whose subtree is a path, and 0 where it is undefined.
    """

    def __init__(self, rooted: RootedTree) -> None:
        """Initializes the state before any pruning step.

        Args:
            rooted (RootedTree): The rooted tree to prune. It is not modified.
        """
        n = rooted.n
        self._rooted = rooted
        self._root = rooted.root
        self._parent = rooted.parent
        self._surviving = [True] * n
        self._children: typing.List[typing.Sequence[int]] = list(rooted.children)
        self._live_children = [len(children) for children in rooted.children]
        self._pathlen = [0] * n
        self._steps = 0

        pathlen = self._pathlen
        for vertex in reversed(rooted.order):
            below = self._children[vertex]
            if not below:
                pathlen[vertex] = 1
            elif len(below) == 1 and pathlen[below[0]]:
                pathlen[vertex] = pathlen[below[0]] + 1

    @classmethod
    def initial(cls, rooted: RootedTree) -> "PrunedTree":
        return cls(rooted)

    @property
    def rooted(self) -> RootedTree:
        return self._rooted

    @property
    def root(self) -> int:
        return self._root

    @property
    def steps(self) -> int:
        """Number of prune_step applications so far."""
        return self._steps

    @property
    def surviving(self) -> typing.FrozenSet[int]:
        return frozenset(vertex for vertex, alive in enumerate(self._surviving) if alive)

    @property
    def pathlen(self) -> typing.Dict[int, int]:
        """Path order of T_u for every surviving u whose subtree is a path."""
        return {
            vertex: length
            for vertex, length in enumerate(self._pathlen)
            if length and self._surviving[vertex]
        }

    def is_surviving(self, u: int) -> bool:
        return self._surviving[u]

    def surviving_children(self, u: int) -> typing.Tuple[int, ...]:
        """Returns the surviving children of u, ascending."""
        return tuple(self._compact(u))

    def degree(self, u: int) -> int:
        """Degree of u in the surviving tree."""
        if not self._surviving[u]:
            raise ValueError(f"Vertex {u} was pruned")
        return self._live_children[u] + (0 if u == self._root else 1)

    def child_classes(self, u: int) -> ChildClassCounts:
        """Counts the children of u by the order of their path modulo 3.

        Args:
            u (int): A surviving vertex whose child subtrees are all paths.

        Returns:
            ChildClassCounts: The class counts.

        Raises:
            ChildNotPath: If some child subtree of u is not a path.
        """
        if not self._surviving[u]:
            raise ValueError(f"Vertex {u} was pruned")

        children = self._compact(u)
        for child in children:
            if not self._pathlen[child]:
                raise ChildNotPath(f"subtree of child {child} of vertex {u} is not a path")

        c0, c1, c2, c1_member = self._residues(children)
        return ChildClassCounts(c0, c1, c2, c1_member if c1 == 1 else None)

    def prune_step(self, u: int) -> "PrunedTree":
        """Applies one pruning step at the branch vertex u.

        If some child path has order ≡ 2 (mod 3), or two have order ≡ 1, the whole subtree D[u] is
        deleted. Otherwise every child subtree except one kept child z is deleted: z is the only
        child of order ≡ 1 if there is one, else the child of smallest label.

        Args:
            u (int): Surviving non-root vertex with at least two surviving children, all of whose
                proper descendants have degree at most 2.

        Returns:
            PrunedTree: This state, updated in place.

        Raises:
            IsRoot: If u is the root.
            NotABranchVertex: If u is pruned or has fewer than two surviving children.
            DescendantDegreeViolation: If a child subtree of u is not yet a path.
        """
        if u == self._root:
            raise IsRoot(f"vertex {u} is the root")
        if not self._surviving[u]:
            raise NotABranchVertex(f"vertex {u} was pruned")
        children = self._compact(u)
        if len(children) < 2:
            raise NotABranchVertex(f"vertex {u} has degree {len(children) + 1} in the pruned tree")
        for child in children:
            if not self._pathlen[child]:
                raise DescendantDegreeViolation(f"subtree of child {child} of vertex {u} still branches")

        logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}.prune_step")
        residues = self._apply_step(u, children)
        if logger.isEnabledFor(logging.DEBUG):
            self._log_step(logger, u, residues)
        return self

    def _residues(self, children: typing.Sequence[int]) -> typing.Tuple[int, int, int, typing.Optional[int]]:
        # (c0, c1, c2, the last child counted in c1); children must all be paths.
        pathlen = self._pathlen
        counts = [0, 0, 0]
        c1_member = None
        for child in children:
            residue = pathlen[child] % 3
            counts[residue] += 1
            if residue == 1:
                c1_member = child
        return counts[0], counts[1], counts[2], c1_member

    def _apply_step(self, u: int, children: typing.Sequence[int]) -> typing.Tuple[int, int, int, typing.Optional[int]]:
        residues = self._residues(children)
        _, c1, c2, c1_member = residues
        parent = self._parent[u]
        if not ChildClassCounts.admits_vertex(c1, c2):
            self._delete_subtree(u)
            self._live_children[parent] -= 1
        else:
            kept = c1_member if c1 == 1 else children[0]
            for child in children:
                if child != kept:
                    self._delete_subtree(child)
            self._children[u] = [kept]
            self._live_children[u] = 1
            self._pathlen[u] = self._pathlen[kept] + 1

        self._steps += 1
        self._settle_upwards(parent)
        return residues

    def _log_step(
        self, logger: logging.Logger, u: int, residues: typing.Tuple[int, int, int, typing.Optional[int]]
    ) -> None:
        c0, c1, c2, _ = residues
        if self._surviving[u]:
            logger.debug(f"Kept child {self._children[u][0]} of {u} with child classes (c0={c0}, c1={c1}, c2={c2})")
        else:
            logger.debug(f"Deleted D[{u}] with child classes (c0={c0}, c1={c1}, c2={c2})")

    def materialize(self) -> MaterializedPruning:
        """Builds the surviving tree as an ordinary Tree with dense labels."""
        labels = tuple(vertex for vertex, alive in enumerate(self._surviving) if alive)
        relabel = {vertex: index for index, vertex in enumerate(labels)}
        edges = [(relabel[self._parent[vertex]], relabel[vertex]) for vertex in labels if vertex != self._root]
        return MaterializedPruning(Tree.from_edges(len(labels), edges), relabel[self._root], labels)

    def _compact(self, u: int) -> typing.Sequence[int]:
        children = self._children[u]
        if len(children) != self._live_children[u]:
            surviving = self._surviving
            children = [child for child in children if surviving[child]]
            self._children[u] = children
        return children

    def _delete_subtree(self, u: int) -> None:
        surviving = self._surviving
        stack = [u]
        while stack:
            vertex = stack.pop()
            surviving[vertex] = False
            stack.extend(child for child in self._children[vertex] if surviving[child])

    def _settle_upwards(self, vertex: typing.Optional[int]) -> None:
        # Every ancestor of a branching vertex had an undefined pathlen, so each pass
        # of this loop defines a new value and the total work stays linear.
        pathlen = self._pathlen
        while vertex is not None:
            live = self._live_children[vertex]
            if live >= 2:
                return
            if live == 0:
                pathlen[vertex] = 1
            else:
                child = self._compact(vertex)[0]
                if not pathlen[child]:
                    return
                pathlen[vertex] = pathlen[child] + 1
            vertex = self._parent[vertex]


class TreePruner:
    """The pruning process and the closed forms for spiders (trees whose non-root vertices have degree ≤ 2)."""

    @classmethod
    def prune(
        cls,
        rooted: RootedTree,
        on_step: typing.Optional[typing.Callable[[int, ChildClassCounts, PrunedTree], None]] = None,
    ) -> PrunedTree:
        """Prunes the rooted tree until every non-root vertex has degree at most 2.

        Branch vertices are visited deepest first, ties by smallest label; a vertex that stopped
        branching, or was deleted, before its turn is skipped.

        Args:
            rooted (RootedTree): Tree rooted at the vertex being classified.
            on_step (Callable[[int, ChildClassCounts, PrunedTree], None], optional): Called after every
                step with the pruned vertex, its child classes before the step and the state.
                Defaults to None.

        Returns:
            PrunedTree: The final state.
        """
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.prune")
        step_logger = logging.getLogger(f"{__name__}.{PrunedTree.__name__}.prune_step")
        log_steps = step_logger.isEnabledFor(logging.DEBUG)
        start = time.perf_counter()

        state = PrunedTree(rooted)
        live_children = state._live_children
        surviving = state._surviving
        for level in reversed(rooted.levels[1:]):
            for vertex in level:
                if surviving[vertex] and live_children[vertex] >= 2:
                    residues = state._apply_step(vertex, state._compact(vertex))
                    if log_steps:
                        state._log_step(step_logger, vertex, residues)
                    if on_step is not None:
                        c0, c1, c2, c1_member = residues
                        on_step(vertex, ChildClassCounts(c0, c1, c2, c1_member if c1 == 1 else None), state)

        logger.debug(
            f"Finished prune at root {rooted.root} with {state.steps} steps "
            f"in {time.perf_counter() - start:.6f} seconds."
        )
        return state

    @staticmethod
    def _spider_state(rooted: RootedTree) -> PrunedTree:
        if not rooted.is_spider():
            raise NotASpider(f"tree rooted at {rooted.root} has a non-root vertex of degree 3 or more")
        return PrunedTree(rooted)

    @classmethod
    def psi_spider(cls, rooted: RootedTree) -> int:
        """Returns the dissociation number of a spider.

        It is the sum over the legs of their path dissociation numbers, plus one for the root
        when no leg has order ≡ 2 (mod 3) and at most one has order ≡ 1.

        Args:
            rooted (RootedTree): A spider rooted at its center.

        Returns:
            int: The dissociation number.

        Raises:
            NotASpider: If some non-root vertex has two or more children.
        """
        state = cls._spider_state(rooted)
        counts = state.child_classes(rooted.root)
        total = sum(PathRules.psi_path(state._pathlen[child]) for child in rooted.children[rooted.root])
        return total + (1 if counts.keeps_vertex() else 0)

    @classmethod
    def spider_witness(cls, rooted: RootedTree) -> typing.FrozenSet[int]:
        """Builds a maximum dissociation set of a spider from per-leg path witnesses.

        When the root can be added, legs of order ≡ 0 (mod 3) leave their first vertex out and the
        leg of order ≡ 1 keeps its first vertex isolated, so the root ends up with at most one
        selected neighbor. Otherwise every leg contributes its own canonical witness and the root
        stays out.

        Args:
            rooted (RootedTree): A spider rooted at its center.

        Returns:
            FrozenSet[int]: A dissociation set of size psi_spider(rooted).

        Raises:
            NotASpider: If some non-root vertex has two or more children.
        """
        state = cls._spider_state(rooted)
        root = rooted.root
        with_root = state.child_classes(root).keeps_vertex()
        children = rooted.children

        selected = {root} if with_root else set()
        for head in children[root]:
            leg = [head]
            while children[leg[-1]]:
                leg.append(children[leg[-1]][0])
            positions = PathRules.path_witness(len(leg), WitnessMode.for_order(len(leg)))
            selected.update(leg[position - 1] for position in positions)
        return frozenset(selected)
