import collections
import typing

from treedissociation.core.errors import (
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    LabelOutOfRange,
    SelfLoop,
)

Edge = typing.Tuple[int, int]


class _SparseComponents(dict):
    """Union-find parents stored only for vertices that were touched."""

    def __missing__(self, vertex: int) -> int:
        return vertex


class TreeBuilder:
    """Incremental tree validator used by the edge-list parser and by Tree.from_edges.

    Edges are added one at a time; every violation is raised as soon as it is seen, so
    parse errors can name the line that caused them.
    """

    def __init__(self, n: int, sparse: bool = False) -> None:
        """Initializes a builder for vertices 0..n-1.

        Args:
            n (int): Vertex count, at least 1.
            sparse (bool, optional): Keep per-vertex state only for vertices that appear in an edge.
                Memory then follows the number of edges instead of n. Defaults to False.
        """
        if n < 1:
            raise ValueError(f"A tree needs at least one vertex, got n={n}")
        self._n = n
        self._edges: typing.Set[Edge] = set()
        self._adjacency: typing.Union[typing.List[typing.List[int]], typing.DefaultDict[int, typing.List[int]]]
        self._component: typing.Union[typing.List[int], _SparseComponents]
        if sparse:
            self._adjacency = collections.defaultdict(list)
            self._component = _SparseComponents()
        else:
            self._adjacency = [[] for _ in range(n)]
            self._component = list(range(n))

    def _find(self, vertex: int) -> int:
        component = self._component
        while component[vertex] != vertex:
            component[vertex] = component[component[vertex]]
            vertex = component[vertex]
        return vertex

    def add_edge(self, u: int, v: int, line: typing.Optional[int] = None) -> None:
        """Adds an edge after checking labels, loops, duplicates and cycles.

        Args:
            u (int): First endpoint.
            v (int): Second endpoint.
            line (int, optional): Input line reported in errors. Defaults to None.

        Raises:
            LabelOutOfRange: If an endpoint is not in 0..n-1.
            SelfLoop: If u == v.
            DuplicateEdge: If the edge was already added.
            CycleDetected: If u and v are already connected.
        """
        for label in (u, v):
            if not 0 <= label < self._n:
                raise LabelOutOfRange(f"label {label} is outside 0..{self._n - 1}", line)
        if u == v:
            raise SelfLoop(f"edge {u}-{v} is a self-loop", line)

        key = (u, v) if u < v else (v, u)
        if key in self._edges:
            raise DuplicateEdge(f"edge {key[0]}-{key[1]} appears twice", line)

        root_u = self._find(u)
        root_v = self._find(v)
        if root_u == root_v:
            raise CycleDetected(f"edge {u}-{v} closes a cycle", line)

        self._component[root_u] = root_v
        self._edges.add(key)
        self._adjacency[u].append(v)
        self._adjacency[v].append(u)

    def build(self, line: typing.Optional[int] = None) -> "Tree":
        """Finishes the tree.

        Args:
            line (int, optional): Input line reported if the edges leave vertices unreachable.

        Returns:
            Tree: The validated tree.

        Raises:
            Disconnected: If fewer than n-1 edges were added.
        """
        if len(self._edges) != self._n - 1:
            anchor = self._find(0)
            unreachable = next(vertex for vertex in range(self._n) if self._find(vertex) != anchor)
            raise Disconnected(
                f"{self._n} vertices need {self._n - 1} edges, got {len(self._edges)}; "
                f"vertex {unreachable} is unreachable from vertex 0",
                line,
            )
        adjacency = self._adjacency
        return Tree.from_trusted_adjacency(self._n, [tuple(sorted(adjacency[vertex])) for vertex in range(self._n)])


class Tree:
    """Immutable undirected tree on the dense labels 0..n-1.

    Neighbor lists are kept in ascending label order, which makes every traversal
    (and every tie-break built on top of one) deterministic.
    """

    __slots__ = ("_n", "_adjacency")

    def __init__(self, n: int, edges: typing.Iterable[Edge]) -> None:
        """Builds and validates a tree.

        Args:
            n (int): Vertex count.
            edges (Iterable[Tuple[int, int]]): Exactly n-1 edges.

        Raises:
            TreeInputError: If the edges do not form a tree on 0..n-1.
        """
        builder = TreeBuilder(n)
        for u, v in edges:
            builder.add_edge(u, v)
        built = builder.build()
        self._n = built._n
        self._adjacency = built._adjacency

    @classmethod
    def from_trusted_adjacency(cls, n: int, adjacency: typing.Sequence[typing.Tuple[int, ...]]) -> "Tree":
        """Wraps adjacency that is already known to be a tree with sorted neighbor tuples.

        No validation is done; generators whose output is a tree by construction use this.
        """
        tree = cls.__new__(cls)
        tree._n = n
        tree._adjacency = tuple(adjacency)
        return tree

    @classmethod
    def from_edges(cls, n: int, edges: typing.Iterable[Edge]) -> "Tree":
        """Alias of the constructor that reads better at call sites."""
        return cls(n, edges)

    @classmethod
    def single_vertex(cls) -> "Tree":
        """Returns the one-vertex tree."""
        return cls(1, ())

    @classmethod
    def path(cls, n: int) -> "Tree":
        """Returns the path 0-1-...-(n-1)."""
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "Tree":
        """Returns the star with center 0 and leaves 1..leaves."""
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def spider(cls, leg_lengths: typing.Sequence[int]) -> "Tree":
        """Returns a spider: root 0 with one path (leg) per entry of leg_lengths.

        Legs are laid out consecutively: the first leg is 1..l1 with 1 adjacent to the root,
        the second starts at l1+1, and so on.

        Args:
            leg_lengths (Sequence[int]): Vertex count of each leg, all positive.

        Returns:
            Tree: The spider.
        """
        edges = []
        next_label = 1
        for length in leg_lengths:
            if length < 1:
                raise ValueError(f"Leg lengths must be positive, got {length}")
            previous = 0
            for label in range(next_label, next_label + length):
                edges.append((previous, label))
                previous = label
            next_label += length
        return cls(next_label, edges)

    @property
    def n(self) -> int:
        """Vertex count."""
        return self._n

    @property
    def adjacency(self) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        """Per-vertex neighbor tuples, ascending."""
        return self._adjacency

    @property
    def edge_count(self) -> int:
        return self._n - 1

    def check_vertex(self, v: int) -> None:
        """Raises LabelOutOfRange unless v is a vertex of the tree."""
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise LabelOutOfRange(f"vertex {v} is outside 0..{self._n - 1}")

    def neighbors(self, v: int) -> typing.Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def edges(self) -> typing.Tuple[Edge, ...]:
        """Returns every edge once as (u, v) with u < v, in ascending order."""
        return tuple((u, v) for u in range(self._n) for v in self._adjacency[u] if u < v)

    def leaves(self) -> typing.FrozenSet[int]:
        return frozenset(v for v in range(self._n) if len(self._adjacency[v]) == 1)

    def branch_vertices(self) -> typing.FrozenSet[int]:
        """Returns the vertices of degree at least 3."""
        return frozenset(v for v in range(self._n) if len(self._adjacency[v]) >= 3)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self._n == other._n and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        return f"Tree(n={self._n}, edges={list(self.edges())})"
