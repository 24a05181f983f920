import concurrent.futures
import logging
import time
import typing

from treedissociation.algorithms.pruning import ChildClassCounts, TreePruner
from treedissociation.core.rooted_tree import RootedTree
from treedissociation.core.tree import Tree
from treedissociation.core.vertex_class import VertexClass


class RecognitionClassifier:
    """Decides whether a vertex lies in all, some or no maximum dissociation sets of a tree.

    The tree is rooted at the vertex, pruned until the root is the center of a spider, and the
    root's child classes in the pruned tree give the answer. One vertex costs linear time;
    classify_all repeats it for every vertex.
    """

    @staticmethod
    def classify_child_classes(counts: ChildClassCounts) -> VertexClass:
        """Classifies the root of a spider from the classes of its legs.

        Args:
            counts (ChildClassCounts): Leg counts by order modulo 3.

        Returns:
            VertexClass: ALL if no leg is ≡ 2 and at most one is ≡ 1; NONE if exactly two legs are
            ≡ 2 or at least three legs are ≡ 1 or 2; SOME otherwise.
        """
        if counts.c2 == 0 and counts.c1 <= 1:
            return VertexClass.ALL
        if counts.c2 == 2 or counts.c1 + counts.c2 >= 3:
            return VertexClass.NONE
        return VertexClass.SOME

    @classmethod
    def classify_vertex(cls, tree: Tree, v: int) -> VertexClass:
        """Classifies one vertex in linear time.

        Args:
            tree (Tree): The tree.
            v (int): Vertex to classify.

        Returns:
            VertexClass: The class of v.

        Raises:
            LabelOutOfRange: If v is not a vertex of the tree.
        """
        rooted = RootedTree.root_at(tree, v)
        state = TreePruner.prune(rooted)
        return cls.classify_child_classes(state.child_classes(v))

    @classmethod
    def classify_vertices(cls, tree: Tree, vertices: typing.Iterable[int]) -> typing.List[VertexClass]:
        """Classifies the given vertices one after another."""
        return [cls.classify_vertex(tree, v) for v in vertices]

    @classmethod
    def classify_all(cls, tree: Tree, workers: int = 1) -> typing.List[VertexClass]:
        """Classifies every vertex, running one independent recognition per vertex.

        Args:
            tree (Tree): The tree.
            workers (int, optional): Process count; vertices are split into contiguous chunks.
                Defaults to 1 (in process).

        Returns:
            List[VertexClass]: Class of each vertex, indexed by label.
        """
        if workers < 1:
            raise ValueError(f"Worker count must be positive, got {workers}")
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.classify_all")
        start = time.perf_counter()

        if workers == 1 or tree.n < 2 * workers:
            classes = cls.classify_vertices(tree, range(tree.n))
        else:
            chunk = -(-tree.n // workers)
            ranges = [range(first, min(first + chunk, tree.n)) for first in range(0, tree.n, chunk)]
            classes = []
            with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
                for part in executor.map(cls.classify_vertices, [tree] * len(ranges), ranges):
                    classes.extend(part)

        logger.debug(
            f"Finished classify_all on {tree.n} vertices with {workers} workers "
            f"in {time.perf_counter() - start:.6f} seconds."
        )
        return classes
