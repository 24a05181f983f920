import logging
import time
import typing
from enum import Enum

from treedissociation.core.rooted_tree import RootedTree
from treedissociation.core.tree import Tree
from treedissociation.core.vertex_class import VertexClass


class DpStateVector(typing.NamedTuple):
    """Best dissociation set sizes inside T_u for each state of u.

    Attributes:
        best_out (int): u is not selected.
        best_in_free (int): u is selected with no selected child.
        best_in_matched (int): u is selected together with exactly one child; 0 for a leaf,
            which has no child to pair with (best_in_free dominates it there).
    """

    best_out: int
    best_in_free: int
    best_in_matched: int

    def best(self) -> int:
        return max(self)

    def best_in(self) -> int:
        return max(self.best_in_free, self.best_in_matched)


class MembershipConstraint(str, Enum):
    """Restriction on one vertex when computing a constrained dissociation number."""

    FREE = "FREE"
    FORCE_IN = "FORCE_IN"
    FORCE_OUT = "FORCE_OUT"


class DissociationDP:
    """Three-state dynamic program for the dissociation number of a tree.

    It shares nothing with the pruning-based recognition, which makes it usable as an
    independent, linear-time oracle for it.
    """

    @classmethod
    def dp_state_vectors(cls, tree: Tree, root: int = 0) -> typing.List[DpStateVector]:
        """Computes the state vector of every vertex for the tree rooted at root.

        Children are folded in post-order (reverse breadth-first order), so no recursion is used:

        * best_out(u) = Σ max over the three states of each child w
        * best_in_free(u) = 1 + Σ best_out(w)
        * best_in_matched(u) = best_in_free(u) + max over w of (best_in_free(w) - best_out(w))

        Args:
            tree (Tree): The tree.
            root (int, optional): Root of the traversal. Defaults to 0.

        Returns:
            List[DpStateVector]: State vector per vertex label.
        """
        rooted = RootedTree.root_at(tree, root)
        children = rooted.children

        vectors: typing.List[DpStateVector] = [DpStateVector(0, 0, 0)] * tree.n
        for vertex in reversed(rooted.order):
            out = 0
            in_free = 1
            gain = None
            for child in children[vertex]:
                state = vectors[child]
                out += max(state)
                in_free += state.best_out
                candidate = state.best_in_free - state.best_out
                if gain is None or candidate > gain:
                    gain = candidate
            vectors[vertex] = DpStateVector(out, in_free, 0 if gain is None else in_free + gain)
        return vectors

    @classmethod
    def dissociation_number(cls, tree: Tree) -> int:
        """Returns ψ(tree), the size of a maximum dissociation set."""
        start = time.perf_counter()
        value = cls.dp_state_vectors(tree, 0)[0].best()
        logging.getLogger(f"{__name__}.{cls.__name__}.dissociation_number").debug(
            f"Finished dissociation_number on {tree.n} vertices in {time.perf_counter() - start:.6f} seconds."
        )
        return value

    @classmethod
    def three_path_cover_number(cls, tree: Tree) -> int:
        """Returns the size of a minimum 3-path vertex cover: the complement of a maximum dissociation set."""
        return tree.n - cls.dissociation_number(tree)

    @classmethod
    def constrained_psi(cls, tree: Tree, v: int, mode: MembershipConstraint) -> int:
        """Returns the largest dissociation set size subject to a membership constraint on v.

        Args:
            tree (Tree): The tree.
            v (int): Constrained vertex.
            mode (MembershipConstraint): FREE, FORCE_IN or FORCE_OUT.

        Returns:
            int: The constrained optimum.

        Raises:
            LabelOutOfRange: If v is not a vertex of the tree.
        """
        tree.check_vertex(v)
        state = cls.dp_state_vectors(tree, v)[v]
        if mode == MembershipConstraint.FORCE_IN:
            return state.best_in()
        if mode == MembershipConstraint.FORCE_OUT:
            return state.best_out
        return state.best()

    @classmethod
    def oracle_classify_via_dp(cls, tree: Tree, v: int) -> VertexClass:
        """Classifies v by comparing constrained optima against ψ.

        v is in no maximum set when forcing it in loses a vertex, and in all of them when
        forcing it out does.

        Args:
            tree (Tree): The tree.
            v (int): Vertex to classify.

        Returns:
            VertexClass: The class of v.

        Raises:
            LabelOutOfRange: If v is not a vertex of the tree.
        """
        tree.check_vertex(v)
        state = cls.dp_state_vectors(tree, v)[v]
        psi = state.best()
        loses_in = state.best_in() < psi
        loses_out = state.best_out < psi
        assert not (loses_in and loses_out), f"vertex {v} can be neither in nor out of a maximum set"
        if loses_in:
            return VertexClass.NONE
        if loses_out:
            return VertexClass.ALL
        return VertexClass.SOME
