import logging
import sys

from treedissociation.algorithms import DissociationDP, RecognitionClassifier
from treedissociation.core import Tree, VertexClass
from treedissociation.core.utils import EdgeListCodec, TreeGenerator
from treedissociation.oracle import ExhaustiveOracle


def describe(tree: Tree) -> None:
    classes = RecognitionClassifier.classify_all(tree)
    print(EdgeListCodec.serialize(tree), end="")
    print(f"psi = {DissociationDP.dissociation_number(tree)}")
    for vertex_class in VertexClass:
        members = [vertex for vertex, found in enumerate(classes) if found == vertex_class]
        print(f"  {vertex_class.value:<4} {members}")

    if tree.n <= 16:
        for found in ExhaustiveOracle.enumerate_max_diss_sets(tree):
            print(f"  maximum set {sorted(found.members)}")
    print()


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    # logging.getLogger("treedissociation.algorithms.pruning.TreePruner.prune").setLevel(logging.DEBUG)

    describe(Tree.path(6))
    describe(Tree.star(3))
    describe(Tree.spider([3, 3, 1]))

    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    describe(TreeGenerator.random_tree(12, seed))
