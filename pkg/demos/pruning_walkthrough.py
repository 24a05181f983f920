import sys

from treedissociation.algorithms import ChildClassCounts, PrunedTree, RecognitionClassifier, TreePruner
from treedissociation.core import RootedTree, Tree
from treedissociation.core.utils import EdgeListCodec


def print_step(vertex: int, counts: ChildClassCounts, state: PrunedTree) -> None:
    action = "kept one child" if state.is_surviving(vertex) else "deleted D[u]"
    print(
        f"  step at {vertex}: classes (c0={counts.c0}, c1={counts.c1}, c2={counts.c2}), {action} "
        f"-> {len(state.surviving)} vertices left"
    )


def walk(tree: Tree, root: int) -> None:
    """Prints every pruning step applied to the tree rooted at root."""
    rooted = RootedTree.root_at(tree, root)
    print(f"root {root}, branch vertices {sorted(rooted.non_root_branch_vertices())}")

    state = TreePruner.prune(rooted, on_step=print_step)

    counts = state.child_classes(root)
    pruned = state.materialize()
    print(f"  pruned tree on original labels {list(pruned.labels)}:")
    print("".join(f"    {line}\n" for line in EdgeListCodec.serialize(pruned.tree).splitlines()), end="")
    print(f"  root classes {counts} -> {RecognitionClassifier.classify_child_classes(counts).value}")


if __name__ == "__main__":
    if len(sys.argv) == 3:
        with open(sys.argv[1], encoding="utf-8") as file:
            walk(EdgeListCodec.parse_edge_list(file), int(sys.argv[2]))
    else:
        # Two stars joined through a path; the far star collapses first.
        example = Tree.from_edges(
            11, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8), (6, 9), (9, 10)]
        )
        walk(example, 0)
        walk(example, 10)
