import logging
import random

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, lists

from treedissociation.algorithms import (
    ChildClassCounts,
    DissociationDP,
    PrunedTree,
    RecognitionClassifier,
    TreePruner,
)
from treedissociation.core import (
    ChildNotPath,
    DescendantDegreeViolation,
    IsRoot,
    NotABranchVertex,
    NotASpider,
    RootedTree,
    Tree,
)
from treedissociation.core.utils import TreeGenerator
from treedissociation.oracle import ExhaustiveOracle
from treedissociation.verification import AgreementChecker


def broom(chain_lengths):
    """Root 0 joined to vertex 1, which carries one chain per entry of chain_lengths."""
    edges = [(0, 1)]
    next_label = 2
    for length in chain_lengths:
        previous = 1
        for label in range(next_label, next_label + length):
            edges.append((previous, label))
            previous = label
        next_label += length
    return RootedTree.root_at(Tree.from_edges(next_label, edges), 0)


@pytest.mark.parametrize(
    "rooted, vertex, expected",
    [
        (RootedTree.root_at(Tree.star(3), 0), 0, ChildClassCounts(0, 3, 0)),
        (RootedTree.root_at(Tree.path(5), 2), 2, ChildClassCounts(0, 0, 2)),
        (RootedTree.root_at(Tree.spider([3, 1]), 0), 0, ChildClassCounts(1, 1, 0, c1_member=4)),
        (RootedTree.root_at(Tree.single_vertex(), 0), 0, ChildClassCounts(0, 0, 0)),
    ],
)
def test_child_classes(rooted, vertex, expected):
    assert PrunedTree.initial(rooted).child_classes(vertex) == expected


def test_child_classes_requires_path_children():
    state = PrunedTree.initial(broom([1, 1]))
    with pytest.raises(ChildNotPath):
        state.child_classes(0)


def test_initial_pathlen():
    state = PrunedTree.initial(broom([1, 2]))
    assert state.pathlen == {2: 1, 3: 2, 4: 1}
    assert state.steps == 0
    assert state.degree(1) == 3


def test_prune_step_deletes_subtree_with_two_residue_two_children():
    state = PrunedTree.initial(broom([2, 2]))
    state.prune_step(1)
    assert state.surviving == frozenset({0})
    assert state.surviving_children(0) == ()
    assert state.pathlen == {0: 1}
    assert state.steps == 1


def test_prune_step_keeps_the_residue_one_child():
    # Chains of 3, 3 and 1 vertices: heads 2, 5 and 8.
    state = PrunedTree.initial(broom([3, 3, 1]))
    assert state.child_classes(1) == ChildClassCounts(2, 1, 0, c1_member=8)
    state.prune_step(1)
    assert state.surviving == frozenset({0, 1, 8})
    assert state.pathlen[1] == 2
    assert state.pathlen[0] == 3


def test_prune_step_keeps_the_smallest_child_without_residue_one():
    # Chains of 3 and 6 vertices: heads 2 and 5.
    state = PrunedTree.initial(broom([3, 6]))
    state.prune_step(1)
    assert state.surviving_children(1) == (2,)
    assert state.pathlen[1] == 4
    assert state.surviving == frozenset({0, 1, 2, 3, 4})


def test_prune_step_errors():
    state = PrunedTree.initial(RootedTree.root_at(Tree.star(3), 0))
    with pytest.raises(IsRoot):
        state.prune_step(0)
    with pytest.raises(NotABranchVertex):
        state.prune_step(1)

    # Vertex 1 branches into 2 and 3, and 2 itself still branches.
    nested = Tree.from_edges(7, [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6)])
    state = PrunedTree.initial(RootedTree.root_at(nested, 0))
    with pytest.raises(DescendantDegreeViolation):
        state.prune_step(1)

    state = PrunedTree.initial(broom([2, 2]))
    state.prune_step(1)
    with pytest.raises(NotABranchVertex):
        state.prune_step(1)


def test_prune_leaves_paths_unchanged():
    for root in range(6):
        state = TreePruner.prune(RootedTree.root_at(Tree.path(6), root))
        assert state.surviving == frozenset(range(6))
        assert state.steps == 0


def test_prune_star_at_a_leaf():
    state = TreePruner.prune(RootedTree.root_at(Tree.star(3), 1))
    pruned = state.materialize()
    assert state.surviving == frozenset({1})
    assert pruned.tree == Tree.single_vertex()
    assert pruned.labels == (1,)


def test_prune_double_broom():
    # root 0 - a 1 - u 2, u carrying leaves 3 and 4.
    tree = Tree.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    pruned = TreePruner.prune(RootedTree.root_at(tree, 0)).materialize()
    assert pruned.tree == Tree.path(2)
    assert pruned.labels == (0, 1)
    assert pruned.root == 0


def test_prune_reports_every_step():
    seen = []
    state = TreePruner.prune(
        broom([3, 3, 1]),
        on_step=lambda vertex, counts, current: seen.append((vertex, counts, current.surviving)),
    )
    assert seen == [(1, ChildClassCounts(2, 1, 0, c1_member=8), frozenset({0, 1, 8}))]
    assert state.steps == 1


@pytest.mark.parametrize(
    "rooted, message",
    [
        (broom([2, 2]), "Deleted D[1] with child classes (c0=0, c1=0, c2=2)"),
        (broom([3, 6]), "Kept child 2 of 1 with child classes (c0=2, c1=0, c2=0)"),
    ],
)
def test_prune_logs_steps_at_debug_level(caplog, rooted, message):
    caplog.set_level(logging.DEBUG, logger="treedissociation.algorithms.pruning")
    TreePruner.prune(rooted)
    assert message in caplog.text


def test_prune_step_logs_at_debug_level(caplog):
    caplog.set_level(logging.DEBUG, logger="treedissociation.algorithms.pruning")
    PrunedTree.initial(broom([2, 2])).prune_step(1)
    assert "Deleted D[1] with child classes (c0=0, c1=0, c2=2)" in caplog.text


def test_prune_takes_at_most_one_step_per_branch_vertex():
    for seed in range(50):
        tree = TreeGenerator.random_tree(60, seed)
        for root in (0, 17, 59):
            rooted = RootedTree.root_at(tree, root)
            state = TreePruner.prune(rooted)
            assert state.steps <= len(rooted.non_root_branch_vertices())
            for vertex in state.surviving - {root}:
                assert state.degree(vertex) <= 2
            state.child_classes(root)


@pytest.mark.parametrize(
    "legs, expected",
    [
        ([3], 3),
        ([1, 1, 1], 3),
        ([], 1),
        ([2, 2], 4),
        ([3, 3, 1], 6),
    ],
)
def test_psi_spider(legs, expected):
    assert TreePruner.psi_spider(RootedTree.root_at(Tree.spider(legs), 0)) == expected


def test_psi_spider_rejects_non_spiders():
    with pytest.raises(NotASpider):
        TreePruner.psi_spider(broom([1, 1]))
    with pytest.raises(NotASpider):
        TreePruner.spider_witness(broom([1, 1]))


def test_psi_spider_matches_the_dynamic_program_on_random_spiders():
    rng = random.Random(2024)
    for _ in range(1000):
        legs = [rng.randint(1, 12) for _ in range(rng.randint(1, 8))]
        tree = Tree.spider(legs)
        assert TreePruner.psi_spider(RootedTree.root_at(tree, 0)) == DissociationDP.dissociation_number(tree), legs


@given(lists(integers(1, 9), max_size=6))
@settings(max_examples=200, deadline=None)
def test_spider_witness_is_a_maximum_set(legs):
    tree = Tree.spider(legs)
    rooted = RootedTree.root_at(tree, 0)
    witness = TreePruner.spider_witness(rooted)
    assert ExhaustiveOracle.is_dissociation_set(tree, witness)
    assert len(witness) == TreePruner.psi_spider(rooted)


@given(lists(integers(1, 9), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_spider_root_class_follows_its_legs(legs):
    tree = Tree.spider(legs)
    counts = PrunedTree.initial(RootedTree.root_at(tree, 0)).child_classes(0)
    assert RecognitionClassifier.classify_child_classes(counts) == DissociationDP.oracle_classify_via_dp(tree, 0)


def test_kept_child_choice_does_not_change_the_class():
    # Chains of 3 and 6: keeping either one must give the same class at the root.
    for chains in ([3, 6], [6, 3], [3, 3, 3]):
        rooted = broom(chains)
        assert RecognitionClassifier.classify_vertex(rooted.base, 0) == ExhaustiveOracle.oracle_classify_all(rooted.base)[0]


@given(integers(1, 12), integers(0, 2**32), integers(0, 11))
@settings(max_examples=150, deadline=None)
def test_pruning_keeps_the_class_of_the_root(n, seed, root):
    tree = TreeGenerator.random_tree(n, seed)
    assert AgreementChecker.pruning_invariance(tree, root % n)
