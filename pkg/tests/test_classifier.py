import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from treedissociation.algorithms import (
    ChildClassCounts,
    DissociationDP,
    DpStateVector,
    MembershipConstraint,
    RecognitionClassifier,
)
from treedissociation.core import LabelOutOfRange, Tree, VertexClass
from treedissociation.core.utils import TreeGenerator
from treedissociation.oracle import ExhaustiveOracle

ALL, SOME, NONE = VertexClass.ALL, VertexClass.SOME, VertexClass.NONE


@pytest.mark.parametrize(
    "tree, vertex, expected",
    [
        (Tree.path(4), 0, ALL),
        (Tree.star(3), 0, NONE),
        (Tree.path(3), 0, SOME),
        (Tree.path(5), 2, NONE),
        (Tree.single_vertex(), 0, ALL),
    ],
)
def test_classify_vertex(tree, vertex, expected):
    assert RecognitionClassifier.classify_vertex(tree, vertex) == expected


def test_classify_vertex_rejects_unknown_vertex():
    with pytest.raises(LabelOutOfRange):
        RecognitionClassifier.classify_vertex(Tree.path(3), 5)


@pytest.mark.parametrize(
    "tree, expected",
    [
        (Tree.path(2), [ALL, ALL]),
        (Tree.path(3), [SOME, SOME, SOME]),
        (Tree.star(3), [NONE, ALL, ALL, ALL]),
    ],
)
def test_classify_all(tree, expected):
    assert RecognitionClassifier.classify_all(tree) == expected


def test_classify_all_path_on_six_vertices_has_undecided_endpoints():
    classes = RecognitionClassifier.classify_all(Tree.path(6))
    assert classes[0] == classes[5] == SOME


def test_classify_all_in_worker_processes_keeps_vertex_order():
    tree = TreeGenerator.random_tree(40, 3)
    assert RecognitionClassifier.classify_all(tree, workers=2) == RecognitionClassifier.classify_all(tree)


def test_classify_all_rejects_zero_workers():
    with pytest.raises(ValueError):
        RecognitionClassifier.classify_all(Tree.path(3), workers=0)


@pytest.mark.parametrize(
    "counts, expected",
    [
        (ChildClassCounts(0, 0, 0), ALL),
        (ChildClassCounts(4, 1, 0, c1_member=9), ALL),
        (ChildClassCounts(0, 0, 1), SOME),
        (ChildClassCounts(3, 2, 0), SOME),
        (ChildClassCounts(0, 1, 1), SOME),
        (ChildClassCounts(0, 0, 2), NONE),
        (ChildClassCounts(0, 3, 0), NONE),
        (ChildClassCounts(0, 2, 1), NONE),
        (ChildClassCounts(0, 0, 3), NONE),
    ],
)
def test_classify_child_classes(counts, expected):
    assert RecognitionClassifier.classify_child_classes(counts) == expected


@pytest.mark.parametrize(
    "tree, expected",
    [(Tree.path(6), 4), (Tree.star(3), 3), (Tree.single_vertex(), 1), (Tree.path(7), 5)],
)
def test_dissociation_number(tree, expected):
    assert DissociationDP.dissociation_number(tree) == expected
    assert DissociationDP.three_path_cover_number(tree) == tree.n - expected


def test_dp_state_vectors_of_a_path():
    vectors = DissociationDP.dp_state_vectors(Tree.path(3), 0)
    assert vectors[2] == DpStateVector(0, 1, 0)
    assert vectors[1] == DpStateVector(1, 1, 2)
    assert vectors[0] == DpStateVector(2, 2, 2)
    assert vectors[0].best() == 2


@pytest.mark.parametrize(
    "tree, vertex, mode, expected",
    [
        (Tree.path(5), 2, MembershipConstraint.FORCE_IN, 3),
        (Tree.path(4), 0, MembershipConstraint.FORCE_OUT, 2),
        (Tree.path(4), 0, MembershipConstraint.FORCE_IN, 3),
        (Tree.star(4), 0, MembershipConstraint.FREE, 4),
    ],
)
def test_constrained_psi(tree, vertex, mode, expected):
    assert DissociationDP.constrained_psi(tree, vertex, mode) == expected


def test_constrained_psi_rejects_unknown_vertex():
    with pytest.raises(LabelOutOfRange):
        DissociationDP.constrained_psi(Tree.path(2), 2, MembershipConstraint.FREE)


@pytest.mark.parametrize(
    "tree, vertex, expected",
    [
        (Tree.path(3), 0, SOME),
        (Tree.star(4), 0, NONE),
        (Tree.path(2), 0, ALL),
        (Tree.path(2), 1, ALL),
    ],
)
def test_oracle_classify_via_dp(tree, vertex, expected):
    assert DissociationDP.oracle_classify_via_dp(tree, vertex) == expected


@given(integers(1, 60), integers(0, 2**32))
@settings(max_examples=150, deadline=None)
def test_constrained_optima_are_consistent(n, seed):
    tree = TreeGenerator.random_tree(n, seed)
    psi = DissociationDP.dissociation_number(tree)
    for vertex in range(n):
        free = DissociationDP.constrained_psi(tree, vertex, MembershipConstraint.FREE)
        forced_in = DissociationDP.constrained_psi(tree, vertex, MembershipConstraint.FORCE_IN)
        forced_out = DissociationDP.constrained_psi(tree, vertex, MembershipConstraint.FORCE_OUT)
        assert free == psi
        assert max(forced_in, forced_out) == psi
        assert not (forced_in < psi and forced_out < psi)


@given(integers(1, 120), integers(0, 2**32))
@settings(max_examples=150, deadline=None)
def test_recognition_agrees_with_the_dynamic_program(n, seed):
    tree = TreeGenerator.random_tree(n, seed)
    classes = RecognitionClassifier.classify_all(tree)
    assert len(classes) == n
    for vertex, vertex_class in enumerate(classes):
        assert vertex_class == DissociationDP.oracle_classify_via_dp(tree, vertex), (tree, vertex)


@given(integers(1, 12), integers(0, 2**32))
@settings(max_examples=150, deadline=None)
def test_dynamic_program_matches_enumeration(n, seed):
    tree = TreeGenerator.random_tree(n, seed)
    found = ExhaustiveOracle.enumerate_max_diss_sets(tree)
    assert len(found[0]) == DissociationDP.dissociation_number(tree)
