"""Full-scale sweeps. Deselected by default; run with ``pytest -m slow``."""

import os
import random
import time
import warnings

import pytest

from treedissociation.algorithms import DissociationDP, RecognitionClassifier
from treedissociation.cli import main
from treedissociation.cli.bench import BenchmarkHarness
from treedissociation.core.utils import TreeGenerator
from treedissociation.oracle import ExhaustiveOracle, LabeledTreeEnumerator
from treedissociation.verification import AgreementChecker

pytestmark = pytest.mark.slow

WORKERS = os.cpu_count() or 1
SINGLE_CLASSIFICATION_TARGET_MS = 1000.0


def test_three_way_agreement_on_every_tree_up_to_eight_vertices():
    summary = AgreementChecker.exhaustive_agreement(range(3, 9), workers=WORKERS)
    assert summary.trees == 3 + 16 + 125 + 1296 + 16807 + 262144
    assert summary.mismatches == []


def test_recognition_matches_the_dynamic_program_on_large_random_trees():
    rng = random.Random(1000)
    for _ in range(1000):
        n = rng.randint(50, 2000)
        tree = TreeGenerator.random_tree(n, rng.getrandbits(64))
        vertices = [rng.randrange(n) for _ in range(20)]
        assert AgreementChecker.check_tree(tree, use_enumeration=False, vertices=vertices) == []


def test_pruning_invariance_on_small_trees_and_samples_of_orders_eight_and_nine():
    for n in range(1, 8):
        for tree in LabeledTreeEnumerator.enumerate_labeled_trees(n):
            for vertex in range(n):
                assert AgreementChecker.pruning_invariance(tree, vertex), (tree, vertex)
    for n in (8, 9):
        for tree in LabeledTreeEnumerator.sample_labeled_trees(n, 10_000, seed=n):
            for vertex in range(n):
                assert AgreementChecker.pruning_invariance(tree, vertex), (tree, vertex)


def test_dynamic_program_matches_enumeration_on_random_trees_up_to_twelve_vertices():
    rng = random.Random(12)
    for _ in range(10_000):
        tree = TreeGenerator.random_tree(rng.randint(1, 12), rng.getrandbits(64))
        sets = ExhaustiveOracle.enumerate_max_diss_sets(tree)
        assert len(sets[0]) == DissociationDP.dissociation_number(tree)
        for found in sets:
            assert ExhaustiveOracle.is_dissociation_set(tree, found.members)


def test_complements_of_maximum_sets_on_random_trees():
    rng = random.Random(20)
    for _ in range(1000):
        tree = TreeGenerator.random_tree(rng.randint(1, 20), rng.getrandbits(64))
        cover = DissociationDP.three_path_cover_number(tree)
        for found in ExhaustiveOracle.enumerate_max_diss_sets(tree):
            assert ExhaustiveOracle.complement_is_three_path_cover(tree, found.members)
            assert tree.n - len(found) == cover


def test_single_classification_grows_linearly(record_property):
    rows = BenchmarkHarness.run([100_000, 1_000_000], seed=5, repetitions=3, classify_all_limit=0)
    record_property("single_ms_at_one_million", round(rows[1].single_ms, 1))
    record_property("single_ms_target", SINGLE_CLASSIFICATION_TARGET_MS)
    if rows[1].single_ms > SINGLE_CLASSIFICATION_TARGET_MS:
        warnings.warn(
            f"one classification on 10^6 vertices took {rows[1].single_ms:.0f} ms, "
            f"above the {SINGLE_CLASSIFICATION_TARGET_MS:.0f} ms target"
        )
    ratio = rows[1].single_ms / rows[0].single_ms
    assert ratio <= 10 * 2 * 1.5


def test_classify_all_grows_quadratically():
    rows = BenchmarkHarness.run([1000, 2000], seed=5, repetitions=3)
    ratio = rows[1].all_ms / rows[0].all_ms
    assert 3 <= ratio <= 6


def test_oracle_check_command_on_order_eight(capsys):
    start = time.perf_counter()
    code = main(["oracle-check", "--n-max", "8", "--threads", str(WORKERS)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("trees=262144 vertices=2097152 ")
    assert out.strip().endswith("mismatches=0")
    assert time.perf_counter() - start < 600


def test_oracle_check_command_with_random_trees(capsys):
    code = main(["oracle-check", "--n-max", "16", "--samples", "1000", "--seed", "42", "--threads", str(WORKERS)])
    assert code == 0
    assert capsys.readouterr().out.strip().endswith("mismatches=0")


def test_classify_all_is_total():
    tree = TreeGenerator.random_tree(3000, 77)
    classes = RecognitionClassifier.classify_all(tree, workers=WORKERS)
    assert len(classes) == tree.n
