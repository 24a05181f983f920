from .algorithms import (
    ChildClassCounts,
    DissociationDP,
    DpStateVector,
    MembershipConstraint,
    PathRules,
    PrunedTree,
    RecognitionClassifier,
    TreePruner,
    WitnessMode,
)
from .core import LabelOutOfRange, RootedTree, Settings, Tree, TreeDissociationError, TreeInputError, VertexClass
from .core.utils import EdgeListCodec, TreeGenerator
from .oracle import DissociationSet, ExhaustiveOracle, LabeledTreeEnumerator

__all__ = [
    "ChildClassCounts",
    "DissociationDP",
    "DissociationSet",
    "DpStateVector",
    "EdgeListCodec",
    "ExhaustiveOracle",
    "LabelOutOfRange",
    "LabeledTreeEnumerator",
    "MembershipConstraint",
    "PathRules",
    "PrunedTree",
    "RecognitionClassifier",
    "RootedTree",
    "Settings",
    "Tree",
    "TreeDissociationError",
    "TreeGenerator",
    "TreeInputError",
    "VertexClass",
    "WitnessMode",
]
