from .classifier import RecognitionClassifier
from .dissociation_dp import DissociationDP, DpStateVector, MembershipConstraint
from .path_rules import PathResidue, PathRules, WitnessMode
from .pruning import ChildClassCounts, MaterializedPruning, PrunedTree, TreePruner

__all__ = [
    "ChildClassCounts",
    "DissociationDP",
    "DpStateVector",
    "MaterializedPruning",
    "MembershipConstraint",
    "PathResidue",
    "PathRules",
    "PrunedTree",
    "RecognitionClassifier",
    "TreePruner",
    "WitnessMode",
]
