from .exhaustive import DissociationSet, ExhaustiveOracle
from .labeled_trees import LabeledTreeEnumerator

__all__ = [
    "DissociationSet",
    "ExhaustiveOracle",
    "LabeledTreeEnumerator",
]
