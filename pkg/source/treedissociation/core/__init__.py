from .errors import (
    ChildNotPath,
    CycleDetected,
    DescendantDegreeViolation,
    Disconnected,
    DuplicateEdge,
    IsRoot,
    LabelOutOfRange,
    MalformedLine,
    ModeResidueMismatch,
    NotABranchVertex,
    NotASpider,
    OracleLimitError,
    OutOfSupportedRange,
    PruningError,
    SelfLoop,
    TooLarge,
    TreeDissociationError,
    TreeInputError,
)
from .rooted_tree import RootedTree
from .settings import Settings
from .tree import Tree, TreeBuilder
from .vertex_class import VertexClass

__all__ = [
    "ChildNotPath",
    "CycleDetected",
    "DescendantDegreeViolation",
    "Disconnected",
    "DuplicateEdge",
    "IsRoot",
    "LabelOutOfRange",
    "MalformedLine",
    "ModeResidueMismatch",
    "NotABranchVertex",
    "NotASpider",
    "OracleLimitError",
    "OutOfSupportedRange",
    "PruningError",
    "RootedTree",
    "SelfLoop",
    "Settings",
    "TooLarge",
    "Tree",
    "TreeBuilder",
    "TreeDissociationError",
    "TreeInputError",
    "VertexClass",
]
