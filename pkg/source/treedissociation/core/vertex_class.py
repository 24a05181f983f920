from enum import Enum


class VertexClass(str, Enum):
    """Membership of a vertex across the maximum dissociation sets of a tree.

    ALL: the vertex is in every maximum dissociation set.
    SOME: the vertex is in some, but not all, maximum dissociation sets.
    NONE: the vertex is in no maximum dissociation set.
    """

    ALL = "ALL"
    SOME = "SOME"
    NONE = "NONE"

    def __str__(self) -> str:
        return self.value
