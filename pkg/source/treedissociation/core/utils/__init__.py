from .edge_list_codec import EdgeListCodec
from .tree_generator import TreeGenerator

__all__ = [
    "EdgeListCodec",
    "TreeGenerator",
]
