import json
import typing
from dataclasses import dataclass

from treedissociation.core.tree import Tree


@dataclass(frozen=True)
class RunReport:
    """What a command did, as printed by ``--json``.

    Attributes:
        command (str): Subcommand name.
        n (int, optional): Vertex count of the input tree, None for commands without input.
        edges (int, optional): Edge count of the input tree.
        results (Any): Command specific payload.
        duration_ms (float): Wall-clock duration.
    """

    command: str
    n: typing.Optional[int]
    edges: typing.Optional[int]
    results: typing.Any
    duration_ms: float

    def __post_init__(self) -> None:
        if self.duration_ms < 0:
            raise ValueError(f"Duration cannot be negative, got {self.duration_ms}")

    @classmethod
    def for_tree(cls, command: str, tree: typing.Optional[Tree], results: typing.Any, duration_ms: float) -> "RunReport":
        if tree is None:
            return cls(command, None, None, results, duration_ms)
        return cls(command, tree.n, tree.edge_count, results, duration_ms)

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "command": self.command,
            "input": {"n": self.n, "edges": self.edges},
            "results": self.results,
            "duration_ms": round(self.duration_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)
