import typing
from dataclasses import dataclass
from enum import Enum

from treedissociation.core.errors import ModeResidueMismatch


@dataclass(frozen=True)
class PathResidue:
    """Order of a path together with its residue modulo 3."""

    n: int
    residue: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"A path needs at least one vertex, got n={self.n}")
        if self.residue != self.n % 3:
            raise ValueError(f"Residue of {self.n} is {self.n % 3}, got {self.residue}")

    @classmethod
    def of(cls, n: int) -> "PathResidue":
        return cls(n, n % 3)


class WitnessMode(str, Enum):
    """Shape of the canonical maximum dissociation set returned by PathRules.path_witness.

    EXCLUDE_FIRST_LEAF: the first vertex is left out (orders divisible by 3).
    ISOLATE_FIRST_LEAF: the first vertex is in, without a selected neighbor (orders 1 mod 3).
    UNIQUE: the only maximum set (orders 2 mod 3).
    """

    EXCLUDE_FIRST_LEAF = "EXCLUDE_FIRST_LEAF"
    ISOLATE_FIRST_LEAF = "ISOLATE_FIRST_LEAF"
    UNIQUE = "UNIQUE"

    @classmethod
    def for_order(cls, n: int) -> "WitnessMode":
        """Returns the mode that fits a path of order n."""
        return _MODE_BY_RESIDUE[PathResidue.of(n).residue]


_MODE_BY_RESIDUE = {
    0: WitnessMode.EXCLUDE_FIRST_LEAF,
    1: WitnessMode.ISOLATE_FIRST_LEAF,
    2: WitnessMode.UNIQUE,
}


class PathRules:
    """Closed forms for paths: dissociation number and canonical maximum dissociation sets.

    Path vertices are addressed by position 1..n, position 1 being the "first leaf".
    """

    @staticmethod
    def psi_path(n: int) -> int:
        """Returns the dissociation number of the path on n vertices.

        For n >= 3 this is (2n + (n mod 3)) / 3; the one- and two-vertex paths are
        dissociation sets themselves, so their value is n (the same formula happens
        to agree there too).

        Args:
            n (int): Path order, at least 1.

        Returns:
            int: The dissociation number.
        """
        residue = PathResidue.of(n)
        if n <= 2:
            return n
        return (2 * n + residue.residue) // 3

    @staticmethod
    def path_witness(n: int, mode: WitnessMode) -> typing.FrozenSet[int]:
        """Returns a maximum dissociation set of the path on n vertices in the requested mode.

        Positions are taken greedily from the left in selected pairs separated by one skipped
        position; the anchor depends on the mode:

        * EXCLUDE_FIRST_LEAF: {2, 3, 5, 6, ...}, skipping every position divisible by 3 from 1.
        * ISOLATE_FIRST_LEAF: {1} plus the pairs {3, 4}, {6, 7}, ...
        * UNIQUE: {1, 2, 4, 5, ...}, skipping every position divisible by 3.

        Args:
            n (int): Path order, at least 1.
            mode (WitnessMode): Requested shape.

        Returns:
            FrozenSet[int]: Selected positions.

        Raises:
            ModeResidueMismatch: If the mode does not match n mod 3.
        """
        residue = PathResidue.of(n).residue
        expected = _MODE_BY_RESIDUE[residue]
        if mode != expected:
            raise ModeResidueMismatch(
                f"mode {WitnessMode(mode).value} needs n ≡ {_residue_of_mode(mode)} (mod 3), "
                f"got n={n} ≡ {residue}"
            )

        if mode == WitnessMode.EXCLUDE_FIRST_LEAF:
            return frozenset(position for position in range(1, n + 1) if (position - 1) % 3 != 0)
        if mode == WitnessMode.ISOLATE_FIRST_LEAF:
            return frozenset([1]) | frozenset(position for position in range(3, n + 1) if position % 3 != 2)
        return frozenset(position for position in range(1, n + 1) if position % 3 != 0)


def _residue_of_mode(mode: WitnessMode) -> int:
    return next(residue for residue, candidate in _MODE_BY_RESIDUE.items() if candidate == mode)
