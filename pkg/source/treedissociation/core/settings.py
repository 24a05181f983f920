import os
import typing
from dataclasses import dataclass

# Largest tree the exhaustive oracle accepts.
ORACLE_MAX_ORDER = 24
# Above this order the oracle splits its subset search on an edge separator.
SPLIT_SEARCH_THRESHOLD = 20
# Largest order whose labeled trees can be enumerated.
LABELED_TREE_MAX_ORDER = 9
# Largest order swept exhaustively by the agreement check.
AGREEMENT_EXHAUSTIVE_CAP = 8
BENCH_REPETITIONS = 5
BENCH_CLASSIFY_ALL_LIMIT = 4000

LOG_LEVELS = ("quiet", "info", "debug")


@dataclass(frozen=True)
class Settings:
    """Runtime settings read from the environment.

    Attributes:
        log_level (str): One of "quiet", "info" or "debug" (DISSOC_LOG).
        threads (int): Default worker count for parallel commands (DISSOC_THREADS).
    """

    log_level: str = "quiet"
    threads: int = 1

    def __post_init__(self) -> None:
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level {self.log_level!r}, expected one of {', '.join(LOG_LEVELS)}")
        if self.threads < 1:
            raise ValueError(f"Thread count must be positive, got {self.threads}")

    @classmethod
    def from_environment(cls, environ: typing.Optional[typing.Mapping[str, str]] = None) -> "Settings":
        """Builds settings from environment variables.

        Args:
            environ (Mapping[str, str], optional): Environment to read. Defaults to os.environ.

        Returns:
            Settings: The resolved settings.
        """
        if environ is None:
            environ = os.environ

        log_level = environ.get("DISSOC_LOG", "quiet").strip().lower() or "quiet"

        raw_threads = environ.get("DISSOC_THREADS", "").strip()
        if raw_threads:
            try:
                threads = int(raw_threads)
            except ValueError:
                raise ValueError(f"DISSOC_THREADS must be an integer, got {raw_threads!r}") from None
        else:
            threads = os.cpu_count() or 1

        return cls(log_level=log_level, threads=threads)
