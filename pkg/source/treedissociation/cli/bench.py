import logging
import statistics
import time
import typing
from dataclasses import dataclass

from treedissociation.algorithms.classifier import RecognitionClassifier
from treedissociation.core.settings import BENCH_CLASSIFY_ALL_LIMIT, BENCH_REPETITIONS
from treedissociation.core.utils.tree_generator import TreeGenerator


@dataclass(frozen=True)
class BenchRow:
    """Median timings for one tree size.

    Attributes:
        n (int): Tree order.
        single_ms (float): One classify_vertex call at vertex 0.
        all_ms (float, optional): One classify_all call, None when the size is above the limit.
    """

    n: int
    single_ms: float
    all_ms: typing.Optional[float]

    def to_tsv(self) -> str:
        all_ms = "-" if self.all_ms is None else f"{self.all_ms:.3f}"
        return f"{self.n}\t{self.single_ms:.3f}\t{all_ms}"

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {"n": self.n, "single_ms": self.single_ms, "all_ms": self.all_ms}


class BenchmarkHarness:
    """Times the recognition algorithm on random trees of growing size."""

    @staticmethod
    def median_ms(action: typing.Callable[[], object], repetitions: int = BENCH_REPETITIONS) -> float:
        """Runs action repeatedly and returns the median wall-clock time in milliseconds."""
        if repetitions < 1:
            raise ValueError(f"Repetitions must be positive, got {repetitions}")
        samples = []
        for _ in range(repetitions):
            start = time.perf_counter()
            action()
            samples.append((time.perf_counter() - start) * 1000.0)
        return statistics.median(samples)

    @classmethod
    def run(
        cls,
        sizes: typing.Sequence[int],
        seed: int,
        repetitions: int = BENCH_REPETITIONS,
        classify_all_limit: int = BENCH_CLASSIFY_ALL_LIMIT,
    ) -> typing.List[BenchRow]:
        """Benchmarks every size.

        Args:
            sizes (Sequence[int]): Tree orders.
            seed (int): Seed of the random trees.
            repetitions (int, optional): Runs per measurement. Defaults to BENCH_REPETITIONS.
            classify_all_limit (int, optional): Largest order for which classify_all is timed.

        Returns:
            List[BenchRow]: One row per size, in input order.
        """
        logger = logging.getLogger(f"{__name__}.{cls.__name__}.run")
        rows = []
        for n in sizes:
            tree = TreeGenerator.random_tree(n, seed)
            single_ms = cls.median_ms(lambda: RecognitionClassifier.classify_vertex(tree, 0), repetitions)
            all_ms = None
            if n <= classify_all_limit:
                all_ms = cls.median_ms(lambda: RecognitionClassifier.classify_all(tree), repetitions)
            rows.append(BenchRow(n, single_ms, all_ms))
            logger.info(f"Benchmarked n={n}: {rows[-1].to_tsv()}")
        return rows
