from .bench import BenchmarkHarness, BenchRow
from .logging_setup import configure_logging
from .main import build_parser, main
from .report import RunReport

__all__ = [
    "BenchRow",
    "BenchmarkHarness",
    "RunReport",
    "build_parser",
    "configure_logging",
    "main",
]
