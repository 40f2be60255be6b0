"""Command line front end: parser, reports, configuration and corpus."""

from .config import RunConfig, resolve
from .corpus import CorpusConfig, generate_corpus, read_corpus, write_corpus
from .main import main, run_command
from .parser import parse_polynomial, parse_scalar

__all__ = [
    "CorpusConfig",
    "RunConfig",
    "generate_corpus",
    "main",
    "parse_polynomial",
    "parse_scalar",
    "read_corpus",
    "resolve",
    "run_command",
    "write_corpus",
]
