from .cache import CorpusCache
from .corpus import Corpus, enumerate_partial_cubes, sample_partial_cubes
from .naive import naive_is_convex, naive_is_gated, naive_pc_minor, naive_shattered

__all__ = [
    "Corpus",
    "CorpusCache",
    "enumerate_partial_cubes",
    "sample_partial_cubes",
    "naive_is_convex",
    "naive_is_gated",
    "naive_pc_minor",
    "naive_shattered",
]
