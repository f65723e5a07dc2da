from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Any

import anyio
import anyio.abc
import anyio.to_thread

from pcube import __version__
from pcube.conf import settings
from pcube.core.graph import CubeGraph
from pcube.logging import logger
from pcube.oracle.corpus import Corpus, enumerate_partial_cubes
from pcube.serializers import serializer

CACHE_FORMAT = "pcube-corpus/1"


def _digest(graphs: tuple[CubeGraph, ...] | list[list[Any]]) -> str:
    h = hashlib.sha256()
    for item in graphs:
        m, vertices = (item.m, item.vertices) if isinstance(item, CubeGraph) else (item[0], item[1])
        h.update(f"{m}:{','.join(str(v) for v in vertices)};".encode())
    return h.hexdigest()


class CorpusCache:
    """
    On-disk cache of exhaustive corpora, one JSON file per `(m, n_max)`.

    File names hash the pcube version together with the parameters, so upgrading pcube never
    reads a stale corpus. Each file also records a digest of its graphs; files whose digest or
    format does not match are ignored and rebuilt.

    Attributes
    ----------
    _directory : Path
        Where the cache files live. Created on the first write.
    _lock : anyio.abc.Lock
        Serializes reads and writes of concurrent tasks.
    """

    def __init__(self, directory: str | Path | None = None) -> None:
        self._directory = Path(directory) if directory is not None else settings.corpus_cache_path
        self._lock: anyio.abc.Lock = anyio.Lock()

    @property
    def directory(self) -> Path:
        return self._directory

    def path_for(self, m: int, n_max: int) -> Path:
        key = hashlib.sha256(f"{__version__}:{m}:{n_max}".encode()).hexdigest()[:16]
        return self._directory / f"corpus-{key}.json"

    async def load(self, m: int, n_max: int) -> Corpus | None:
        """
        The cached corpus, or `None` when missing or failing validation.
        """
        path = self.path_for(m, n_max)
        async with self._lock:
            if not path.exists():
                return None
            async with await anyio.open_file(path, mode="r", encoding="utf-8") as f:
                text = await f.read()
        try:
            data = serializer.loads(text)
            graphs = data["graphs"]
            valid = (
                data.get("format") == CACHE_FORMAT
                and data.get("version") == __version__
                and data.get("m") == m
                and data.get("n_max") == n_max
                and data.get("digest") == _digest(graphs)
            )
        except (ValueError, KeyError, TypeError, IndexError):
            valid = False
        if not valid:
            logger.warning(f"Ignoring invalid corpus cache file {path}")
            return None
        members = tuple(CubeGraph(int(g[0]), tuple(int(v) for v in g[1])) for g in graphs)
        return Corpus(m=m, n_max=n_max, graphs=members)

    async def store(self, corpus: Corpus) -> Path:
        path = self.path_for(corpus.m, corpus.n_max)
        payload = {
            "format": CACHE_FORMAT,
            "version": __version__,
            "m": corpus.m,
            "n_max": corpus.n_max,
            "digest": _digest(corpus.graphs),
            "graphs": [[g.m, list(g.vertices)] for g in corpus.graphs],
        }
        async with self._lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            async with await anyio.open_file(path, mode="w", encoding="utf-8") as f:
                await f.write(serializer.dumps(payload))
                await f.flush()
        logger.debug(f"Stored {len(corpus)} graphs in {path}")
        return path

    async def get_or_build(self, m: int, n_max: int | None = None, budget: int | None = None) -> Corpus:
        """
        Loads the corpus for `(m, n_max)` or enumerates it in a worker thread and stores it.
        """
        cap = (1 << m) if n_max is None else min(n_max, 1 << m)
        cached = await self.load(m, cap)
        if cached is not None:
            return cached
        corpus = await anyio.to_thread.run_sync(lambda: enumerate_partial_cubes(m, cap, budget))
        await self.store(corpus)
        return corpus
