import pytest

from pcube.oracle.cache import CACHE_FORMAT, CorpusCache
from pcube.oracle.corpus import enumerate_partial_cubes
from pcube.serializers import serializer

pytestmark = pytest.mark.anyio


async def test_get_or_build_stores_the_corpus(tmp_path):
    cache = CorpusCache(tmp_path)

    corpus = await cache.get_or_build(2)

    path = cache.path_for(2, 4)
    assert path.exists()
    assert serializer.loads(path.read_text(encoding="utf-8"))["format"] == CACHE_FORMAT
    assert await cache.load(2, 4) == corpus


async def test_cached_corpus_is_reused(tmp_path):
    cache = CorpusCache(tmp_path)
    stored = enumerate_partial_cubes(3, n_max=4)
    await cache.store(stored)

    assert await cache.get_or_build(3, n_max=4) == stored


async def test_missing_file_loads_nothing(tmp_path):
    assert await CorpusCache(tmp_path / "empty").load(2, 4) is None


async def test_tampered_file_is_ignored(tmp_path):
    cache = CorpusCache(tmp_path)
    await cache.store(enumerate_partial_cubes(2))
    path = cache.path_for(2, 4)
    data = serializer.loads(path.read_text(encoding="utf-8"))
    data["graphs"] = data["graphs"][:-1]
    path.write_text(serializer.dumps(data), encoding="utf-8")

    assert await cache.load(2, 4) is None


async def test_corrupt_file_is_ignored(tmp_path):
    cache = CorpusCache(tmp_path)
    path = cache.path_for(2, 4)
    path.write_text("{not json", encoding="utf-8")

    assert await cache.load(2, 4) is None


def test_cache_file_names_depend_on_parameters(tmp_path):
    cache = CorpusCache(tmp_path)

    assert cache.path_for(2, 4) != cache.path_for(3, 4)
    assert cache.path_for(2, 4).parent == tmp_path
