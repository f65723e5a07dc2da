import pytest

from pcube.conf import settings
from pcube.conf.global_settings import Settings
from pcube.logging import setup_logging
from pcube.protocols.serializer import SerializerProtocol
from pcube.serializers import CompactSerializer, serializer
from pcube.utils.logging import StandardLoggingConfig


def test_test_settings_are_active():
    assert settings.logging_level == "WARNING"
    assert settings.cycle_search_budget == 100_000


def test_environment_overrides_are_cast(monkeypatch, tmp_path):
    monkeypatch.setenv("CYCLE_SEARCH_BUDGET", "123")
    monkeypatch.setenv("DEBUG", "yes")
    monkeypatch.setenv("CORPUS_CACHE_DIR", str(tmp_path))

    configured = Settings()

    assert configured.cycle_search_budget == 123
    assert configured.debug is True
    assert configured.corpus_cache_path == tmp_path
    assert configured.logging_config.level == "DEBUG"


def test_invalid_environment_values_are_rejected(monkeypatch):
    monkeypatch.setenv("MINOR_SEARCH_BUDGET", "many")

    with pytest.raises(ValueError):
        Settings()


def test_default_cache_directory(monkeypatch):
    monkeypatch.delenv("CORPUS_CACHE_DIR", raising=False)

    assert Settings().corpus_cache_path.parts[-2:] == (".cache", "pcube")


def test_settings_dump():
    dumped = Settings(gated_hull_budget=8).dict(upper=True)

    assert dumped["GATED_HULL_BUDGET"] == 8
    assert "CORPUS_BUDGET" in dumped


def test_logging_configuration_is_validated():
    with pytest.raises(ValueError):
        setup_logging("DEBUG")
    with pytest.raises(AssertionError):
        StandardLoggingConfig(level="LOUD")


def test_compact_serializer():
    assert serializer.dumps({"m": 2, "vertices": ["00", "10"]}) == '{"m":2,"vertices":["00","10"]}'
    assert serializer.loads("[1, 2]") == [1, 2]


def test_bound_serializer_follows_the_protocol():
    assert isinstance(CompactSerializer, SerializerProtocol)
    assert serializer.dumps({"vertices": ["10"], "m": 2}, indent=2) == '{\n  "vertices": [\n    "10"\n  ],\n  "m": 2\n}'
