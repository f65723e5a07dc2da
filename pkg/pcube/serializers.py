from __future__ import annotations

import json
import threading
from abc import ABC, abstractmethod
from typing import Any, cast

from pcube.protocols.serializer import SerializerProtocol


class SerializerProxy:
    """
    Proxy for the serializer used by documents, reports and the corpus cache.
    """

    def __init__(self) -> None:
        self._serializer: SerializerProtocol | None = None
        self._lock: threading.RLock = threading.RLock()

    def bind_serializer(self, serializer: SerializerProtocol | None) -> None:  # noqa
        with self._lock:
            self._serializer = serializer

    def __getattr__(self, item: str) -> Any:
        with self._lock:
            if not self._serializer:
                setup_serializer()
            return getattr(self._serializer, item)


serializer: SerializerProtocol = cast(SerializerProtocol, SerializerProxy())


class SerializerConfig(ABC):
    """
    Base of serializer configurations.

    Subclasses return the object implementing `SerializerProtocol` from `get_serializer()`
    and may run one-off setup in `configure()`.
    """

    def __init__(self, **kwargs: Any) -> None:
        self.options = kwargs
        self.skip_setup_configure: bool = kwargs.get("skip_setup_configure", True)

    def configure(self) -> None:
        raise NotImplementedError("`configure()` must be implemented in subclasses.")

    @abstractmethod
    def get_serializer(self) -> Any:
        raise NotImplementedError("`get_serializer()` must be implemented in subclasses.")


def _with_defaults(**kwargs: Any) -> Any:
    kwargs.setdefault("ensure_ascii", False)
    kwargs.setdefault("allow_nan", False)
    if kwargs.get("indent") is None:
        kwargs.setdefault("separators", (",", ":"))
    return kwargs


class CompactSerializer:
    """
    `json` with compact separators unless an indent is requested.
    """

    load = json.load
    loads = json.loads

    @staticmethod
    def dump(obj: Any, fp: Any, **kwargs: Any) -> None:
        json.dump(obj, fp, **_with_defaults(**kwargs))

    @staticmethod
    def dumps(obj: Any, **kwargs: Any) -> str:
        return json.dumps(obj, **_with_defaults(**kwargs))


class StandardSerializerConfig(SerializerConfig):
    def configure(self) -> None: ...

    def get_serializer(self) -> Any:
        return CompactSerializer


def setup_serializer(serializer_config: SerializerConfig | None = None) -> None:
    """
    Binds the global `serializer` proxy.

    Args:
        serializer_config: Configuration to use. Defaults to `StandardSerializerConfig`.

    Raises:
        ValueError: If `serializer_config` is not a `SerializerConfig`.
    """
    if serializer_config is not None and not isinstance(serializer_config, SerializerConfig):
        raise ValueError("`serializer_config` must be an instance of SerializerConfig.")

    config = serializer_config or StandardSerializerConfig()
    if not config.skip_setup_configure:
        config.configure()

    serializer.bind_serializer(config.get_serializer())  # type: ignore
