from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from typing import Annotated, Any, cast

from typing_extensions import Doc

from pcube.protocols.logging import LoggerProtocol


class LoggerProxy:
    """
    Thread-safe proxy deferring access to the configured logger.

    Modules import the global `logger` at import time; the concrete logger is bound later by
    `setup_logging`. The first attribute access on an unbound proxy configures logging from
    the active settings so no record is lost.

    Attributes
    ----------
    _logger : LoggerProtocol | None
        The bound logger, `None` until `bind_logger` is called.
    _lock : threading.RLock
        Guards binding and the lazy default setup.
    """

    def __init__(self) -> None:
        self._logger: LoggerProtocol | None = None
        self._lock: threading.RLock = threading.RLock()

    def bind_logger(self, logger: LoggerProtocol | None) -> None:
        with self._lock:
            self._logger = logger

    def __getattr__(self, item: str) -> Any:
        if not self._logger:
            with self._lock:
                if not self._logger:
                    setup_logging(_settings_logging_config())
        return getattr(self._logger, item)


logger: LoggerProtocol = cast(LoggerProtocol, LoggerProxy())


class LoggingConfig(ABC):
    """
    Contract for logging backends.

    Attributes
    ----------
    level : str
        The validated, upper-case logging level.
    options : dict[str, Any]
        Extra keyword options given at construction.
    skip_setup_configure : bool
        Skip `configure()` when the environment already configured logging.
    name : str
        Name of the logger to configure. Defaults to "pcube".
    """

    __logging_levels__: list[str] = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

    def __init__(
        self,
        level: Annotated[
            str,
            Doc(
                """
                The minimum logging level to capture, one of `__logging_levels__`
                (case-insensitive).
                """
            ),
        ] = "DEBUG",
        **kwargs: Any,
    ) -> None:
        levels: str = ", ".join(self.__logging_levels__)
        assert (
            level.upper() in self.__logging_levels__
        ), f"'{level}' is not a valid logging level. Available levels: '{levels}'."
        self.level = level.upper()
        self.options = kwargs
        self.skip_setup_configure: bool = kwargs.get("skip_setup_configure", False)
        self.name = kwargs.get("name", "pcube")

    @abstractmethod
    def configure(self) -> None:
        raise NotImplementedError("`configure()` must be implemented in subclasses.")

    @abstractmethod
    def get_logger(self) -> Any:
        raise NotImplementedError("`get_logger()` must be implemented in subclasses.")


def _settings_logging_config() -> LoggingConfig | None:
    try:
        from pcube.conf import settings

        return settings.logging_config
    except Exception:  # noqa
        return None


def setup_logging(logging_config: LoggingConfig | None = None) -> None:
    """
    Configures the logging backend and binds the global `logger` proxy.

    Parameters
    ----------
    logging_config : LoggingConfig | None, optional
        Configuration to apply. Defaults to `StandardLoggingConfig()`.

    Raises
    ------
    ValueError
        If `logging_config` is not a `LoggingConfig`.
    """
    from pcube.utils.logging import StandardLoggingConfig

    if logging_config is not None and not isinstance(logging_config, LoggingConfig):
        raise ValueError("`logging_config` must be an instance of LoggingConfig.")

    config = logging_config or StandardLoggingConfig()
    if not config.skip_setup_configure:
        config.configure()

    logger.bind_logger(config.get_logger())
