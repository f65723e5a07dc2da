from typing import Any, runtime_checkable

from typing_extensions import Protocol


@runtime_checkable
class LoggerProtocol(Protocol):
    """
    Interface of the logger bound behind `pcube.logging.logger`.

    Any object offering the standard level methods qualifies, so the standard library logger,
    loguru or structlog can be plugged in through a custom `LoggingConfig`.
    """

    def bind_logger(self, *args: Any, **kwargs: Any) -> None: ...

    def debug(self, msg: str, *args: Any, **kwargs: Any) -> None: ...

    def info(self, msg: str, *args: Any, **kwargs: Any) -> None: ...

    def warning(self, msg: str, *args: Any, **kwargs: Any) -> None: ...

    def error(self, msg: str, *args: Any, **kwargs: Any) -> None: ...

    def critical(self, msg: str, *args: Any, **kwargs: Any) -> None: ...
