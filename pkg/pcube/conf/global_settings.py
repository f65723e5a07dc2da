from __future__ import annotations

import os
from pathlib import Path
from types import UnionType
from typing import TYPE_CHECKING, Annotated, Any, ClassVar, Union, get_args, get_origin, get_type_hints

from pcube import __version__  # noqa
from pcube.serializers import SerializerConfig, StandardSerializerConfig

if TYPE_CHECKING:
    from pcube.logging import LoggingConfig  # noqa


def _settings_fields(cls: type) -> dict[str, Any]:
    """
    Collects the public, non-ClassVar annotations of a settings class across its MRO.

    Falls back to the raw `__annotations__` of a base when its hints cannot be resolved, so
    subclasses declared in test or application modules keep every inherited field.
    """
    fields: dict[str, Any] = {}
    for base in reversed(cls.__mro__):
        if base is object:
            continue
        try:
            hints = get_type_hints(base, include_extras=True)
        except Exception:  # noqa
            hints = dict(getattr(base, "__annotations__", {}))

        for name, annotation in hints.items():
            if name.startswith("_"):
                continue
            if get_origin(annotation) is ClassVar or str(annotation).startswith(("ClassVar", "typing.ClassVar")):
                continue
            fields[name] = annotation
    return fields


class BaseSettings:
    """
    Settings base whose annotated attributes can be overridden by environment variables.

    Every annotated attribute `name` is looked up as the upper-case variable `NAME`; when set,
    the string value is cast to the annotated type (optionals unwrap to their inner type,
    booleans accept the usual truthy spellings).
    """

    __fields__: ClassVar[dict[str, Any]] = {}
    __truthy__: ClassVar[set[str]] = {"true", "1", "yes", "on", "y"}

    def __init__(self, **kwargs: Any) -> None:
        for key, value in kwargs.items():
            setattr(self, key, value)

        for key, annotation in self.__fields__.items():
            raw = os.getenv(key.upper())
            if raw is not None:
                setattr(self, key, self._cast(raw, annotation))
            else:
                setattr(self, key, getattr(self, key, None))

        self.post_init()

    def __init_subclass__(cls) -> None:
        cls.__fields__ = _settings_fields(cls)

    def post_init(self) -> None:
        """
        Hook executed once all fields are resolved.
        """
        ...

    def _cast(self, value: str, annotation: Any) -> Any:
        typ = annotation
        if get_origin(typ) is Annotated:
            typ = get_args(typ)[0]
        if get_origin(typ) in (Union, UnionType):
            candidates = [t for t in get_args(typ) if t is not type(None)]
            if len(candidates) != 1:
                raise ValueError(f"Cannot cast to ambiguous Union type: {typ}")
            typ = candidates[0]
        if isinstance(typ, str):
            typ = {"int": int, "str": str, "bool": bool, "float": float}.get(typ.split(" ")[0], str)

        if typ is bool:
            return value.lower() in self.__truthy__
        try:
            return typ(value)
        except Exception:
            raise ValueError(f"Cannot cast value '{value}' to type '{getattr(typ, '__name__', typ)}'") from None

    def dict(self, exclude_none: bool = False, upper: bool = False) -> dict[str, Any]:
        """
        Dumps the settings fields into a dictionary.
        """
        result: dict[str, Any] = {}
        for key in self.__fields__:
            value = getattr(self, key, None)
            if exclude_none and value is None:
                continue
            result[key.upper() if upper else key] = value
        return result


class Settings(BaseSettings):
    """
    Configuration of the pcube library and command line tool.

    Besides the usual debug and logging switches, the settings carry the budgets bounding the
    exponential searches (gated hulls, isometric cycles, pc-minors, covers and corpus
    enumeration) and the location of the corpus cache.
    """

    debug: bool = False
    """
    Enables debug mode. Debug mode lowers the default logging level to DEBUG.
    """

    version: str = __version__
    """
    The installed pcube version.
    """

    logging_level: str = "INFO"
    """
    Minimum severity of log records emitted by the `pcube` logger.
    """

    gated_hull_budget: int = 2**20
    """
    Maximum number of convex candidate supersets examined by `gated_hull`.

    The candidates are all ways of freeing the Θ-classes that do not cross the convex hull,
    hence `2 ** k` for `k` such classes. Exceeding the budget raises `TooManyFreeClasses`.
    """

    cycle_search_budget: int = 200_000
    """
    Maximum number of search nodes visited while enumerating isometric cycles.
    """

    minor_search_budget: int = 500_000
    """
    Maximum number of minor specifications evaluated by pc-minor containment searches.
    """

    cover_search_budget: int = 20_000
    """
    Maximum number of isometric covers yielded by cover enumeration.
    """

    corpus_budget: int = 2_000_000
    """
    Maximum number of vertex subsets visited while enumerating a corpus of partial cubes.
    """

    corpus_cache_dir: str | None = None
    """
    Directory of the corpus cache. Defaults to `~/.cache/pcube` when unset.
    """

    @property
    def corpus_cache_path(self) -> Path:
        if self.corpus_cache_dir:
            return Path(self.corpus_cache_dir)
        return Path.home() / ".cache" / "pcube"

    @property
    def logging_config(self) -> "LoggingConfig | None":
        """
        The logging configuration built from `logging_level` (DEBUG when `debug` is on).
        """
        from pcube.utils.logging import StandardLoggingConfig

        return StandardLoggingConfig(level="DEBUG" if self.debug else self.logging_level)

    @property
    def serializer_config(self) -> SerializerConfig | None:  # noqa
        """
        The serializer used for graph documents, reports and the corpus cache.
        """
        return StandardSerializerConfig()
