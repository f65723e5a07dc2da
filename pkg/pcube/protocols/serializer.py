from typing import IO, Any, Protocol, runtime_checkable

JSONDocument = dict[str, Any] | list[Any]


@runtime_checkable
class SerializerProtocol(Protocol):
    """
    What `pcube.serializers.serializer` must offer.

    Payloads are the plain dicts of graph documents, analysis reports and corpus cache files.
    `dumps` must keep key order and accept `indent`, since golden files compare text.
    """

    def dump(self, obj: JSONDocument, fp: IO[str], **kwargs: Any) -> None: ...

    def dumps(self, obj: JSONDocument, *, indent: int | None = None, **kwargs: Any) -> str: ...

    def load(self, fp: IO[str], **kwargs: Any) -> Any: ...

    def loads(self, text: str | bytes, **kwargs: Any) -> Any: ...
