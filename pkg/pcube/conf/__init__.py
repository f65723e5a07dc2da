from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Any, cast

from monkay import Monkay

if TYPE_CHECKING:
    from .global_settings import Settings


@lru_cache
def get_pcube_monkay() -> Monkay[None, Settings]:
    from pcube import monkay

    monkay.evaluate_settings(ignore_import_errors=False)
    return monkay


class SettingsForward:
    """
    Proxy forwarding attribute access to the settings object loaded by Monkay.

    The settings class is resolved on first access from `PCUBE_SETTINGS_MODULE`, so importing
    `pcube.conf.settings` never triggers configuration by itself.
    """

    def __getattribute__(self, name: str) -> Any:
        monkay = get_pcube_monkay()
        return getattr(monkay.settings, name)

    def __setattr__(self, name: str, value: Any) -> None:
        monkay = get_pcube_monkay()
        setattr(monkay.settings, name, value)

    def __delattr__(self, name: str) -> None:
        monkay = get_pcube_monkay()
        delattr(monkay.settings, name)


settings = cast("Settings", SettingsForward())
