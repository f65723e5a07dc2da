from typing import TYPE_CHECKING

from .monkay import create_monkay

__version__ = "0.1.0"

if TYPE_CHECKING:
    from .analysis import analyze, characterize
    from .completion import ample_completion, com_completion
    from .conf import settings
    from .conf.global_settings import Settings
    from .core.graph import CubeGraph, Region, ThetaClass, from_labels
    from .core.labels import Sign
    from .core.recognition import recognize
    from .exceptions import PcubeError
    from .minors.families import SetFamily, is_ample, vc_dimension
    from .minors.membership import membership


__all__ = [
    "CubeGraph",
    "Region",
    "Sign",
    "ThetaClass",
    "from_labels",
    "recognize",
    "SetFamily",
    "vc_dimension",
    "is_ample",
    "membership",
    "com_completion",
    "ample_completion",
    "analyze",
    "characterize",
    "PcubeError",
    "Settings",
    "settings",
]

monkay = create_monkay(globals())
del create_monkay
