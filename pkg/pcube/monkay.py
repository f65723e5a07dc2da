from __future__ import annotations

import os
from typing import TYPE_CHECKING

from monkay import Monkay

if TYPE_CHECKING:
    from pcube.conf.global_settings import Settings


def create_monkay(global_dict: dict) -> Monkay[None, Settings]:
    monkay: Monkay[None, Settings] = Monkay(
        global_dict,
        settings_path=lambda: os.environ.get("PCUBE_SETTINGS_MODULE", "pcube.conf.global_settings.Settings"),
        lazy_imports={
            "CubeGraph": "pcube.core.graph.CubeGraph",
            "Region": "pcube.core.graph.Region",
            "Sign": "pcube.core.labels.Sign",
            "ThetaClass": "pcube.core.graph.ThetaClass",
            "from_labels": "pcube.core.graph.from_labels",
            "recognize": "pcube.core.recognition.recognize",
            "SetFamily": "pcube.minors.families.SetFamily",
            "vc_dimension": "pcube.minors.families.vc_dimension",
            "is_ample": "pcube.minors.families.is_ample",
            "membership": "pcube.minors.membership.membership",
            "com_completion": "pcube.completion.com_completion",
            "ample_completion": "pcube.completion.ample_completion",
            "analyze": "pcube.analysis.analyze",
            "characterize": "pcube.analysis.characterize",
            "PcubeError": "pcube.exceptions.PcubeError",
            "settings": "pcube.conf.settings",
            "Settings": "pcube.conf.global_settings.Settings",
        },
        skip_all_update=True,
        package="pcube",
    )
    return monkay
