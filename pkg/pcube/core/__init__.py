from pcube.core.graph import CubeGraph, Region, ThetaClass, from_labels
from pcube.core.hulls import Hull, convex_hull, gate, gated_hull, is_convex, is_gated, is_isometric
from pcube.core.labels import Label, Sign
from pcube.core.recognition import Recognition, recognize

__all__ = [
    "CubeGraph",
    "Hull",
    "Label",
    "Recognition",
    "Region",
    "Sign",
    "ThetaClass",
    "convex_hull",
    "from_labels",
    "gate",
    "gated_hull",
    "is_convex",
    "is_gated",
    "is_isometric",
    "recognize",
]
