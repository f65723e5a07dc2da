from pcube.minors.families import (
    AmpleReport,
    SetFamily,
    ample_report,
    is_ample,
    is_two_dimensional,
    maximal_shattered_sets,
    sauer_shelah_bound,
    shattered,
    shattered_sets,
    strongly_shattered,
    strongly_shattered_sets,
    vc_dimension,
)
from pcube.minors.membership import MembershipFlags, membership
from pcube.minors.operations import MinorSpec, apply_minor, contains_pc_minor, contract, restrict

__all__ = [
    "AmpleReport",
    "MembershipFlags",
    "MinorSpec",
    "SetFamily",
    "ample_report",
    "apply_minor",
    "contains_pc_minor",
    "contract",
    "is_ample",
    "is_two_dimensional",
    "maximal_shattered_sets",
    "membership",
    "restrict",
    "sauer_shelah_bound",
    "shattered",
    "shattered_sets",
    "strongly_shattered",
    "strongly_shattered_sets",
    "vc_dimension",
]
