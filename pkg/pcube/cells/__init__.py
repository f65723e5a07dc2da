from pcube.cells.cycles import Cycle, as_isometric_cycle, convex_cycles, isometric_cycles, order_cycle
from pcube.cells.disks import (
    CycleClassification,
    CycleKind,
    Disk,
    affine_witness,
    antipodal_vertices,
    antipode,
    classify_isometric_cycle,
    is_antipodal,
    is_disk,
)
from pcube.cells.subdivisions import (
    FullSubdivision,
    StandardEmbedding,
    as_full_subdivision,
    full_subdivisions,
    standardize,
)
from pcube.cells.wiring import WiringDiagram, disk_from_wiring

__all__ = [
    "Cycle",
    "CycleClassification",
    "CycleKind",
    "Disk",
    "FullSubdivision",
    "StandardEmbedding",
    "WiringDiagram",
    "affine_witness",
    "antipodal_vertices",
    "antipode",
    "as_full_subdivision",
    "as_isometric_cycle",
    "classify_isometric_cycle",
    "convex_cycles",
    "disk_from_wiring",
    "full_subdivisions",
    "is_antipodal",
    "is_disk",
    "isometric_cycles",
    "order_cycle",
    "standardize",
]
