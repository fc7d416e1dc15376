"""Exact k-Petrie numbers, proper ribbon tilings, and Schur expansions."""

from .partitions import (
    Cell,
    Partition,
    SkewShape,
    conjugate,
    connected_components,
    contains,
    content,
    dominance_leq,
    enumerate_partitions,
    enumerate_subpartitions,
    format_partition,
    horizontal_strip_extensions,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    skew,
)
from .petrie import (
    CLOSED_FORMS,
    SchurExpansion,
    closed_form,
    petrie_core,
    petrie_det,
    petrie_tiling,
    pieri_expand,
    plethystic_mn_expand,
    specialize_roots,
)
from .tilings import (
    Census,
    CensusCount,
    MultipleTilingsForNu,
    NoDecomposition,
    ProperTiling,
    Ribbon,
    census,
    condition_ii_tilings,
    enumerate_proper_dual_tilings,
    enumerate_proper_tilings,
    horizontal_tileable_sign,
    k_core,
    removable_ribbons,
    render_shape,
    render_tiling,
    ribbon_decomposition,
    ribbon_from_cells,
)

__version__ = "0.1.0"
