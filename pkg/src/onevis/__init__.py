"""1-visibility representations of embedded 1-planar graphs."""

from __future__ import annotations

from .augmentation import (
    ConfigKind,
    SeparationStructure,
    classify_configuration,
    insert_separation_edges,
    normalize,
    planar_maximal_augment,
    triconnected_components,
)
from .crossing import FaceShape, MatchingAssignment, classify_face, finalize, insert_crossing, match_crossed_vertices
from .embedding import InvalidEmbedding, OnePlanarEmbedding, Planarization, faces, planarize, validate_embedding
from .generators import gen_config, gen_Gn, gen_K7_minus_e, gen_random_1planar, gen_XQ
from .graph import EdgeKind, Graph, blocks, build_graph, check_density
from .layout import EdgeSegment, VertexSegment, VisibilityLayout
from .pipeline import DensityViolation, PipelineReport, layout_blocks, one_visibility
from .planar_layout import DistanceMaps, StNumbering, dual_distances, planar_visibility, st_number
from .verification import VerificationReport, naive_intersections, verify_layout, verify_not_1planar_witness

__all__ = [
    "ConfigKind",
    "DensityViolation",
    "DistanceMaps",
    "EdgeKind",
    "EdgeSegment",
    "FaceShape",
    "Graph",
    "InvalidEmbedding",
    "MatchingAssignment",
    "OnePlanarEmbedding",
    "PipelineReport",
    "Planarization",
    "SeparationStructure",
    "StNumbering",
    "VerificationReport",
    "VertexSegment",
    "VisibilityLayout",
    "blocks",
    "build_graph",
    "check_density",
    "classify_configuration",
    "classify_face",
    "dual_distances",
    "faces",
    "finalize",
    "gen_Gn",
    "gen_K7_minus_e",
    "gen_XQ",
    "gen_config",
    "gen_random_1planar",
    "insert_crossing",
    "insert_separation_edges",
    "layout_blocks",
    "match_crossed_vertices",
    "naive_intersections",
    "normalize",
    "one_visibility",
    "planar_maximal_augment",
    "planar_visibility",
    "planarize",
    "st_number",
    "triconnected_components",
    "validate_embedding",
    "verify_layout",
    "verify_not_1planar_witness",
]
