"""Executable gadget constructions and reductions for joint crossing numbers.

The package materializes a hardness-reduction tool chain for the joint
crossing number of two graphs embedded in a common surface: gadget
generators, the reduction pipeline between the anchored, face-anchored,
surface-embedded and unweighted variants, closed-form crossing counts with
independent summation oracles, and a brute-force optimum oracle that
certifies the constructions at toy scale.
"""

from .edgewidth import dual_edge_width_torus, edge_width_torus
from .fileformat import ParseError, parse_instance, serialize_instance, to_dot
from .formulas import (
    FormulaError,
    beta,
    beta_sum,
    canonical_fa_count,
    canonical_fa_count_sum,
    canonical_fplus_count,
    canonical_fplus_count_sum,
    gamma,
    gamma_sum,
    ladder_weight_seq,
    min_pair_gap,
    ordering_gap,
)
from .gadgets import (
    GadgetInstance,
    anchor_cycles_f1,
    build_f1,
    build_f2,
    build_fa_instance,
    mirror_join,
    ring_slots,
)
from .graphs import (
    Edge,
    GraphError,
    WeightedMultigraph,
    disjoint_union,
    identify_vertices,
)
from .instances import (
    AnchoredInstance,
    FaceAnchor,
    FaJointInstance,
    GraphBundle,
    SurfaceJointInstance,
    ValidationError,
)
from .oracle import (
    OracleCaps,
    OracleInputError,
    OracleResult,
    fa_joint_planar_oracle,
    instance_digest,
    oracle_report_line,
    witness_count,
)
from .planarity import is_planar, is_three_connected, min_cut_weight
from .receipts import (
    CompositeReceipt,
    ReceiptError,
    ReductionReceipt,
    receipt_from_text,
    receipt_to_text,
    recover_s,
    target_value,
)
from .reductions import (
    A2GroupReport,
    A2Report,
    PipelineOptions,
    anchored_to_fa6,
    expand_weights,
    fa_to_surface,
    full_pipeline,
    pad_dummy_anchors,
    three_connectify,
    transformed_witness_fa_to_surface,
    transformed_witness_three_connectify,
    validate_a2,
)
from .rotations import (
    EmbeddingError,
    Face,
    RotationSystem,
    cyclic_equal,
    euler_genus,
    face_matching_cycle,
    genus_by_component,
    rotations_from_layout,
    trace_faces,
)
from .torus import HandleGadget, WedgeGadget, l_gadget, toroidal_grid, torus_gadget
from .witness import (
    DrawnJointWitness,
    canonical_fa_witness,
    canonical_fplus_witness,
    validate_drawn_witness,
)

__all__ = [
    "A2GroupReport",
    "A2Report",
    "anchor_cycles_f1",
    "anchored_to_fa6",
    "AnchoredInstance",
    "beta",
    "beta_sum",
    "build_f1",
    "build_f2",
    "build_fa_instance",
    "canonical_fa_count",
    "canonical_fa_count_sum",
    "canonical_fa_witness",
    "canonical_fplus_count",
    "canonical_fplus_count_sum",
    "canonical_fplus_witness",
    "CompositeReceipt",
    "cyclic_equal",
    "disjoint_union",
    "DrawnJointWitness",
    "dual_edge_width_torus",
    "Edge",
    "edge_width_torus",
    "EmbeddingError",
    "euler_genus",
    "expand_weights",
    "fa_joint_planar_oracle",
    "fa_to_surface",
    "Face",
    "face_matching_cycle",
    "FaceAnchor",
    "FaJointInstance",
    "FormulaError",
    "full_pipeline",
    "GadgetInstance",
    "gamma",
    "gamma_sum",
    "genus_by_component",
    "GraphBundle",
    "GraphError",
    "HandleGadget",
    "identify_vertices",
    "instance_digest",
    "is_planar",
    "is_three_connected",
    "l_gadget",
    "ladder_weight_seq",
    "min_cut_weight",
    "min_pair_gap",
    "mirror_join",
    "oracle_report_line",
    "OracleCaps",
    "OracleInputError",
    "OracleResult",
    "ordering_gap",
    "pad_dummy_anchors",
    "parse_instance",
    "ParseError",
    "PipelineOptions",
    "receipt_from_text",
    "receipt_to_text",
    "ReceiptError",
    "recover_s",
    "ReductionReceipt",
    "ring_slots",
    "rotations_from_layout",
    "RotationSystem",
    "serialize_instance",
    "SurfaceJointInstance",
    "target_value",
    "three_connectify",
    "to_dot",
    "toroidal_grid",
    "torus_gadget",
    "trace_faces",
    "transformed_witness_fa_to_surface",
    "transformed_witness_three_connectify",
    "validate_a2",
    "validate_drawn_witness",
    "ValidationError",
    "WedgeGadget",
    "WeightedMultigraph",
    "witness_count",
]

__version__ = "0.1.0"
