"""Maximally probable r-furcating tree shapes, Huffman trees and labeled histories."""
from .enumeration import count_shapes, enumerate_shapes
from .histories import (
    count_histories_closed,
    count_histories_recursive,
    count_tie_permitting,
    total_tie_permitting,
)
from .huffman import huffman_all_shapes, huffman_tree, is_normal, r_merge, weight_sequence
from .kernels import BACKEND
from .majorization import log_objective, log_sum_check, majorizes, weakly_supermajorizes
from .maxprob import (
    conjecture_check,
    decompose,
    hammersley_split,
    max_tie_table,
    maxprob_shape,
    nonunique_family,
    verify_maxprob,
)
from .shape import (
    ShapeError,
    TreeShape,
    canonicalize,
    compose,
    is_fully_symmetric,
    leaf,
    node_stats,
    parse,
    serialize,
)

__version__ = "0.1.0"
