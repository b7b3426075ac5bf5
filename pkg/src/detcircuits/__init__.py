"""Determinantal circuits: polynomial-time evaluation, Pfaffian
compilation, and spanning-forest counting.

The core objects are LabeledMatrix (wires named by integer labels),
Circuit (a closed ring of gate stacks and wire bijections), SkewMatrix
and PfaffianCircuit (the Pfaffian side), and Graph.  Every fast path in
the package has a brute-force oracle next to it.
"""

from .circuit import (
    Circuit,
    Stack,
    collapse,
    evaluate,
    identity_wiring,
    validate,
    width_depth,
    wiring_matrix,
)
from .compiler import (
    CompiledCircuit,
    compile_circuit,
    pad_to_square,
    reflect,
    skew_embed,
)
from .errors import (
    DanglingWire,
    DuplicateLabel,
    EdgeMultiplicity,
    LabelCollision,
    LabelMismatch,
    NotEndomorphism,
    NotSkew,
    NotSquare,
    ParseError,
    SizeMismatch,
    TooLarge,
    ValidationError,
)
from .formats import (
    parse_circuit,
    parse_graph,
    parse_pfaffian,
    write_circuit,
    write_graph,
    write_pfaffian,
)
from .graphs import (
    ForestPolynomial,
    Graph,
    count_rooted_forests,
    count_spanning_trees,
    enumerate_forests,
    enumerate_trees,
    forest_histogram,
    forest_polynomial,
    graph_to_circuit,
    incidence_matrix,
    laplacian,
    laplacian_cofactor,
    reorient,
)
from .labeled import (
    LabeledMatrix,
    braiding,
    compose,
    dagger,
    determinant,
    direct_sum,
    identity,
    labeled,
    permutation_matrix,
    principal_minor_sum,
    submatrix,
)
from .pfaffian import (
    PfaffianCircuit,
    PfGate,
    SkewMatrix,
    anti_transpose,
    eval_pfaffian_circuit,
    eval_pfaffian_oracle,
    pfaffian,
    pfaffian_oracle,
    skew,
    skew_restrict,
    spf,
    spf_dual,
    validate_pfaffian,
    zero_skew,
)
from .scalars import Scalar, format_scalar, parse_scalar, scalars_equal
from .tensor import (
    Multicycle,
    Tensor,
    contract_circuit,
    enumerate_multicycles,
    multicycle_total,
    sdet_expand,
    tensor_compose,
    tensor_product,
    tensor_trace,
    tensors_equal,
)

__all__ = [
    "Circuit",
    "CompiledCircuit",
    "DanglingWire",
    "DuplicateLabel",
    "EdgeMultiplicity",
    "ForestPolynomial",
    "Graph",
    "LabelCollision",
    "LabelMismatch",
    "LabeledMatrix",
    "Multicycle",
    "NotEndomorphism",
    "NotSkew",
    "NotSquare",
    "ParseError",
    "PfGate",
    "PfaffianCircuit",
    "Scalar",
    "SizeMismatch",
    "SkewMatrix",
    "Stack",
    "Tensor",
    "TooLarge",
    "ValidationError",
    "anti_transpose",
    "braiding",
    "collapse",
    "compile_circuit",
    "compose",
    "contract_circuit",
    "count_rooted_forests",
    "count_spanning_trees",
    "dagger",
    "determinant",
    "direct_sum",
    "enumerate_forests",
    "enumerate_multicycles",
    "enumerate_trees",
    "eval_pfaffian_circuit",
    "eval_pfaffian_oracle",
    "evaluate",
    "forest_histogram",
    "forest_polynomial",
    "format_scalar",
    "graph_to_circuit",
    "identity",
    "identity_wiring",
    "incidence_matrix",
    "labeled",
    "laplacian",
    "laplacian_cofactor",
    "multicycle_total",
    "pad_to_square",
    "parse_circuit",
    "parse_graph",
    "parse_pfaffian",
    "parse_scalar",
    "permutation_matrix",
    "pfaffian",
    "pfaffian_oracle",
    "principal_minor_sum",
    "reflect",
    "reorient",
    "scalars_equal",
    "sdet_expand",
    "skew",
    "skew_embed",
    "skew_restrict",
    "spf",
    "spf_dual",
    "submatrix",
    "tensor_compose",
    "tensor_product",
    "tensor_trace",
    "tensors_equal",
    "validate",
    "validate_pfaffian",
    "width_depth",
    "wiring_matrix",
    "write_circuit",
    "write_graph",
    "write_pfaffian",
    "zero_skew",
]
