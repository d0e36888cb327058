"""Brauer algebra action on tensor space and its weight-space decomposition."""

from .decomposition import (
    Context,
    DecompositionReport,
    ModuleBasis,
    build_module,
    full_decomposition,
    iso_check,
    perm_module_iso_check,
    transitivity_check,
    verify_invariance,
)
from .diagrams import (
    BrauerDiagram,
    DiagramProduct,
    diagram_multiply,
    enumerate_diagrams,
    from_permutation,
    generator_diagrams,
    parse_diagram,
)
from .errors import BrauerError
from .scalars import SKEW, SYMMETRIC, FieldSpec, Scalar, delta_parameter, invert, reduce_int
from .tensor_action import FormSpec, SparseOperator, act, apply_c0, apply_permutation, dual_vector, form_value, phi_operator
from .weights import (
    Composition,
    OrthWeight,
    SignedPermutation,
    dim_M,
    dim_N,
    dominant_representative,
    enumerate_compositions,
    fiber,
    image_weights,
    pi_map,
    signed_perm_apply,
    weight_of,
)

__version__ = "0.1.0"
