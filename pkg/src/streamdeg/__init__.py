"""Exact arithmetic, streams and transducers for block-encoded functions.

A function f mapping naturals to naturals is encoded as the infinite bit
stream made of blocks '1' followed by f(i) zeros.  This package provides

* exact piecewise-polynomial function forms and a small literal grammar,
* weight tuples and their products, with symbolic closure on piecewise
  forms and machine-checked certificates,
* block-level stream operations, compiled either to finite transducers
  or applied symbolically to a function form,
* the reductions between the degree-1 and degree-2 base streams, and
* verification suites plus a command line front end.
"""
from .polynomials import Polynomial
from .piecewise import (
    BlockFunction,
    Exponential,
    Fzip,
    NotSymbolicError,
    PiecewisePoly,
    class_min,
    class_violations,
    fzip,
    pw_equal,
    pw_eval,
    pw_from_fzip,
    pw_normalize,
    pw_shift,
    pw_subsample,
    restricted_violations,
    shifted,
)
from .streams import (
    BlockSeq,
    MalformedStreamError,
    parse_blocks,
    prefix_equal,
    ragged_equal,
    stream_prefix,
)
from .weights import (
    Certificate,
    ProvedSymbolic,
    Refuted,
    VerifiedToDepth,
    Weight,
    WeightTuple,
    certificate_check,
    naturalize,
    tuple_norm,
    weight_product_form,
    weight_product_numeric,
    weight_product_symbolic,
    weight_product_values,
)
from .fst import Fst, fst_compose, fst_run
from .blockops import (
    AddZeros,
    BlockOp,
    DivBlock,
    DropBlocks,
    MergeWeights,
    MulBlock,
    Pipeline,
    PipelineError,
    PrependBlocks,
    SelectResidues,
    SubZeros,
    SymbolicState,
    Violation,
    apply_op_symbolic,
    compile_block_op,
    pipeline_result,
    pipeline_symbolic,
    pipeline_validate,
    state_of,
)
from .constructions import (
    ALL,
    BASE_LINEAR,
    BASE_PAIR,
    BASE_SQUARE,
    DiamondReport,
    drop_leading,
    fzip_rotate,
    fzip_swap_exponential,
    fzip_swap_linear,
    interleave_weights,
    keep_multiples,
    diamond_linear_weights,
    merge_pairs,
    diamond_n_pipeline,
    pad_sizes,
    pair_base_projections,
    quad_const_floor_form,
    quad_inverse_certificate,
    quad_inverse_coeff_shift_form,
    quad_inverse_weight,
    quad_poly,
    quad_to_weight,
    quad_to_weight_certificate,
    scale_sizes,
    diamond_n2_weights,
)
from .literals import (
    LiteralError,
    certificate_from_json,
    certificate_to_json,
    format_weight_tuple,
    parse_function,
    parse_pipeline,
    parse_weight_tuple,
)
from .suites import (
    bits_for_blocks,
    random_int_pw,
    random_linear_pw,
    random_mixed_image,
    random_quadratic_pw,
    random_weight_tuple,
    stagewise_match,
    stream_match,
    suite_diamond,
    suite_fzip,
    suite_interleave,
    suite_moves,
    suite_quadweights,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "BlockFunction",
    "Exponential",
    "Fzip",
    "NotSymbolicError",
    "PiecewisePoly",
    "class_min",
    "class_violations",
    "fzip",
    "pw_equal",
    "pw_eval",
    "pw_from_fzip",
    "pw_normalize",
    "pw_shift",
    "pw_subsample",
    "restricted_violations",
    "shifted",
    "BlockSeq",
    "MalformedStreamError",
    "parse_blocks",
    "prefix_equal",
    "ragged_equal",
    "stream_prefix",
    "Certificate",
    "ProvedSymbolic",
    "Refuted",
    "VerifiedToDepth",
    "Weight",
    "WeightTuple",
    "certificate_check",
    "naturalize",
    "tuple_norm",
    "weight_product_form",
    "weight_product_numeric",
    "weight_product_symbolic",
    "weight_product_values",
    "Fst",
    "fst_compose",
    "fst_run",
    "AddZeros",
    "BlockOp",
    "DivBlock",
    "DropBlocks",
    "MergeWeights",
    "MulBlock",
    "Pipeline",
    "PipelineError",
    "PrependBlocks",
    "SelectResidues",
    "SubZeros",
    "SymbolicState",
    "Violation",
    "apply_op_symbolic",
    "compile_block_op",
    "pipeline_result",
    "pipeline_symbolic",
    "pipeline_validate",
    "state_of",
    "ALL",
    "BASE_LINEAR",
    "BASE_PAIR",
    "BASE_SQUARE",
    "DiamondReport",
    "drop_leading",
    "fzip_rotate",
    "fzip_swap_exponential",
    "fzip_swap_linear",
    "interleave_weights",
    "keep_multiples",
    "diamond_linear_weights",
    "merge_pairs",
    "diamond_n_pipeline",
    "pad_sizes",
    "pair_base_projections",
    "quad_const_floor_form",
    "quad_inverse_certificate",
    "quad_inverse_coeff_shift_form",
    "quad_inverse_weight",
    "quad_poly",
    "quad_to_weight",
    "quad_to_weight_certificate",
    "scale_sizes",
    "diamond_n2_weights",
    "LiteralError",
    "certificate_from_json",
    "certificate_to_json",
    "format_weight_tuple",
    "parse_function",
    "parse_pipeline",
    "parse_weight_tuple",
    "bits_for_blocks",
    "random_int_pw",
    "random_linear_pw",
    "random_mixed_image",
    "random_quadratic_pw",
    "random_weight_tuple",
    "stagewise_match",
    "stream_match",
    "suite_diamond",
    "suite_fzip",
    "suite_interleave",
    "suite_moves",
    "suite_quadweights",
]
