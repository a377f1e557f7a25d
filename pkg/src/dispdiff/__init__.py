"""Dispersive and diffusive maps on fixed-width binary words.

Construct linear maps where one flipped input bit flips exactly half the
output bits (dispersive), and permutations where each output bit flips
for exactly half of all single-bit input changes (diffusive), then prove
both properties by exhaustive enumeration, exactly, in integers.
"""

from .bitword import (
    DEFAULT_PAIR_BUDGET,
    MAX_WIDTH,
    BitWord,
    BudgetExceededError,
    PairSpec,
    alpha,
    beta,
    complement,
    concat,
    distance,
    enumerate_pairs,
    pair_count,
    proj,
    sigma,
    tau,
    weight,
    xor,
    xor_padded,
)
from .dispersive import (
    DispersionReport,
    build_dispersive,
    dispersive_table,
    even_weight_obstruction_check,
    format_dispersion_report,
    min_output_dim,
    normalize_to_zero,
    semi_weight_generators,
    verify_dispersive,
    verify_dispersive_linear,
)
from .diffusive import (
    DecomposedSums,
    DiffusionReport,
    column_diffusive,
    decompose_sums,
    extend_output,
    format_diffusion_report,
    g_eval,
    g_table,
    quadruple_sum_check,
    verify_diffusive,
)
from .explorer import (
    SearchOutcome,
    min_linear_dim_k,
    search_linear_k_dispersive,
    verify_k_dispersive,
    verify_k_diffusive,
)
from .f2linear import (
    LinearMap,
    TruthTableMap,
    apply,
    parse_generator_matrix,
    parse_map_file,
    parse_truth_table,
    rank,
    serialize_generator_matrix,
    serialize_truth_table,
    tabulate,
    transpose,
)

__all__ = [
    "DEFAULT_PAIR_BUDGET",
    "MAX_WIDTH",
    "BitWord",
    "BudgetExceededError",
    "PairSpec",
    "alpha",
    "beta",
    "complement",
    "concat",
    "distance",
    "enumerate_pairs",
    "pair_count",
    "proj",
    "sigma",
    "tau",
    "weight",
    "xor",
    "xor_padded",
    "DispersionReport",
    "build_dispersive",
    "dispersive_table",
    "even_weight_obstruction_check",
    "format_dispersion_report",
    "min_output_dim",
    "normalize_to_zero",
    "semi_weight_generators",
    "verify_dispersive",
    "verify_dispersive_linear",
    "DecomposedSums",
    "DiffusionReport",
    "column_diffusive",
    "decompose_sums",
    "extend_output",
    "format_diffusion_report",
    "g_eval",
    "g_table",
    "quadruple_sum_check",
    "verify_diffusive",
    "SearchOutcome",
    "min_linear_dim_k",
    "search_linear_k_dispersive",
    "verify_k_dispersive",
    "verify_k_diffusive",
    "LinearMap",
    "TruthTableMap",
    "apply",
    "parse_generator_matrix",
    "parse_map_file",
    "parse_truth_table",
    "rank",
    "serialize_generator_matrix",
    "serialize_truth_table",
    "tabulate",
    "transpose",
]

__version__ = "0.1.0"
