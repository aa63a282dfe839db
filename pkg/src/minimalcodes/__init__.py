"""Exact tools for minimal linear codes over prime fields."""
from minimalcodes.field import (
    FieldVector,
    LinearCode,
    PrimeField,
    WeightDistribution,
    cap,
    combine,
    covers,
    enumerate_codewords,
    weight_distribution,
)
from minimalcodes.krawtchouk import character_sum_oracle, krawtchouk, lloyd
from minimalcodes.minimality import (
    Method,
    MinimalityVerdict,
    Screen,
    ashikhmin_barg,
    cover_by_weights,
    is_minimal_definitional,
    is_minimal_weight_criterion,
    two_weight_sufficient,
)
from minimalcodes.ternary import (
    FieldFunction,
    WalshTable,
    build_cf,
    build_cf_general,
    dimension_ok,
    distribution_from_walsh,
    distribution_gmk_closed,
    gmk_certificate,
    is_minimal_walsh,
    make_gmk,
    walsh_table,
)

__version__ = "0.1.0"
