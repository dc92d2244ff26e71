"""Greedy set cover over (0,1) incidence matrices, with an engine for the
improved coverage-trajectory bound and brute-force validation oracles."""

from .bounds import (
    BadArgs,
    BadGamma,
    BoundEntry,
    BoundSeries,
    OutOfRegion,
    bound_series,
    classical_bound,
    closed_form_bound,
    cover_size_bound,
    improved_bound,
    improvement_ratio,
    product_exact,
    product_lower,
    product_upper,
)
from .generate import (
    BERNOULLI_REPAIR,
    COLUMN_REGULAR,
    BadSpec,
    GenSpec,
    SplitMix64,
    gen_bernoulli_repair,
    gen_column_regular,
    generate_instance,
)
from .greedy import (
    CoverTrace,
    NoProgress,
    Uncoverable,
    complete_cover,
    gain,
    greedy_step,
    run_greedy,
    trace_document,
    verify_cover,
)
from .instance import (
    BadChar,
    BadHeader,
    BadRowLength,
    DensitySpec,
    Instance,
    InstanceError,
    ZeroColumn,
    column_counts,
    density,
    parse_instance,
    write_instance,
)
from .oracle import (
    OracleReport,
    TooLarge,
    Violation,
    check_bound_exhaustive,
    check_bound_random,
    check_product_sandwich,
    default_random_suite,
    exact_min_cover,
)

__version__ = "0.1.0"
