"""Exact cycle censuses of permutations, derangements and a-derangements."""

from cyclecensus.census import (
    Caps,
    CensusTable,
    CycleType,
    SmallCycleTable,
    census_row,
    census_table,
    cycle_type_count,
    derangement_count,
    inclusion_exclusion_count,
    leading_coefficient,
    small_cycle_table,
)
from cyclecensus.genfunc import (
    CyclePolynomial,
    DifferenceReport,
    UnitPoint,
    build_polynomial,
    eval_exact,
    eval_negative_simplified,
    eval_unit_circle,
    finite_difference_profile,
)
from cyclecensus.rootloc import (
    RootWitness,
    SturmChain,
    count_roots_in,
    isolate_root_near,
    pigeonhole_bound,
    sturm_chain,
    threshold_scan,
)
from cyclecensus.balance import (
    DecaySeries,
    FilterCheck,
    GoodRootBound,
    ResidueReport,
    decay_series,
    good_root_bound,
    magnitude_product,
    residue_sums,
    unity_filter_check,
)

__version__ = "0.1.0"
