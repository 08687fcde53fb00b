"""Brute-force verification engine: regular subgroups of Hol(A), orbit
counting, explicit skew-brace construction, and the intermediate congruence
checks that certify the closed-form counts."""

from .partition import KappaOrbits, PrimeClass, PrimePartition, kappa_orbit_reps, prime_partition
from .quintuples import (
    LocalRow,
    local_rows,
    local_tuples,
    predicate_quintuples,
    quintuple_predicate,
)
from .subgroups import (
    RegularSubgroup,
    all_regular_subgroups_generic,
    enumerate_regular_subgroups,
    recognize_group,
)
from .orbits import (
    OracleReport,
    OrbitData,
    aut_orbits,
    braces_isomorphic,
    oracle_counts,
    pair_count_check,
    stabilizer_index,
    weighted_count_check,
)
from .braces import SkewBrace, build_skew_brace, check_skew_brace, verify_skew_brace
from .congruences import adi_congruence_check
from .verification import OrderReport, PairOracle, verify_order

__all__ = [
    "KappaOrbits",
    "PrimeClass",
    "PrimePartition",
    "kappa_orbit_reps",
    "prime_partition",
    "LocalRow",
    "local_rows",
    "local_tuples",
    "predicate_quintuples",
    "quintuple_predicate",
    "RegularSubgroup",
    "all_regular_subgroups_generic",
    "enumerate_regular_subgroups",
    "recognize_group",
    "OracleReport",
    "OrbitData",
    "aut_orbits",
    "braces_isomorphic",
    "oracle_counts",
    "pair_count_check",
    "stabilizer_index",
    "weighted_count_check",
    "SkewBrace",
    "build_skew_brace",
    "check_skew_brace",
    "verify_skew_brace",
    "adi_congruence_check",
    "OrderReport",
    "PairOracle",
    "verify_order",
]
