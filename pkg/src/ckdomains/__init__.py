"""Witness construction and exact atom counting for primefree
Cohen-Kaplansky domains: prime services with interval guarantees, additive
decompositions, generalized repunits, two-generator semigroup coverage,
divisibility-order atom enumeration in local models, and range surveys with
verifiable certificates."""

from .additive import (
    Part,
    PlannedParts,
    ShiftedPrimeDecomposition,
    goldbach_pair,
    plan_ck,
    richert_decompose,
    schinzel_rep,
    three_prime_triple,
)
from .atoms import (
    AtomReport,
    DivisibilityClass,
    LocalModel,
    atom_count_formula,
    build_model,
    count_atoms,
    divides,
    m2_universal_check,
)
from .errors import NoWitnessError, SubringClosureError
from .primes import PrimeTable, is_prime, prime_in_interval, sieve
from .repunit import (
    PrimePower,
    Repunit,
    prime_repunit_count,
    repunit_value,
    repunits_up_to,
    represent_as_repunits,
)
from .semigroup import TwoGeneratorSemigroup, coverage_char_q, representable
from .survey import (
    Block,
    CKWitness,
    SurveyReport,
    VerificationResult,
    build_witness,
    char_witness,
    survey_goldbach_shift,
    survey_repunit_pairs,
    survey_schinzel,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Part",
    "PlannedParts",
    "ShiftedPrimeDecomposition",
    "goldbach_pair",
    "plan_ck",
    "richert_decompose",
    "schinzel_rep",
    "three_prime_triple",
    "AtomReport",
    "DivisibilityClass",
    "LocalModel",
    "atom_count_formula",
    "build_model",
    "count_atoms",
    "divides",
    "m2_universal_check",
    "NoWitnessError",
    "SubringClosureError",
    "PrimeTable",
    "is_prime",
    "prime_in_interval",
    "sieve",
    "PrimePower",
    "Repunit",
    "prime_repunit_count",
    "repunit_value",
    "repunits_up_to",
    "represent_as_repunits",
    "TwoGeneratorSemigroup",
    "coverage_char_q",
    "representable",
    "Block",
    "CKWitness",
    "SurveyReport",
    "VerificationResult",
    "build_witness",
    "char_witness",
    "survey_goldbach_shift",
    "survey_repunit_pairs",
    "survey_schinzel",
    "verify_witness",
]
