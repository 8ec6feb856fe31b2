"""Finite integral commutative quantales and their ideal theory.

Carriers are finite lattices with a compatible multiplication whose unit
is the top element.  The package builds and certifies such structures,
computes their ideals, radicals, prime spectra and primary
decompositions, and can exhaustively re-prove the governing laws on any
loaded instance.  The qk command exposes the same operations on .quant
text files.
"""

from .core import (
    AxiomReport,
    FiniteQuantale,
    HomReport,
    QuantaleHom,
    build_quantale,
    check_axioms,
    check_hom,
    is_unit,
    power,
    power_of_join,
)
from .errors import (
    CarrierMismatch,
    Degenerate,
    DuplicateLabel,
    EmptyGeneratorSet,
    HomInvalid,
    HomRequired,
    HypothesisViolated,
    InvalidDecomposition,
    MissingBound,
    NoAvoidingIdeal,
    NotALattice,
    NotAPartialOrder,
    NotCommutative,
    NotDecomposable,
    NotMc,
    NotPrimary,
    NotPrime,
    NotProper,
    QuantFileError,
    QuantSyntaxError,
    QuantaleError,
    RowArity,
    TooLarge,
    UndeclaredLabel,
)
from .generators import (
    all_posets,
    all_topologies,
    generate,
    lowersets_quantale,
    lukasiewicz_quantale,
    m3_quantale,
    opens_quantale,
    powerset_quantale,
)
from .ideals import (
    Ideal,
    IdealQuantale,
    annihilator,
    contraction,
    enumerate_ideals,
    extension,
    generated,
    ideal_quantale,
    is_ideal,
    join_ideals,
    meet_ideals,
    principal,
    product_ideals,
    residual,
    whole_ideal,
    zero_ideal,
)
from .classify import (
    Classification,
    McSet,
    classification,
    is_local,
    is_primary,
    is_prime,
    is_semiprime,
    jacobson,
    maximal_ideals,
    mc_generated,
    minimal_primes_over,
    nilradical,
    prime_avoidance,
    primes_over,
    radical,
    saturation,
    spectrum,
)
from .decompose import (
    ArithmeticReport,
    Decomposition,
    UniquenessReport,
    arithmetic_equivalence_check,
    irreducible_decomposition,
    is_arithmetic,
    is_irreducible,
    is_strongly_irreducible,
    minimize,
    primary_decomposition,
    uniqueness_report,
)
from .quantfile import (
    load_hom,
    load_quant,
    parse_hom,
    parse_quant,
    save_quant,
    write_quant,
)
from .verify import (
    LawResult,
    VerificationReport,
    cross_oracle,
    run_suite,
    single_cell_mutants,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "ArithmeticReport",
    "CarrierMismatch",
    "Classification",
    "Decomposition",
    "Degenerate",
    "DuplicateLabel",
    "EmptyGeneratorSet",
    "FiniteQuantale",
    "HomInvalid",
    "HomReport",
    "HomRequired",
    "HypothesisViolated",
    "Ideal",
    "IdealQuantale",
    "InvalidDecomposition",
    "LawResult",
    "McSet",
    "MissingBound",
    "NoAvoidingIdeal",
    "NotALattice",
    "NotAPartialOrder",
    "NotCommutative",
    "NotDecomposable",
    "NotMc",
    "NotPrimary",
    "NotPrime",
    "NotProper",
    "QuantFileError",
    "QuantSyntaxError",
    "QuantaleError",
    "QuantaleHom",
    "RowArity",
    "TooLarge",
    "UndeclaredLabel",
    "UniquenessReport",
    "VerificationReport",
    "all_posets",
    "all_topologies",
    "annihilator",
    "arithmetic_equivalence_check",
    "build_quantale",
    "check_axioms",
    "check_hom",
    "classification",
    "contraction",
    "cross_oracle",
    "enumerate_ideals",
    "extension",
    "generate",
    "generated",
    "ideal_quantale",
    "irreducible_decomposition",
    "is_arithmetic",
    "is_ideal",
    "is_irreducible",
    "is_local",
    "is_primary",
    "is_prime",
    "is_semiprime",
    "is_strongly_irreducible",
    "is_unit",
    "jacobson",
    "join_ideals",
    "load_hom",
    "load_quant",
    "lowersets_quantale",
    "lukasiewicz_quantale",
    "m3_quantale",
    "maximal_ideals",
    "mc_generated",
    "meet_ideals",
    "minimal_primes_over",
    "minimize",
    "nilradical",
    "opens_quantale",
    "parse_hom",
    "parse_quant",
    "power",
    "power_of_join",
    "powerset_quantale",
    "primary_decomposition",
    "prime_avoidance",
    "primes_over",
    "principal",
    "product_ideals",
    "radical",
    "residual",
    "run_suite",
    "saturation",
    "save_quant",
    "single_cell_mutants",
    "spectrum",
    "uniqueness_report",
    "whole_ideal",
    "write_quant",
    "zero_ideal",
]
