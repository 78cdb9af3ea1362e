"""Exact Chow and augmented Chow polynomials of uniform matroids.

Closed-form expansions, their multivariate refinements, a chain-counting
oracle over the lattice of flats of small matroids, and an exhaustive census
of Schubert matroids classified by rank, loops, and cogirth.
"""

from .combinat import (
    SubsetPermutation,
    delta_multinomial,
    derangement_poly,
    descent_count,
    descent_set,
    eulerian_fixed_descents,
    eulerian_poly,
    nc_subsets,
    runs_partition,
)
from .forms import (
    METHODS,
    MULTIVARIATE_BASES,
    closed_form,
    coefficient_formula,
    multivariate_closed_form,
)
from .matroid import (
    INFINITY,
    FlatLattice,
    LabeledChain,
    Matroid,
    MatroidError,
    MatroidInvariants,
    chain_chow,
    chain_chow_multivariate,
    chain_label_permutations,
    chain_label_sequences,
    flats_lattice,
    labeled_chains,
    matroid_from_bases,
    matroid_from_json,
    matroid_invariants,
    matroid_to_json,
    r_label,
    uniform,
)
from .polynomial import (
    NonSquarefreeProductError,
    NotPalindromicError,
    SqfMultiPoly,
    UniPoly,
    gamma_reconstruct,
    gamma_vector,
)
from .schubert import (
    CensusTable,
    CoefficientCheck,
    CoefficientCountReport,
    ResourceLimitError,
    SchubertInvariants,
    SchubertSpec,
    census,
    census_matches_formula,
    grassmannian_avoiding_count,
    max_ground_size,
    schubert_invariants_formula,
    schubert_matroid,
    sm_count,
    verify_coefficient_counts,
)

__version__ = "0.1.0"

__all__ = [
    "CensusTable",
    "CoefficientCheck",
    "CoefficientCountReport",
    "FlatLattice",
    "INFINITY",
    "LabeledChain",
    "METHODS",
    "MULTIVARIATE_BASES",
    "Matroid",
    "MatroidError",
    "MatroidInvariants",
    "NonSquarefreeProductError",
    "NotPalindromicError",
    "ResourceLimitError",
    "SchubertInvariants",
    "SchubertSpec",
    "SqfMultiPoly",
    "SubsetPermutation",
    "UniPoly",
    "census",
    "census_matches_formula",
    "chain_chow",
    "chain_chow_multivariate",
    "chain_label_permutations",
    "chain_label_sequences",
    "closed_form",
    "coefficient_formula",
    "delta_multinomial",
    "derangement_poly",
    "descent_count",
    "descent_set",
    "eulerian_fixed_descents",
    "eulerian_poly",
    "flats_lattice",
    "gamma_reconstruct",
    "gamma_vector",
    "grassmannian_avoiding_count",
    "labeled_chains",
    "matroid_from_bases",
    "matroid_from_json",
    "matroid_invariants",
    "matroid_to_json",
    "max_ground_size",
    "multivariate_closed_form",
    "nc_subsets",
    "r_label",
    "runs_partition",
    "schubert_invariants_formula",
    "schubert_matroid",
    "sm_count",
    "uniform",
    "verify_coefficient_counts",
]
