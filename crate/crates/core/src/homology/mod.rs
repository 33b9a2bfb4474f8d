//! Betti numbers, minimal free resolutions and local cohomology degrees.

mod betti;
mod field;
mod limits;
mod resolution;
mod simplicial;
mod summary;

pub use betti::{betti_numbers, lcm_lattice, upper_koszul_complex, BettiTable};
pub use field::{
    integer_matrix_rank, kernel_basis, rank_bareiss, rank_of, Echelon, Field, FieldChar, PrimeField, Rationals,
    SparseVec,
};
pub use limits::{
    limit_experiment, CheckKind, Fraction, InequalityCheck, LimitReport, LimitRow, DEFAULT_GENERATOR_BUDGET,
};
pub use resolution::{Resolution, Summand};
pub use simplicial::{reduced_homology_ranks, SimplicialComplex};
pub use summary::{summary, summary_with_table, Degree, HomologicalSummary};
