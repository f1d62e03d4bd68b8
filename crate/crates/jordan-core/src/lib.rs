//! Exact computations around dimension and character tables of free Jordan
//! algebras: truncated power series over Laurent-polynomial coefficients,
//! residue-equation solvers, a symmetric-function character ring with a
//! lambda (alternating exterior power) operation, partition combinatorics,
//! closed-form count formulas, and brute-force linear-span oracles inside
//! the tensor algebra.
//!
//! All arithmetic is exact. Series coefficients are generic over the scalar
//! ring ([`series::Scalar`]); the concrete instantiations used throughout are
//! aliased at the crate root as [`IntSeries`] and [`CharSeries`].

pub mod char_ring;
pub mod closed;
pub mod conjecture;
pub mod dims;
pub mod oracle;
pub mod partitions;
pub mod series;

pub use series::{LaurentPoly, Scalar, SeriesError, TSeries};

/// Power series in `z` with arbitrary-precision integer coefficients.
pub type IntSeries = TSeries<num_bigint::BigInt>;

/// Power series in `z` whose coefficients are Laurent polynomials in `t`.
pub type CharSeries = TSeries<LaurentPoly>;
