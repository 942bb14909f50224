//! Exact real dimension of amoebas of linear spaces.
//!
//! For `V ⊆ C^n` the row space of a matrix `A` over `Q(i)` with no zero
//! column, the amoeba of `X = V ∩ (C^*)^n` has real dimension
//!
//! ```text
//! min over partitions {P_1, .., P_k} of [n] of  sum (2 r(P_i) - 1),
//! ```
//!
//! `r` being the rank function of the column matroid of `A`. That minimum
//! is the rank `r'([n])` of a derived matroid, evaluated here with a
//! polynomial number of rank queries by building the coarsest optimal
//! partition element by element ([`derived`]). The [`verify`] module holds
//! independent brute-force and analytic checks.
//!
//! ```
//! use amoeba_core::{amoeba_dimension, instances::nisse_matrix};
//!
//! let (dim, partition) = amoeba_dimension(&nisse_matrix(7).unwrap()).unwrap();
//! assert_eq!(dim, 6);
//! assert_eq!(partition.to_one_based(), vec![vec![1, 2, 5, 6], vec![3], vec![4], vec![7]]);
//! ```

pub mod derived;
pub mod error;
pub mod gaussian;
pub mod instances;
pub mod matrix;
pub mod matroid;
pub mod partition;
pub mod sfm;
pub mod subset;
pub mod verify;

pub use derived::{
    amoeba_dimension, coarsest_optimal_partition, derived_oracle, independent_in_mprime, rprime,
    DerivedOracle, OptimalPartitionResult,
};
pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use matrix::{linear_rank, GRMatrix};
pub use matroid::RankOracle;
pub use partition::{fcc, tilde_r, Partition, SubsetMultiset};
pub use subset::SubsetMask;
