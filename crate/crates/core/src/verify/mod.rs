//! Ground-truth checks that share no code path with the main algorithm:
//! exhaustive partition minimisation, the real Jacobian rank of the
//! logarithm map at sampled points, and exhaustive rank-axiom checks.

mod axioms;
mod brute;
mod enumerate;
mod numeric;

pub use axioms::{axiom_suite, AxiomFailure, AxiomReport, AXIOM_SUITE_LIMIT};
pub use brute::{coarsest_bruteforce, finest_bruteforce, rprime_bruteforce, BRUTE_PARTITION_LIMIT};
pub use enumerate::{bell, PartitionEnumerator};
pub use numeric::{amoeba_dim_numeric, jacobian_sample, JacobianSample, COEFFICIENT_BOUND};
