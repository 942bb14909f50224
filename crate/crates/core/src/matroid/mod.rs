//! Rank oracles for loopless matroids: linear matroids over `Q(i)`,
//! uniform matroids, truncations and direct sums, plus structural queries.

mod oracle;
mod structure;

pub use oracle::{
    direct_sum, free_matroid, make_linear_oracle, make_uniform_oracle, truncate, RankFunction,
    RankOracle,
};
pub use structure::{
    connected_components, ensure_loopless, is_c_connected, is_flat, C_CONNECTED_SCAN_LIMIT,
};
