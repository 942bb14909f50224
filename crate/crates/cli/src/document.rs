use amoeba_core::verify::AxiomReport;
use amoeba_core::{OptimalPartitionResult, Partition};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub dim: usize,
    pub partition: Partition,
    pub basis: Vec<usize>,
    pub rank_calls: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verifications: Option<Verifications>,
}

impl From<&OptimalPartitionResult> for ResultDocument {
    fn from(r: &OptimalPartitionResult) -> Self {
        ResultDocument {
            dim: r.rprime,
            partition: r.partition.clone(),
            basis: r.basis.to_one_based(),
            rank_calls: r.rank_calls,
            subset: None,
            verifications: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verifications {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute: Option<BruteReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteReport {
    pub rprime: usize,
    pub coarsest: Partition,
    pub finest: Partition,
    pub optimal_partitions: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericReport {
    pub dim: usize,
    pub samples: usize,
    pub seed: u64,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestInstance {
    pub name: String,
    pub elements: usize,
    pub dim: usize,
    pub rank_calls: u64,
    /// `rank_calls / (n k + k^3 log2(k + 2))` in thousandths, rounded up.
    pub budget_ratio_milli: u64,
    pub checks: Vec<String>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub instances: Vec<SelftestInstance>,
    pub checks_run: usize,
    pub failures: usize,
    pub rank_calls_total: u64,
    pub max_budget_ratio_milli: u64,
    /// The frozen constant `C`, in thousandths.
    pub budget_constant_milli: u64,
    pub passed: bool,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialise")
}
