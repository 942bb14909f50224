use amoeba_core::coarsest_optimal_partition;
use amoeba_core::derived::{rank_call_budget, RANK_CALL_CONSTANT};
use amoeba_core::instances::{corpus, trunc_sum_oracle, CorpusInstance};
use amoeba_core::verify::{
    amoeba_dim_numeric, axiom_suite, coarsest_bruteforce, finest_bruteforce, rprime_bruteforce,
    AXIOM_SUITE_LIMIT, BRUTE_PARTITION_LIMIT,
};
use rayon::prelude::*;

use crate::args::{InstanceArgs, Mode, RankArgs, SelftestArgs, VerifyArgs};
use crate::document::{
    to_json, BruteReport, NumericReport, ResultDocument, SelftestInstance, SelftestReport,
    Verifications,
};
use crate::exit::CliError;
use crate::instance::{load, parse_subset};

/// Serialised document and whether every check passed.
pub type Output = (String, bool);

/// Largest ground set checked by brute force in the selftest.
const SELFTEST_BRUTE_LIMIT: usize = 10;
const SELFTEST_SAMPLES: usize = 3;

pub fn dim(args: &InstanceArgs) -> Result<Output, CliError> {
    let inst = load(args)?;
    let r = coarsest_optimal_partition(&inst.oracle, inst.oracle.ground())?;
    Ok((to_json(&ResultDocument::from(&r)), true))
}

pub fn rank(args: &RankArgs) -> Result<Output, CliError> {
    let inst = load(&args.instance)?;
    let s = parse_subset(&args.subset, inst.oracle.ground())?;
    let r = coarsest_optimal_partition(&inst.oracle, s)?;
    let mut doc = ResultDocument::from(&r);
    doc.subset = Some(s.to_one_based());
    Ok((to_json(&doc), true))
}

fn check_limit(what: &str, n: usize, limit: usize) -> Result<(), CliError> {
    if n > limit {
        return Err(CliError::size_limit(format!(
            "{what} supports at most {limit} elements, instance has {n}"
        )));
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let inst = load(&args.instance)?;
    let m = &inst.oracle;
    let n = m.ground_size();
    let want = |mode: Mode| args.mode == mode || args.mode == Mode::All;
    if want(Mode::Brute) {
        check_limit("brute-force verification", n, BRUTE_PARTITION_LIMIT)?;
    }
    if want(Mode::Axioms) {
        check_limit("the axiom suite", n, AXIOM_SUITE_LIMIT)?;
    }
    if want(Mode::Numeric) && inst.matrix.is_none() {
        return Err(CliError::size_limit(
            "numeric verification needs an explicit matrix; this instance is oracle-only",
        ));
    }
    if args.samples == 0 {
        return Err(CliError::parse("--samples must be positive"));
    }

    let r = coarsest_optimal_partition(m, m.ground())?;
    let mut v = Verifications {
        passed: true,
        ..Verifications::default()
    };
    if want(Mode::Brute) {
        let (value, optimal) = rprime_bruteforce(m, m.ground())?;
        let coarsest = coarsest_bruteforce(m, m.ground())?;
        let finest = finest_bruteforce(m, m.ground())?;
        let agrees = value == r.rprime && coarsest == r.partition;
        v.passed &= agrees;
        v.brute = Some(BruteReport {
            rprime: value,
            coarsest,
            finest,
            optimal_partitions: optimal.len(),
            agrees,
        });
    }
    if want(Mode::Numeric) {
        let a = inst.matrix.as_ref().expect("checked above");
        let dim = amoeba_dim_numeric(a, args.samples, args.instance.seed)?;
        let agrees = dim == r.rprime;
        v.passed &= agrees;
        v.numeric = Some(NumericReport {
            dim,
            samples: args.samples,
            seed: args.instance.seed,
            agrees,
        });
    }
    if want(Mode::Axioms) {
        let report = axiom_suite(m)?;
        v.passed &= report.passed();
        v.axioms = Some(report);
    }
    let passed = v.passed;
    let mut doc = ResultDocument::from(&r);
    doc.verifications = Some(v);
    Ok((to_json(&doc), passed))
}

fn milli_ceil(x: f64) -> u64 {
    (x * 1000.0).ceil() as u64
}

fn run_instance(inst: &CorpusInstance) -> Result<SelftestInstance, CliError> {
    let m = inst.oracle.fresh();
    let n = m.ground_size();
    let r = coarsest_optimal_partition(&m, m.ground())?;
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    let mut record = |name: &str, ok: bool| {
        checks.push(name.to_string());
        if !ok {
            failures.push(name.to_string());
        }
    };

    let budget = rank_call_budget(n, r.rprime);
    let ratio = if budget > 0.0 {
        r.rank_calls as f64 / budget
    } else {
        0.0
    };
    record("rank-call budget", ratio <= RANK_CALL_CONSTANT);
    record(
        "tilde-r of partition",
        r.partition.weight(&m) == r.rprime as i64 && r.basis.len() == r.rprime,
    );
    if n <= SELFTEST_BRUTE_LIMIT {
        let (value, _) = rprime_bruteforce(&m, m.ground())?;
        let coarsest = coarsest_bruteforce(&m, m.ground())?;
        record("brute force", value == r.rprime && coarsest == r.partition);
    }
    if let Some(a) = &inst.matrix {
        record(
            "numeric",
            amoeba_dim_numeric(a, SELFTEST_SAMPLES, 0)? == r.rprime,
        );
    }
    if n <= AXIOM_SUITE_LIMIT {
        record("axioms", axiom_suite(&m)?.passed());
    }
    Ok(SelftestInstance {
        name: inst.name.clone(),
        elements: n,
        dim: r.rprime,
        rank_calls: r.rank_calls,
        budget_ratio_milli: milli_ceil(ratio),
        checks,
        failures,
    })
}

pub fn selftest(args: &SelftestArgs) -> Result<Output, CliError> {
    let mut instances = corpus(args.random);
    for (c, k) in [(1, 5), (2, 6), (2, 8)] {
        instances.push(CorpusInstance::from_oracle(
            format!("trunc-sum-{c}-{k}"),
            trunc_sum_oracle(c, k)?,
        ));
    }
    let results: Vec<SelftestInstance> = instances
        .par_iter()
        .map(run_instance)
        .collect::<Result<_, _>>()?;
    let failures = results.iter().map(|r| r.failures.len()).sum();
    let report = SelftestReport {
        checks_run: results.iter().map(|r| r.checks.len()).sum(),
        failures,
        rank_calls_total: results.iter().map(|r| r.rank_calls).sum(),
        max_budget_ratio_milli: results
            .iter()
            .map(|r| r.budget_ratio_milli)
            .max()
            .unwrap_or(0),
        budget_constant_milli: milli_ceil(RANK_CALL_CONSTANT),
        passed: failures == 0,
        instances: results,
    };
    let passed = report.passed;
    Ok((to_json(&report), passed))
}
