//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use amoeba_core::derived::{
    coarsest_optimal_partition, coarsest_optimal_partition_in_order, derived_oracle,
    rank_call_budget, RANK_CALL_CONSTANT,
};
use amoeba_core::instances::{
    block_partition, corpus, nisse_matrix, random_linear_matrix, trunc_sum_oracle, CorpusInstance,
};
use amoeba_core::matroid::{connected_components, is_flat, make_linear_oracle, truncate};
use amoeba_core::partition::{fcc, tilde_r, Partition, SubsetMultiset};
use amoeba_core::sfm::Minimizer;
use amoeba_core::verify::{
    amoeba_dim_numeric, axiom_suite, coarsest_bruteforce, rprime_bruteforce,
};
use amoeba_core::{amoeba_dimension, RankOracle, SubsetMask};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_INSTANCES: usize = 200;
const NUMERIC_SAMPLES: usize = 5;
const ORDERS_PER_INSTANCE: usize = 20;
const RANDOM_MULTISETS: usize = 500;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn set(xs: &[usize]) -> SubsetMask {
    SubsetMask::from_one_based(xs).unwrap()
}

fn random_instances(all: &[CorpusInstance]) -> Vec<&CorpusInstance> {
    all.iter()
        .filter(|c| c.name.starts_with("random-"))
        .collect()
}

fn small(all: &[CorpusInstance]) -> Vec<&CorpusInstance> {
    all.iter().filter(|c| c.oracle.ground_size() <= 8).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (dim, partition) = amoeba_dimension(&nisse_matrix(0).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected =
        Partition::new(vec![set(&[1, 2, 5, 6]), set(&[3]), set(&[4]), set(&[7])]).unwrap();
    ensure(dim == 6, || format!("dim {dim} != 6"))?;
    ensure(partition == expected, || format!("partition {partition:?}"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("dim = 6, partition {partition:?}, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (c, k, brute) in [(1usize, 4usize, true), (1, 5, true), (2, 6, false)] {
        let m = trunc_sum_oracle(c, k).map_err(|e| e.to_string())?;
        let r = coarsest_optimal_partition(&m, m.ground()).map_err(|e| e.to_string())?;
        let expected = 2 * c * k - k;
        ensure(r.rprime == expected, || {
            format!("(c,k)=({c},{k}): r' = {} != {expected}", r.rprime)
        })?;
        let blocks = block_partition(c, k);
        ensure(r.partition == blocks, || {
            format!(
                "(c,k)=({c},{k}): partition {:?} is not the block partition",
                r.partition
            )
        })?;
        if brute {
            let (v, _) = rprime_bruteforce(&m, m.ground()).map_err(|e| e.to_string())?;
            let coarsest = coarsest_bruteforce(&m, m.ground()).map_err(|e| e.to_string())?;
            ensure(v == expected && coarsest == blocks, || {
                format!("(c,k)=({c},{k}): brute force gives {v}, {coarsest:?}")
            })?;
        }
        notes.push(format!("({c},{k}): r'={expected}"));
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("{}, {elapsed:?}", notes.join(" ")))
}

fn criterion_3(all: &[CorpusInstance]) -> Outcome {
    let start = Instant::now();
    let randoms = random_instances(all);
    ensure(randoms.len() == RANDOM_INSTANCES, || {
        "wrong random count".into()
    })?;
    let mut checked = 0usize;
    for inst in &randoms {
        let m = &inst.oracle;
        for s in m.ground().subsets() {
            let fast = coarsest_optimal_partition(m, s).map_err(|e| e.to_string())?;
            let (v, _) = rprime_bruteforce(m, s).map_err(|e| e.to_string())?;
            let coarsest = coarsest_bruteforce(m, s).map_err(|e| e.to_string())?;
            ensure(fast.rprime == v && fast.partition == coarsest, || {
                format!(
                    "{} S={:?}: algorithm ({}, {:?}) vs brute ({v}, {coarsest:?})",
                    inst.name, s, fast.rprime, fast.partition
                )
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(300))?;
    Ok(format!(
        "{} instances, {checked} subsets agree exactly, {elapsed:?}",
        randoms.len()
    ))
}

fn criterion_4(all: &[CorpusInstance]) -> Outcome {
    let start = Instant::now();
    let randoms = random_instances(all);
    for (i, inst) in randoms.iter().enumerate() {
        let a = inst.matrix.as_ref().expect("random instances are linear");
        let numeric =
            amoeba_dim_numeric(a, NUMERIC_SAMPLES, i as u64).map_err(|e| e.to_string())?;
        let r = coarsest_optimal_partition(&inst.oracle, inst.oracle.ground())
            .map_err(|e| e.to_string())?;
        ensure(numeric == r.rprime, || {
            format!("{}: Jacobian rank {numeric} vs r' {}", inst.name, r.rprime)
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(300))?;
    Ok(format!(
        "{} instances, Jacobian rank = r'([n]) on all, {elapsed:?}",
        randoms.len()
    ))
}

fn criterion_5(all: &[CorpusInstance]) -> Outcome {
    let mut checks = 0u64;
    let instances = small(all);
    for inst in &instances {
        let report = axiom_suite(&inst.oracle).map_err(|e| e.to_string())?;
        ensure(report.passed(), || {
            format!("{}: {:?}", inst.name, report.failures.first())
        })?;
        checks += report.checks_run;
    }
    Ok(format!(
        "{} instances, {checks} checks, 0 violations",
        instances.len()
    ))
}

fn criterion_6(all: &[CorpusInstance]) -> Outcome {
    let mut truncated = 0;
    let instances = small(all);
    for inst in &instances {
        let m = &inst.oracle;
        let derived = derived_oracle(m).map_err(|e| e.to_string())?.into_oracle();
        for s in m.ground().subsets() {
            if is_flat(m, s) {
                ensure(is_flat(&derived, s), || {
                    format!("{}: flat {s:?} of M is not a flat of M'", inst.name)
                })?;
            }
        }
        let d = m.full_rank();
        if d > 1 {
            let n = truncate(m).map_err(|e| e.to_string())?;
            let derived_n = derived_oracle(&n).map_err(|e| e.to_string())?;
            for s in m.ground().subsets() {
                let lhs = derived_n.rprime(s).map_err(|e| e.to_string())?;
                let rhs = derived.rank(s).min(2 * d - 3);
                ensure(lhs == rhs, || {
                    format!(
                        "{}: S={s:?} r'_N={lhs} but min(r'_M, 2d-3)={rhs}",
                        inst.name
                    )
                })?;
            }
            truncated += 1;
        }
    }
    Ok(format!(
        "quotient on {} instances, truncation identity on {truncated}",
        instances.len()
    ))
}

fn criterion_7(all: &[CorpusInstance]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let instances = small(all);
    for inst in &instances {
        let m = &inst.oracle;
        let derived = derived_oracle(m).map_err(|e| e.to_string())?;
        for s in m.ground().subsets().skip(1) {
            let rp = derived.rprime(s).map_err(|e| e.to_string())?;
            let bound = s.len().min(2 * m.rank(s) - 1);
            ensure(rp <= bound, || {
                format!("{}: r'({s:?}) = {rp} > {bound}", inst.name)
            })?;
        }
        let components = connected_components(m).map_err(|e| e.to_string())?.len();
        let d = m.full_rank();
        let full = coarsest_optimal_partition(m, m.ground()).map_err(|e| e.to_string())?;
        ensure(full.rprime <= 2 * d - components, || {
            format!(
                "{}: r'(E) = {} > 2d - k = {}",
                inst.name,
                full.rprime,
                2 * d - components
            )
        })?;
        let mut order: Vec<usize> = m.ground().iter().collect();
        for _ in 0..ORDERS_PER_INSTANCE {
            order.shuffle(&mut rng);
            let r = coarsest_optimal_partition_in_order(m, &order, Minimizer::default())
                .map_err(|e| e.to_string())?;
            ensure(
                r.rprime == full.rprime && r.partition == full.partition,
                || format!("{}: order {order:?} gives {:?}", inst.name, r.partition),
            )?;
        }
    }
    Ok(format!(
        "{} instances, bounds hold, output invariant under {ORDERS_PER_INSTANCE} orders each",
        instances.len()
    ))
}

fn criterion_8(all: &[CorpusInstance]) -> Outcome {
    let mut oracles: Vec<(String, RankOracle)> = all
        .iter()
        .map(|c| (c.name.clone(), c.oracle.clone()))
        .collect();
    for (c, k) in [(1, 4), (1, 5), (1, 8), (2, 6), (2, 8), (3, 8)] {
        oracles.push((
            format!("trunc-sum-{c}-{k}"),
            trunc_sum_oracle(c, k).unwrap(),
        ));
    }
    let mut worst = 0f64;
    let mut worst_name = String::new();
    for (name, m) in &oracles {
        let mut queries = vec![m.ground()];
        if m.ground_size() <= 8 {
            queries = m.ground().subsets().collect();
        }
        for s in queries {
            let fresh = m.fresh();
            let r = coarsest_optimal_partition(&fresh, s).map_err(|e| e.to_string())?;
            let budget = rank_call_budget(s.len(), r.rprime);
            if budget == 0.0 {
                ensure(r.rank_calls == 0, || format!("{name}: calls on empty set"))?;
                continue;
            }
            let ratio = r.rank_calls as f64 / budget;
            if ratio > worst {
                worst = ratio;
                worst_name = format!(
                    "{name} |S|={} k={} calls={}",
                    s.len(),
                    r.rprime,
                    r.rank_calls
                );
            }
        }
    }
    ensure(worst <= RANK_CALL_CONSTANT, || {
        format!("ratio {worst:.3} exceeds C = {RANK_CALL_CONSTANT} ({worst_name})")
    })?;
    Ok(format!(
        "max calls / (nk + k^3 log2(k+2)) = {worst:.3} <= C = {RANK_CALL_CONSTANT} ({worst_name})"
    ))
}

fn random_multiset(rng: &mut impl Rng, n: usize) -> SubsetMultiset {
    let count = rng.gen_range(1..=6);
    SubsetMultiset::new((0..count).map(|_| loop {
        let s = SubsetMask(rng.gen_range(1..1u64 << n));
        if !s.is_empty() {
            break s;
        }
    }))
}

fn random_partition(rng: &mut impl Rng, s: SubsetMask) -> Partition {
    let blocks = rng.gen_range(1..=s.len().max(1));
    let mut parts = vec![SubsetMask::EMPTY; blocks];
    for e in s.iter() {
        let b = rng.gen_range(0..blocks);
        parts[b] = parts[b].with(e);
    }
    parts.retain(|p| !p.is_empty());
    Partition::new(parts).unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut steps = 0usize;
    for t in 0..RANDOM_MULTISETS {
        let n = rng.gen_range(1..=10);
        let s = random_multiset(&mut rng, n);
        let trace = s.uncross_trace();
        let out = trace.last().unwrap();
        for e in 0..n {
            ensure(out.count_containing(e) == s.count_containing(e), || {
                format!("#{t}: c(.)_{e} changed for {s:?}")
            })?;
        }
        for w in trace.windows(2) {
            ensure(w[1].square_weight() > w[0].square_weight(), || {
                format!("#{t}: n(S) did not increase")
            })?;
        }
        steps += trace.len() - 1;
        ensure(out.is_cross_free(), || {
            format!("#{t}: output not cross-free")
        })?;
        ensure(fcc(out).unwrap() == fcc(&s).unwrap(), || {
            format!("#{t}: fcc changed")
        })?;
    }

    // join/meet quadruple via uncrossing, on random partitions of random subsets
    for t in 0..RANDOM_MULTISETS {
        let a = random_linear_matrix(&mut rng, 4, 10);
        let m = make_linear_oracle(&a).unwrap();
        let ground = m.ground().bits();
        let s = SubsetMask(rng.gen_range(1..=ground));
        let s2 = SubsetMask(rng.gen_range(1..=ground));
        let p = random_partition(&mut rng, s);
        let p2 = random_partition(&mut rng, s2);
        let join = p.join(&p2);
        let union = SubsetMultiset::from_partition(&p).sum(&SubsetMultiset::from_partition(&p2));
        let crossfree = union.uncross();
        let join_multi = SubsetMultiset::from_partition(&fcc(&crossfree).unwrap());
        let q_multi = crossfree
            .checked_difference(&join_multi)
            .ok_or_else(|| format!("#{t}: fcc(T) is not contained in T"))?;
        let q = Partition::new(q_multi.members().collect())
            .map_err(|e| format!("#{t}: Q is not a partition: {e}"))?;
        ensure(q.support() == s.intersection(s2), || {
            format!("#{t}: Q does not cover S ∩ S'")
        })?;
        ensure(p.meet(&p2).refines(&q).unwrap(), || {
            format!("#{t}: Q does not coarsen P ∧ P'")
        })?;
        ensure(p.len() + p2.len() == join.len() + q.len(), || {
            format!("#{t}: part counts")
        })?;
        let lhs = tilde_r(&m, &SubsetMultiset::from_partition(&p)).unwrap()
            + tilde_r(&m, &SubsetMultiset::from_partition(&p2)).unwrap();
        let rhs = join.weight(&m) + q.weight(&m);
        ensure(lhs >= rhs, || format!("#{t}: r~ inequality {lhs} < {rhs}"))?;
    }
    Ok(format!(
        "{RANDOM_MULTISETS} multisets ({steps} rewrite steps) and {RANDOM_MULTISETS} join/meet quadruples"
    ))
}

fn main() -> ExitCode {
    let all = corpus(RANDOM_INSTANCES);
    let criteria: Vec<Criterion> = vec![
        ("1 connected 4x7 example", Box::new(criterion_1)),
        ("2 truncated sums of U_{c,2c}", Box::new(criterion_2)),
        ("3 algorithm = brute force", Box::new(|| criterion_3(&all))),
        ("4 Jacobian rank = r'", Box::new(|| criterion_4(&all))),
        ("5 matroid axioms of r'", Box::new(|| criterion_5(&all))),
        ("6 quotient and truncation", Box::new(|| criterion_6(&all))),
        (
            "7 bounds and order invariance",
            Box::new(|| criterion_7(&all)),
        ),
        ("8 rank-call budget", Box::new(|| criterion_8(&all))),
        ("9 partition calculus", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        match run() {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{:?}]", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{:?}]", start.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
