//! Exhaustive verification of every claim about the bijections, size by size.
//!
//! Work inside one size is spread over a rayon pool (permutations are sharded
//! by first entry, everything else is an order-preserving parallel map) and
//! merged in a fixed order, so the report does not depend on the worker count.
//! Each check keeps the first failure in (size, generation order), which is
//! the minimal counterexample.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    bell_number, check_sequences_lemma, count_indecomposable, generate_set_partitions,
    lemma_sequences, permutations_with_first, run_and_block_maxima, Caps,
};
use crate::bell::{avoider_to_partition, partition_to_avoider};
use crate::bijection::{
    five_step_map, forward, inverse, recover_step4_order, recover_step4_order_by_chains, tweak,
    undo_transfers, untweak,
};
use crate::error::{Error, Result};
use crate::permutation::{order_isomorphic, AvoidanceMethod, Permutation};
use crate::setpartition::{ClassTag, SetPartition};

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Rayon worker threads; 1 runs everything on a single thread.
    pub workers: usize,
    pub caps: Caps,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            workers: 1,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of individual assertions evaluated.
    pub instances: u64,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_owned(),
            passed: true,
            instances: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.passed {
            self.passed = false;
            self.counterexample = Some(describe());
        }
    }

    fn record_result(&mut self, outcome: std::result::Result<(), String>) {
        self.instances += 1;
        if let Err(msg) = outcome {
            if self.passed {
                self.passed = false;
                self.counterexample = Some(msg);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCounts {
    pub n: usize,
    pub permutations: u64,
    pub avoiders: u64,
    /// Indecomposable partitions of `[n+1]`.
    pub indecomposable_next: u64,
    pub avoiders_ending_in_one: u64,
    /// `B_{n-1}`, decimal.
    pub bell_previous: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub sizes: Vec<SizeCounts>,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "verification up to n = {}", self.max_n).unwrap();
        writeln!(out, "   n   permutations   avoiders   indecomposable(n+1)   ending-in-1   B(n-1)").unwrap();
        for s in &self.sizes {
            writeln!(
                out,
                "{:>4} {:>14} {:>10} {:>21} {:>13} {:>8}",
                s.n, s.permutations, s.avoiders, s.indecomposable_next, s.avoiders_ending_in_one, s.bell_previous
            )
            .unwrap();
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(out, "{status} {} ({} instances)", c.name, c.instances).unwrap();
            if let Some(cx) = &c.counterexample {
                write!(out, ": {cx}").unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "{}", if self.passed() { "all checks passed" } else { "some checks FAILED" }).unwrap();
        out
    }

    /// One `key=value` pair per line.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        writeln!(out, "max_n={}", self.max_n).unwrap();
        for s in &self.sizes {
            let n = s.n;
            writeln!(out, "count.permutations.{n}={}", s.permutations).unwrap();
            writeln!(out, "count.avoiders.{n}={}", s.avoiders).unwrap();
            writeln!(out, "count.indecomposable.{}={}", n + 1, s.indecomposable_next).unwrap();
            writeln!(out, "count.avoiders_ending_in_one.{n}={}", s.avoiders_ending_in_one).unwrap();
        }
        for c in &self.checks {
            writeln!(out, "check.{}={}", c.name, if c.passed { "pass" } else { "fail" }).unwrap();
            writeln!(out, "check.{}.instances={}", c.name, c.instances).unwrap();
            if let Some(cx) = &c.counterexample {
                writeln!(out, "check.{}.counterexample={cx}", c.name).unwrap();
            }
        }
        writeln!(out, "passed={}", self.passed()).unwrap();
        out
    }

    /// Compares computed counts with a user-supplied sequence and appends the
    /// outcome as a check named `expected_<sequence>`. Entries beyond the
    /// verified range are not compared.
    pub fn compare_expected(&mut self, expected: &ExpectedSequence) {
        let mut check = CheckResult::new(&format!("expected_{}", expected.name.as_str().replace('-', "_")));
        for (i, value) in expected.values.iter().enumerate() {
            let k = i + 1;
            let Some(computed) = self.computed(expected.name, k) else {
                continue;
            };
            check.record(&computed == value, || {
                format!("size {k}: expected {value}, computed {computed}")
            });
        }
        self.checks.push(check);
    }

    fn computed(&self, name: SequenceName, k: usize) -> Option<BigUint> {
        let size = |n: usize| self.sizes.iter().find(|s| s.n == n);
        match name {
            SequenceName::Avoiders => size(k).map(|s| s.avoiders.into()),
            SequenceName::AvoidersEndingInOne => size(k).map(|s| s.avoiders_ending_in_one.into()),
            SequenceName::Indecomposable if k == 1 && self.max_n >= 1 => Some(count_indecomposable(1).into()),
            SequenceName::Indecomposable => size(k - 1).map(|s| s.indecomposable_next.into()),
            SequenceName::Bell => (k <= self.max_n).then(|| bell_number(k)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceName {
    Avoiders,
    AvoidersEndingInOne,
    Indecomposable,
    Bell,
}

impl SequenceName {
    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::Avoiders => "avoiders",
            SequenceName::AvoidersEndingInOne => "avoiders-ending-1",
            SequenceName::Indecomposable => "indecomposable",
            SequenceName::Bell => "bell",
        }
    }
}

/// Expected-count file: a header line naming the sequence, then one integer
/// per line, the `k`-th for size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedSequence {
    pub name: SequenceName,
    pub values: Vec<BigUint>,
}

impl FromStr for ExpectedSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or(Error::EmptyInput)?;
        let name = match header.trim_start_matches('#').trim() {
            "avoiders" => SequenceName::Avoiders,
            "avoiders-ending-1" => SequenceName::AvoidersEndingInOne,
            "indecomposable" => SequenceName::Indecomposable,
            "bell" => SequenceName::Bell,
            other => return Err(Error::InvalidToken(other.to_owned())),
        };
        let values = lines
            .map(|l| l.parse::<BigUint>().map_err(|_| Error::InvalidToken(l.to_owned())))
            .collect::<Result<_>>()?;
        Ok(ExpectedSequence { name, values })
    }
}

type ForwardFn<'a> = dyn Fn(&Permutation) -> Result<SetPartition> + Sync + 'a;
type InverseFn<'a> = dyn Fn(&SetPartition) -> Result<Permutation> + Sync + 'a;

struct PermutationScan {
    permutations: u64,
    avoiders: Vec<Permutation>,
    disagreement: Option<String>,
}

fn scan_permutations(n: usize) -> PermutationScan {
    let shards: Vec<PermutationScan> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut scan = PermutationScan {
                permutations: 0,
                avoiders: Vec::new(),
                disagreement: None,
            };
            for p in permutations_with_first(n, first) {
                scan.permutations += 1;
                let verdicts = AvoidanceMethod::ALL.map(|m| p.avoids_pair(m));
                if scan.disagreement.is_none() && verdicts.iter().any(|&v| v != verdicts[0]) {
                    scan.disagreement = Some(format!(
                        "n={n} p={p}: direct={} characterization={} nested={}",
                        verdicts[0], verdicts[1], verdicts[2]
                    ));
                }
                if verdicts[0] {
                    scan.avoiders.push(p);
                }
            }
            scan
        })
        .collect();
    let mut merged = PermutationScan {
        permutations: 0,
        avoiders: Vec::new(),
        disagreement: None,
    };
    for shard in shards {
        merged.permutations += shard.permutations;
        merged.avoiders.extend(shard.avoiders);
        merged.disagreement = merged.disagreement.or(shard.disagreement);
    }
    merged
}

fn classified_partitions(m: usize) -> Vec<(SetPartition, ClassTag)> {
    let all: Vec<SetPartition> = generate_set_partitions(m).collect();
    all.into_par_iter()
        .map(|p| {
            let tag = p.class_tag();
            (p, tag)
        })
        .collect()
}

/// Descent initiators of `p` are the last entries of the non-last blocks,
/// terminators are the first entries of the non-penultimate blocks, and the
/// two lists are order-isomorphic.
fn descents_read_off_blocks(p: &Permutation, partition: &SetPartition) -> bool {
    let blocks = partition.blocks();
    let k = blocks.len();
    let descents = p.descents();
    let mut initiators: Vec<u32> = descents.iter().map(|d| d.initiator).collect();
    let mut terminators: Vec<u32> = descents.iter().map(|d| d.terminator).collect();
    if !order_isomorphic(&initiators, &terminators).unwrap_or(false) {
        return false;
    }
    initiators.sort_unstable();
    terminators.sort_unstable();
    let mut firsts: Vec<u32> = (0..k).filter(|&i| i + 2 != k).map(|i| blocks[i][0]).collect();
    firsts.sort_unstable();
    initiators == partition.block_maxima()[..k - 1] && terminators == firsts
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn bijectivity_for_size(
    n: usize,
    avoiders: &[Permutation],
    indecomposable: &[SetPartition],
    fwd: &ForwardFn<'_>,
    inv: &InverseFn<'_>,
    check: &mut CheckResult,
) {
    let images: Vec<std::result::Result<SetPartition, String>> = avoiders
        .par_iter()
        .map(|p| {
            let image = fwd(p).map_err(|e| format!("n={n} p={p}: forward failed: {e}"))?;
            if image.size() != n + 1 || !image.is_indecomposable() {
                return Err(format!("n={n} p={p}: image {image} is not an indecomposable partition of [{}]", n + 1));
            }
            match inv(&image) {
                Ok(back) if back == *p => Ok(image),
                Ok(back) => Err(format!("n={n} p={p}: image {image} inverts to {back}")),
                Err(e) => Err(format!("n={n} p={p}: image {image} fails to invert: {e}")),
            }
        })
        .collect();
    let mut seen: HashSet<SetPartition> = HashSet::new();
    for (p, r) in avoiders.iter().zip(images) {
        match r {
            Ok(image) => {
                let fresh = seen.insert(image.clone());
                check.record(fresh, || format!("n={n} p={p}: image {image} already hit"));
            }
            Err(msg) => check.record_result(Err(msg)),
        }
    }
    let outcomes: Vec<std::result::Result<(), String>> = indecomposable
        .par_iter()
        .map(|pi| {
            let p = inv(pi).map_err(|e| format!("n={n} partition {pi}: inverse failed: {e}"))?;
            if p.len() != n || !p.is_avoider() {
                return Err(format!("n={n} partition {pi}: inverse {p} is not an avoider of [{n}]"));
            }
            match fwd(&p) {
                Ok(back) if back == *pi => Ok(()),
                Ok(back) => Err(format!("n={n} partition {pi}: inverse {p} maps forward to {back}")),
                Err(e) => Err(format!("n={n} partition {pi}: forward of {p} failed: {e}")),
            }
        })
        .collect();
    for (pi, o) in indecomposable.iter().zip(outcomes) {
        check.record_result(o);
        check.record(seen.contains(pi), || format!("n={n} partition {pi} is not hit by forward"));
    }
}

fn in_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    Ok(pool.install(job))
}

/// Bijectivity of a candidate map pair on every size `1..=max_n`: each
/// avoider's image is an indecomposable partition of `[n+1]` that inverts back,
/// no image repeats, and every indecomposable partition inverts to an avoider
/// that maps forward to it.
pub fn check_bijectivity_with<F, G>(max_n: usize, options: &VerifyOptions, fwd: F, inv: G) -> Result<CheckResult>
where
    F: Fn(&Permutation) -> Result<SetPartition> + Sync,
    G: Fn(&SetPartition) -> Result<Permutation> + Sync,
{
    options.caps.check_permutation_size(max_n)?;
    options.caps.check_partition_size(max_n + 1)?;
    in_pool(options.workers, || {
        let mut check = CheckResult::new("bijectivity");
        for n in 1..=max_n {
            let scan = scan_permutations(n);
            let indecomposable: Vec<SetPartition> = generate_set_partitions(n + 1)
                .filter(SetPartition::is_indecomposable)
                .collect();
            bijectivity_for_size(n, &scan.avoiders, &indecomposable, &fwd, &inv, &mut check);
            if !check.passed {
                break;
            }
        }
        check
    })
}

/// Runs every check for all sizes `1..=max_n` (partitions up to `max_n + 1`).
pub fn verify_all(max_n: usize, options: &VerifyOptions) -> Result<VerifyReport> {
    options.caps.check_permutation_size(max_n)?;
    options.caps.check_partition_size(max_n + 1)?;
    in_pool(options.workers, || verify_in_pool(max_n))?
}

const CHECK_NAMES: [&str; 14] = [
    "generators",
    "avoidance_agreement",
    "equinumerosity",
    "image_in_class",
    "image_equals_class",
    "tweak_bijection",
    "target_split",
    "bijectivity",
    "run_block_statistic",
    "run_maxima_statistic",
    "segment_reconstruction",
    "sequences_lemma",
    "bell_count",
    "bell_roundtrip",
];

fn verify_in_pool(max_n: usize) -> Result<VerifyReport> {
    let mut checks: Vec<CheckResult> = CHECK_NAMES.iter().map(|n| CheckResult::new(n)).collect();
    let idx = |name: &str| CHECK_NAMES.iter().position(|&c| c == name).unwrap();
    let mut sizes = Vec::new();

    for n in 1..=max_n {
        let scan = scan_permutations(n);
        let parts = classified_partitions(n + 1);
        let indecomposable: Vec<SetPartition> = parts
            .iter()
            .filter(|(_, t)| t.indecomposable)
            .map(|(p, _)| p.clone())
            .collect();
        let image_class: Vec<SetPartition> = parts
            .iter()
            .filter(|(_, t)| t.in_image_class)
            .map(|(p, _)| p.clone())
            .collect();
        let targets: Vec<(SetPartition, ClassTag)> =
            parts.iter().filter(|(_, t)| t.is_target()).cloned().collect();

        // generators
        {
            let c = &mut checks[idx("generators")];
            c.record(scan.permutations == factorial(n), || {
                format!("n={n}: {} permutations generated, expected {}", scan.permutations, factorial(n))
            });
            let distinct: HashSet<&SetPartition> = parts.iter().map(|(p, _)| p).collect();
            let bell = bell_number(n + 1);
            c.record(distinct.len() == parts.len() && BigUint::from(parts.len()) == bell, || {
                format!("m={}: {} partitions ({} distinct), Bell number {bell}", n + 1, parts.len(), distinct.len())
            });
        }

        // avoidance_agreement
        checks[idx("avoidance_agreement")].record_result(scan.disagreement.clone().map_or(Ok(()), Err));

        // equinumerosity
        let avoiders = scan.avoiders.len() as u64;
        checks[idx("equinumerosity")].record(avoiders == indecomposable.len() as u64, || {
            format!("n={n}: {avoiders} avoiders, {} indecomposable partitions of [{}]", indecomposable.len(), n + 1)
        });

        // image_in_class / image_equals_class
        let non_identity: Vec<&Permutation> = scan.avoiders.iter().filter(|p| !p.is_identity()).collect();
        let raw_images: Vec<Result<SetPartition>> = non_identity.par_iter().map(|p| five_step_map(p)).collect();
        let mut image_set: HashSet<SetPartition> = HashSet::new();
        {
            let c = &mut checks[idx("image_in_class")];
            for (p, r) in non_identity.iter().zip(&raw_images) {
                match r {
                    Ok(img) => {
                        c.record(img.in_image_class(), || format!("n={n} p={p}: five-step image {img} is outside the class"));
                        image_set.insert(img.clone());
                    }
                    Err(e) => c.record_result(Err(format!("n={n} p={p}: {e}"))),
                }
            }
        }
        {
            let c = &mut checks[idx("image_equals_class")];
            c.record(image_set.len() == non_identity.len(), || {
                format!("n={n}: {} distinct five-step images from {} avoiders", image_set.len(), non_identity.len())
            });
            for x in &image_class {
                c.record(image_set.contains(x), || format!("n={n}: class member {x} is not a five-step image"));
            }
            c.record(image_set.len() == image_class.len(), || {
                format!("n={n}: {} images vs {} class members", image_set.len(), image_class.len())
            });
        }

        // tweak_bijection
        {
            let outcomes: Vec<std::result::Result<SetPartition, String>> = image_class
                .par_iter()
                .map(|x| {
                    let t = tweak(x).map_err(|e| format!("tweak({x}): {e}"))?;
                    if !(t.is_indecomposable() && t.num_blocks() > 1) {
                        return Err(format!("tweak({x}) = {t} is not a multi-block indecomposable"));
                    }
                    match untweak(&t) {
                        Ok(back) if back == *x => Ok(t),
                        Ok(back) => Err(format!("untweak(tweak({x})) = {back}")),
                        Err(e) => Err(format!("untweak({t}): {e}")),
                    }
                })
                .collect();
            let back: Vec<std::result::Result<(), String>> = targets
                .par_iter()
                .map(|(y, _)| {
                    let u = untweak(y).map_err(|e| format!("untweak({y}): {e}"))?;
                    match tweak(&u) {
                        Ok(t) if t == *y => Ok(()),
                        Ok(t) => Err(format!("tweak(untweak({y})) = {t}")),
                        Err(e) => Err(format!("tweak({u}): {e}")),
                    }
                })
                .collect();
            let c = &mut checks[idx("tweak_bijection")];
            let mut hit = HashSet::new();
            for o in outcomes {
                match o {
                    Ok(t) => {
                        let fresh = hit.insert(t.clone());
                        c.record(fresh, || format!("m={}: {t} hit twice by tweak", n + 1));
                    }
                    Err(msg) => c.record_result(Err(msg)),
                }
            }
            for o in back {
                c.record_result(o);
            }
            c.record(hit.len() == targets.len(), || {
                format!("m={}: tweak hits {} of {} targets", n + 1, hit.len(), targets.len())
            });
        }

        // target_split
        {
            let c = &mut checks[idx("target_split")];
            for (p, t) in &targets {
                c.record(t.in_image_class != t.deficient, || {
                    format!("m={}: {p} image-class={} deficient={}", n + 1, t.in_image_class, t.deficient)
                });
            }
        }

        // bijectivity
        bijectivity_for_size(n, &scan.avoiders, &indecomposable, &forward, &inverse, &mut checks[idx("bijectivity")]);

        // statistics
        {
            let stats: Vec<std::result::Result<(bool, bool), String>> = scan
                .avoiders
                .par_iter()
                .map(|p| {
                    let image = forward(p).map_err(|e| format!("n={n} p={p}: {e}"))?;
                    let (runs, blocks) = run_and_block_maxima(p).map_err(|e| e.to_string())?;
                    Ok((p.increasing_runs().len() == image.num_blocks(), runs == blocks))
                })
                .collect();
            for (p, s) in scan.avoiders.iter().zip(stats) {
                match s {
                    Ok((same_count, same_maxima)) => {
                        checks[idx("run_block_statistic")].record(same_count, || {
                            format!("n={n} p={p}: run count differs from block count of {}", forward(p).unwrap())
                        });
                        checks[idx("run_maxima_statistic")].record(same_maxima, || {
                            let (r, b) = run_and_block_maxima(p).unwrap();
                            format!("n={n} p={p}: run maxima {r:?} vs block maxima {b:?}")
                        });
                    }
                    Err(msg) => {
                        checks[idx("run_block_statistic")].record_result(Err(msg.clone()));
                        checks[idx("run_maxima_statistic")].record_result(Err(msg));
                    }
                }
            }
        }

        // segment_reconstruction and sequences_lemma
        {
            let multi: Vec<&SetPartition> = image_class.iter().filter(|x| x.num_blocks() > 1).collect();
            let recon: Vec<std::result::Result<(), String>> = multi
                .par_iter()
                .map(|x| {
                    let a = recover_step4_order(x).map_err(|e| format!("{x}: {e}"))?;
                    let b = recover_step4_order_by_chains(x).map_err(|e| format!("{x}: {e}"))?;
                    if a != b {
                        return Err(format!("{x}: cycle lists give {a}, chain walk gives {b}"));
                    }
                    a.validate().map_err(|e| format!("{x}: {a}: {e}"))?;
                    let q = undo_transfers(&a).map_err(|e| format!("{x}: {a}: {e}"))?;
                    if !descents_read_off_blocks(&q, x) {
                        return Err(format!("{x}: descents of {q} do not match the block ends"));
                    }
                    Ok(())
                })
                .collect();
            for o in recon {
                checks[idx("segment_reconstruction")].record_result(o);
            }
            let c = &mut checks[idx("sequences_lemma")];
            for x in &multi {
                let (a, b) = lemma_sequences(x)?;
                let r = check_sequences_lemma(&a, &b)?;
                c.record(r.hypotheses_hold && r.conclusion_holds, || {
                    format!("{x}: A={a:?} B={b:?} hypotheses={} conclusion={}", r.hypotheses_hold, r.conclusion_holds)
                });
            }
        }

        // bell
        let ending: Vec<&Permutation> = scan.avoiders.iter().filter(|p| p.entries().last() == Some(&1)).collect();
        let bell_prev = bell_number(n.saturating_sub(1));
        if n >= 2 {
            checks[idx("bell_count")].record(BigUint::from(ending.len()) == bell_prev, || {
                format!("n={n}: {} avoiders end in 1, B({}) = {bell_prev}", ending.len(), n - 1)
            });
            let there: Vec<std::result::Result<(), String>> = ending
                .par_iter()
                .map(|p| {
                    let s = avoider_to_partition(p).map_err(|e| format!("n={n} p={p}: {e}"))?;
                    match partition_to_avoider(&s) {
                        Ok(q) if q == **p => Ok(()),
                        Ok(q) => Err(format!("n={n} p={p}: maps to {s}, which maps back to {q}")),
                        Err(e) => Err(format!("n={n} p={p}: {s} fails to map back: {e}")),
                    }
                })
                .collect();
            let partitions: Vec<SetPartition> = generate_set_partitions(n - 1).collect();
            let back: Vec<std::result::Result<(), String>> = partitions
                .par_iter()
                .map(|s| {
                    let p = partition_to_avoider(s).map_err(|e| format!("n={n} partition {s}: {e}"))?;
                    if !p.is_avoider() || p.entries().last() != Some(&1) {
                        return Err(format!("n={n} partition {s}: {p} is not an avoider ending in 1"));
                    }
                    match avoider_to_partition(&p) {
                        Ok(t) if t == *s => Ok(()),
                        Ok(t) => Err(format!("n={n} partition {s}: maps to {p}, which maps back to {t}")),
                        Err(e) => Err(format!("n={n} partition {s}: {p} fails to map back: {e}")),
                    }
                })
                .collect();
            for o in there.into_iter().chain(back) {
                checks[idx("bell_roundtrip")].record_result(o);
            }
        }

        sizes.push(SizeCounts {
            n,
            permutations: scan.permutations,
            avoiders,
            indecomposable_next: indecomposable.len() as u64,
            avoiders_ending_in_one: ending.len() as u64,
            bell_previous: bell_prev.to_string(),
        });
    }
    Ok(VerifyReport { max_n, sizes, checks })
}
