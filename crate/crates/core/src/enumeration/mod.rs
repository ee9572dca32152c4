//! Brute-force generators and counters. These are the independent oracles the
//! verification harness ([`verify`]) checks the bijections against.

mod verify;

pub use verify::{
    check_bijectivity_with, verify_all, CheckResult, ExpectedSequence, SequenceName,
    SizeCounts, VerifyOptions, VerifyReport,
};

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijection::forward;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::setpartition::SetPartition;

pub const DEFAULT_MAX_PERMUTATION_SIZE: usize = 10;
pub const DEFAULT_MAX_PARTITION_SIZE: usize = 13;

/// Environment variable overriding [`Caps::max_permutation_size`].
pub const PERMUTATION_CAP_VAR: &str = "AVOIDERS_MAX_PERMUTATION_SIZE";
/// Environment variable overriding [`Caps::max_partition_size`].
pub const PARTITION_CAP_VAR: &str = "AVOIDERS_MAX_PARTITION_SIZE";

/// Largest sizes the exhaustive generators will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_permutation_size: usize,
    pub max_partition_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_permutation_size: DEFAULT_MAX_PERMUTATION_SIZE,
            max_partition_size: DEFAULT_MAX_PARTITION_SIZE,
        }
    }
}

impl Caps {
    /// Defaults, overridden by [`PERMUTATION_CAP_VAR`] / [`PARTITION_CAP_VAR`]
    /// when they hold a valid integer.
    pub fn from_env() -> Self {
        let read = |var: &str, default: usize| {
            std::env::var(var)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        Caps {
            max_permutation_size: read(PERMUTATION_CAP_VAR, DEFAULT_MAX_PERMUTATION_SIZE),
            max_partition_size: read(PARTITION_CAP_VAR, DEFAULT_MAX_PARTITION_SIZE),
        }
    }

    pub fn check_permutation_size(&self, n: usize) -> Result<()> {
        if n > self.max_permutation_size {
            return Err(Error::CapExceeded {
                what: "permutation",
                size: n,
                cap: self.max_permutation_size,
            });
        }
        Ok(())
    }

    pub fn check_partition_size(&self, m: usize) -> Result<()> {
        if m > self.max_partition_size {
            return Err(Error::CapExceeded {
                what: "partition",
                size: m,
                cap: self.max_partition_size,
            });
        }
        Ok(())
    }

    pub fn permutations(&self, n: usize) -> Result<Permutations> {
        self.check_permutation_size(n)?;
        Ok(generate_permutations(n))
    }

    pub fn set_partitions(&self, m: usize) -> Result<SetPartitions> {
        self.check_partition_size(m)?;
        Ok(generate_set_partitions(m))
    }
}

/// Lexicographic stream of permutations that share a fixed prefix.
#[derive(Debug, Clone)]
pub struct Permutations {
    prefix_len: usize,
    current: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let out = self.current.clone()?;
        let advanced = {
            let cur = self.current.as_mut().unwrap();
            next_permutation(&mut cur[self.prefix_len..])
        };
        if !advanced {
            self.current = None;
        }
        Some(Permutation::new_unchecked(out))
    }
}

fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All `n!` permutations of `[n]` in lexicographic order. Empty for `n = 0`.
pub fn generate_permutations(n: usize) -> Permutations {
    Permutations {
        prefix_len: 0,
        current: (n > 0).then(|| (1..=n as u32).collect()),
    }
}

/// The permutations of `[n]` starting with `first`, in lexicographic order.
/// Shards `1..=n` together list every permutation exactly once.
pub fn permutations_with_first(n: usize, first: u32) -> Permutations {
    let valid = first >= 1 && first as usize <= n;
    Permutations {
        prefix_len: 1,
        current: valid.then(|| {
            std::iter::once(first)
                .chain((1..=n as u32).filter(|&v| v != first))
                .collect()
        }),
    }
}

/// Restricted growth strings of length `m`, as canonical partitions.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Option<Vec<usize>>,
    // maxes[i] = max(rgs[..i]), so position i may take values 0..=maxes[i]+1
    maxes: Vec<usize>,
}

impl SetPartitions {
    fn advance(&mut self) {
        let Some(rgs) = self.rgs.as_mut() else { return };
        let m = rgs.len();
        for i in (1..m).rev() {
            if rgs[i] <= self.maxes[i] {
                rgs[i] += 1;
                for j in i + 1..m {
                    rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(rgs[j - 1]);
                }
                return;
            }
        }
        self.rgs = None;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let out = SetPartition::from_growth_string(self.rgs.as_ref()?).ok();
        self.advance();
        out
    }
}

/// All `B_m` partitions of `[m]`, ordered by restricted growth string.
pub fn generate_set_partitions(m: usize) -> SetPartitions {
    SetPartitions {
        rgs: (m > 0).then(|| vec![0; m]),
        maxes: vec![0; m],
    }
}

pub fn count_avoiders(n: usize) -> u64 {
    generate_permutations(n).filter(Permutation::is_avoider).count() as u64
}

pub fn count_avoiders_ending_in_one(n: usize) -> u64 {
    generate_permutations(n)
        .filter(|p| p.entries().last() == Some(&1) && p.is_avoider())
        .count() as u64
}

pub fn count_indecomposable(m: usize) -> u64 {
    generate_set_partitions(m)
        .filter(SetPartition::is_indecomposable)
        .count() as u64
}

/// `B_k` from the Bell triangle: each row starts with the last entry of the
/// previous row, and each entry adds its left neighbour to the entry above
/// that neighbour.
pub fn bell_number(k: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for above in &row {
            let v = next.last().unwrap() + above;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Frequency of (number of runs of the avoider, number of blocks of its
/// image) over all avoiders of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatisticTable {
    pub n: usize,
    /// `cells[r - 1][b - 1]`: avoiders with `r` runs whose image has `b` blocks.
    pub cells: Vec<Vec<u64>>,
}

impl StatisticTable {
    pub fn get(&self, runs: usize, blocks: usize) -> u64 {
        self.cells[runs - 1][blocks - 1]
    }

    pub fn off_diagonal_mass(&self) -> u64 {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter(move |(b, _)| *b != r))
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.cells[i][i]).collect()
    }
}

pub fn joint_statistic_table(n: usize) -> Result<StatisticTable> {
    let mut cells = vec![vec![0u64; n]; n];
    for p in generate_permutations(n).filter(Permutation::is_avoider) {
        let runs = p.increasing_runs().len();
        // n+1 elements can form up to n+1 blocks; a run count is at most n.
        let blocks = forward(&p)?.num_blocks();
        if blocks > n {
            return Err(Error::Invariant(format!("image of {p} has {blocks} blocks")));
        }
        cells[runs - 1][blocks - 1] += 1;
    }
    Ok(StatisticTable { n, cells })
}

/// Last entries of every run except the last, and the largest entry of every
/// block of `forward(p)` except the one holding `n+1`.
pub fn run_and_block_maxima(p: &Permutation) -> Result<(BTreeSet<u32>, BTreeSet<u32>)> {
    let runs = p.increasing_runs();
    let run_max = runs[..runs.len() - 1].iter().map(|r| *r.last().unwrap()).collect();
    let image = forward(p)?;
    let maxima = image.block_maxima();
    let block_max = maxima[..maxima.len() - 1].iter().copied().collect();
    Ok((run_max, block_max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
}

/// Evaluates the hypotheses and the conclusion of the ordering lemma behind
/// the segment reconstruction. With `a_i`, `b_i` the last and first entries
/// of block `i`, the conclusion says the `i`-th smallest descent initiator
/// exceeds the `i`-th smallest descent terminator.
///
/// Hypotheses: `a` strictly increasing, `b` distinct, `a_i >= b_i`,
/// `a_{k-1} > b_k`, and whenever `a_i = b_i` some `j` other than `i` and
/// `k-1` has `b_j <= a_i <= a_j`. Conclusion: `a_i > b*_i` for `i < k`, where
/// `b*` is `(b_1, ..., b_{k-2}, b_k)` sorted.
pub fn check_sequences_lemma(a: &[u32], b: &[u32]) -> Result<LemmaCheck> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let k = a.len();
    if k < 2 {
        return Err(Error::TooSmall { size: k, min: 2 });
    }
    let increasing = a.windows(2).all(|w| w[0] < w[1]);
    let distinct = b.iter().collect::<BTreeSet<_>>().len() == k;
    let dominated = a.iter().zip(b).all(|(x, y)| x >= y);
    let tail = a[k - 2] > b[k - 1];
    let straddled = (0..k).filter(|&i| a[i] == b[i]).all(|i| {
        (0..k).any(|j| j != i && j != k - 2 && b[j] <= a[i] && a[i] <= a[j])
    });
    let hypotheses_hold = increasing && distinct && dominated && tail && straddled;

    let mut sorted: Vec<u32> = b[..k - 2].iter().chain(&b[k - 1..]).copied().collect();
    sorted.sort_unstable();
    let conclusion_holds = a[..k - 1].iter().zip(&sorted).all(|(x, y)| x > y);
    Ok(LemmaCheck {
        hypotheses_hold,
        conclusion_holds,
    })
}

/// Last and first entries of each block, in canonical block order.
pub fn lemma_sequences(partition: &SetPartition) -> Result<(Vec<u32>, Vec<u32>)> {
    if partition.num_blocks() < 2 {
        return Err(Error::SingleBlock);
    }
    let a = partition.block_maxima();
    let b = partition.blocks().iter().map(|blk| blk[0]).collect();
    Ok((a, b))
}
