//! The bijection from (32-41, 41-32)-avoiders of `[n]` to indecomposable set
//! partitions of `[n+1]`, and its inverse.
//!
//! The forward direction is a five-step map followed by a tweak:
//!
//! 1. split `p` into increasing runs and append `n+1` to the last run;
//! 2. mark the runs ending in a left-to-right maximum of `p` (LRMax runs, the
//!    sentinel run excluded), box their last entry and underline the rest;
//! 3. underlined entries of the first run are red; in later LRMax runs an
//!    underlined entry is blue when smaller than the previous box, red otherwise;
//! 4. move every red entry into the last LRMax run and the blues of each
//!    LRMax run into the LRMax run to its left;
//! 5. sort the segments by last entry, which gives a canonical partition.
//!
//! The result always lies in the image class (see [`crate::setpartition`]).
//! If it is decomposable, [`tweak`] moves all but the last entry of the last
//! block of the first component into the penultimate block.
//!
//! The inverse undoes the tweak ([`untweak`]), recovers the segment order of
//! step 4 from block first/last entries ([`recover_step4_order`]) and then
//! returns the colored entries to their runs ([`undo_transfers`]).

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{write_spaced, Permutation};
use crate::setpartition::SetPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Red,
    Blue,
    /// Boxed entries and entries of runs that are not LRMax runs.
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnotatedRun {
    pub entries: Vec<u32>,
    pub is_lrmax: bool,
    /// One color per entry.
    pub colors: Vec<Color>,
}

impl AnnotatedRun {
    /// The boxed entry (last entry) of an LRMax run.
    pub fn boxed(&self) -> Option<u32> {
        self.is_lrmax.then(|| *self.entries.last().unwrap())
    }

    fn underlined(&self) -> &[u32] {
        if self.is_lrmax {
            &self.entries[..self.entries.len() - 1]
        } else {
            &[]
        }
    }
}

/// Runs of a non-identity permutation with the sentinel appended (step 1),
/// LRMax marks (step 2) and colors (step 3).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunDecomposition {
    pub runs: Vec<AnnotatedRun>,
    pub sentinel: u32,
}

impl RunDecomposition {
    pub fn new(p: &Permutation) -> Result<Self> {
        if p.is_identity() {
            return Err(Error::IdentityPermutation);
        }
        let sentinel = p.len() as u32 + 1;
        let mut raw = p.increasing_runs();
        let last = raw.len() - 1;

        let mut runs = Vec::with_capacity(raw.len());
        let mut prefix_max = 0;
        for (i, entries) in raw.drain(..).enumerate() {
            let top = *entries.last().unwrap();
            let is_lrmax = i != last && top > prefix_max;
            prefix_max = prefix_max.max(top);
            runs.push(AnnotatedRun {
                colors: vec![Color::Plain; entries.len()],
                entries,
                is_lrmax,
            });
        }
        runs[last].entries.push(sentinel);
        runs[last].colors.push(Color::Plain);

        let mut previous_box: Option<u32> = None;
        for run in runs.iter_mut().filter(|r| r.is_lrmax) {
            let underlined = run.entries.len() - 1;
            for i in 0..underlined {
                run.colors[i] = match previous_box {
                    Some(b) if run.entries[i] < b => Color::Blue,
                    _ => Color::Red,
                };
            }
            previous_box = run.boxed();
        }
        Ok(RunDecomposition { runs, sentinel })
    }

    pub fn lrmax_indices(&self) -> Vec<usize> {
        (0..self.runs.len()).filter(|&i| self.runs[i].is_lrmax).collect()
    }

    /// Step 4: move reds to the last LRMax run and blues one LRMax run to the
    /// left. Each segment is re-sorted.
    pub fn transfer(&self) -> Result<SegmentList> {
        let lrmax = self.lrmax_indices();
        let Some(&last_lrmax) = lrmax.last() else {
            return Err(Error::Invariant("no LRMax run".into()));
        };
        let mut segments: Vec<Vec<u32>> = self
            .runs
            .iter()
            .map(|r| match r.boxed() {
                Some(b) => vec![b],
                None => r.entries.clone(),
            })
            .collect();
        for (pos, &idx) in lrmax.iter().enumerate() {
            let run = &self.runs[idx];
            for (&v, &c) in run.underlined().iter().zip(&run.colors) {
                let dest = match c {
                    Color::Red => last_lrmax,
                    Color::Blue if pos > 0 => lrmax[pos - 1],
                    Color::Blue => {
                        return Err(Error::Invariant(format!("blue entry {v} in the first run")))
                    }
                    Color::Plain => {
                        return Err(Error::Invariant(format!("uncolored underlined entry {v}")))
                    }
                };
                segments[dest].push(v);
            }
        }
        for s in &mut segments {
            s.sort_unstable();
        }
        Ok(SegmentList { segments })
    }
}

impl fmt::Display for RunDecomposition {
    /// Boxed entries as `(9)`, red entries as `r2`, blue as `b1`, and
    /// underlined entries not yet colored as `_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for run in &self.runs {
            f.write_str("[")?;
            let boxed = run.boxed();
            for (i, (&v, &c)) in run.entries.iter().zip(&run.colors).enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                if boxed.is_some() && i + 1 == run.entries.len() {
                    write!(f, "({v})")?;
                } else if run.is_lrmax {
                    match c {
                        Color::Red => write!(f, "r{v}")?,
                        Color::Blue => write!(f, "b{v}")?,
                        Color::Plain => write!(f, "_{v}")?,
                    }
                } else {
                    write!(f, "{v}")?;
                }
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Ordered list of increasing segments covering `{1, ..., n+1}`; the step 4
/// intermediate of the forward map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SegmentList {
    segments: Vec<Vec<u32>>,
}

impl SegmentList {
    /// Validates: non-empty increasing segments, union `{1..=N}`, `N` in the
    /// final segment. Consecutive segments need not form a descent: moving
    /// blues out of a run can leave a smaller entry in front of it.
    pub fn new(segments: Vec<Vec<u32>>) -> Result<Self> {
        let list = SegmentList { segments };
        list.validate()?;
        Ok(list)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedSegments(msg));
        if self.segments.is_empty() {
            return bad("no segments".into());
        }
        let total: usize = self.segments.iter().map(Vec::len).sum();
        let mut seen = vec![false; total + 1];
        for (i, s) in self.segments.iter().enumerate() {
            if s.is_empty() {
                return bad(format!("segment {} is empty", i + 1));
            }
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("segment {} is not increasing", i + 1));
            }
            for &v in s {
                if v == 0 || v as usize > total || std::mem::replace(&mut seen[v as usize], true) {
                    return bad(format!("value {v} repeated or out of range"));
                }
            }
        }
        if *self.segments.last().unwrap().last().unwrap() as usize != total {
            return bad("largest value is not in the final segment".into());
        }
        Ok(())
    }

    pub fn segments(&self) -> &[Vec<u32>] {
        &self.segments
    }

    pub fn sentinel(&self) -> u32 {
        *self.segments.last().unwrap().last().unwrap()
    }

    /// Step 5: forget the order and canonicalize.
    pub fn to_partition(&self) -> Result<SetPartition> {
        SetPartition::canonicalize(self.segments.clone())
    }
}

impl fmt::Display for SegmentList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.segments {
            f.write_str("[")?;
            write_spaced(f, s)?;
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Every intermediate of the five-step map on one permutation.
#[derive(Debug, Clone, Serialize)]
pub struct FiveStepTrace {
    pub decomposition: RunDecomposition,
    pub segments: SegmentList,
    pub partition: SetPartition,
}

impl FiveStepTrace {
    pub fn new(p: &Permutation) -> Result<Self> {
        let decomposition = RunDecomposition::new(p)?;
        let segments = decomposition.transfer()?;
        let partition = segments.to_partition()?;
        Ok(FiveStepTrace {
            decomposition,
            segments,
            partition,
        })
    }

    /// Step 1 runs, with the sentinel appended to the last one.
    pub fn runs(&self) -> Vec<Vec<u32>> {
        self.decomposition.runs.iter().map(|r| r.entries.clone()).collect()
    }

    /// Display lines labelled `step1` .. `step5`.
    pub fn step_lines(&self) -> Vec<(&'static str, String)> {
        let step1 = SegmentList {
            segments: self.runs(),
        }
        .to_string();
        let mut step2 = self.decomposition.clone();
        for run in &mut step2.runs {
            run.colors.fill(Color::Plain);
        }
        vec![
            ("step1", step1),
            ("step2", step2.to_string()),
            ("step3", self.decomposition.to_string()),
            ("step4", self.segments.to_string()),
            ("step5", self.partition.to_string()),
        ]
    }
}

pub fn five_step_map(p: &Permutation) -> Result<SetPartition> {
    Ok(FiveStepTrace::new(p)?.partition)
}

/// Identity on indecomposable members of the image class. Otherwise moves all
/// entries but the last of the first component's last block into the
/// penultimate block.
pub fn tweak(partition: &SetPartition) -> Result<SetPartition> {
    if !partition.in_image_class() {
        return Err(Error::NotInImageClass(partition.clone()));
    }
    if partition.is_indecomposable() {
        return Ok(partition.clone());
    }
    let first = partition.components().swap_remove(0);
    let source = first.last_block().to_vec();
    let (keep, moved) = source.split_last().unwrap();
    let pen = partition.penultimate_index().unwrap();
    let mut blocks = partition.blocks().to_vec();
    let src_idx = blocks.iter().position(|b| *b == source).unwrap();
    blocks[pen].extend_from_slice(moved);
    blocks[src_idx] = vec![*keep];
    SetPartition::canonicalize(blocks)
}

/// Inverse of [`tweak`] on indecomposable partitions with more than one block.
pub fn untweak(partition: &SetPartition) -> Result<SetPartition> {
    let Some(a) = partition.largest_unstraddled_singleton()? else {
        return Ok(partition.clone());
    };
    let pen = partition.penultimate_index().unwrap();
    let mut blocks = partition.blocks().to_vec();
    let moved: Vec<u32> = blocks[pen].iter().copied().filter(|&v| v < a).collect();
    blocks[pen].retain(|&v| v >= a);
    let target = blocks.iter().position(|b| b.as_slice() == [a]).unwrap();
    blocks[target].extend(moved);
    SetPartition::canonicalize(blocks)
}

/// The bookkeeping lists used to rebuild the step 4 segment order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionLists {
    /// Block last entries, increasing.
    pub last_entries: Vec<u32>,
    /// Block first entries, increasing, except the penultimate block's first
    /// entry which is moved to the end.
    pub first_entries: Vec<u32>,
    /// `successor[i]` is the last entry of the block whose first entry is
    /// `first_entries[i]`; as a map it sends `last_entries[i]` to it.
    pub successor: Vec<u32>,
    /// Cycles of the successor map. The cycle through the sentinel starts at
    /// the second-largest last entry, every other cycle at its largest entry;
    /// cycles are ordered by first entry.
    pub cycles: Vec<Vec<u32>>,
    /// The cycles concatenated.
    pub order: Vec<u32>,
}

impl ReconstructionLists {
    pub fn new(partition: &SetPartition) -> Result<Self> {
        if partition.num_blocks() < 2 {
            return Err(Error::SingleBlock);
        }
        if !partition.in_image_class() {
            return Err(Error::NotInImageClass(partition.clone()));
        }
        let k = partition.num_blocks();
        let last_entries = partition.block_maxima();
        let pen = partition.penultimate_index().unwrap();
        let mut first_entries: Vec<u32> = partition
            .blocks()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pen)
            .map(|(_, b)| b[0])
            .collect();
        first_entries.sort_unstable();
        first_entries.push(partition.blocks()[pen][0]);

        let last_by_first: HashMap<u32, u32> = partition
            .blocks()
            .iter()
            .map(|b| (b[0], *b.last().unwrap()))
            .collect();
        let successor: Vec<u32> = first_entries.iter().map(|b| last_by_first[b]).collect();
        let succ: HashMap<u32, u32> = last_entries.iter().copied().zip(successor.iter().copied()).collect();

        let sentinel = last_entries[k - 1];
        let mut visited: HashSet<u32> = HashSet::new();
        let mut cycles = Vec::new();
        for &start in &last_entries {
            if visited.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            visited.insert(start);
            let mut cur = succ[&start];
            while cur != start {
                if !visited.insert(cur) || cycle.len() > k {
                    return Err(Error::Invariant("successor map is not a permutation".into()));
                }
                cycle.push(cur);
                cur = succ[&cur];
            }
            let head = if cycle.contains(&sentinel) {
                last_entries[k - 2]
            } else {
                *cycle.iter().max().unwrap()
            };
            let at = cycle.iter().position(|&v| v == head).ok_or_else(|| {
                Error::Invariant("sentinel and second-largest last entry in different cycles".into())
            })?;
            cycle.rotate_left(at);
            cycles.push(cycle);
        }
        cycles.sort_unstable_by_key(|c| c[0]);
        let order = cycles.concat();
        Ok(ReconstructionLists {
            last_entries,
            first_entries,
            successor,
            cycles,
            order,
        })
    }
}

/// Rebuilds the step 4 segment list from a member of the image class with more
/// than one block: blocks are listed so their last entries follow
/// [`ReconstructionLists::order`].
pub fn recover_step4_order(partition: &SetPartition) -> Result<SegmentList> {
    let lists = ReconstructionLists::new(partition)?;
    let by_last: HashMap<u32, &Vec<u32>> = partition
        .blocks()
        .iter()
        .map(|b| (*b.last().unwrap(), b))
        .collect();
    let segments = lists.order.iter().map(|a| by_last[a].clone()).collect();
    Ok(SegmentList { segments })
}

/// Same result as [`recover_step4_order`], computed by walking the chains of
/// descent initiators and terminators directly: starting from the largest
/// untreated initiator, the block ending at the initiator of rank `r` is
/// followed by the block starting at the terminator of rank `r`. Each walk
/// stops at the sentinel block or when it returns to its starting block, and
/// each new chain is placed before the chains already built.
pub fn recover_step4_order_by_chains(partition: &SetPartition) -> Result<SegmentList> {
    if partition.num_blocks() < 2 {
        return Err(Error::SingleBlock);
    }
    if !partition.in_image_class() {
        return Err(Error::NotInImageClass(partition.clone()));
    }
    let blocks = partition.blocks();
    let k = blocks.len();
    let pen = k - 2;
    // Non-last block maxima are already increasing in canonical order.
    let initiators: Vec<u32> = blocks[..k - 1].iter().map(|b| *b.last().unwrap()).collect();
    let mut terminators: Vec<u32> = (0..k).filter(|&i| i != pen).map(|i| blocks[i][0]).collect();
    terminators.sort_unstable();

    let block_ending = |v: u32| blocks.iter().position(|b| *b.last().unwrap() == v).unwrap();
    let block_starting = |v: u32| blocks.iter().position(|b| b[0] == v).unwrap();

    let mut treated = vec![false; k - 1];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    while let Some(rank) = (0..k - 1).rev().find(|&r| !treated[r]) {
        let start = block_ending(initiators[rank]);
        let mut chain = vec![start];
        let mut cur = start;
        loop {
            if cur == k - 1 {
                break;
            }
            // cur is a non-last block, so its index is its initiator rank.
            treated[cur] = true;
            let next = block_starting(terminators[cur]);
            if next == start {
                break;
            }
            if chain.len() > k {
                return Err(Error::Invariant("descent chain does not terminate".into()));
            }
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    let segments = chains
        .iter()
        .rev()
        .flatten()
        .map(|&i| blocks[i].clone())
        .collect();
    Ok(SegmentList { segments })
}

/// Inverts step 4 and step 1: returns colored entries to their original runs
/// and drops the sentinel.
///
/// LRMax segments are the non-final segments whose last entry exceeds every
/// earlier entry; their last entries are the boxes `M_1 < ... < M_q`. The
/// non-boxed entries of LRMax segment `t < q` are the blues of LRMax run
/// `t + 1`; those of segment `q` are reds, each belonging to the run `i` with
/// `M_{i-1} < r < M_i` (taking `M_0 = 0`).
pub fn undo_transfers(list: &SegmentList) -> Result<Permutation> {
    list.validate()?;
    let segs = list.segments();
    let last = segs.len() - 1;
    let mut lrmax = Vec::new();
    let mut prefix_max = 0;
    for (i, s) in segs.iter().enumerate() {
        let top = *s.last().unwrap();
        if i != last && top > prefix_max {
            lrmax.push(i);
        }
        prefix_max = prefix_max.max(top);
    }
    let Some(&last_lrmax) = lrmax.last() else {
        return Err(Error::MalformedSegments("no LRMax segment".into()));
    };
    let boxes: Vec<u32> = lrmax.iter().map(|&i| *segs[i].last().unwrap()).collect();

    let mut runs: Vec<Vec<u32>> = segs.to_vec();
    for &i in &lrmax {
        runs[i] = Vec::new();
    }
    for (t, &i) in lrmax.iter().enumerate() {
        let body = &segs[i][..segs[i].len() - 1];
        if i == last_lrmax {
            for &r in body {
                let owner = boxes.partition_point(|&m| m < r);
                if owner == boxes.len() {
                    return Err(Error::MalformedSegments(format!(
                        "red entry {r} exceeds every boxed entry"
                    )));
                }
                runs[lrmax[owner]].push(r);
            }
        } else {
            runs[lrmax[t + 1]].extend_from_slice(body);
        }
    }
    for (t, &i) in lrmax.iter().enumerate() {
        runs[i].push(boxes[t]);
        runs[i].sort_unstable();
    }
    let sentinel = list.sentinel();
    let entries: Vec<u32> = runs.into_iter().flatten().filter(|&v| v != sentinel).collect();
    Permutation::new(entries).map_err(|e| Error::MalformedSegments(e.to_string()))
}

/// Forward map with the intermediate partitions kept.
#[derive(Debug, Clone, Serialize)]
pub struct ForwardTrace {
    pub input: Permutation,
    /// `None` for the identity permutation.
    pub five_step: Option<FiveStepTrace>,
    /// Present only when the tweak changed the partition.
    pub tweaked: Option<SetPartition>,
    pub output: SetPartition,
}

impl ForwardTrace {
    pub fn new(p: &Permutation) -> Result<Self> {
        require_avoider(p)?;
        if p.is_identity() {
            return Ok(ForwardTrace {
                input: p.clone(),
                five_step: None,
                tweaked: None,
                output: SetPartition::one_block(p.len() + 1),
            });
        }
        let five = FiveStepTrace::new(p)?;
        let output = tweak(&five.partition)?;
        let tweaked = (output != five.partition).then(|| output.clone());
        Ok(ForwardTrace {
            input: p.clone(),
            five_step: Some(five),
            tweaked,
            output,
        })
    }
}

pub(crate) fn require_avoider(p: &Permutation) -> Result<()> {
    match p.find_either_pattern() {
        Some((pattern, positions)) => Err(Error::NotAnAvoider { pattern, positions }),
        None => Ok(()),
    }
}

/// Avoider of `[n]` to indecomposable partition of `[n+1]`.
pub fn forward(p: &Permutation) -> Result<SetPartition> {
    require_avoider(p)?;
    if p.is_identity() {
        return Ok(SetPartition::one_block(p.len() + 1));
    }
    tweak(&five_step_map(p)?)
}

/// Indecomposable partition of `[n+1]`, `n >= 1`, to avoider of `[n]`.
pub fn inverse(partition: &SetPartition) -> Result<Permutation> {
    if !partition.is_indecomposable() {
        return Err(Error::Decomposable {
            components: partition.components(),
        });
    }
    if partition.num_blocks() == 1 {
        let m = partition.size();
        if m < 2 {
            return Err(Error::TooSmall { size: m, min: 2 });
        }
        return Ok(Permutation::identity(m - 1));
    }
    undo_transfers(&recover_step4_order(&untweak(partition)?)?)
}
