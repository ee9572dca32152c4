//! Set partitions of `[m]` in canonical form: every block increasing, blocks
//! ordered by increasing last entry.
//!
//! Besides components and indecomposability this module holds the class
//! predicates the inverse map relies on. Terminology:
//!
//! * a *singleton* block has one entry, a *big* block more than one;
//! * a value `a` is *straddled* by a big block `B` when `min B < a < max B`;
//! * the *penultimate* block is the next-to-last block in canonical order;
//! * the *image class* holds partitions whose last block is not a run of
//!   consecutive integers and whose singletons are each straddled by some
//!   non-penultimate big block;
//! * the *straddle-deficient class* holds indecomposable partitions with more
//!   than one block having a singleton that no non-penultimate big block
//!   straddles.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::{parse_integers, write_spaced};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Sorts arbitrary disjoint blocks into canonical form. The union must be
    /// `{1, ..., m}` for some `m >= 1`.
    pub fn canonicalize<I, B>(raw_blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = u32>,
    {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for raw in raw_blocks {
            let mut block: Vec<u32> = raw.into_iter().collect();
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            block.sort_unstable();
            if let Some(w) = block.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateValue(w[0]));
            }
            blocks.push(block);
        }
        if blocks.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        for (i, &v) in all.iter().enumerate() {
            let want = i as u32 + 1;
            if v == 0 {
                return Err(Error::ValueOutOfRange { value: 0, n: all.len() });
            }
            if v < want {
                return Err(Error::OverlappingBlocks(v));
            }
            if v > want {
                return Err(Error::GapInGroundSet(want));
            }
        }
        blocks.sort_unstable_by_key(|b| *b.last().unwrap());
        Ok(SetPartition { blocks })
    }

    /// Partition from a restricted growth string: `rgs[i]` is the 0-based
    /// block index of element `i + 1`.
    pub fn from_growth_string(rgs: &[usize]) -> Result<Self> {
        if rgs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b > blocks.len() {
                return Err(Error::InvalidGrowthString(format!(
                    "position {} jumps to block {b} with only {} blocks open",
                    i + 1,
                    blocks.len()
                )));
            }
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i as u32 + 1);
        }
        blocks.sort_unstable_by_key(|b| *b.last().unwrap());
        Ok(SetPartition { blocks })
    }

    /// Parses the space-separated growth string format, e.g. `"0 0 1 0 2"`.
    pub fn parse_growth_string(text: &str) -> Result<Self> {
        let values: Vec<usize> = parse_integers(text)?.into_iter().map(|v| v as usize).collect();
        SetPartition::from_growth_string(&values)
    }

    /// Block index (in first-occurrence order) of every element.
    pub fn growth_string(&self) -> Vec<usize> {
        let mut by_first: Vec<&Vec<u32>> = self.blocks.iter().collect();
        by_first.sort_unstable_by_key(|b| b[0]);
        let mut out = vec![0; self.size()];
        for (idx, block) in by_first.into_iter().enumerate() {
            for &v in block {
                out[v as usize - 1] = idx;
            }
        }
        out
    }

    pub fn one_block(m: usize) -> Self {
        SetPartition {
            blocks: vec![(1..=m as u32).collect()],
        }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<u32>> {
        self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Ground set size `m`.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn last_block(&self) -> &[u32] {
        self.blocks.last().unwrap()
    }

    pub fn penultimate_index(&self) -> Option<usize> {
        self.blocks.len().checked_sub(2)
    }

    pub fn penultimate_block(&self) -> Option<&[u32]> {
        self.penultimate_index().map(|i| self.blocks[i].as_slice())
    }

    pub fn block_maxima(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| *b.last().unwrap()).collect()
    }

    /// Maximal decomposition into partitions of consecutive intervals, in
    /// interval order. Components keep their original values.
    pub fn components(&self) -> Vec<SetPartition> {
        let m = self.size();
        // reach[v] = largest value in the block containing v
        let mut reach = vec![0u32; m + 1];
        for block in &self.blocks {
            let max = *block.last().unwrap();
            for &v in block {
                reach[v as usize] = max;
            }
        }
        let mut cuts = Vec::new();
        let mut furthest = 0;
        for v in 1..=m as u32 {
            furthest = furthest.max(reach[v as usize]);
            if furthest == v {
                cuts.push(v);
            }
        }
        let mut out: Vec<Vec<Vec<u32>>> = vec![Vec::new(); cuts.len()];
        for block in &self.blocks {
            let c = cuts.partition_point(|&cut| cut < block[0]);
            out[c].push(block.clone());
        }
        out.into_iter().map(SetPartition::from_canonical_unchecked).collect()
    }

    fn from_canonical_unchecked(blocks: Vec<Vec<u32>>) -> Self {
        SetPartition { blocks }
    }

    pub fn is_indecomposable(&self) -> bool {
        // One component iff no proper prefix [1, v] is a union of blocks.
        let m = self.size() as u32;
        let mut reach = vec![0u32; m as usize + 1];
        for block in &self.blocks {
            let max = *block.last().unwrap();
            for &v in block {
                reach[v as usize] = max;
            }
        }
        let mut furthest = 0;
        for v in 1..m {
            furthest = furthest.max(reach[v as usize]);
            if furthest == v {
                return false;
            }
        }
        true
    }

    /// Shifts values so the smallest becomes 1. Intended for components.
    pub fn standardized(&self) -> SetPartition {
        let low = self.blocks.iter().map(|b| b[0]).min().unwrap_or(1);
        SetPartition {
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|v| v - low + 1).collect())
                .collect(),
        }
    }

    /// Last block is not a run of consecutive integers, and every singleton
    /// is straddled by some non-penultimate big block.
    pub fn in_image_class(&self) -> bool {
        let last = self.last_block();
        let consecutive = (*last.last().unwrap() - last[0]) as usize + 1 == last.len();
        if consecutive {
            return false;
        }
        let pen = self.penultimate_index();
        self.blocks.iter().filter(|b| b.len() == 1).all(|s| {
            self.blocks
                .iter()
                .enumerate()
                .any(|(i, b)| Some(i) != pen && b.len() > 1 && straddles_unchecked(b, s[0]))
        })
    }

    /// Largest singleton value not straddled by any non-penultimate big block.
    /// Requires an indecomposable partition with more than one block.
    pub fn largest_unstraddled_singleton(&self) -> Result<Option<u32>> {
        self.require_multi_block_indecomposable()?;
        let pen = self.penultimate_index();
        Ok(self
            .blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .filter(|&a| {
                !self
                    .blocks
                    .iter()
                    .enumerate()
                    .any(|(i, b)| Some(i) != pen && b.len() > 1 && straddles_unchecked(b, a))
            })
            .max())
    }

    /// Membership in the straddle-deficient class (see module docs).
    pub fn in_deficient_class(&self) -> Result<bool> {
        Ok(self.largest_unstraddled_singleton()?.is_some())
    }

    pub(crate) fn require_multi_block_indecomposable(&self) -> Result<()> {
        if !self.is_indecomposable() {
            return Err(Error::Decomposable {
                components: self.components(),
            });
        }
        if self.num_blocks() < 2 {
            return Err(Error::SingleBlock);
        }
        Ok(())
    }

    pub fn class_tag(&self) -> ClassTag {
        let indecomposable = self.is_indecomposable();
        let multi = self.num_blocks() > 1;
        let in_image = self.in_image_class();
        let deficient = indecomposable && multi && self.in_deficient_class().unwrap_or(false);
        ClassTag {
            indecomposable,
            more_than_one_block: multi,
            in_image_class: in_image,
            deficient,
        }
    }
}

/// `min B < a < max B` for a big block `B`.
pub fn straddles(block: &[u32], a: u32) -> Result<bool> {
    if block.len() < 2 {
        return Err(Error::SingletonBlock(block.to_vec()));
    }
    let (lo, hi) = (block.iter().min().unwrap(), block.iter().max().unwrap());
    Ok(*lo < a && a < *hi)
}

fn straddles_unchecked(sorted_block: &[u32], a: u32) -> bool {
    sorted_block[0] < a && a < *sorted_block.last().unwrap()
}

/// Membership flags of a partition in the classes used by the inverse map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassTag {
    pub indecomposable: bool,
    pub more_than_one_block: bool,
    pub in_image_class: bool,
    pub deficient: bool,
}

impl ClassTag {
    /// Indecomposable with more than one block.
    pub fn is_target(&self) -> bool {
        self.indecomposable && self.more_than_one_block
    }

    /// Image class and indecomposable.
    pub fn is_indecomposable_image(&self) -> bool {
        self.in_image_class && self.indecomposable
    }

    /// Image class and decomposable.
    pub fn is_decomposable_image(&self) -> bool {
        self.in_image_class && !self.indecomposable
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write_spaced(f, block)?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Blocks separated by `/`, entries by whitespace. Blocks may be given in
    /// any order and unsorted; the result is canonical.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        let raw = s
            .split('/')
            .map(parse_integers)
            .collect::<Result<Vec<_>>>()?;
        SetPartition::canonicalize(raw)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

pub fn parse_partition(text: &str) -> Result<SetPartition> {
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    const STEP5: &str = "5/7 8/1 4 9/3 6 12/13 14 16/2 10 15 17/11 18";
    const DECOMPOSABLE: &str = "3/1 2 4/6/5 7/8 10/9 11";
    const TWEAKED: &str = "3/4/6/5 7/1 2 8 10/9 11";

    #[test]
    fn canonicalize_examples() {
        let raw: Vec<Vec<u32>> = vec![
            vec![5],
            vec![7, 8],
            vec![9, 4, 1],
            vec![3, 6, 12],
            vec![13, 14, 16],
            vec![2, 10, 15, 17],
            vec![11, 18],
        ];
        assert_eq!(SetPartition::canonicalize(raw).unwrap().to_string(), STEP5);
        assert_eq!(SetPartition::canonicalize([[1]]).unwrap().to_string(), "1");
        assert_eq!(SetPartition::canonicalize([[2, 1, 3]]).unwrap().to_string(), "1 2 3");
        assert_eq!(part(" 2 6 / 4 5 7/1 8 /3 9").to_string(), "2 6/4 5 7/1 8/3 9");
        assert_eq!(part("3 9/1 8/2 6/7 5 4").to_string(), "2 6/4 5 7/1 8/3 9");
    }

    #[test]
    fn canonicalize_errors() {
        assert!(matches!("1 2/2 3".parse::<SetPartition>(), Err(Error::OverlappingBlocks(2))));
        assert!(matches!("1/3".parse::<SetPartition>(), Err(Error::GapInGroundSet(2))));
        assert!(matches!("1//2".parse::<SetPartition>(), Err(Error::EmptyBlock)));
        assert!(matches!("".parse::<SetPartition>(), Err(Error::EmptyInput)));
        assert!(matches!("0 1".parse::<SetPartition>(), Err(Error::ValueOutOfRange { .. })));
    }

    #[test]
    fn components_examples() {
        let comps = part("2/1 3/4/7/5 6 8").components();
        let shown: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["2/1 3", "4", "7/5 6 8"]);
        let std: Vec<String> = comps.iter().map(|c| c.standardized().to_string()).collect();
        assert_eq!(std, ["2/1 3", "1", "3/1 2 4"]);

        let comps = part(DECOMPOSABLE).components();
        let shown: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["3/1 2 4", "6/5 7", "8 10/9 11"]);
        assert_eq!(part("1 2 3").components(), vec![part("1 2 3")]);
    }

    #[test]
    fn indecomposable_examples() {
        assert!(part(STEP5).is_indecomposable());
        assert!(!part("1/2").is_indecomposable());
        assert!(part("1").is_indecomposable());
        let count = crate::enumeration::generate_set_partitions(5)
            .filter(|p| p.components().len() == 1)
            .count();
        assert_eq!(count, 22);
        let fast = crate::enumeration::generate_set_partitions(5)
            .filter(SetPartition::is_indecomposable)
            .count();
        assert_eq!(fast, 22);
    }

    #[test]
    fn straddle_examples() {
        assert!(straddles(&[2, 10, 15, 17], 11).unwrap());
        assert!(!straddles(&[5, 7], 5).unwrap());
        assert!(straddles(&[1, 8], 3).unwrap());
        assert!(matches!(straddles(&[4], 4), Err(Error::SingletonBlock(_))));
    }

    #[test]
    fn image_class_examples() {
        assert!(part(DECOMPOSABLE).in_image_class());
        assert!(!part("1/2 3").in_image_class());
        assert!(part(STEP5).in_image_class());
        // A single block of [m] is always an interval.
        assert!(!part("1 2 3").in_image_class());
        assert!(!part("1").in_image_class());
    }

    #[test]
    fn deficient_class_examples() {
        // Recompute straddling singleton by singleton: 3 and 4 are straddled
        // only by the penultimate block {1,2,8,10}; 6 is straddled by {5,7}.
        let t = part(TWEAKED);
        let big_non_pen: Vec<&Vec<u32>> = t.blocks()[..t.num_blocks() - 2]
            .iter()
            .chain(std::iter::once(&t.blocks()[t.num_blocks() - 1]))
            .filter(|b| b.len() > 1)
            .collect();
        let unstraddled: Vec<u32> = t
            .blocks()
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .filter(|&a| !big_non_pen.iter().any(|b| b[0] < a && a < *b.last().unwrap()))
            .collect();
        assert_eq!(unstraddled, [3, 4]);
        assert!(t.in_deficient_class().unwrap());
        assert_eq!(t.largest_unstraddled_singleton().unwrap(), Some(4));

        assert!(!part(STEP5).in_deficient_class().unwrap());
        assert!(matches!(part("1 2").in_deficient_class(), Err(Error::SingleBlock)));
        assert!(matches!(part("1/2").in_deficient_class(), Err(Error::Decomposable { .. })));
        assert!(!part("1 3/2").in_deficient_class().unwrap());
    }

    #[test]
    fn growth_strings() {
        let p = SetPartition::parse_growth_string("0 0 1 0 2").unwrap();
        assert_eq!(p.to_string(), "3/1 2 4/5");
        assert_eq!(p.growth_string(), [0, 0, 1, 0, 2]);
        assert!(SetPartition::parse_growth_string("0 2").is_err());
        assert!(SetPartition::parse_growth_string("1").is_err());
    }

    #[test]
    fn components_tile_ground_set() {
        for m in 1..=9 {
            for p in crate::enumeration::generate_set_partitions(m) {
                let mut next = 1;
                for c in p.components() {
                    let lo = c.blocks().iter().map(|b| b[0]).min().unwrap();
                    let hi = *c.last_block().last().unwrap();
                    assert_eq!(lo, next);
                    assert_eq!((hi - lo + 1) as usize, c.size());
                    next = hi + 1;
                }
                assert_eq!(next as usize, m + 1);
                assert_eq!(p.components().len() == 1, p.is_indecomposable());
            }
        }
    }

    #[test]
    fn singletons_of_indecomposables_are_straddled() {
        for m in 2..=9 {
            for p in crate::enumeration::generate_set_partitions(m) {
                if !p.is_indecomposable() {
                    continue;
                }
                for s in p.blocks().iter().filter(|b| b.len() == 1) {
                    assert!(
                        p.blocks().iter().any(|b| b.len() > 1 && straddles(b, s[0]).unwrap()),
                        "{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn targets_split_into_image_and_deficient() {
        for m in 2..=10 {
            for p in crate::enumeration::generate_set_partitions(m) {
                let tag = p.class_tag();
                if tag.is_target() {
                    assert!(tag.in_image_class ^ tag.deficient, "{p}");
                }
            }
        }
    }
}
