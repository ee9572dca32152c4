//! Permutations in one-line notation, their runs and descents, and three
//! independent tests for avoidance of the dashed patterns 32-41 and 41-32.
//!
//! Positions and values are 1-based throughout.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `entries` is a rearrangement of `1..=entries.len()`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::DuplicateValue(v));
            }
        }
        Ok(Permutation(entries))
    }

    /// Wraps `entries` without validation. The caller guarantees the invariant.
    pub(crate) fn new_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    /// Value at 1-based `position`.
    pub fn at(&self, position: usize) -> u32 {
        self.0[position - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn increasing_runs(&self) -> Vec<Vec<u32>> {
        increasing_runs(&self.0)
    }

    pub fn descents(&self) -> Vec<Descent> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, w)| Descent {
                position: i + 1,
                initiator: w[0],
                terminator: w[1],
            })
            .collect()
    }

    /// Values larger than every value to their left, in left-to-right order.
    pub fn left_to_right_maxima(&self) -> Vec<u32> {
        let mut best = 0;
        let mut out = Vec::new();
        for &v in &self.0 {
            if v > best {
                best = v;
                out.push(v);
            }
        }
        out
    }

    /// Leftmost occurrence of `pattern`, as the four 1-based positions
    /// `(i, i+1, j, j+1)` with `j >= i + 2`.
    pub fn find_dashed(&self, pattern: DashedPattern) -> Option<[usize; 4]> {
        let p = &self.0;
        let n = p.len();
        for i in 0..n.saturating_sub(1) {
            if p[i] < p[i + 1] {
                continue;
            }
            for j in (i + 2)..n.saturating_sub(1) {
                if pattern.matches([p[i], p[i + 1], p[j], p[j + 1]]) {
                    return Some([i + 1, i + 2, j + 1, j + 2]);
                }
            }
        }
        None
    }

    pub fn contains_dashed(&self, pattern: DashedPattern) -> bool {
        self.find_dashed(pattern).is_some()
    }

    /// First occurrence of either pattern, 32-41 checked before 41-32.
    pub fn find_either_pattern(&self) -> Option<(DashedPattern, [usize; 4])> {
        DashedPattern::ALL
            .into_iter()
            .find_map(|pat| self.find_dashed(pat).map(|w| (pat, w)))
    }

    pub fn avoids_pair(&self, method: AvoidanceMethod) -> bool {
        match method {
            AvoidanceMethod::Direct => self.find_either_pattern().is_none(),
            AvoidanceMethod::Characterization => {
                let (initiators, terminators): (Vec<u32>, Vec<u32>) = self
                    .descents()
                    .iter()
                    .map(|d| (d.initiator, d.terminator))
                    .unzip();
                order_isomorphic(&initiators, &terminators).unwrap_or(false)
            }
            AvoidanceMethod::NestedDescents => {
                let ds = self.descents();
                // Descents sharing an entry (adjacent positions) never nest,
                // so checking every pair is equivalent to checking disjoint ones.
                !ds.iter().enumerate().any(|(x, d)| {
                    ds[x + 1..].iter().any(|e| d.nests_with(e))
                })
            }
        }
    }

    /// Avoidance using the direct pattern matcher.
    pub fn is_avoider(&self) -> bool {
        self.avoids_pair(AvoidanceMethod::Direct)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_spaced(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_integers(s)?)
    }
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    text.parse()
}

pub(crate) fn parse_integers(s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|tok| tok.parse::<u32>().map_err(|_| Error::InvalidToken(tok.to_owned())))
        .collect()
}

pub(crate) fn write_spaced(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// An adjacent pair `b a` with `b > a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Descent {
    /// 1-based position of the initiator.
    pub position: usize,
    pub initiator: u32,
    pub terminator: u32,
}

impl Descent {
    /// True if one value interval `[terminator, initiator]` contains the other.
    pub fn nests_with(&self, other: &Descent) -> bool {
        let (a, b) = (self.terminator, self.initiator);
        let (c, d) = (other.terminator, other.initiator);
        (c <= a && b <= d) || (a <= c && d <= b)
    }
}

/// The two dashed patterns this crate is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DashedPattern {
    /// `32-41`: values at `(i, i+1, j, j+1)` order-isomorphic to `3 2 4 1`.
    #[serde(rename = "32-41")]
    P3241,
    /// `41-32`: values at `(i, i+1, j, j+1)` order-isomorphic to `4 1 3 2`.
    #[serde(rename = "41-32")]
    P4132,
}

impl DashedPattern {
    pub const ALL: [DashedPattern; 2] = [DashedPattern::P3241, DashedPattern::P4132];

    pub fn shape(self) -> [u32; 4] {
        match self {
            DashedPattern::P3241 => [3, 2, 4, 1],
            DashedPattern::P4132 => [4, 1, 3, 2],
        }
    }

    fn matches(self, [w, x, y, z]: [u32; 4]) -> bool {
        match self {
            DashedPattern::P3241 => z < x && x < w && w < y,
            DashedPattern::P4132 => x < z && z < y && y < w,
        }
    }
}

impl fmt::Display for DashedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DashedPattern::P3241 => "32-41",
            DashedPattern::P4132 => "41-32",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AvoidanceMethod {
    /// Scan for occurrences of 32-41 and 41-32.
    Direct,
    /// Descent initiators order-isomorphic to descent terminators.
    Characterization,
    /// No two descents with nested value intervals.
    NestedDescents,
}

impl AvoidanceMethod {
    pub const ALL: [AvoidanceMethod; 3] = [
        AvoidanceMethod::Direct,
        AvoidanceMethod::Characterization,
        AvoidanceMethod::NestedDescents,
    ];
}

/// Maximal strictly increasing contiguous segments of `word`.
pub fn increasing_runs(word: &[u32]) -> Vec<Vec<u32>> {
    let mut runs: Vec<Vec<u32>> = Vec::new();
    for &v in word {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() < v => run.push(v),
            _ => runs.push(vec![v]),
        }
    }
    runs
}

/// Ranks of the entries of `word`: smallest becomes 1, next 2, and so on.
pub fn standardize(word: &[u32]) -> Result<Permutation> {
    if word.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(Permutation(ranks(word)?))
}

fn ranks(word: &[u32]) -> Result<Vec<u32>> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    if let Some(w) = order.windows(2).find(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::DuplicateValue(word[w[0]]));
    }
    let mut out = vec![0; word.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Ok(out)
}

/// True iff `x` and `y` have the same relative order. Both must consist of
/// distinct values.
pub fn order_isomorphic(x: &[u32], y: &[u32]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(ranks(x)? == ranks(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const MAIN: &str = "2 9 5 1 4 10 12 7 8 3 6 15 17 13 14 16 11";
    const AVOIDER: &str = "1 3 8 5 2 6 9 7 4";

    #[test]
    fn parse_examples() {
        assert_eq!(perm("1").entries(), &[1]);
        let p = perm(MAIN);
        assert_eq!(p.len(), 17);
        assert!(matches!("1 1 2".parse::<Permutation>(), Err(Error::DuplicateValue(1))));
        assert!(matches!("".parse::<Permutation>(), Err(Error::EmptyInput)));
        assert!(matches!("  ".parse::<Permutation>(), Err(Error::EmptyInput)));
        assert!(matches!("1 4 2".parse::<Permutation>(), Err(Error::ValueOutOfRange { value: 4, n: 3 })));
        assert!(matches!("1 x".parse::<Permutation>(), Err(Error::InvalidToken(_))));
        assert_eq!(perm("  2\t1 \n3 ").to_string(), "2 1 3");
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[2, 7, 3, 9, 5, 6, 8, 4]).unwrap(), perm("1 6 2 8 4 5 7 3"));
        assert_eq!(standardize(&[1, 2, 3]).unwrap(), perm("1 2 3"));
        assert_eq!(standardize(&[10, 30, 20]).unwrap(), perm("1 3 2"));
        assert!(matches!(standardize(&[4, 4]), Err(Error::DuplicateValue(4))));
    }

    #[test]
    fn runs_examples() {
        let runs = perm(MAIN).increasing_runs();
        let expected: Vec<Vec<u32>> = vec![
            vec![2, 9],
            vec![5],
            vec![1, 4, 10, 12],
            vec![7, 8],
            vec![3, 6, 15, 17],
            vec![13, 14, 16],
            vec![11],
        ];
        assert_eq!(runs, expected);
        assert_eq!(perm("1 2 3").increasing_runs(), vec![vec![1, 2, 3]]);
        assert_eq!(perm("3 2 1").increasing_runs(), vec![vec![3], vec![2], vec![1]]);
    }

    #[test]
    fn descent_examples() {
        let ds = perm(AVOIDER).descents();
        let ini: Vec<u32> = ds.iter().map(|d| d.initiator).collect();
        let ter: Vec<u32> = ds.iter().map(|d| d.terminator).collect();
        assert_eq!(ini, [8, 5, 9, 7]);
        assert_eq!(ter, [5, 2, 7, 4]);
        assert_eq!(ds[0].position, 3);
        assert!(perm("1 2 3 4").descents().is_empty());
        let ds = perm("3 2 1").descents();
        assert_eq!(ds.iter().map(|d| d.initiator).collect::<Vec<_>>(), [3, 2]);
        assert_eq!(ds.iter().map(|d| d.terminator).collect::<Vec<_>>(), [2, 1]);
    }

    #[test]
    fn lr_maxima_examples() {
        // Oracle: a value is an LR maximum iff no earlier value exceeds it.
        let p = perm(MAIN);
        let e = p.entries();
        let oracle: Vec<u32> = (0..e.len())
            .filter(|&i| e[..i].iter().all(|&x| x < e[i]))
            .map(|i| e[i])
            .collect();
        assert_eq!(oracle, [2, 9, 10, 12, 15, 17]);
        assert_eq!(p.left_to_right_maxima(), oracle);
        assert_eq!(perm("1 2 3").left_to_right_maxima(), [1, 2, 3]);
        assert_eq!(perm("3 2 1").left_to_right_maxima(), [3]);
    }

    #[test]
    fn order_isomorphism_examples() {
        assert!(order_isomorphic(&[8, 5, 9, 7], &[5, 2, 7, 4]).unwrap());
        assert_eq!(standardize(&[8, 5, 9, 7]).unwrap(), perm("3 1 4 2"));
        assert!(order_isomorphic(&[], &[]).unwrap());
        assert!(!order_isomorphic(&[1, 2], &[2, 1]).unwrap());
        assert!(matches!(
            order_isomorphic(&[1], &[1, 2]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn dashed_examples() {
        assert_eq!(perm("3 2 4 1").find_dashed(DashedPattern::P3241), Some([1, 2, 3, 4]));
        assert_eq!(perm("4 1 3 2").find_dashed(DashedPattern::P4132), Some([1, 2, 3, 4]));
        assert_eq!(perm("3 2 4 1").find_dashed(DashedPattern::P4132), None);
        let a = perm(AVOIDER);
        for pat in DashedPattern::ALL {
            assert!(!a.contains_dashed(pat));
        }
        // The two descents must be disjoint: 3 2 1 has no occurrence.
        assert!(perm("3 2 1").find_either_pattern().is_none());
    }

    #[test]
    fn leftmost_witness() {
        // 3 2 5 1 4 ... : (1,2,3,4) is the leftmost occurrence of 32-41.
        let p = perm("3 2 6 1 5 4");
        assert_eq!(p.find_dashed(DashedPattern::P3241), Some([1, 2, 3, 4]));
        let p = perm("1 5 4 6 3 2");
        // descents 5 4 (pos 2) and 6 3 (pos 4), 3 2 (pos 5): 54-63 is 32-41.
        assert_eq!(p.find_dashed(DashedPattern::P3241), Some([2, 3, 4, 5]));
    }

    #[test]
    fn avoidance_examples() {
        let a = perm(AVOIDER);
        for m in AvoidanceMethod::ALL {
            assert!(a.avoids_pair(m), "{m:?}");
            assert!(!perm("3 2 4 1").avoids_pair(m), "{m:?}");
        }
        let count = crate::enumeration::generate_permutations(4)
            .filter(|p| p.is_avoider())
            .count();
        assert_eq!(count, 22);
    }

    #[test]
    fn adjacent_descents_never_nest() {
        // p_i > p_{i+1} > p_{i+2}: intervals share one endpoint only.
        for w in [[3u32, 2, 1], [5, 3, 1], [9, 4, 2]] {
            let d1 = Descent { position: 1, initiator: w[0], terminator: w[1] };
            let d2 = Descent { position: 2, initiator: w[1], terminator: w[2] };
            assert!(!d1.nests_with(&d2));
        }
    }

    #[test]
    fn identity_has_no_descents() {
        for n in 1..=6 {
            for p in crate::enumeration::generate_permutations(n) {
                assert_eq!(p.descents().is_empty(), p.is_identity());
            }
        }
    }
}
