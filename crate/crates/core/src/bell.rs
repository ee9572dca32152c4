//! Avoiders of `[n]` that end with 1 against arbitrary set partitions of
//! `[n-1]`, built on top of the main bijection.

use crate::bijection::{forward, inverse, require_avoider};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::setpartition::SetPartition;

/// Drops the final 1, standardizes, maps to an indecomposable partition of
/// `[n]`, deletes `n` from the last block and rotates the blocks one place
/// to the right.
pub fn avoider_to_partition(p: &Permutation) -> Result<SetPartition> {
    if p.len() < 2 {
        return Err(Error::TooSmall { size: p.len(), min: 2 });
    }
    let (&last, rest) = p.entries().split_last().unwrap();
    if last != 1 {
        return Err(Error::NotEndingInOne);
    }
    require_avoider(p)?;
    // Removing the value 1 and decrementing is the standardization.
    let reduced = Permutation::new_unchecked(rest.iter().map(|v| v - 1).collect());
    let image = forward(&reduced)?;

    let n = p.len() as u32;
    let mut blocks = image.into_blocks();
    let mut tail = blocks.pop().unwrap();
    if tail.pop() != Some(n) || tail.is_empty() {
        return Err(Error::Invariant(format!("last block of the image of {reduced} is {{{n}}}")));
    }
    blocks.insert(0, tail);
    SetPartition::canonicalize(blocks)
}

/// Inverse of [`avoider_to_partition`]: rotates the blocks one place to the
/// left, appends `n` to the last block, applies the inverse bijection,
/// increments every entry and appends 1.
pub fn partition_to_avoider(partition: &SetPartition) -> Result<Permutation> {
    let n = partition.size() as u32 + 1;
    let mut blocks = partition.blocks().to_vec();
    blocks.rotate_left(1);
    blocks.last_mut().unwrap().push(n);
    let lifted = SetPartition::canonicalize(blocks.clone())?;
    if lifted.blocks() != blocks.as_slice() {
        return Err(Error::Invariant(format!("lifted partition {lifted} lost canonical order")));
    }
    if !lifted.is_indecomposable() {
        return Err(Error::Invariant(format!("lifted partition {lifted} is decomposable")));
    }
    let reduced = inverse(&lifted)?;
    let mut entries: Vec<u32> = reduced.entries().iter().map(|v| v + 1).collect();
    entries.push(1);
    Ok(Permutation::new_unchecked(entries))
}
