//! Permutations avoiding the dashed patterns 32-41 and 41-32, and their
//! bijection with indecomposable set partitions.
//!
//! A permutation of `[n]` avoids both patterns exactly when no two of its
//! descents have nested value intervals. [`bijection::forward`] sends such a
//! permutation to an indecomposable set partition of `[n+1]`, carrying
//! increasing runs to blocks, and [`bijection::inverse`] undoes it. The
//! [`bell`] module restricts this to avoiders ending in 1, which correspond
//! to arbitrary set partitions of `[n-1]`.
//!
//! Everything is checked by brute force in [`enumeration`]:
//!
//! ```
//! use avoiders::{bijection, Permutation, SetPartition};
//!
//! let p: Permutation = "4 3 1 2 7 6 5 8 10 9".parse()?;
//! let image = bijection::forward(&p)?;
//! assert_eq!(image.to_string(), "3/4/6/5 7/1 2 8 10/9 11");
//! assert_eq!(bijection::inverse(&image)?, p);
//! # Ok::<(), avoiders::Error>(())
//! ```

pub mod bell;
pub mod bijection;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod permutation;
pub mod setpartition;

pub use error::{Error, ErrorKind, Result};
pub use permutation::{AvoidanceMethod, DashedPattern, Descent, Permutation};
pub use setpartition::{ClassTag, SetPartition};
