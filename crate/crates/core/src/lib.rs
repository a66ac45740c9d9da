//! Two-party committee-tree voting games and their blockage certificates,
//! plus an application to matroid intersection on finite trees of uniform
//! matroids glued by 2-sums.
//!
//! The library has two halves:
//!
//! * [`committee_tree`] and [`blockage`] implement the voting-game side:
//!   rooted trees directed towards the root, blue/red leaf parties,
//!   accumulation arithmetic, flows, overflow saturation, the monotone
//!   fixed-pair iteration, the rayless cutoff, and end-to-end search and
//!   verification of strong blue / red blockage certificates.
//!   [`truncation`] approximates infinite trees by depth-truncating lazy
//!   generators and studying certificate stability across depths.
//!
//! * [`matroid`], [`intersect`] and [`partition`] implement the matroid
//!   side: overlap-1 trees of uniform matroids with independence, rank,
//!   closure, duality and circuit oracles, a classical matroid-intersection
//!   baseline, and the blockage-driven construction of verified federated
//!   packing/covering partitions and intersection certificates.
//!
//! Everything is deterministic: all set types iterate in sorted order and
//! every randomized helper takes an explicit seed.

pub mod blockage;
pub mod committee_tree;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod gen;
pub mod intersect;
pub mod matroid;
pub mod partition;
pub mod report;
pub mod truncation;

pub use error::{Error, Result};
pub use report::{CheckItem, CheckReport};
