//! Partitions, compositions, Young diagrams and permutations.

mod partition;
mod permutation;
pub(crate) mod text;

pub use partition::{factorial, partitions_of, Cell, Partition, Partitions, RimHook};
pub use permutation::{wreath_embed, Composition, Permutation};
