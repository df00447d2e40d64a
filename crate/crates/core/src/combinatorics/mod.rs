//! Partitions, multipartitions, splittings and small number theory.

mod partition;
mod splitting;

pub(crate) use partition::partitions_unchecked;
pub use partition::{mp, p, partitions_of, updown_dimension, MultiPartition, Partition};
pub use splitting::{common_divisors, factorial, lemma72_sum, splittings, vector_partitions, Splitting};

pub fn mobius(k: u32) -> i64 {
    crate::algebra::cyclotomic::mobius(k as u64)
}
