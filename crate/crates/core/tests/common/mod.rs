#![allow(dead_code)]

use proptest::prelude::*;
use specht::shapes::{partitions_of, Partition};

/// A uniformly chosen partition of a size in `lo..=hi`.
pub fn partition(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// Two partitions of the same size in `lo..=hi`.
pub fn pair(lo: usize, hi: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (lo..=hi).prop_flat_map(|n| {
        let all = partitions_of(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}
