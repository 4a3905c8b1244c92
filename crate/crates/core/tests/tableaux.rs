mod common;

use common::partition;
use num_bigint::BigUint;
use proptest::prelude::*;
use specht::characters::dimension;
use specht::tableaux::{enumerate_syt, maj_counts_brute, maj_counts_shard, shards, StandardTableau};

proptest! {
    #[test]
    fn enumeration_is_valid_and_complete(lambda in partition(0, 9)) {
        let mut count = 0u64;
        let mut last: Option<Vec<Vec<usize>>> = None;
        for t in enumerate_syt(&lambda) {
            prop_assert_eq!(StandardTableau::new(t.rows().to_vec()).unwrap(), t.clone());
            prop_assert_eq!(t.major_index(), t.descents().iter().sum::<usize>());
            if let Some(prev) = &last {
                prop_assert!(prev.as_slice() != t.rows());
            }
            last = Some(t.rows().to_vec());
            count += 1;
        }
        prop_assert_eq!(BigUint::from(count), dimension(&lambda));
    }

    #[test]
    fn shards_sum_to_whole(lambda in partition(1, 10)) {
        let mut total = vec![0u64; lambda.weight()];
        for corner in shards(&lambda) {
            for (t, c) in total.iter_mut().zip(maj_counts_shard(&lambda, corner).unwrap()) {
                *t += c;
            }
        }
        prop_assert_eq!(total, maj_counts_brute(&lambda));
    }

    /// Transposing a tableau turns descents into non-descents.
    #[test]
    fn transpose_complements_descents(lambda in partition(1, 8)) {
        let n = lambda.weight();
        for t in enumerate_syt(&lambda) {
            let conj = lambda.conjugate();
            let rows: Vec<Vec<usize>> = (0..conj.len())
                .map(|c| t.rows().iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
                .collect();
            let tt = StandardTableau::new(rows).unwrap();
            prop_assert_eq!(t.major_index() + tt.major_index(), n * (n - 1) / 2);
        }
    }
}
