mod common;

use common::{p, partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use specht::characters::{chi, dimension};
use specht::schur::{f_mu, lr_coefficient, schur_product, t_lambda_alpha, SchurVector};
use specht::shapes::{factorial, partitions_of, Partition};

/// `(λ, α, β)` with `|λ| = |α| + |β| ≤ max`.
fn triple(max: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0..=max).prop_flat_map(|n| (Just(n), 0..=n)).prop_flat_map(|(n, k)| {
        let (ls, als, bs) = (partitions_of(n), partitions_of(k), partitions_of(n - k));
        (0..ls.len(), 0..als.len(), 0..bs.len())
            .prop_map(move |(i, j, l)| (ls[i].clone(), als[j].clone(), bs[l].clone()))
    })
}

/// `⟨χ_λ, Ind_{S_k × S_{n-k}}^{S_n} χ_α × χ_β⟩`, summed over classes of
/// the Young subgroup.
fn induced_inner_product(lambda: &Partition, alpha: &Partition, beta: &Partition) -> BigRational {
    let mut total = BigRational::zero();
    for rho in partitions_of(alpha.weight()) {
        for sigma in partitions_of(beta.weight()) {
            let joined = Partition::from_unsorted(rho.parts().iter().chain(sigma.parts()).copied().collect());
            let num = chi(alpha, &rho).unwrap() * chi(beta, &sigma).unwrap() * chi(lambda, &joined).unwrap();
            total += BigRational::new(num, BigInt::from(rho.z() * sigma.z()));
        }
    }
    total
}

proptest! {
    #[test]
    fn lr_symmetry((lambda, alpha, beta) in triple(12)) {
        let c = lr_coefficient(&lambda, &alpha, &beta).unwrap();
        prop_assert_eq!(c, lr_coefficient(&lambda, &beta, &alpha).unwrap());
        prop_assert_eq!(c, lr_coefficient(&lambda.conjugate(), &alpha.conjugate(), &beta.conjugate()).unwrap());
    }

    #[test]
    fn lr_matches_character_oracle((lambda, alpha, beta) in triple(10)) {
        let c = lr_coefficient(&lambda, &alpha, &beta).unwrap();
        prop_assert_eq!(BigRational::from_integer(BigInt::from(c)), induced_inner_product(&lambda, &alpha, &beta));
        prop_assert_eq!(schur_product(&alpha, &beta).coefficient(&lambda), c as i64);
    }

    #[test]
    fn t_lambda_alpha_is_an_lr_tableau((lambda, alpha, _b) in triple(12)) {
        prop_assume!(lambda.contains(&alpha));
        let (t, beta) = t_lambda_alpha(&lambda, &alpha).unwrap();
        prop_assert!(t.is_semistandard());
        prop_assert!(specht::schur::is_lattice_word(&t.reverse_reading_word()));
        prop_assert_eq!(beta.weight() + alpha.weight(), lambda.weight());
        prop_assert!(lr_coefficient(&lambda, &alpha, &beta).unwrap() >= 1);
    }

    #[test]
    fn product_dimension_count(alpha in partition(0, 6), beta in partition(0, 6)) {
        // dim Ind = C(a+b, a) dim α dim β.
        let v = schur_product(&alpha, &beta);
        let n = alpha.weight() + beta.weight();
        let lhs: BigInt = v.terms().map(|(l, c)| BigInt::from(dimension(l)) * c).sum();
        let binom = factorial(n) / (factorial(alpha.weight()) * factorial(beta.weight()));
        prop_assert_eq!(lhs, BigInt::from(binom * dimension(&alpha) * dimension(&beta)));
    }

    #[test]
    fn schur_vector_round_trips(alpha in partition(0, 5), beta in partition(0, 5)) {
        let v = schur_product(&alpha, &beta).sub(&SchurVector::schur(&Partition::row(alpha.weight() + beta.weight()))).unwrap();
        prop_assert_eq!(SchurVector::from_tsv(v.weight(), &v.to_tsv()).unwrap(), v.clone());
        let json = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<SchurVector>(&json).unwrap(), v);
    }
}

#[test]
fn induced_from_cycles_has_index_dimension() {
    for n in 1..=10 {
        for mu in partitions_of(n) {
            let f = f_mu(&mu).unwrap();
            let dim: BigInt = f.terms().map(|(l, c)| BigInt::from(dimension(l)) * c).sum();
            assert_eq!(dim, BigInt::from(factorial(n) / mu.order()), "{mu:?}");
        }
    }
}

#[test]
fn f_mu_dominates_product_of_parts() {
    for n in 1..=10 {
        for mu in partitions_of(n) {
            let prod = mu
                .parts()
                .iter()
                .fold(SchurVector::schur(&Partition::empty()), |acc, &k| acc.mul(&f_mu(&Partition::row(k)).unwrap()));
            let diff = f_mu(&mu).unwrap().sub(&prod).unwrap();
            assert!(diff.is_nonnegative(), "{mu:?}: {diff}");
        }
    }
}

#[test]
fn worked_products() {
    assert_eq!(schur_product(&p("2,1"), &p("2,1")).to_tsv(), "4,2\t1\n4,1,1\t1\n3,3\t1\n3,2,1\t2\n3,1^3\t1\n2^3\t1\n2,2,1,1\t1\n");
    assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
}
