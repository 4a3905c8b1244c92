use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::characters::alt::{alt_char, alt_classes, alt_group_order, AltClass, AltIrrep};
use crate::characters::mn::chi;
use crate::characters::split::{SplitSum, SplitValue};
use crate::error::{Error, Result};
use crate::shapes::{partitions_of, Partition};

/// A class function of `S_n`, keyed by cycle type.
pub type ClassFunction = BTreeMap<Partition, BigRational>;

/// A class function of `A_n`, keyed by `A_n` class.
pub type AltClassFunction = BTreeMap<AltClass, SplitValue>;

pub fn character(lambda: &Partition) -> Result<ClassFunction> {
    partitions_of(lambda.weight())
        .into_iter()
        .map(|mu| Ok((mu.clone(), BigRational::from_integer(chi(lambda, &mu)?))))
        .collect()
}

pub fn alt_character(v: &AltIrrep) -> Result<AltClassFunction> {
    alt_classes(v.weight())
        .into_iter()
        .map(|c| Ok((c.clone(), alt_char(v, &c)?)))
        .collect()
}

fn domain_of<K: Ord + Clone, V>(h: &BTreeMap<K, V>, g: &BTreeMap<K, V>, expected: &[K]) -> Result<()> {
    let keys_h: Vec<&K> = h.keys().collect();
    let keys_g: Vec<&K> = g.keys().collect();
    let want: Vec<&K> = {
        let mut v: Vec<&K> = expected.iter().collect();
        v.sort();
        v
    };
    if keys_h != want || keys_g != want {
        return Err(Error::hypothesis(
            "class functions are not defined on the same set of classes".to_string(),
        ));
    }
    Ok(())
}

/// `⟨h, g⟩ = Σ_μ h(μ)·g(μ)/z_μ` over `S_n` (values are real here).
pub fn inner_product(h: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    let n = h.keys().next().map_or(0, Partition::weight);
    domain_of(h, g, &partitions_of(n))?;
    let mut total = BigRational::from_integer(BigInt::from(0));
    for (mu, hv) in h {
        let z = BigRational::from_integer(BigInt::from(mu.z()));
        total += hv * &g[mu] / z;
    }
    Ok(total)
}

/// `⟨h, g⟩ = (1/|A_n|) Σ_c |c|·h(c)·conj(g(c))` over `A_n`.
pub fn alt_inner_product(h: &AltClassFunction, g: &AltClassFunction) -> Result<SplitValue> {
    let n = h.keys().next().map_or(0, AltClass::weight);
    domain_of(h, g, &alt_classes(n))?;
    let order = BigRational::from_integer(BigInt::from(alt_group_order(n)));
    let mut sum = SplitSum::default();
    for (c, hv) in h {
        let size = BigRational::from_integer(BigInt::from(c.size()));
        let term = hv.checked_mul(&g[c].conj())?.scale(&(size / &order));
        sum.add(&term);
    }
    sum.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::alt_irreps;
    use num_traits::{One, Zero};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn symmetric_orthonormality() {
        assert_eq!(inner_product(&character(&p("5")).unwrap(), &character(&p("5")).unwrap()).unwrap(), BigRational::one());
        assert!(inner_product(&character(&p("3,1")).unwrap(), &character(&p("2,2")).unwrap())
            .unwrap()
            .is_zero());
        for n in 1..=7 {
            let chars: Vec<_> = partitions_of(n).iter().map(|l| character(l).unwrap()).collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(inner_product(a, b).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn alternating_orthonormality() {
        let v = alt_character(&"2,2+".parse().unwrap()).unwrap();
        assert_eq!(alt_inner_product(&v, &v).unwrap(), SplitValue::integer(1));
        for n in 1..=9 {
            let chars: Vec<_> = alt_irreps(n).iter().map(|v| alt_character(v).unwrap()).collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let expect = SplitValue::integer(i64::from(i == j));
                    assert_eq!(alt_inner_product(a, b).unwrap(), expect, "n={n} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn domain_mismatch() {
        let a = character(&p("2,1")).unwrap();
        let b = character(&p("3,1")).unwrap();
        assert!(inner_product(&a, &b).is_err());
        let mut c = a.clone();
        c.remove(&p("3"));
        assert!(inner_product(&a, &c).is_err());
    }
}
