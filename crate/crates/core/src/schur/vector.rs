use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schur::lr::schur_product;
use crate::shapes::{partitions_of, Partition};

/// A homogeneous symmetric function of degree `weight`, stored by its
/// coefficients in the Schur basis. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVector", into = "RawVector")]
pub struct SchurVector {
    weight: usize,
    coefficients: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct RawVector {
    weight: usize,
    terms: Vec<(Partition, i64)>,
}

impl TryFrom<RawVector> for SchurVector {
    type Error = Error;

    fn try_from(raw: RawVector) -> Result<Self> {
        let mut v = SchurVector::zero(raw.weight);
        for (lambda, c) in raw.terms {
            v.add_term(&lambda, c)?;
        }
        Ok(v)
    }
}

impl From<SchurVector> for RawVector {
    fn from(v: SchurVector) -> Self {
        RawVector { weight: v.weight, terms: v.coefficients.into_iter().collect() }
    }
}

impl SchurVector {
    pub fn zero(weight: usize) -> Self {
        SchurVector { weight, coefficients: BTreeMap::new() }
    }

    /// The Schur function `s_λ`.
    pub fn schur(lambda: &Partition) -> Self {
        let mut v = SchurVector::zero(lambda.weight());
        v.coefficients.insert(lambda.clone(), 1);
        v
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.coefficients.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.coefficients.iter().map(|(l, &c)| (l, c))
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.coefficients.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.values().all(|&c| c > 0)
    }

    /// Sum of the coefficients.
    pub fn total(&self) -> i64 {
        self.coefficients.values().sum()
    }

    /// The partitions of `weight` whose coefficient is zero.
    pub fn zero_set(&self) -> BTreeSet<Partition> {
        partitions_of(self.weight)
            .into_iter()
            .filter(|l| !self.coefficients.contains_key(l))
            .collect()
    }

    fn check_weight(&self, lambda: &Partition) -> Result<()> {
        if lambda.weight() != self.weight {
            return Err(Error::WeightMismatch {
                left: format!("{lambda:?}"),
                left_weight: lambda.weight(),
                right: "the vector".to_string(),
                right_weight: self.weight,
            });
        }
        Ok(())
    }

    /// Adds `c · s_λ`.
    pub fn add_term(&mut self, lambda: &Partition, c: i64) -> Result<()> {
        self.check_weight(lambda)?;
        if c != 0 {
            let entry = self.coefficients.entry(lambda.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                self.coefficients.remove(lambda);
            }
        }
        Ok(())
    }

    fn combine(&self, other: &SchurVector, sign: i64) -> Result<SchurVector> {
        if other.weight != self.weight {
            return Err(Error::WeightMismatch {
                left: "left operand".to_string(),
                left_weight: self.weight,
                right: "right operand".to_string(),
                right_weight: other.weight,
            });
        }
        let mut out = self.clone();
        for (lambda, c) in other.terms() {
            out.add_term(lambda, sign * c)?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &SchurVector) -> Result<SchurVector> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &SchurVector) -> Result<SchurVector> {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: i64) -> SchurVector {
        if k == 0 {
            return SchurVector::zero(self.weight);
        }
        SchurVector {
            weight: self.weight,
            coefficients: self.coefficients.iter().map(|(l, &c)| (l.clone(), k * c)).collect(),
        }
    }

    /// The product, expanded with the Littlewood–Richardson rule.
    pub fn mul(&self, other: &SchurVector) -> SchurVector {
        let mut out = SchurVector::zero(self.weight + other.weight);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                for (lambda, c) in schur_product(a, b).terms() {
                    out.add_term(lambda, ca * cb * c).expect("weights add");
                }
            }
        }
        out
    }

    /// One `partition<TAB>coefficient` line per nonzero term, canonical order.
    pub fn to_tsv(&self) -> String {
        self.terms().map(|(l, c)| format!("{l}\t{c}\n")).collect()
    }

    /// Parses [`SchurVector::to_tsv`] output. The weight is given explicitly
    /// so that the zero vector round-trips.
    pub fn from_tsv(weight: usize, text: &str) -> Result<SchurVector> {
        let mut v = SchurVector::zero(weight);
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (shape, coef) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(format!("line {}: expected partition<TAB>coefficient", i + 1)))?;
            let lambda: Partition = shape.trim().parse()?;
            let c: i64 = coef
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("line {}: bad coefficient `{}`", i + 1, coef.trim())))?;
            v.add_term(&lambda, c)?;
        }
        Ok(v)
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag} ")?;
            }
            write!(f, "s{lambda:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let a = SchurVector::schur(&p("2"));
        let b = SchurVector::schur(&p("1,1"));
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.total(), 2);
        assert_eq!(sum.sub(&b).unwrap(), a);
        assert!(sum.sub(&a).unwrap().sub(&b).unwrap().is_zero());
        assert_eq!(sum.scale(3).coefficient(&p("2")), 3);
        assert!(sum.scale(0).is_zero());
        assert!(a.add(&SchurVector::schur(&p("3"))).is_err());
        let mut c = SchurVector::zero(2);
        assert!(c.add_term(&p("3"), 1).is_err());
        assert!(!a.sub(&b).unwrap().is_nonnegative());
        assert_eq!(sum.zero_set(), BTreeSet::new());
        assert_eq!(a.zero_set(), [p("1,1")].into_iter().collect());
    }

    #[test]
    fn display_and_tsv() {
        let v = SchurVector::from_tsv(3, "3\t1\n2,1\t-2\n").unwrap();
        assert_eq!(v.to_string(), "s(3) - 2 s(2,1)");
        assert_eq!(v.to_tsv(), "3\t1\n2,1\t-2\n");
        assert_eq!(SchurVector::from_tsv(3, &v.to_tsv()).unwrap(), v);
        assert_eq!(SchurVector::zero(4).to_string(), "0");
        assert!(SchurVector::from_tsv(3, "3 1").is_err());
        assert!(SchurVector::from_tsv(3, "2\t1").is_err());
    }

    #[test]
    fn json_round_trip() {
        let v = SchurVector::schur(&p("1")).mul(&SchurVector::schur(&p("2,1")));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<SchurVector>(&json).unwrap(), v);
        assert!(serde_json::from_str::<SchurVector>(r#"{"weight":2,"terms":[["3",1]]}"#).is_err());
    }
}
