use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::characters::mn::{chi, dimension};
use crate::characters::split::SplitValue;
use crate::error::{Error, Result};
use crate::shapes::{partitions_of, Composition, Partition};

/// Which half of a split object: `+`, `-`, or not split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTag {
    #[default]
    None,
    Plus,
    Minus,
}

impl SplitTag {
    /// Product of signs; `None` is absorbing.
    pub fn times(self, other: SplitTag) -> SplitTag {
        match (self, other) {
            (SplitTag::None, _) | (_, SplitTag::None) => SplitTag::None,
            (a, b) if a == b => SplitTag::Plus,
            _ => SplitTag::Minus,
        }
    }

    pub fn flip(self) -> SplitTag {
        match self {
            SplitTag::Plus => SplitTag::Minus,
            SplitTag::Minus => SplitTag::Plus,
            SplitTag::None => SplitTag::None,
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            SplitTag::None => "",
            SplitTag::Plus => "+",
            SplitTag::Minus => "-",
        }
    }
}

/// Splits a trailing `+`/`-` off a partition string.
pub(crate) fn parse_tagged(s: &str) -> Result<(Partition, SplitTag)> {
    let s = s.trim();
    let (body, tag) = if let Some(b) = s.strip_suffix('+') {
        (b, SplitTag::Plus)
    } else if let Some(b) = s.strip_suffix('-') {
        (b, SplitTag::Minus)
    } else {
        (s, SplitTag::None)
    };
    Ok((body.parse()?, tag))
}

fn splits(lambda: &Partition) -> bool {
    lambda.weight() >= 2 && lambda.is_self_conjugate()
}

fn class_splits(mu: &Partition) -> bool {
    mu.weight() >= 2 && mu.is_dop()
}

/// An irreducible representation of `A_n`: the restriction of `V_λ` for
/// `λ ≠ λ'` (stored with `λ` the lexicographically larger of `λ, λ'`), or one
/// of the halves `V_λ^±` for self-conjugate `λ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AltIrrep {
    shape: Partition,
    tag: SplitTag,
}

impl AltIrrep {
    pub fn new(shape: Partition, tag: SplitTag) -> Result<Self> {
        if splits(&shape) {
            if tag == SplitTag::None {
                return Err(Error::hypothesis(format!(
                    "{shape} is self-conjugate; choose {shape}+ or {shape}-"
                )));
            }
            return Ok(AltIrrep { shape, tag });
        }
        if tag != SplitTag::None {
            return Err(Error::hypothesis(format!(
                "{shape} is not self-conjugate and carries no ± tag"
            )));
        }
        let conj = shape.conjugate();
        let shape = if conj.parts() > shape.parts() { conj } else { shape };
        Ok(AltIrrep { shape, tag })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tag(&self) -> SplitTag {
        self.tag
    }

    pub fn is_split(&self) -> bool {
        self.tag != SplitTag::None
    }

    pub fn weight(&self) -> usize {
        self.shape.weight()
    }

    pub fn dimension(&self) -> BigUint {
        let d = dimension(&self.shape);
        if self.is_split() {
            d / 2u32
        } else {
            d
        }
    }
}

impl fmt::Display for AltIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.shape, self.tag.suffix())
    }
}

impl FromStr for AltIrrep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (shape, tag) = parse_tagged(s)?;
        AltIrrep::new(shape, tag)
    }
}

/// A conjugacy class of `A_n`: an even cycle type, tagged `±` when it
/// consists of distinct odd parts (the class splits). Class `+` contains
/// the canonical permutation `w_μ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AltClass {
    cycle_type: Partition,
    tag: SplitTag,
}

impl AltClass {
    pub fn new(cycle_type: Partition, tag: SplitTag) -> Result<Self> {
        if !cycle_type.is_even_class() {
            return Err(Error::hypothesis(format!(
                "cycle type {cycle_type} is an odd permutation, not in A_n"
            )));
        }
        match (class_splits(&cycle_type), tag) {
            (true, SplitTag::None) => Err(Error::hypothesis(format!(
                "class {cycle_type} splits in A_n; choose {cycle_type}+ or {cycle_type}-"
            ))),
            (false, SplitTag::Plus | SplitTag::Minus) => Err(Error::hypothesis(format!(
                "class {cycle_type} does not split in A_n"
            ))),
            _ => Ok(AltClass { cycle_type, tag }),
        }
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    pub fn tag(&self) -> SplitTag {
        self.tag
    }

    pub fn weight(&self) -> usize {
        self.cycle_type.weight()
    }

    /// Number of elements of `A_n` in this class.
    pub fn size(&self) -> BigUint {
        let s = self.cycle_type.class_size();
        if self.tag == SplitTag::None {
            s
        } else {
            s / 2u32
        }
    }

    /// The class of `g^j` for `g` in this class.
    pub fn power(&self, j: usize) -> AltClass {
        let ct = self.cycle_type.power_cycle_type(j);
        let tag = if self.tag == SplitTag::None || !class_splits(&ct) {
            SplitTag::None
        } else {
            let s = split_class_of_power(&self.cycle_type, j).expect("coprime power of a split class");
            self.tag.times(s)
        };
        AltClass { cycle_type: ct, tag }
    }
}

impl fmt::Display for AltClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cycle_type, self.tag.suffix())
    }
}

impl FromStr for AltClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (ct, tag) = parse_tagged(s)?;
        AltClass::new(ct, tag)
    }
}

/// Irreducibles of `A_n`, in canonical partition order with `+` before `-`.
pub fn alt_irreps(n: usize) -> Vec<AltIrrep> {
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        if splits(&lambda) {
            out.push(AltIrrep { shape: lambda.clone(), tag: SplitTag::Plus });
            out.push(AltIrrep { shape: lambda, tag: SplitTag::Minus });
        } else if lambda.conjugate().parts() <= lambda.parts() {
            out.push(AltIrrep { shape: lambda, tag: SplitTag::None });
        }
    }
    out
}

/// Conjugacy classes of `A_n`, in canonical order with `+` before `-`.
pub fn alt_classes(n: usize) -> Vec<AltClass> {
    let mut out = Vec::new();
    for mu in partitions_of(n).into_iter().filter(Partition::is_even_class) {
        if class_splits(&mu) {
            out.push(AltClass { cycle_type: mu.clone(), tag: SplitTag::Plus });
            out.push(AltClass { cycle_type: mu, tag: SplitTag::Minus });
        } else {
            out.push(AltClass { cycle_type: mu, tag: SplitTag::None });
        }
    }
    out
}

/// Order of `A_n`.
pub fn alt_group_order(n: usize) -> BigUint {
    let f = crate::shapes::factorial(n);
    if n >= 2 {
        f / 2u32
    } else {
        f
    }
}

/// For `μ` with distinct odd parts and `j` coprime to the order, decides
/// whether `w_μ^j` lies in the `A_n`-class of `w_μ` (`Plus`) or the other
/// one (`Minus`), via the canonical conjugator: cycles of both permutations
/// ordered by length then minimum, each rotated to start at its minimum,
/// matched pointwise.
pub fn split_class_of_power(mu: &Partition, j: usize) -> Result<SplitTag> {
    if !mu.is_dop() {
        return Err(Error::hypothesis(format!("{mu} does not consist of distinct odd parts")));
    }
    if j.gcd(&mu.order()) != 1 {
        return Err(Error::hypothesis(format!(
            "exponent {j} is not coprime to the order {} of {mu}",
            mu.order()
        )));
    }
    let w = Composition::from(mu).canonical_permutation();
    let wj = w.pow(j);
    let sorted = |p: &crate::shapes::Permutation| {
        let mut cycles = p.cycles();
        cycles.sort_by_key(|c| (c.len(), c[0]));
        cycles
    };
    let (from, to) = (sorted(&wj), sorted(&w));
    let mut images = vec![0; mu.weight()];
    for (a, b) in from.iter().zip(&to) {
        for (&x, &y) in a.iter().zip(b) {
            images[x - 1] = y;
        }
    }
    let sigma = crate::shapes::Permutation::from_images(&images)?;
    debug_assert_eq!(sigma.compose(&wj)?.compose(&sigma.inverse())?, w);
    Ok(if sigma.is_even() { SplitTag::Plus } else { SplitTag::Minus })
}

/// `ε_μ = (-1)^{Σ (μ_i - 1)/2}` and `M = ∏ μ_i`.
pub fn epsilon_and_product(mu: &Partition) -> (i32, BigInt) {
    let e: usize = mu.parts().iter().map(|p| (p - 1) / 2).sum();
    let m: BigInt = mu.parts().iter().map(|&p| BigInt::from(p)).product();
    (if e.is_multiple_of(2) { 1 } else { -1 }, m)
}

/// Character value of an `A_n` irreducible on an `A_n` class.
pub fn alt_char(v: &AltIrrep, c: &AltClass) -> Result<SplitValue> {
    if v.weight() != c.weight() {
        return Err(Error::WeightMismatch {
            left: v.to_string(),
            left_weight: v.weight(),
            right: c.to_string(),
            right_weight: c.weight(),
        });
    }
    let mu = c.cycle_type();
    let value = chi(v.shape(), mu)?;
    if !v.is_split() {
        return Ok(SplitValue::integer(value));
    }
    let special = c.tag() != SplitTag::None && mu.fold()? == *v.shape();
    if !special {
        return Ok(SplitValue::rational(BigRational::new(value, BigInt::from(2))));
    }
    let (eps, m) = epsilon_and_product(mu);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let sign = if v.tag().times(c.tag()) == SplitTag::Plus { 1 } else { -1 };
    Ok(SplitValue::new(
        BigRational::from_integer(BigInt::from(eps)) * &half,
        BigRational::from_integer(BigInt::from(sign)) * &half,
        BigInt::from(eps) * m,
    ))
}
