use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact number `a + b·√d` with rational `a`, `b` and squarefree integer `d`.
///
/// Normal form: `d` is squarefree and different from 1, and `b = 0` exactly
/// when `d = 0`. Structural equality on the normal form is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SplitValue {
    rational: BigRational,
    coefficient: BigRational,
    radicand: BigInt,
}

/// Splits `|n|` as `k²·s` with `s` squarefree; returns `(k, s)`.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.abs();
    let mut k = BigInt::one();
    let mut s = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= rest {
        let mut e = 0;
        while (&rest % &f).is_zero() {
            rest /= &f;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= &f;
        }
        if e % 2 == 1 {
            s *= &f;
        }
        f += 1;
    }
    (k, s * rest)
}

impl SplitValue {
    pub fn new(rational: BigRational, coefficient: BigRational, radicand: BigInt) -> Self {
        if coefficient.is_zero() || radicand.is_zero() {
            return SplitValue::rational(rational);
        }
        let (k, s) = square_part(&radicand);
        let coefficient = coefficient * BigRational::from_integer(k);
        if s.is_one() && radicand.is_positive() {
            return SplitValue::rational(rational + coefficient);
        }
        let s = if radicand.is_negative() { -s } else { s };
        SplitValue {
            rational,
            coefficient,
            radicand: s,
        }
    }

    pub fn rational(value: BigRational) -> Self {
        SplitValue {
            rational: value,
            coefficient: BigRational::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        SplitValue::rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        SplitValue::integer(0)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.is_rational()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.rational.is_integer()).then(|| self.rational.to_integer())
    }

    /// Real and imaginary parts.
    pub fn to_complex(&self) -> (f64, f64) {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return (a, 0.0);
        }
        let b = self.coefficient.to_f64().unwrap_or(f64::NAN);
        let root = self.radicand.abs().to_f64().unwrap_or(f64::NAN).sqrt();
        if self.radicand.is_negative() {
            (a, b * root)
        } else {
            (a + b * root, 0.0)
        }
    }

    /// Complex conjugate; only imaginary surds change sign.
    pub fn conj(&self) -> Self {
        if self.radicand.is_negative() {
            SplitValue {
                rational: self.rational.clone(),
                coefficient: -self.coefficient.clone(),
                radicand: self.radicand.clone(),
            }
        } else {
            self.clone()
        }
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.radicand.clone()),
            (_, true) => Ok(self.radicand.clone()),
            _ if self.radicand == other.radicand => Ok(self.radicand.clone()),
            _ => Err(Error::Numerical(format!(
                "cannot combine √{} and √{} exactly",
                self.radicand, other.radicand
            ))),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(SplitValue::new(
            &self.rational + &other.rational,
            &self.coefficient + &other.coefficient,
            d,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let dq = BigRational::from_integer(d.clone());
        Ok(SplitValue::new(
            &self.rational * &other.rational + &self.coefficient * &other.coefficient * dq,
            &self.rational * &other.coefficient + &self.coefficient * &other.rational,
            d,
        ))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        SplitValue::new(
            &self.rational * factor,
            &self.coefficient * factor,
            self.radicand.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }
}

/// Sums values that may live in different quadratic fields; fails if the
/// total is not expressible with a single square root.
#[derive(Default)]
pub(crate) struct SplitSum {
    rational: BigRational,
    surds: BTreeMap<BigInt, BigRational>,
}

impl SplitSum {
    pub(crate) fn add(&mut self, v: &SplitValue) {
        self.rational += &v.rational;
        if !v.is_rational() {
            *self.surds.entry(v.radicand.clone()).or_insert_with(BigRational::zero) +=
                &v.coefficient;
        }
    }

    pub(crate) fn finish(self) -> Result<SplitValue> {
        let nonzero: Vec<_> = self.surds.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        match nonzero.len() {
            0 => Ok(SplitValue::rational(self.rational)),
            1 => {
                let (d, c) = nonzero.into_iter().next().expect("one entry");
                Ok(SplitValue::new(self.rational, c, d))
            }
            _ => Err(Error::Numerical(
                "sum involves several independent square roots".to_string(),
            )),
        }
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `(1+√5)/2`, `-1/2`, `(-1+i√3)/2`, `√5`.
impl fmt::Display for SplitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_ratio(&self.rational));
        }
        let den = self.rational.denom().lcm(self.coefficient.denom());
        let a = (&self.rational * BigRational::from_integer(den.clone())).to_integer();
        let b = (&self.coefficient * BigRational::from_integer(den.clone())).to_integer();
        let root = if self.radicand.is_negative() {
            format!("i√{}", -&self.radicand)
        } else {
            format!("√{}", self.radicand)
        };
        let surd = match () {
            _ if b.is_one() => root,
            _ if b == -BigInt::one() => format!("-{root}"),
            _ => format!("{b}{root}"),
        };
        let numerator = if a.is_zero() {
            surd
        } else if surd.starts_with('-') {
            format!("{a}{surd}")
        } else {
            format!("{a}+{surd}")
        };
        if den.is_one() {
            f.write_str(&numerator)
        } else if a.is_zero() {
            write!(f, "{numerator}/{den}")
        } else {
            write!(f, "({numerator})/{den}")
        }
    }
}

impl fmt::Debug for SplitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<BigInt> for SplitValue {
    fn from(v: BigInt) -> Self {
        SplitValue::integer(v)
    }
}
