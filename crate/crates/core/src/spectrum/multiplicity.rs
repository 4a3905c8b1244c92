use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{alt_char, chi, AltClass, AltIrrep};
use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::spectrum::minpoly::RootSet;

/// Largest tolerated distance from an integer in floating-point DFTs.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

fn euler_phi(m: u64) -> u64 {
    let mut result = m;
    let mut n = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(m: u64) -> i64 {
    let mut n = m;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Ramanujan's sum `c_m(r)`: the sum of `ζ^r` over the primitive `m`-th
/// roots of unity `ζ`.
///
/// # Panics
/// If `m == 0`.
pub fn ramanujan_sum(m: u64, r: i64) -> i64 {
    assert!(m >= 1, "ramanujan_sum needs m >= 1");
    let g = (r.rem_euclid(m as i64) as u64).gcd(&m);
    let q = m / g;
    mobius(q) * (euler_phi(m) / euler_phi(q)) as i64
}

/// Multiplicities of the `m`-th roots of unity as eigenvalues of `ρ(g)`,
/// where `m` is the order of `g`: `counts[r]` is the multiplicity of
/// `e^{2πir/m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVector")]
pub struct MultiplicityVector {
    order: usize,
    counts: Vec<u64>,
}

#[derive(Deserialize)]
struct RawVector {
    order: usize,
    counts: Vec<u64>,
}

impl TryFrom<RawVector> for MultiplicityVector {
    type Error = Error;

    fn try_from(raw: RawVector) -> Result<Self> {
        if raw.order != raw.counts.len() {
            return Err(Error::parse(format!(
                "order {} does not match {} counts",
                raw.order,
                raw.counts.len()
            )));
        }
        MultiplicityVector::new(raw.counts)
    }
}

impl MultiplicityVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::hypothesis("a multiplicity vector needs order at least 1"));
        }
        Ok(MultiplicityVector { order: counts.len(), counts })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Multiplicity of `e^{2πir/m}`; `r` is reduced mod `m`.
    pub fn count(&self, r: i64) -> u64 {
        self.counts[r.rem_euclid(self.order as i64) as usize]
    }

    /// Dimension of the representation.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn present(&self) -> BTreeSet<usize> {
        (0..self.order).filter(|&r| self.counts[r] > 0).collect()
    }

    pub fn missing(&self) -> BTreeSet<usize> {
        (0..self.order).filter(|&r| self.counts[r] == 0).collect()
    }

    pub fn root_set(&self) -> RootSet {
        RootSet::new(self.order, self.present())
    }
}

fn check_weights(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.to_string(),
            left_weight: lambda.weight(),
            right: mu.to_string(),
            right_weight: mu.weight(),
        });
    }
    Ok(())
}

/// Exact multiplicities for `V_λ` at `w_μ`:
/// `counts[r] = (1/m) Σ_{d | m} χ_λ(w_μ^d) c_{m/d}(r)`.
pub fn eig_multiplicities(lambda: &Partition, mu: &Partition) -> Result<MultiplicityVector> {
    check_weights(lambda, mu)?;
    let m = mu.order() as u64;
    let values: Vec<(u64, BigInt)> = divisors(m)
        .into_iter()
        .map(|d| Ok((d, chi(lambda, &mu.power_cycle_type(d as usize))?)))
        .collect::<Result<_>>()?;
    let mut counts = Vec::with_capacity(m as usize);
    for r in 0..m as i64 {
        let mut total = BigInt::zero();
        for (d, value) in &values {
            total += value * ramanujan_sum(m / d, r);
        }
        let (q, rem) = total.div_rem(&BigInt::from(m));
        if !rem.is_zero() || q.is_negative() {
            return Err(Error::Numerical(format!(
                "multiplicity of root {r} mod {m} for {lambda} at {mu} is {total}/{m}"
            )));
        }
        counts.push(q.to_u64().ok_or_else(|| Error::Numerical(format!("multiplicity {q} exceeds u64")))?);
    }
    Ok(MultiplicityVector { order: m as usize, counts })
}

/// Rounds DFT output, enforcing [`ROUNDING_TOLERANCE`] and non-negativity.
fn round_counts(raw: &[(f64, f64)], what: &dyn Fn() -> String) -> Result<Vec<u64>> {
    raw.iter()
        .enumerate()
        .map(|(r, &(re, im))| {
            let rounded = re.round();
            let residual = (re - rounded).abs().max(im.abs());
            if !(residual < ROUNDING_TOLERANCE) {
                return Err(Error::Numerical(format!(
                    "{}: entry {r} = {re}{im:+}i is not within {ROUNDING_TOLERANCE} of an integer",
                    what()
                )));
            }
            if rounded < 0.0 {
                return Err(Error::Numerical(format!("{}: entry {r} rounds to {rounded}", what())));
            }
            Ok(rounded as u64)
        })
        .collect()
}

fn dft(values: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let m = values.len();
    (0..m)
        .map(|r| {
            let (mut re, mut im) = (0.0, 0.0);
            for (j, &(a, b)) in values.iter().enumerate() {
                let angle = -2.0 * PI * ((r * j) % m) as f64 / m as f64;
                let (s, c) = angle.sin_cos();
                re += a * c - b * s;
                im += a * s + b * c;
            }
            (re / m as f64, im / m as f64)
        })
        .collect()
}

/// Multiplicities for `V_λ` at `w_μ` by a floating-point DFT over the
/// powers of `w_μ`, kept as an independent check of [`eig_multiplicities`].
pub fn eig_multiplicities_naive(lambda: &Partition, mu: &Partition) -> Result<MultiplicityVector> {
    check_weights(lambda, mu)?;
    let m = mu.order();
    let values: Vec<(f64, f64)> = (0..m)
        .map(|j| Ok((chi(lambda, &mu.power_cycle_type(j))?.to_f64().unwrap_or(f64::NAN), 0.0)))
        .collect::<Result<_>>()?;
    let counts = round_counts(&dft(&values), &|| format!("{lambda} at {mu}"))?;
    Ok(MultiplicityVector { order: m, counts })
}

/// Multiplicities for an `A_n` irreducible at an element of class `c`,
/// evaluated with exact character values and floating-point roots.
pub fn alt_eig_multiplicities(v: &AltIrrep, c: &AltClass) -> Result<MultiplicityVector> {
    let m = c.cycle_type().order();
    let values: Vec<(f64, f64)> = (0..m)
        .map(|j| Ok(alt_char(v, &c.power(j))?.to_complex()))
        .collect::<Result<_>>()?;
    let what = || format!("{v} at {c}");
    let counts = round_counts(&dft(&values), &what)?;
    let out = MultiplicityVector { order: m, counts };
    let dim = v.dimension().to_u64().unwrap_or(u64::MAX);
    if out.total() != dim {
        return Err(Error::Numerical(format!(
            "{}: multiplicities sum to {} instead of the dimension {dim}",
            what(),
            out.total()
        )));
    }
    Ok(out)
}

/// Whether `w_μ` fixes a nonzero vector of `V_λ`.
pub fn has_invariant_vector(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(eig_multiplicities(lambda, mu)?.count(0) > 0)
}

fn check_even_order(m: usize, what: &dyn Fn() -> String) -> Result<()> {
    if !m.is_multiple_of(2) {
        return Err(Error::hypothesis(format!(
            "{} has odd order {m}, so -1 cannot be an eigenvalue",
            what()
        )));
    }
    Ok(())
}

/// Whether `-1` is an eigenvalue of `ρ_λ(w_μ)`; requires `w_μ` of even order.
pub fn has_minus_one(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let m = mu.order();
    check_even_order(m, &|| format!("cycle type {mu}"))?;
    Ok(eig_multiplicities(lambda, mu)?.count(m as i64 / 2) > 0)
}

pub fn alt_has_invariant_vector(v: &AltIrrep, c: &AltClass) -> Result<bool> {
    Ok(alt_eig_multiplicities(v, c)?.count(0) > 0)
}

pub fn alt_has_minus_one(v: &AltIrrep, c: &AltClass) -> Result<bool> {
    let m = c.cycle_type().order();
    check_even_order(m, &|| format!("class {c}"))?;
    Ok(alt_eig_multiplicities(v, c)?.count(m as i64 / 2) > 0)
}

/// `a_λ^r`, the number of standard tableaux of shape `λ` with major index
/// `≡ r (mod n)`, read off the eigenvalues of an `n`-cycle.
pub fn maj_count_kw(lambda: &Partition, r: i64) -> Result<u64> {
    let cycle = if lambda.is_empty() { Partition::empty() } else { Partition::row(lambda.weight()) };
    Ok(eig_multiplicities(lambda, &cycle)?.count(r))
}
