use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::characters::{AltClass, AltIrrep};
use crate::error::Result;
use crate::shapes::Partition;
use crate::spectrum::multiplicity::{alt_eig_multiplicities, eig_multiplicities};

/// The eigenvalues of `ρ(g)` as residues mod the order `m`: residue `r`
/// stands for `e^{2πir/m}`. The minimal polynomial is the product of the
/// corresponding linear factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSet {
    order: usize,
    present: BTreeSet<usize>,
}

/// Coefficients of the `d`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic(d: usize) -> Vec<i64> {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    let mut poly = vec![0i64; d + 1];
    poly[0] = -1;
    poly[d] = 1;
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        poly = divide_monic(&poly, &cyclotomic(e));
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (k, &b) in den.iter().enumerate() {
            rem[i + k] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact division");
    quot
}

/// Renders an integer polynomial, constant term first, in descending powers.
pub fn render_polynomial(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if mag != 1 || k == 0 {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn x_power_minus_one(k: usize) -> String {
    if k == 1 {
        "x - 1".to_string()
    } else {
        format!("x^{k} - 1")
    }
}

impl RootSet {
    pub fn new(order: usize, present: BTreeSet<usize>) -> Self {
        let order = order.max(1);
        let present = present.into_iter().filter(|&r| r < order).collect();
        RootSet { order, present }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn present(&self) -> &BTreeSet<usize> {
        &self.present
    }

    pub fn missing(&self) -> BTreeSet<usize> {
        (0..self.order).filter(|r| !self.present.contains(r)).collect()
    }

    /// Degree of the minimal polynomial.
    pub fn degree(&self) -> usize {
        self.present.len()
    }

    /// Whether the minimal polynomial is `x^m - 1`.
    pub fn is_full(&self) -> bool {
        self.present.len() == self.order
    }

    /// Residues whose root has order exactly `d` (for `d | m`).
    fn primitive(&self, d: usize) -> BTreeSet<usize> {
        let step = self.order / d;
        (0..d).filter(|k| k.gcd(&d) == 1).map(|k| k * step).collect()
    }

    /// If `set` is the set of all `k`-th roots of unity, returns `k`.
    fn roots_of_unity_index(&self, set: &BTreeSet<usize>) -> Option<usize> {
        let k = set.len();
        (k > 0 && self.order.is_multiple_of(k) && set.iter().all(|r| r % (self.order / k) == 0)).then_some(k)
    }

    /// Factors of `∏_{r ∈ set} (x - ζ^r)`: whole orbits become cyclotomic
    /// polynomials, the rest stay linear.
    fn factors(&self, set: &BTreeSet<usize>) -> Vec<String> {
        let mut out = Vec::new();
        for d in (1..=self.order).filter(|d| self.order.is_multiple_of(*d)) {
            let orbit = self.primitive(d);
            if orbit.is_subset(set) {
                out.push(render_polynomial(&cyclotomic(d)));
                continue;
            }
            for &r in orbit.intersection(set) {
                out.push(match r {
                    0 => "x - 1".to_string(),
                    r if 2 * r == self.order => "x + 1".to_string(),
                    1 => "x - ζ".to_string(),
                    r => format!("x - ζ^{r}"),
                });
            }
        }
        out
    }

    fn product(&self, set: &BTreeSet<usize>) -> String {
        if let Some(k) = self.roots_of_unity_index(set) {
            return x_power_minus_one(k);
        }
        let factors = self.factors(set);
        if factors.len() == 1 {
            return factors.into_iter().next().expect("one factor");
        }
        factors.iter().map(|f| format!("({f})")).collect()
    }

    /// The minimal polynomial, e.g. `x^2 - 1`, `(x^6 - 1)/(x^2 - x + 1)` or
    /// `(x^5 - 1)/((x - ζ^2)(x - ζ^3))` with `ζ = e^{2πi/m}`.
    pub fn polynomial(&self) -> String {
        if self.present.is_empty() {
            return "1".to_string();
        }
        let missing = self.missing();
        if missing.is_empty() || self.present.len() <= missing.len() {
            return self.product(&self.present);
        }
        format!("({})/({})", x_power_minus_one(self.order), self.product(&missing))
    }

    /// Definition of `ζ` when [`RootSet::polynomial`] uses it.
    pub fn zeta_note(&self) -> Option<String> {
        self.polynomial()
            .contains('ζ')
            .then(|| format!("ζ = e^(2πi/{})", self.order))
    }
}

/// Roots of the minimal polynomial of `ρ_λ(w_μ)`.
pub fn minimal_polynomial(lambda: &Partition, mu: &Partition) -> Result<RootSet> {
    Ok(eig_multiplicities(lambda, mu)?.root_set())
}

/// Roots of the minimal polynomial of an `A_n` irreducible at class `c`.
pub fn alt_minimal_polynomial(v: &AltIrrep, c: &AltClass) -> Result<RootSet> {
    Ok(alt_eig_multiplicities(v, c)?.root_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(order: usize, present: &[usize]) -> RootSet {
        RootSet::new(order, present.iter().copied().collect())
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
        // The product over divisors of d is x^d - 1.
        for d in 1..=30usize {
            let mut prod = vec![1i64];
            for e in (1..=d).filter(|e| d % e == 0) {
                let c = cyclotomic(e);
                let mut next = vec![0i64; prod.len() + c.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in c.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expect = vec![0i64; d + 1];
            expect[0] = -1;
            expect[d] = 1;
            assert_eq!(prod, expect, "d = {d}");
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(render_polynomial(&[1, -1, 1]), "x^2 - x + 1");
        assert_eq!(render_polynomial(&[-2, 0, 3]), "3x^2 - 2");
        assert_eq!(set(4, &[0, 2]).polynomial(), "x^2 - 1");
        assert_eq!(set(3, &[0]).polynomial(), "x - 1");
        assert_eq!(set(6, &[0, 1, 2, 3, 4, 5]).polynomial(), "x^6 - 1");
        assert_eq!(set(6, &[0, 2, 3, 4]).polynomial(), "(x^6 - 1)/(x^2 - x + 1)");
        assert_eq!(set(5, &[1, 2, 3, 4]).polynomial(), "(x^5 - 1)/(x - 1)");
        assert_eq!(set(5, &[0, 1, 4]).polynomial(), "(x^5 - 1)/((x - ζ^2)(x - ζ^3))");
        assert_eq!(set(5, &[0, 2, 3]).polynomial(), "(x^5 - 1)/((x - ζ)(x - ζ^4))");
        assert_eq!(set(4, &[2]).polynomial(), "x + 1");
        assert_eq!(set(3, &[1]).polynomial(), "x - ζ");
        assert_eq!(set(6, &[0, 1, 2, 4, 5]).polynomial(), "(x^6 - 1)/(x + 1)");
        assert_eq!(set(4, &[1, 2, 3]).polynomial(), "(x^4 - 1)/(x - 1)");
        assert_eq!(set(6, &[0, 3, 1]).polynomial(), "(x - 1)(x + 1)(x - ζ)");
        assert_eq!(set(5, &[0, 1, 4]).zeta_note().unwrap(), "ζ = e^(2πi/5)");
        assert!(set(4, &[0, 2]).zeta_note().is_none());
    }

    #[test]
    fn worked_minimal_polynomials() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let r = minimal_polynomial(&p("2,2,2"), &p("6")).unwrap();
        assert_eq!(r.present(), &[0, 2, 3, 4].into_iter().collect());
        assert_eq!(r.polynomial(), "(x^6 - 1)/(x^2 - x + 1)");
        let r = minimal_polynomial(&p("3,3"), &p("6")).unwrap();
        assert_eq!(r.present(), &[0, 1, 3, 5].into_iter().collect());
        assert_eq!(r.polynomial(), "(x^6 - 1)/(x^2 + x + 1)");
        let r = minimal_polynomial(&p("4,1"), &p("5")).unwrap();
        assert_eq!(r.missing(), [0].into_iter().collect());
        let r = minimal_polynomial(&p("1,1,1,1"), &p("4")).unwrap();
        assert_eq!(r.present(), &[2].into_iter().collect());
        assert_eq!(r.polynomial(), "x + 1");
        let v: AltIrrep = "3,1,1+".parse().unwrap();
        let r = alt_minimal_polynomial(&v, &"5+".parse().unwrap()).unwrap();
        assert_eq!(r.polynomial(), "(x^5 - 1)/((x - ζ^2)(x - ζ^3))");
    }
}
