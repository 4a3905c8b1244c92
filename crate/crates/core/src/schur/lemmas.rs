//! Verifiers for the Schur-positivity lemmas.
//!
//! Each lemma states that some Schur-positive symmetric function `F` of
//! degree `n` satisfies `F ≥ s_λ` for every `λ ⊢ n` outside an exception
//! list. Verification computes the set of `λ` with zero coefficient in `F`
//! and compares it with the list; "possibly" exceptions are optional.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::{fixtures, Env, LemmaSpec};
use crate::schur::induced::{cyclic_induced, f_mu, g_mu};
use crate::schur::lr::lr_positive;
use crate::schur::tableau::t_lambda_alpha;
use crate::schur::vector::SchurVector;
use crate::shapes::{partitions_of, Partition};

/// Largest `n` verified without [`LemmaParams::allow_large`].
pub const DEFAULT_MAX_N: usize = 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    /// `Σ s_α s_β ≥ s_λ` over `α ≠ β ⊢ p` avoiding `(p-1,1),(2,1^{p-2})`, `p` odd.
    #[serde(rename = "base_1")]
    Base1,
    /// As `base_1` with `α ∉ {(p),(1^p)}`, `p` odd.
    #[serde(rename = "base_2")]
    Base2,
    /// `α ≠ β ⊢ p` avoiding `(p-1,1),(1^p)`, `p` even.
    #[serde(rename = "base_3")]
    Base3,
    /// As `base_3` with `α ∉ {(p),(1^p)}`, `p` even.
    #[serde(rename = "base_4")]
    Base4,
    /// `α ⊢ 2p` outside the `base_1` exceptions, times `β ⊢ p`.
    #[serde(rename = "three_parts_1")]
    ThreeParts1,
    /// `α ⊢ 2p` outside the `base_2` exceptions, times `β ⊢ p`.
    #[serde(rename = "three_parts_2")]
    ThreeParts2,
    /// `three_parts_1` with the `β` sum raised to the power `j`.
    #[serde(rename = "gen_case_1")]
    GenCase1,
    /// `three_parts_2` with the `β` sum raised to the power `j`.
    #[serde(rename = "gen_case_2")]
    GenCase2,
    /// `ch Ind_{C_{(p,q)}}^{S_n} ζ×1` for non-real `ζ`.
    #[serde(rename = "yang_staroletov")]
    YangStaroletov,
    /// `Σ s_α s_β` over `α ⊢ p` not `(p),(1^p)` and `s_β` in `f_(q)`.
    #[serde(rename = "yang_staroletov_cor")]
    YangStaroletovCor,
    /// `g_{(p,q)}` for `w_{(p,q)}` of even order.
    #[serde(rename = "eigen_minus_one")]
    EigenMinusOne,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::Base1,
        LemmaId::Base2,
        LemmaId::Base3,
        LemmaId::Base4,
        LemmaId::ThreeParts1,
        LemmaId::ThreeParts2,
        LemmaId::GenCase1,
        LemmaId::GenCase2,
        LemmaId::YangStaroletov,
        LemmaId::YangStaroletovCor,
        LemmaId::EigenMinusOne,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LemmaId::Base1 => "base_1",
            LemmaId::Base2 => "base_2",
            LemmaId::Base3 => "base_3",
            LemmaId::Base4 => "base_4",
            LemmaId::ThreeParts1 => "three_parts_1",
            LemmaId::ThreeParts2 => "three_parts_2",
            LemmaId::GenCase1 => "gen_case_1",
            LemmaId::GenCase2 => "gen_case_2",
            LemmaId::YangStaroletov => "yang_staroletov",
            LemmaId::YangStaroletovCor => "yang_staroletov_cor",
            LemmaId::EigenMinusOne => "eigen_minus_one",
        }
    }

    /// Members of a named family (`base`, `three_parts`, `gen_case`), or the
    /// single lemma with that tag.
    pub fn family(name: &str) -> Result<Vec<LemmaId>> {
        let name = name.strip_prefix("lemma:").unwrap_or(name);
        let members = match name {
            "base" => vec![LemmaId::Base1, LemmaId::Base2, LemmaId::Base3, LemmaId::Base4],
            "three_parts" | "more_than_two_parts" => vec![LemmaId::ThreeParts1, LemmaId::ThreeParts2],
            "gen_case" => vec![LemmaId::GenCase1, LemmaId::GenCase2],
            other => vec![other.parse()?],
        };
        Ok(members)
    }

    fn uses_q(self) -> bool {
        matches!(self, LemmaId::YangStaroletov | LemmaId::YangStaroletovCor | LemmaId::EigenMinusOne)
    }

    fn uses_j(self) -> bool {
        matches!(self, LemmaId::GenCase1 | LemmaId::GenCase2)
    }

    fn spec(self) -> &'static LemmaSpec {
        fixtures()
            .lemma(self.tag())
            .unwrap_or_else(|| panic!("exceptions.txt has no section for lemma {}", self.tag()))
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.strip_prefix("lemma:").unwrap_or(s);
        LemmaId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::Unknown { kind: "lemma", name: s.to_string() })
    }
}

/// Lemma parameters. `q` is needed by the two-part lemmas, `j` (default 1)
/// by `gen_case`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaParams {
    pub p: usize,
    pub q: Option<usize>,
    pub j: Option<usize>,
    pub allow_large: bool,
}

impl LemmaParams {
    pub fn p(p: usize) -> Self {
        LemmaParams { p, ..Default::default() }
    }

    pub fn pq(p: usize, q: usize) -> Self {
        LemmaParams { p, q: Some(q), ..Default::default() }
    }

    pub fn with_j(self, j: usize) -> Self {
        LemmaParams { j: Some(j), ..self }
    }

    pub fn allow_large(self) -> Self {
        LemmaParams { allow_large: true, ..self }
    }
}

/// Resolved parameters of one lemma instance.
#[derive(Debug, Clone, Copy)]
struct Instance {
    id: LemmaId,
    p: usize,
    q: usize,
    j: usize,
    n: usize,
}

impl Instance {
    fn new(id: LemmaId, params: &LemmaParams) -> Result<Self> {
        let p = params.p;
        let q = if id.uses_q() {
            params.q.ok_or_else(|| Error::hypothesis(format!("lemma {id} needs q")))?
        } else {
            0
        };
        let j = if id.uses_j() { params.j.unwrap_or(1) } else { 0 };
        let n = match id {
            LemmaId::Base1 | LemmaId::Base2 | LemmaId::Base3 | LemmaId::Base4 => 2 * p,
            LemmaId::ThreeParts1 | LemmaId::ThreeParts2 => 3 * p,
            LemmaId::GenCase1 | LemmaId::GenCase2 => (j + 2) * p,
            _ => p + q,
        };
        let inst = Instance { id, p, q, j, n };
        if let Some(cond) = id.spec().violated(&inst.env()) {
            return Err(Error::hypothesis(format!(
                "lemma {id} needs {cond} (p = {p}{})",
                if id.uses_q() { format!(", q = {q}") } else { String::new() }
            )));
        }
        if n > DEFAULT_MAX_N && !params.allow_large {
            return Err(Error::hypothesis(format!(
                "n = {n} exceeds the default cap of {DEFAULT_MAX_N}; allow large sizes explicitly"
            )));
        }
        Ok(inst)
    }

    fn order(&self) -> usize {
        if self.id.uses_q() && self.q > 0 {
            self.p.lcm(&self.q)
        } else {
            0
        }
    }

    fn mu(&self) -> Partition {
        Partition::from_unsorted(vec![self.p, self.q])
    }

    fn env(&self) -> Env {
        Env {
            n: self.n as i64,
            p: self.p as i64,
            q: self.q as i64,
            j: self.j as i64,
            len: 0,
            order: self.order() as i64,
            mu_even: false,
        }
    }
}

/// Partition with parts given as `(part, multiplicity)` runs.
fn runs(items: &[(usize, usize)]) -> Partition {
    Partition::from_unsorted(items.iter().flat_map(|&(part, mult)| std::iter::repeat_n(part, mult)).collect())
}

fn ends(p: usize) -> [Partition; 2] {
    [Partition::row(p), Partition::column(p)]
}

fn all_except(n: usize, excluded: &[Partition]) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|l| !excluded.contains(l)).collect()
}

/// `β ⊢ p` avoiding `(p-1,1)` and `(2,1^{p-2})`.
fn odd_betas(p: usize) -> Vec<Partition> {
    all_except(p, &[runs(&[(p - 1, 1), (1, 1)]), runs(&[(2, 1), (1, p - 2)])])
}

/// `α ⊢ 2p` outside the exceptions of the first or second odd base equation.
fn two_p_alphas(p: usize, first: bool) -> Vec<Partition> {
    let mut excluded = vec![Partition::row(2 * p), runs(&[(p, 2)]), runs(&[(2, p)]), Partition::column(2 * p)];
    if first {
        excluded.push(runs(&[(2 * p - 1, 1), (1, 1)]));
        excluded.push(runs(&[(2, 1), (1, 2 * p - 2)]));
    }
    all_except(2 * p, &excluded)
}

/// A left-hand side `Σ s_{a_1} s_{a_2} ⋯` over independent choices of
/// `a_i` from each factor, with `a_1 ≠ a_2` when `distinct`.
struct ProductSum {
    factors: Vec<Vec<Partition>>,
    distinct: bool,
}

impl ProductSum {
    fn base(id: LemmaId, p: usize) -> Self {
        let even_excl = [runs(&[(p - 1, 1), (1, 1)]), Partition::column(p)];
        let (alphas, betas) = match id {
            LemmaId::Base1 => (odd_betas(p), odd_betas(p)),
            LemmaId::Base2 => (all_except(p, &ends(p)), odd_betas(p)),
            LemmaId::Base3 => (all_except(p, &even_excl), all_except(p, &even_excl)),
            _ => (all_except(p, &ends(p)), all_except(p, &even_excl)),
        };
        ProductSum { factors: vec![alphas, betas], distinct: true }
    }

    fn of(inst: &Instance) -> Result<Option<Self>> {
        let p = inst.p;
        Ok(Some(match inst.id {
            LemmaId::Base1 | LemmaId::Base2 | LemmaId::Base3 | LemmaId::Base4 => ProductSum::base(inst.id, p),
            LemmaId::ThreeParts1 | LemmaId::GenCase1 | LemmaId::ThreeParts2 | LemmaId::GenCase2 => {
                let first = matches!(inst.id, LemmaId::ThreeParts1 | LemmaId::GenCase1);
                let power = if inst.id.uses_j() { inst.j } else { 1 };
                let mut factors = vec![two_p_alphas(p, first)];
                factors.extend(std::iter::repeat_n(odd_betas(p), power));
                ProductSum { factors, distinct: false }
            }
            LemmaId::YangStaroletovCor => {
                let betas = f_mu(&Partition::row(inst.q))?.support().into_iter().collect();
                ProductSum { factors: vec![all_except(p, &ends(p)), betas], distinct: false }
            }
            LemmaId::YangStaroletov | LemmaId::EigenMinusOne => return Ok(None),
        }))
    }

    /// Exact expansion.
    fn expand(&self) -> SchurVector {
        let sum = |f: &[Partition]| {
            let mut v = SchurVector::zero(f.first().map_or(0, Partition::weight));
            for a in f {
                v.add_term(a, 1).expect("factor terms share a weight");
            }
            v
        };
        let mut acc = if self.distinct {
            let (a, b) = (&self.factors[0], &self.factors[1]);
            let mut v = SchurVector::zero(a[0].weight() + b[0].weight());
            for x in a {
                for y in b.iter().filter(|y| *y != x) {
                    v = v.add(&SchurVector::schur(x).mul(&SchurVector::schur(y))).expect("same weight");
                }
            }
            v
        } else {
            sum(&self.factors[0]).mul(&sum(&self.factors[1]))
        };
        for f in &self.factors[2..] {
            acc = acc.mul(&sum(f));
        }
        acc
    }

    /// Support of the expansion, one factor at a time. A shape `λ` is in the
    /// support iff some `γ` in the previous support and `β` in the factor
    /// have `c^λ_{γβ} > 0`; the tableau `T_{λγ}` usually supplies such a
    /// `β` directly.
    fn support(&self) -> Result<BTreeSet<Partition>> {
        let mut current: Vec<Partition> = self.factors[0].clone();
        for (i, factor) in self.factors.iter().enumerate().skip(1) {
            let n = current[0].weight() + factor[0].weight();
            let allowed: BTreeSet<&Partition> = factor.iter().collect();
            let distinct = self.distinct && i == 1;
            let mut next = Vec::new();
            for lambda in partitions_of(n) {
                let inside: Vec<&Partition> = current.iter().filter(|g| lambda.contains(g)).collect();
                let mut hit = false;
                for g in &inside {
                    let (_, beta) = t_lambda_alpha(&lambda, g)?;
                    if allowed.contains(&beta) && !(distinct && beta == **g) {
                        hit = true;
                        break;
                    }
                }
                if !hit {
                    'search: for g in &inside {
                        for b in factor.iter().filter(|b| lambda.contains(b) && !(distinct && *b == *g)) {
                            if lr_positive(&lambda, g, b)? {
                                hit = true;
                                break 'search;
                            }
                        }
                    }
                }
                if hit {
                    next.push(lambda);
                }
            }
            current = next;
        }
        Ok(current.into_iter().collect())
    }
}

/// One checked expansion: the zero set against the stated exceptions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVariant {
    pub label: String,
    pub zero_set: BTreeSet<Partition>,
    /// Zero coefficients not listed as exceptions.
    pub unexpected: BTreeSet<Partition>,
    /// Required exceptions with a nonzero coefficient.
    pub absent: BTreeSet<Partition>,
    /// Optional exceptions that do occur.
    pub optional_present: BTreeSet<Partition>,
}

impl LemmaVariant {
    fn new(label: String, zero_set: BTreeSet<Partition>, required: &BTreeSet<Partition>, optional: &BTreeSet<Partition>) -> Self {
        let unexpected = zero_set.iter().filter(|l| !required.contains(l) && !optional.contains(l)).cloned().collect();
        let absent = required.difference(&zero_set).cloned().collect();
        let optional_present = optional.intersection(&zero_set).cloned().collect();
        LemmaVariant { label, zero_set, unexpected, absent, optional_present }
    }

    pub fn passed(&self) -> bool {
        self.unexpected.is_empty() && self.absent.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub p: usize,
    pub q: Option<usize>,
    pub j: Option<usize>,
    pub n: usize,
    pub required: BTreeSet<Partition>,
    pub optional: BTreeSet<Partition>,
    pub variants: Vec<LemmaVariant>,
    pub runtime_ms: u64,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.variants.iter().all(LemmaVariant::passed)
    }
}

fn list(set: &BTreeSet<Partition>) -> String {
    if set.is_empty() {
        return "none".to_string();
    }
    set.iter().map(|l| format!("{l:?}")).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lemma {} (p = {}", self.lemma, self.p)?;
        if let Some(q) = self.q {
            write!(f, ", q = {q}")?;
        }
        if let Some(j) = self.j {
            write!(f, ", j = {j}")?;
        }
        writeln!(f, ", n = {}): {}", self.n, if self.passed() { "verified" } else { "MISMATCH" })?;
        writeln!(f, "  required exceptions: {}", list(&self.required))?;
        writeln!(f, "  optional exceptions: {}", list(&self.optional))?;
        for v in &self.variants {
            writeln!(f, "  [{}] zero set: {}", v.label, list(&v.zero_set))?;
            if !v.optional_present.is_empty() {
                writeln!(f, "    optional present: {}", list(&v.optional_present))?;
            }
            if !v.unexpected.is_empty() {
                writeln!(f, "    unexpected zeros: {}", list(&v.unexpected))?;
            }
            if !v.absent.is_empty() {
                writeln!(f, "    listed but nonzero: {}", list(&v.absent))?;
            }
        }
        write!(f, "  runtime: {} ms", self.runtime_ms)
    }
}

/// `{λ ⊢ n : coefficient of s_λ is 0}` symmetric-difference `exceptions`.
pub fn verify_schur_inequality(lhs: &SchurVector, exceptions: &BTreeSet<Partition>) -> BTreeSet<Partition> {
    lhs.zero_set().symmetric_difference(exceptions).cloned().collect()
}

/// Residues `r·m/p` (mod `m = lcm(p,q)`) of the non-real characters
/// `ζ = e^{2πir/p}` of `C_p`, keyed by `r`.
fn non_real_indices(p: usize, q: usize) -> Vec<(usize, i64)> {
    let m = p.lcm(&q);
    (1..p).filter(|&r| 2 * r != p).map(|r| (r, (r * (m / p)) as i64)).collect()
}

/// The left-hand side expansions of a lemma, labelled; one per `ζ` for
/// `yang_staroletov`.
pub fn lemma_lhs(id: LemmaId, params: &LemmaParams) -> Result<Vec<(String, SchurVector)>> {
    let inst = Instance::new(id, params)?;
    if let Some(sum) = ProductSum::of(&inst)? {
        return Ok(vec![(id.tag().to_string(), sum.expand())]);
    }
    let mu = inst.mu();
    match id {
        LemmaId::EigenMinusOne => Ok(vec![("g".to_string(), g_mu(&mu)?)]),
        _ => non_real_indices(inst.p, inst.q)
            .into_iter()
            .map(|(r, idx)| Ok((format!("ζ^{r}"), cyclic_induced(&mu, idx)?)))
            .collect(),
    }
}

pub fn verify_lemma(id: LemmaId, params: &LemmaParams) -> Result<LemmaReport> {
    let start = Instant::now();
    let inst = Instance::new(id, params)?;
    let (required, optional) = id.spec().exceptions(&inst.env());
    let variants = match ProductSum::of(&inst)? {
        Some(sum) => {
            let support = sum.support()?;
            let zero = partitions_of(inst.n).into_iter().filter(|l| !support.contains(l)).collect();
            vec![LemmaVariant::new(id.tag().to_string(), zero, &required, &optional)]
        }
        None => lemma_lhs(id, params)?
            .into_iter()
            .map(|(label, v)| LemmaVariant::new(label, v.zero_set(), &required, &optional))
            .collect(),
    };
    Ok(LemmaReport {
        lemma: id,
        p: inst.p,
        q: id.uses_q().then_some(inst.q),
        j: id.uses_j().then_some(inst.j),
        n: inst.n,
        required,
        optional,
        variants,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Verifies every member of a family whose hypotheses hold at `params`;
/// fails with the first hypothesis error if none apply.
pub fn verify_lemma_family(name: &str, params: &LemmaParams) -> Result<Vec<LemmaReport>> {
    let mut reports = Vec::new();
    let mut first_err = None;
    for id in LemmaId::family(name)? {
        match verify_lemma(id, params) {
            Ok(r) => reports.push(r),
            Err(e @ Error::Hypothesis(_)) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    match (reports.is_empty(), first_err) {
        (true, Some(e)) => Err(e),
        _ => Ok(reports),
    }
}
