use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::characters::{alt_classes, alt_irreps, AltClass, AltIrrep, SplitTag};
use crate::error::{Error, Result};
use crate::fixtures::{fixtures, Env, RootPattern};
use crate::shapes::{partitions_of, Partition};
use crate::spectrum::multiplicity::{alt_eig_multiplicities, eig_multiplicities, maj_count_kw, MultiplicityVector};

/// The exception-list theorems the harness can scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Minimal polynomials over `S_n`, `μ` with every part dividing the largest.
    #[serde(rename = "main")]
    Main,
    /// Minimal polynomials of `n`-cycles.
    #[serde(rename = "main_min")]
    MainMin,
    /// Minimal polynomials over `A_n`.
    #[serde(rename = "main_alt")]
    MainAlt,
    /// Minimal polynomials of `n`-cycles over `A_n`, `n` odd.
    #[serde(rename = "main_2_min_alt")]
    Main2MinAlt,
    /// Invariant vectors of `n`-cycles.
    #[serde(rename = "sundaram")]
    Sundaram,
    /// Invariant vectors over `S_n`.
    #[serde(rename = "inv_vec_sym")]
    InvVecSym,
    /// Invariant vectors over `A_n`.
    #[serde(rename = "inv_vec_alt")]
    InvVecAlt,
    /// The eigenvalue `sgn(w_μ)` over `S_n`.
    #[serde(rename = "eigen_value_sgn")]
    EigenValueSgn,
    /// The eigenvalue `-1` over `S_n`, `w_μ` of even order.
    #[serde(rename = "eigen_value_negative_universal")]
    NegativeUniversal,
    /// The eigenvalue `-1` over `A_n` for non-trivial irreducibles.
    #[serde(rename = "eigen_value_negative_universal_alt")]
    NegativeUniversalAlt,
    /// Shapes with `a_λ^1 = 0`.
    #[serde(rename = "klyachko")]
    Klyachko,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Predicate {
    MinimalPolynomial,
    Invariant,
    SignEigenvalue,
    MinusOne,
    MajorIndexOne,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Main,
        TheoremId::MainMin,
        TheoremId::MainAlt,
        TheoremId::Main2MinAlt,
        TheoremId::Sundaram,
        TheoremId::InvVecSym,
        TheoremId::InvVecAlt,
        TheoremId::EigenValueSgn,
        TheoremId::NegativeUniversal,
        TheoremId::NegativeUniversalAlt,
        TheoremId::Klyachko,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::Main => "main",
            TheoremId::MainMin => "main_min",
            TheoremId::MainAlt => "main_alt",
            TheoremId::Main2MinAlt => "main_2_min_alt",
            TheoremId::Sundaram => "sundaram",
            TheoremId::InvVecSym => "inv_vec_sym",
            TheoremId::InvVecAlt => "inv_vec_alt",
            TheoremId::EigenValueSgn => "eigen_value_sgn",
            TheoremId::NegativeUniversal => "eigen_value_negative_universal",
            TheoremId::NegativeUniversalAlt => "eigen_value_negative_universal_alt",
            TheoremId::Klyachko => "klyachko",
        }
    }

    /// Range of `n` scanned when none is given.
    pub fn default_range(self) -> (usize, usize) {
        match self {
            TheoremId::Main => (2, 12),
            TheoremId::MainMin => (3, 14),
            TheoremId::MainAlt => (4, 10),
            TheoremId::Main2MinAlt => (5, 10),
            TheoremId::Sundaram => (2, 11),
            TheoremId::InvVecSym | TheoremId::EigenValueSgn | TheoremId::NegativeUniversal => (1, 11),
            TheoremId::InvVecAlt => (3, 10),
            TheoremId::NegativeUniversalAlt => (1, 10),
            TheoremId::Klyachko => (3, 12),
        }
    }

    pub fn is_alternating(self) -> bool {
        matches!(
            self,
            TheoremId::MainAlt | TheoremId::Main2MinAlt | TheoremId::InvVecAlt | TheoremId::NegativeUniversalAlt
        )
    }

    fn predicate(self) -> Predicate {
        match self {
            TheoremId::Main | TheoremId::MainMin | TheoremId::MainAlt | TheoremId::Main2MinAlt => {
                Predicate::MinimalPolynomial
            }
            TheoremId::Sundaram | TheoremId::InvVecSym | TheoremId::InvVecAlt => Predicate::Invariant,
            TheoremId::EigenValueSgn => Predicate::SignEigenvalue,
            TheoremId::NegativeUniversal | TheoremId::NegativeUniversalAlt => Predicate::MinusOne,
            TheoremId::Klyachko => Predicate::MajorIndexOne,
        }
    }

    /// What an exception is, in words.
    pub fn description(self) -> &'static str {
        match self.predicate() {
            Predicate::MinimalPolynomial => "minimal polynomial of ρ(g) differs from x^o(g) - 1",
            Predicate::Invariant => "g fixes no nonzero vector",
            Predicate::SignEigenvalue => "sgn(g) is not an eigenvalue of ρ(g)",
            Predicate::MinusOne => "-1 is not an eigenvalue of ρ(g)",
            Predicate::MajorIndexOne => "no standard tableau has major index ≡ 1 mod n",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "main_2_min_alternating" => "main_2_min_alt",
            "inv_vec_alternating" => "inv_vec_alt",
            "neg_universal" => "eigen_value_negative_universal",
            "neg_universal_alt" => "eigen_value_negative_universal_alt",
            "klyachko_sym" => "klyachko",
            other => other,
        };
        TheoremId::ALL
            .into_iter()
            .find(|id| id.tag() == alias)
            .ok_or_else(|| Error::Unknown { kind: "theorem", name: s.trim().to_string() })
    }
}

/// One point of a scan: a representation and (except for `klyachko`) a class.
/// For `A_n` scans `lambda` is the label of the irreducible (see
/// [`AltIrrep`]) and `mu` the cycle type of the class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CaseKey {
    pub n: usize,
    pub lambda: Partition,
    #[serde(default)]
    pub lambda_tag: SplitTag,
    pub mu: Option<Partition>,
    #[serde(default)]
    pub mu_tag: SplitTag,
}

impl CaseKey {
    fn sym(lambda: Partition, mu: Option<Partition>) -> Self {
        CaseKey { n: lambda.weight(), lambda, lambda_tag: SplitTag::None, mu, mu_tag: SplitTag::None }
    }

    fn alt(v: &AltIrrep, c: &AltClass) -> Self {
        CaseKey {
            n: v.weight(),
            lambda: v.shape().clone(),
            lambda_tag: v.tag(),
            mu: Some(c.cycle_type().clone()),
            mu_tag: c.tag(),
        }
    }

    pub fn irrep(&self) -> Result<AltIrrep> {
        AltIrrep::new(self.lambda.clone(), self.lambda_tag)
    }

    pub fn class(&self) -> Result<AltClass> {
        let mu = self.mu.clone().ok_or_else(|| Error::hypothesis("case has no class"))?;
        AltClass::new(mu, self.mu_tag)
    }

    fn env(&self) -> Env {
        let mu = self.mu.as_ref();
        Env {
            n: self.n as i64,
            len: mu.map_or(0, Partition::len) as i64,
            order: mu.map_or(1, Partition::order) as i64,
            mu_even: mu.is_none_or(Partition::is_even_class),
            ..Env::default()
        }
    }
}

impl fmt::Display for CaseKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} λ={:?}{}", self.n, self.lambda, self.lambda_tag.suffix())?;
        if let Some(mu) = &self.mu {
            write!(f, " μ={mu:?}{}", self.mu_tag.suffix())?;
        }
        Ok(())
    }
}

/// An exception: a case where the theorem's generic statement fails. For
/// minimal-polynomial theorems `missing` lists the absent roots mod `order`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Finding {
    #[serde(flatten)]
    pub key: CaseKey,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub missing: Option<BTreeSet<usize>>,
    /// Fixture case labels, for expected entries.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<String>,
}

fn fmt_set(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key)?;
        if let (Some(order), Some(missing)) = (self.order, &self.missing) {
            write!(f, " missing {} mod {order}", fmt_set(missing))?;
        }
        if !self.cases.is_empty() {
            write!(f, " [case {}]", self.cases.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Found by the scan but not listed.
    Unexpected,
    /// Listed but not found.
    Absent,
    /// Found and listed, with different missing roots.
    Pattern,
    /// The fixture cannot be instantiated consistently at this case.
    FixtureConflict,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    #[serde(flatten)]
    pub key: CaseKey,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            MismatchKind::Unexpected => "unexpected",
            MismatchKind::Absent => "absent",
            MismatchKind::Pattern => "pattern",
            MismatchKind::FixtureConflict => "fixture conflict",
        };
        write!(f, "{kind}: {} ({})", self.key, self.detail)
    }
}

/// Result of scanning one theorem over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub min_n: usize,
    pub max_n: usize,
    pub checked: usize,
    pub found: Vec<Finding>,
    pub expected: Vec<Finding>,
    pub mismatches: Vec<Mismatch>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theorem {} over {} <= n <= {}: {} cases checked in {} ms",
            self.theorem, self.min_n, self.max_n, self.checked, self.runtime_ms
        )?;
        writeln!(f, "exception: {}", self.theorem.description())?;
        writeln!(f, "found ({}):", self.found.len())?;
        for x in &self.found {
            writeln!(f, "  {x}")?;
        }
        writeln!(f, "expected ({}):", self.expected.len())?;
        for x in &self.expected {
            writeln!(f, "  {x}")?;
        }
        if self.passed() {
            write!(f, "result: PASS (no mismatches)")
        } else {
            writeln!(f, "mismatches ({}):", self.mismatches.len())?;
            for x in &self.mismatches {
                writeln!(f, "  {x}")?;
            }
            write!(f, "result: FAIL")
        }
    }
}

fn divides_largest(mu: &Partition) -> bool {
    let top = mu.largest_part();
    mu.parts().iter().all(|p| top.is_multiple_of(*p))
}

/// Every case the theorem quantifies over for `min_n <= n <= max_n`, in
/// canonical order.
pub fn plan(id: TheoremId, min_n: usize, max_n: usize) -> Result<Vec<CaseKey>> {
    if min_n > max_n {
        return Err(Error::hypothesis(format!("empty range {min_n}..={max_n}")));
    }
    let mut out = Vec::new();
    for n in min_n.max(1)..=max_n {
        if id.is_alternating() {
            if id == TheoremId::Main2MinAlt && n % 2 == 0 {
                continue;
            }
            let classes: Vec<AltClass> = alt_classes(n)
                .into_iter()
                .filter(|c| match id {
                    TheoremId::MainAlt => divides_largest(c.cycle_type()),
                    TheoremId::Main2MinAlt => *c.cycle_type() == Partition::row(n),
                    TheoremId::NegativeUniversalAlt => c.cycle_type().order() % 2 == 0,
                    _ => true,
                })
                .collect();
            for v in alt_irreps(n) {
                if id == TheoremId::NegativeUniversalAlt && *v.shape() == Partition::row(n) {
                    continue;
                }
                out.extend(classes.iter().map(|c| CaseKey::alt(&v, c)));
            }
            continue;
        }
        if id == TheoremId::Klyachko {
            if n >= 3 {
                out.extend(partitions_of(n).into_iter().map(|l| CaseKey::sym(l, None)));
            }
            continue;
        }
        let classes: Vec<Partition> = match id {
            TheoremId::MainMin | TheoremId::Sundaram => vec![Partition::row(n)],
            _ => partitions_of(n)
                .into_iter()
                .filter(|mu| match id {
                    TheoremId::Main => divides_largest(mu),
                    TheoremId::NegativeUniversal => mu.order() % 2 == 0,
                    _ => true,
                })
                .collect(),
        };
        for lambda in partitions_of(n) {
            out.extend(classes.iter().map(|mu| CaseKey::sym(lambda.clone(), Some(mu.clone()))));
        }
    }
    Ok(out)
}

fn multiplicities(id: TheoremId, key: &CaseKey) -> Result<MultiplicityVector> {
    let mu = key.mu.as_ref().ok_or_else(|| Error::hypothesis("case has no class"))?;
    if id.is_alternating() {
        alt_eig_multiplicities(&key.irrep()?, &key.class()?)
    } else {
        eig_multiplicities(&key.lambda, mu)
    }
}

/// Evaluates the theorem's predicate at one case; `Some` is an exception.
pub fn evaluate(id: TheoremId, key: &CaseKey) -> Result<Option<Finding>> {
    let exception = |order, missing| Finding { key: key.clone(), order, missing, cases: Vec::new() };
    if id.predicate() == Predicate::MajorIndexOne {
        return Ok((maj_count_kw(&key.lambda, 1)? == 0).then(|| exception(None, None)));
    }
    let counts = multiplicities(id, key)?;
    let m = counts.order();
    let hit = match id.predicate() {
        Predicate::MinimalPolynomial => {
            let missing = counts.missing();
            return Ok((!missing.is_empty()).then(|| exception(Some(m), Some(missing))));
        }
        Predicate::Invariant => counts.count(0) == 0,
        Predicate::SignEigenvalue => {
            let even = key.mu.as_ref().is_none_or(Partition::is_even_class);
            counts.count(if even { 0 } else { m as i64 / 2 }) == 0
        }
        Predicate::MinusOne => {
            if m % 2 != 0 {
                return Err(Error::hypothesis(format!("{key} has odd order {m}")));
            }
            counts.count(m as i64 / 2) == 0
        }
        Predicate::MajorIndexOne => unreachable!("handled above"),
    };
    Ok(hit.then(|| exception(None, None)))
}

/// What the fixture predicts at one case: `Ok(None)` when no listed case
/// applies, `Err` when the applicable cases cannot be reconciled.
pub fn expected_at(id: TheoremId, key: &CaseKey) -> std::result::Result<Option<Finding>, String> {
    let env = key.env();
    let order = key.mu.as_ref().map(Partition::order);
    let mut hits: Vec<(String, Option<BTreeSet<usize>>)> = Vec::new();
    for case in fixtures().theorem(id.tag()) {
        if !case.conditions_hold(&env) {
            continue;
        }
        let applies = if id.is_alternating() {
            let (Ok(v), Ok(c)) = (key.irrep(), key.class()) else { continue };
            case.rep.matches_irrep(&env, &v) && case.class.matches_class(&env, &c)
        } else {
            case.rep.matches_partition(&env, &key.lambda) && case.class.matches_partition(&env, key.mu.as_ref())
        };
        if !applies {
            continue;
        }
        let missing = match (&case.roots, order) {
            (RootPattern::Predicate, _) => None,
            (roots, Some(m)) => roots
                .missing(&env, m)
                .map_err(|e| format!("case {}: {e}", case.label))?,
            (_, None) => return Err(format!("case {} needs a class", case.label)),
        };
        // A stated polynomial equal to x^m - 1 is no exception.
        if missing.as_ref().is_some_and(BTreeSet::is_empty) {
            continue;
        }
        hits.push((case.label.clone(), missing));
    }
    let Some((_, first)) = hits.first().cloned() else { return Ok(None) };
    if hits.iter().any(|(_, m)| *m != first) {
        let labels: Vec<String> = hits
            .iter()
            .map(|(l, m)| format!("case {l}: {}", m.as_ref().map_or("-".to_string(), fmt_set)))
            .collect();
        return Err(format!("cases disagree: {}", labels.join("; ")));
    }
    Ok(Some(Finding {
        key: key.clone(),
        order: first.as_ref().and(order),
        missing: first,
        cases: hits.into_iter().map(|(l, _)| l).collect(),
    }))
}

/// Builds the report from the scan outcome; `found[i]` is the evaluation of
/// `keys[i]`.
pub fn assemble(
    id: TheoremId,
    min_n: usize,
    max_n: usize,
    keys: &[CaseKey],
    found: Vec<Option<Finding>>,
    runtime: Duration,
) -> VerificationReport {
    assert_eq!(keys.len(), found.len(), "one outcome per case");
    let mut found_list = Vec::new();
    let mut expected_list = Vec::new();
    let mut mismatches = Vec::new();
    for (key, got) in keys.iter().zip(found) {
        let want = match expected_at(id, key) {
            Ok(w) => w,
            Err(detail) => {
                mismatches.push(Mismatch { kind: MismatchKind::FixtureConflict, key: key.clone(), detail });
                None
            }
        };
        match (&got, &want) {
            (Some(g), None) => mismatches.push(Mismatch {
                kind: MismatchKind::Unexpected,
                key: key.clone(),
                detail: match &g.missing {
                    Some(m) => format!("found missing roots {}", fmt_set(m)),
                    None => "found, not listed".to_string(),
                },
            }),
            (None, Some(w)) => mismatches.push(Mismatch {
                kind: MismatchKind::Absent,
                key: key.clone(),
                detail: format!("listed as case {}, not found", w.cases.join(",")),
            }),
            (Some(g), Some(w)) if g.missing != w.missing => mismatches.push(Mismatch {
                kind: MismatchKind::Pattern,
                key: key.clone(),
                detail: format!(
                    "found missing {}, case {} lists {}",
                    g.missing.as_ref().map_or("-".to_string(), fmt_set),
                    w.cases.join(","),
                    w.missing.as_ref().map_or("-".to_string(), fmt_set)
                ),
            }),
            _ => {}
        }
        found_list.extend(got);
        expected_list.extend(want);
    }
    found_list.sort();
    expected_list.sort();
    mismatches.sort();
    VerificationReport {
        theorem: id,
        min_n,
        max_n,
        checked: keys.len(),
        found: found_list,
        expected: expected_list,
        mismatches,
        runtime_ms: runtime.as_millis() as u64,
    }
}

/// Scans a theorem sequentially over `min_n <= n <= max_n`.
pub fn verify_theorem(id: TheoremId, min_n: usize, max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let keys = plan(id, min_n, max_n)?;
    let found = keys.iter().map(|k| evaluate(id, k)).collect::<Result<Vec<_>>>()?;
    Ok(assemble(id, min_n, max_n, &keys, found, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.tag().parse::<TheoremId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.tag()));
        }
        assert_eq!("neg_universal".parse::<TheoremId>().unwrap(), TheoremId::NegativeUniversal);
        assert!(matches!("bogus".parse::<TheoremId>(), Err(Error::Unknown { .. })));
    }

    #[test]
    fn small_scans() {
        for (id, lo, hi) in [
            (TheoremId::MainMin, 3, 5),
            (TheoremId::Main, 2, 5),
            (TheoremId::MainMin, 7, 8),
            (TheoremId::Sundaram, 2, 8),
            (TheoremId::InvVecSym, 1, 7),
            (TheoremId::EigenValueSgn, 1, 7),
            (TheoremId::NegativeUniversal, 1, 7),
            (TheoremId::MainAlt, 4, 7),
            (TheoremId::Main2MinAlt, 5, 7),
            (TheoremId::InvVecAlt, 3, 7),
            (TheoremId::NegativeUniversalAlt, 1, 7),
            (TheoremId::Klyachko, 3, 8),
        ] {
            let report = verify_theorem(id, lo, hi).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    /// The stated pattern for (3,3) at (6) is the one of (2,2,2); the scan
    /// finds the primitive cube roots missing instead.
    #[test]
    fn three_three_pattern_is_reported() {
        for id in [TheoremId::MainMin, TheoremId::Main] {
            let report = verify_theorem(id, 6, 6).unwrap();
            assert_eq!(report.mismatches.len(), 1, "{report}");
            let m = &report.mismatches[0];
            assert_eq!(m.kind, MismatchKind::Pattern);
            assert_eq!(m.key.to_string(), "n=6 λ=(3,3) μ=(6)");
            let found = report.found.iter().find(|f| f.key == m.key).unwrap();
            assert_eq!(found.missing, Some([2, 4].into_iter().collect()));
            let two = report.found.iter().find(|f| f.key.lambda == "2,2,2".parse().unwrap()).unwrap();
            assert_eq!(two.missing, Some([1, 5].into_iter().collect()));
        }
    }

    #[test]
    fn alternating_n3_is_reported() {
        let report = verify_theorem(TheoremId::MainAlt, 3, 3).unwrap();
        let keys: Vec<String> = report.mismatches.iter().map(|m| m.key.to_string()).collect();
        assert_eq!(keys, ["n=3 λ=(2,1)+ μ=(3)+", "n=3 λ=(2,1)+ μ=(3)-", "n=3 λ=(2,1)- μ=(3)+", "n=3 λ=(2,1)- μ=(3)-"]);
        assert!(report.mismatches.iter().all(|m| m.kind == MismatchKind::Unexpected));
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify_theorem(TheoremId::MainAlt, 3, 5).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn empty_range_is_rejected() {
        assert!(plan(TheoremId::Main, 5, 4).is_err());
    }
}
