//! Acceptance run: one line per criterion.
//!
//! A criterion either passes, fails with a documented and pinned deviation
//! (reported as FAIL but not fatal), or fails unexpectedly, which makes the
//! process exit non-zero.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use specht::characters::{chi, chi_with, dimension, PartChoice};
use specht::schur::{
    lr_coefficient, t_lambda_alpha, verify_lemma, verify_lemma_family, LemmaId, LemmaParams, LemmaReport,
};
use specht::shapes::{partitions_of, Partition};
use specht::spectrum::{
    eig_multiplicities, eig_multiplicities_naive, maj_count_kw, verify_theorem, MismatchKind, TheoremId,
    VerificationReport,
};
use specht::tableaux::maj_counts_brute;

enum Status {
    Pass(String),
    /// Fails for a documented reason; the deviation is pinned exactly.
    Known(String),
    Fail(String),
}

type Check = Result<String, String>;

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn scan(id: TheoremId) -> Result<VerificationReport, String> {
    let (lo, hi) = id.default_range();
    verify_theorem(id, lo, hi).map_err(|e| format!("{}: {e}", id.tag()))
}

fn scan_clean(id: TheoremId) -> Result<VerificationReport, String> {
    let report = scan(id)?;
    ensure(report.passed(), || format!("{}: {} mismatches\n{report}", id.tag(), report.mismatches.len()))?;
    Ok(report)
}

fn found_has(report: &VerificationReport, lambda: &str, mu: &str) -> bool {
    let (l, m) = (p(lambda), p(mu));
    report.found.iter().any(|f| f.key.lambda == l && f.key.mu.as_ref() == Some(&m))
}

/// The only deviation of the minimal-polynomial scans: `(3,3)` at the
/// 6-cycle misses the primitive cube roots, not the primitive 6th roots.
fn three_three_only(report: &VerificationReport) -> Status {
    let summary = format!(
        "n={}..{}, {} cases, {} exceptions found, {} expected",
        report.min_n,
        report.max_n,
        report.checked,
        report.found.len(),
        report.expected.len()
    );
    let [m] = report.mismatches.as_slice() else {
        return match report.mismatches.len() {
            0 => Status::Pass(summary),
            k => Status::Fail(format!("{summary}; {k} mismatches\n{report}")),
        };
    };
    let found = report.found.iter().find(|f| f.key == m.key);
    let pinned = m.kind == MismatchKind::Pattern
        && m.key.lambda == p("3,3")
        && m.key.mu == Some(p("6"))
        && found.and_then(|f| f.missing.clone()) == Some([2usize, 4].into_iter().collect());
    if pinned {
        Status::Known(format!(
            "{summary}; every exception and pattern matches except (3,3) at (6): \
             computed missing roots {{ζ^2, ζ^4}}, stated primitive 6th roots"
        ))
    } else {
        Status::Fail(format!("{summary}; unexpected mismatch: {m:?}"))
    }
}

fn criterion_1() -> Status {
    match scan(TheoremId::MainMin) {
        Ok(r) => three_three_only(&r),
        Err(e) => Status::Fail(e),
    }
}

fn criterion_2() -> Status {
    match scan(TheoremId::Main) {
        Ok(r) => three_three_only(&r),
        Err(e) => Status::Fail(e),
    }
}

fn criterion_3() -> Check {
    let mut parts = Vec::new();
    for id in [TheoremId::Sundaram, TheoremId::InvVecSym, TheoremId::EigenValueSgn, TheoremId::NegativeUniversal] {
        let r = scan_clean(id)?;
        parts.push(format!("{} {} found", id.tag(), r.found.len()));
        match id {
            TheoremId::InvVecSym => ensure(found_has(&r, "2,2,2,2,2", "5,3,2"), || "inv_vec_sym lacks ((2^5),(5,3,2))".into())?,
            TheoremId::EigenValueSgn | TheoremId::NegativeUniversal => {
                ensure(found_has(&r, "5,5", "5,3,2"), || format!("{} lacks ((5,5),(5,3,2))", id.tag()))?
            }
            _ => {}
        }
    }
    Ok(parts.join(", "))
}

fn criterion_4() -> Check {
    let mut parts = Vec::new();
    for id in [TheoremId::MainAlt, TheoremId::Main2MinAlt, TheoremId::InvVecAlt, TheoremId::NegativeUniversalAlt] {
        let r = scan_clean(id)?;
        parts.push(format!("{} {} found", id.tag(), r.found.len()));
        if id == TheoremId::MainAlt {
            for (l, lt, c, ct, missing) in [
                ("3,1,1", "+", "5", "+", [2usize, 3]),
                ("3,1,1", "+", "5", "-", [1, 4]),
                ("3,1,1", "-", "5", "+", [1, 4]),
                ("3,1,1", "-", "5", "-", [2, 3]),
            ] {
                let hit = r.found.iter().find(|f| {
                    f.key.lambda == p(l)
                        && f.key.lambda_tag.suffix() == lt
                        && f.key.mu == Some(p(c))
                        && f.key.mu_tag.suffix() == ct
                });
                let got = hit.and_then(|f| f.missing.clone());
                ensure(got == Some(missing.into_iter().collect()), || format!("({l}){lt} at ({c}){ct}: {got:?}"))?;
            }
            for tag in ["+", "-"] {
                let hit = r.found.iter().filter(|f| {
                    f.key.lambda == p("2,2") && f.key.lambda_tag.suffix() == tag && f.key.mu == Some(p("3,1"))
                });
                ensure(hit.count() == 2, || format!("(2,2){tag} at (3,1)± not both found"))?;
            }
        }
    }
    // A_3 is cyclic; its split irreducibles are outside every stated list.
    let n3 = verify_theorem(TheoremId::MainAlt, 3, 3).map_err(|e| e.to_string())?;
    let keys: Vec<String> = n3.mismatches.iter().map(|m| m.key.to_string()).collect();
    ensure(
        keys == ["n=3 λ=(2,1)+ μ=(3)+", "n=3 λ=(2,1)+ μ=(3)-", "n=3 λ=(2,1)- μ=(3)+", "n=3 λ=(2,1)- μ=(3)-"],
        || format!("n=3 main_alt deviation changed: {keys:?}"),
    )?;
    parts.push("split patterns (3,1,1)± at (5)± and (2,2)± at (3,1)± present".into());
    Ok(parts.join(", "))
}

fn criterion_5() -> Check {
    let mut equalities = 0usize;
    for n in 0..=10 {
        for lambda in partitions_of(n) {
            let brute = maj_counts_brute(&lambda);
            for (r, &b) in brute.iter().enumerate() {
                let kw = maj_count_kw(&lambda, r as i64).map_err(|e| e.to_string())?;
                ensure(kw == b, || format!("{lambda:?} r={r}: brute {b}, kw {kw}"))?;
                equalities += 1;
            }
        }
    }
    Ok(format!("{equalities} equalities for n <= 10"))
}

fn criterion_6() -> Check {
    let r = scan_clean(TheoremId::Klyachko)?;
    for n in 3..=12 {
        let mut zero = BTreeSet::new();
        for lambda in partitions_of(n) {
            if maj_count_kw(&lambda, 1).map_err(|e| e.to_string())? == 0 {
                zero.insert(lambda);
            }
        }
        let mut expect: BTreeSet<Partition> = [Partition::row(n), Partition::column(n)].into_iter().collect();
        if n == 4 {
            expect.insert(p("2,2"));
        }
        if n == 6 {
            expect.insert(p("2,2,2"));
        }
        ensure(zero == expect, || format!("n={n}: {zero:?}"))?;
    }
    Ok(format!("n=3..12, {} exceptions", r.found.len()))
}

fn lemma_ok(r: LemmaReport) -> Result<LemmaReport, String> {
    ensure(r.passed(), || r.to_string())?;
    Ok(r)
}

fn run_lemma(id: LemmaId, params: LemmaParams) -> Result<LemmaReport, String> {
    verify_lemma(id, &params).map_err(|e| format!("{id}: {e}"))
}

/// Lemma `eigen_minus_one` fails at `(p,2)`, `p` odd: `w_{(p,2)}` is odd
/// and `-1 = sgn(w)` is not an eigenvalue of `ρ_{(p,2)}(w_{(p,2)})`.
fn eigen_minus_one_known(r: &LemmaReport) -> bool {
    let q = r.q.unwrap_or(0);
    let v = &r.variants[0];
    r.p % 2 == 1
        && q == 2
        && v.absent.is_empty()
        && v.unexpected == [Partition::new(vec![r.p, 2]).expect("partition")].into_iter().collect()
}

fn criterion_7() -> Status {
    match lemma_checks() {
        Ok((summary, known)) if known.is_empty() => Status::Pass(summary),
        Ok((summary, known)) => Status::Known(format!(
            "{summary}; eigen_minus_one has the extra zero (p,2) at {}, listed as an exception by the sgn-eigenvalue theorem",
            known.join(" ")
        )),
        Err(e) => Status::Fail(e),
    }
}

fn lemma_checks() -> Result<(String, Vec<String>), String> {
    let mut parts = Vec::new();
    for pp in [7, 6] {
        let reports = verify_lemma_family("base", &LemmaParams::p(pp)).map_err(|e| e.to_string())?;
        ensure(reports.len() == 2, || format!("base at p={pp}: {} equations apply", reports.len()))?;
        for r in reports {
            let r = lemma_ok(r)?;
            parts.push(format!("{}(p={pp})", r.lemma));
        }
    }
    let start = Instant::now();
    for id in [LemmaId::ThreeParts1, LemmaId::ThreeParts2] {
        lemma_ok(run_lemma(id, LemmaParams::p(7))?)?;
    }
    parts.push(format!("three_parts_1/2(p=7) in {:.1}s", start.elapsed().as_secs_f64()));
    let mut count = 0;
    for pp in 3..=9 {
        // (p,q) must be a partition, so q <= p.
        for q in (1..=5).filter(|&q| q <= pp) {
            lemma_ok(run_lemma(LemmaId::YangStaroletovCor, LemmaParams::pq(pp, q))?)?;
            count += 1;
        }
    }
    parts.push(format!("yang_staroletov_cor {count} pairs"));
    let mut count = 0;
    let mut known = Vec::new();
    for pp in 6..=10 {
        for q in 1..=4 {
            if num_integer::lcm(pp, q) % 2 == 0 {
                let r = run_lemma(LemmaId::EigenMinusOne, LemmaParams::pq(pp, q))?;
                count += 1;
                if !r.passed() {
                    ensure(eigen_minus_one_known(&r), || r.to_string())?;
                    known.push(format!("({pp},{q})"));
                }
            }
        }
    }
    parts.push(format!("eigen_minus_one {count} pairs, {} as stated", count - known.len()));
    if !known.is_empty() {
        ensure(known == ["(7,2)", "(9,2)"], || format!("eigen_minus_one deviation changed: {known:?}"))?;
    }
    Ok((parts.join(", "), known))
}

fn criterion_8() -> Check {
    let mut parts = Vec::new();

    for n in 0..=10 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let a = chi_with(&lambda, &mu, PartChoice::Largest).map_err(|e| e.to_string())?;
                let b = chi_with(&lambda, &mu, PartChoice::Smallest).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("MN part choice differs at {lambda:?}, {mu:?}"))?;
            }
        }
    }
    parts.push("MN part choice n<=10".to_string());

    for n in 0..=12 {
        for mu in partitions_of(n) {
            let mut sum = BigInt::from(0);
            for lambda in partitions_of(n) {
                let c = chi(&lambda, &mu).map_err(|e| e.to_string())?;
                sum += &c * &c;
            }
            ensure(sum == BigInt::from(mu.z()), || format!("column orthogonality fails at {mu:?}"))?;
        }
    }
    parts.push("orthogonality n<=12".to_string());

    for n in 1..=10 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let exact = eig_multiplicities(&lambda, &mu).map_err(|e| e.to_string())?;
                let naive = eig_multiplicities_naive(&lambda, &mu).map_err(|e| e.to_string())?;
                ensure(exact == naive, || format!("Ramanujan vs DFT differ at {lambda:?}, {mu:?}"))?;
            }
        }
    }
    parts.push("Ramanujan=DFT n<=10".to_string());

    for n in 1..=12 {
        for lambda in partitions_of(n) {
            let dim = dimension(&lambda).to_u64().expect("small dimension");
            for mu in partitions_of(n) {
                let v = eig_multiplicities(&lambda, &mu).map_err(|e| e.to_string())?;
                ensure(v.total() == dim, || format!("multiplicities of {lambda:?} at {mu:?} sum to {}", v.total()))?;
                if mu.sign() < 0 {
                    let twisted = eig_multiplicities(&lambda.conjugate(), &mu).map_err(|e| e.to_string())?;
                    let m = v.order() as i64;
                    for r in 0..m {
                        ensure(twisted.count(r) == v.count(r + m / 2), || {
                            format!("sign twist fails at {lambda:?}, {mu:?}, r={r}")
                        })?;
                    }
                }
            }
        }
    }
    parts.push("dimension sum and sign twist n<=12".to_string());

    let mut triples = 0usize;
    for n in 0..=12 {
        for k in 0..=n {
            for alpha in partitions_of(k) {
                for beta in partitions_of(n - k) {
                    for lambda in partitions_of(n).into_iter().filter(|l| l.contains(&alpha) && l.contains(&beta)) {
                        let c = lr_coefficient(&lambda, &alpha, &beta).map_err(|e| e.to_string())?;
                        let swapped = lr_coefficient(&lambda, &beta, &alpha).map_err(|e| e.to_string())?;
                        let conj = lr_coefficient(&lambda.conjugate(), &alpha.conjugate(), &beta.conjugate())
                            .map_err(|e| e.to_string())?;
                        ensure(c == swapped && c == conj, || format!("LR symmetry fails at {lambda:?}, {alpha:?}, {beta:?}"))?;
                        triples += 1;
                    }
                }
            }
        }
    }
    parts.push(format!("LR symmetries {triples} triples n<=12"));

    let mut built = 0usize;
    for n in 0..=10 {
        for lambda in partitions_of(n) {
            for k in 0..=n {
                for alpha in partitions_of(k).into_iter().filter(|a| lambda.contains(a)) {
                    let (t, beta) = t_lambda_alpha(&lambda, &alpha).map_err(|e| e.to_string())?;
                    ensure(t.is_lr_tableau(), || format!("T for {lambda:?}/{alpha:?} is not an LR tableau"))?;
                    let c = lr_coefficient(&lambda, &alpha, &beta).map_err(|e| e.to_string())?;
                    ensure(c >= 1, || format!("c = 0 for T of {lambda:?}/{alpha:?}"))?;
                    built += 1;
                }
            }
        }
    }
    parts.push(format!("T_λα validity {built} pairs n<=10"));
    Ok(parts.join(", "))
}

fn lift(check: Check) -> Status {
    match check {
        Ok(s) => Status::Pass(s),
        Err(e) => Status::Fail(e),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Status); 8] = [
        ("n-cycle minimal polynomials, n=3..14", criterion_1),
        ("minimal polynomials under divisibility, n=2..12", criterion_2),
        ("invariant vectors and sign / -1 eigenvalues, n<=11", || lift(criterion_3())),
        ("alternating group scans, n<=10", || lift(criterion_4())),
        ("major index: enumeration equals character formula, n<=10", || lift(criterion_5())),
        ("shapes with a^1 = 0, n=3..12", || lift(criterion_6())),
        ("Schur positivity lemmas", criterion_7),
        ("property suites", || lift(criterion_8())),
    ];
    let mut hard_failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let status = run();
        let secs = start.elapsed().as_secs_f64();
        match status {
            Status::Pass(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", i + 1),
            Status::Known(detail) => println!("criterion {}: FAIL {name} (known deviation: {detail}) [{secs:.1}s]", i + 1),
            Status::Fail(detail) => {
                hard_failures += 1;
                println!("criterion {}: FAIL {name} (unexpected: {detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    if hard_failures > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
