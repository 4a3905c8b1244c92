use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use specht::characters::{alt_char, chi, AltClass, AltIrrep};
use specht::schur::{
    lr_coefficient, schur_product, verify_lemma, LemmaId, LemmaParams, LemmaReport,
};
use specht::shapes::Partition;
use specht::spectrum::{
    alt_eig_multiplicities, assemble, eig_multiplicities, evaluate, maj_count_kw, plan, TheoremId,
    VerificationReport,
};
use specht::tableaux::maj_counts_brute;
use specht::Error;

mod cache;

/// Exact characters, eigenvalue multiplicities and minimal polynomials of
/// symmetric and alternating group representations.
///
/// Partitions are written as comma-separated parts with optional powers,
/// e.g. `3,1,1` or `3,1^2`. Over `A_n` a trailing `+` or `-` picks one half
/// of a split irreducible or class, e.g. `3,1,1+` and `5+`.
#[derive(Parser)]
#[command(name = "specht", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,

    /// Report every runtime as 0 ms so that output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Sym,
    Alt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Kw,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue multiplicities and the minimal polynomial of ρ_λ(w_μ).
    Minpoly {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
    },
    /// Counts a_λ^r of standard tableaux by major index mod n.
    Maj {
        #[arg(long)]
        lambda: String,
        /// Print only this residue.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, value_enum, default_value_t = Engine::Kw)]
        engine: Engine,
    },
    /// Scans a theorem's exception list, or checks a lemma (`lemma:NAME`).
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// Allow lemma instances with n above the default limit.
        #[arg(long)]
        allow_large: bool,
        /// Worker threads (0 picks one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// The exact character value χ_λ(w_μ).
    Char {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
    },
    /// The Littlewood-Richardson coefficient c^λ_{αβ}.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// The Schur expansion of s_α s_β.
    SchurProduct {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
}

/// What a command produces, in every format, plus whether it succeeded.
struct Output {
    human: String,
    json: Value,
    tsv: String,
    ok: bool,
}

impl Output {
    fn new(human: String, json: Value, tsv: String) -> Self {
        Output {
            human,
            json,
            tsv,
            ok: true,
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn set_str(set: &BTreeSet<usize>) -> String {
    set.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn counts_line(counts: &[u64]) -> String {
    counts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn group_json(group: Group) -> &'static str {
    match group {
        Group::Sym => "sym",
        Group::Alt => "alt",
    }
}

fn cmd_minpoly(lambda: &str, mu: &str, group: Group) -> specht::Result<Output> {
    let (mult, lambda, mu, n) = match group {
        Group::Sym => {
            let (l, m): (Partition, Partition) = (lambda.parse()?, mu.parse()?);
            (
                eig_multiplicities(&l, &m)?,
                l.to_string(),
                m.to_string(),
                l.weight(),
            )
        }
        Group::Alt => {
            let (v, c): (AltIrrep, AltClass) = (lambda.parse()?, mu.parse()?);
            (
                alt_eig_multiplicities(&v, &c)?,
                v.to_string(),
                c.to_string(),
                v.weight(),
            )
        }
    };
    let roots = mult.root_set();
    let poly = roots.polynomial();
    let zeta = roots.zeta_note();

    let mut human = String::new();
    let group_name = if group == Group::Sym { "S" } else { "A" };
    writeln!(human, "λ = {lambda}, μ = {mu} in {group_name}_{n}").ok();
    writeln!(human, "order: {}", mult.order()).ok();
    writeln!(human, "counts: {}", counts_line(mult.counts())).ok();
    let missing = mult.missing();
    writeln!(
        human,
        "missing: {}",
        if missing.is_empty() {
            "none".to_string()
        } else {
            set_str(&missing)
        }
    )
    .ok();
    write!(human, "p(x) = {poly}").ok();
    if let Some(z) = &zeta {
        write!(human, "\nwhere {z}").ok();
    }

    let tsv = mult
        .counts()
        .iter()
        .enumerate()
        .map(|(r, c)| format!("{r}\t{c}\n"))
        .collect();
    let json = json!({
        "group": group_json(group),
        "lambda": lambda,
        "mu": mu,
        "order": mult.order(),
        "counts": mult.counts(),
        "missing": missing,
        "polynomial": poly,
        "degree": roots.degree(),
        "zeta": zeta,
    });
    Ok(Output::new(human, json, tsv))
}

fn cmd_maj(lambda: &str, r: Option<i64>, engine: Engine) -> specht::Result<Output> {
    let lambda: Partition = lambda.parse()?;
    let m = lambda.weight().max(1);
    let kw = || {
        (0..m as i64)
            .map(|r| maj_count_kw(&lambda, r))
            .collect::<specht::Result<Vec<u64>>>()
    };
    let (kw, brute) = match engine {
        Engine::Kw => (Some(kw()?), None),
        Engine::Brute => (None, Some(maj_counts_brute(&lambda))),
        Engine::Both => (Some(kw()?), Some(maj_counts_brute(&lambda))),
    };
    let agree = match (&kw, &brute) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let counts = kw
        .clone()
        .or_else(|| brute.clone())
        .expect("one engine ran");
    let residues: Vec<usize> = match r {
        Some(r) => vec![r.rem_euclid(m as i64) as usize],
        None => (0..m).collect(),
    };

    let mut human = String::new();
    let mut tsv = String::new();
    for &s in &residues {
        match (&kw, &brute) {
            (Some(a), Some(b)) if a[s] != b[s] => {
                writeln!(human, "a^{s} = {} (kw) but {} (brute)", a[s], b[s]).ok();
                writeln!(tsv, "{s}\t{}\t{}", a[s], b[s]).ok();
            }
            _ => {
                writeln!(human, "a^{s} = {}", counts[s]).ok();
                writeln!(tsv, "{s}\t{}", counts[s]).ok();
            }
        }
    }
    match agree {
        Some(true) => human.push_str("engines agree"),
        Some(false) => human.push_str("ENGINES DISAGREE"),
        None => {
            human.pop();
        }
    }

    let engine_name = match engine {
        Engine::Kw => "kw",
        Engine::Brute => "brute",
        Engine::Both => "both",
    };
    let pick = |v: &Option<Vec<u64>>| {
        v.as_ref()
            .map(|v| residues.iter().map(|&s| v[s]).collect::<Vec<_>>())
    };
    let json = json!({
        "lambda": lambda,
        "engine": engine_name,
        "residues": residues,
        "kw": pick(&kw),
        "brute": pick(&brute),
        "agree": agree,
    });
    Ok(Output {
        human,
        json,
        tsv,
        ok: agree != Some(false),
    })
}

fn cmd_char(lambda: &str, mu: &str, group: Group) -> specht::Result<Output> {
    let (value, lambda, mu, approx) = match group {
        Group::Sym => {
            let (l, m): (Partition, Partition) = (lambda.parse()?, mu.parse()?);
            (chi(&l, &m)?.to_string(), l.to_string(), m.to_string(), None)
        }
        Group::Alt => {
            let (v, c): (AltIrrep, AltClass) = (lambda.parse()?, mu.parse()?);
            let value = alt_char(&v, &c)?;
            let (re, im) = value.to_complex();
            (
                value.to_string(),
                v.to_string(),
                c.to_string(),
                Some([re, im]),
            )
        }
    };
    let json = json!({
        "group": group_json(group),
        "lambda": lambda,
        "mu": mu,
        "value": value,
        "approx": approx,
    });
    Ok(Output::new(value.clone(), json, format!("{value}\n")))
}

fn cmd_lr(lambda: &str, alpha: &str, beta: &str) -> specht::Result<Output> {
    let (l, a, b): (Partition, Partition, Partition) =
        (lambda.parse()?, alpha.parse()?, beta.parse()?);
    let c = lr_coefficient(&l, &a, &b)?;
    let json = json!({ "lambda": l, "alpha": a, "beta": b, "coefficient": c });
    Ok(Output::new(c.to_string(), json, format!("{c}\n")))
}

fn cmd_schur_product(alpha: &str, beta: &str) -> specht::Result<Output> {
    let (a, b): (Partition, Partition) = (alpha.parse()?, beta.parse()?);
    let v = schur_product(&a, &b);
    Ok(Output::new(v.to_string(), to_json(&v), v.to_tsv()))
}

struct VerifyArgs {
    theorem: String,
    min_n: Option<usize>,
    max_n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    j: Option<usize>,
    allow_large: bool,
    jobs: usize,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn cmd_verify(args: VerifyArgs, no_timing: bool) -> specht::Result<Output> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::Io(format!("cannot start worker pool: {e}")))?;
    if args.theorem.trim().starts_with("lemma:") {
        if args.min_n.is_some() || args.max_n.is_some() {
            return Err(usage("--min-n/--max-n do not apply to lemmas"));
        }
        let p = args.p.ok_or_else(|| usage("lemmas need --p"))?;
        let params = LemmaParams {
            p,
            q: args.q,
            j: args.j,
            allow_large: args.allow_large,
        };
        pool.install(|| verify_lemmas(args.theorem.trim(), &params, no_timing))
    } else {
        if args.p.is_some() || args.q.is_some() || args.j.is_some() || args.allow_large {
            return Err(usage("--p/--q/--j/--allow-large only apply to lemma:NAME"));
        }
        let id: TheoremId = args.theorem.parse()?;
        let (lo, hi) = id.default_range();
        let (min_n, max_n) = (args.min_n.unwrap_or(lo), args.max_n.unwrap_or(hi));
        let start = Instant::now();
        let keys = plan(id, min_n, max_n)?;
        let found = pool.install(|| {
            keys.par_iter()
                .map(|k| evaluate(id, k))
                .collect::<specht::Result<Vec<_>>>()
        })?;
        let mut report = assemble(id, min_n, max_n, &keys, found, start.elapsed());
        if no_timing {
            report.runtime_ms = 0;
        }
        Ok(theorem_output(&report))
    }
}

fn theorem_output(report: &VerificationReport) -> Output {
    let mut tsv = String::new();
    for f in &report.found {
        let mu = f
            .key
            .mu
            .as_ref()
            .map_or(String::new(), |m| format!("{m}{}", f.key.mu_tag.suffix()));
        let missing = f.missing.as_ref().map_or(String::new(), set_str);
        writeln!(
            tsv,
            "found\t{}\t{}{}\t{mu}\t{missing}",
            f.key.n,
            f.key.lambda,
            f.key.lambda_tag.suffix()
        )
        .ok();
    }
    for x in &report.mismatches {
        writeln!(
            tsv,
            "mismatch\t{}\t{}",
            serde_json::to_value(x.kind)
                .expect("kind")
                .as_str()
                .unwrap_or(""),
            x.key
        )
        .ok();
    }
    Output {
        human: report.to_string(),
        json: to_json(report),
        tsv,
        ok: report.passed(),
    }
}

/// Checks every member of the family whose hypotheses hold, in parallel;
/// reports come back in family order.
fn verify_lemmas(name: &str, params: &LemmaParams, no_timing: bool) -> specht::Result<Output> {
    let ids = LemmaId::family(name)?;
    let results: Vec<specht::Result<LemmaReport>> =
        ids.par_iter().map(|&id| verify_lemma(id, params)).collect();
    let mut reports = Vec::new();
    let mut first_err = None;
    for r in results {
        match r {
            Ok(mut r) => {
                if no_timing {
                    r.runtime_ms = 0;
                }
                reports.push(r);
            }
            Err(e @ Error::Hypothesis(_)) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    if reports.is_empty() {
        return Err(first_err
            .unwrap_or_else(|| Error::Hypothesis(format!("{name} has no applicable member"))));
    }
    let ok = reports.iter().all(LemmaReport::passed);
    let human = reports
        .iter()
        .map(LemmaReport::to_string)
        .collect::<Vec<_>>()
        .join("\n");
    let mut tsv = String::new();
    for r in &reports {
        for v in &r.variants {
            let zeros = v
                .zero_set
                .iter()
                .map(Partition::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            let status = if v.passed() { "verified" } else { "mismatch" };
            writeln!(
                tsv,
                "{}\t{}\t{}\t{}\t{zeros}\t{status}",
                r.lemma, r.p, r.n, v.label
            )
            .ok();
        }
    }
    Ok(Output {
        human,
        json: to_json(&reports),
        tsv,
        ok,
    })
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Hypothesis(_) => 3,
        Error::Numerical(_) => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> specht::Result<Output> {
    match cli.command {
        Command::Minpoly { lambda, mu, group } => cmd_minpoly(&lambda, &mu, group),
        Command::Maj { lambda, r, engine } => cmd_maj(&lambda, r, engine),
        Command::Verify {
            theorem,
            min_n,
            max_n,
            p,
            q,
            j,
            allow_large,
            jobs,
        } => cmd_verify(
            VerifyArgs {
                theorem,
                min_n,
                max_n,
                p,
                q,
                j,
                allow_large,
                jobs,
            },
            cli.no_timing,
        ),
        Command::Char { lambda, mu, group } => cmd_char(&lambda, &mu, group),
        Command::Lr {
            lambda,
            alpha,
            beta,
        } => cmd_lr(&lambda, &alpha, &beta),
        Command::SchurProduct { alpha, beta } => cmd_schur_product(&alpha, &beta),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let cache = cache::Cache::open();
    let result = run(cli);
    if let Some(c) = &cache {
        c.save();
    }
    match result {
        Ok(out) => {
            match format {
                Format::Human => println!("{}", out.human),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("json"))
                }
                Format::Tsv => print!("{}", out.tsv),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
