use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env_remove("SPECHT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn run_ok(args: &[&str]) -> String {
    let out = specht(args);
    assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = specht(&full);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

#[test]
fn minpoly_examples() {
    let out = run_ok(&["minpoly", "--lambda", "2,2", "--mu", "4"]);
    assert!(out.contains("p(x) = x^2 - 1"), "{out}");
    assert!(out.contains("counts: 1 0 1 0"), "{out}");
    assert!(out.contains("missing: 1,3"), "{out}");

    let out = run_ok(&["minpoly", "--lambda", "3", "--mu", "3"]);
    assert!(out.contains("p(x) = x - 1"), "{out}");

    let out = run_ok(&["minpoly", "--group", "alt", "--lambda", "3,1,1+", "--mu", "5+"]);
    assert!(out.contains("p(x) = (x^5 - 1)/((x - ζ^2)(x - ζ^3))"), "{out}");
    assert!(out.contains("ζ = e^(2πi/5)"), "{out}");

    let v = json(&["minpoly", "--lambda", "2,2,2", "--mu", "6"]);
    assert_eq!(v["order"], 6);
    assert_eq!(v["missing"], serde_json::json!([1, 5]));
    assert_eq!(v["polynomial"], "(x^6 - 1)/(x^2 - x + 1)");

    let tsv = run_ok(&["minpoly", "--lambda", "2,2", "--mu", "4", "--format", "tsv"]);
    assert_eq!(tsv, "0\t1\n1\t0\n2\t1\n3\t0\n");
}

#[test]
fn maj_examples() {
    // The two tableaux of (2,2) have major index 2 and 4.
    let v = json(&["maj", "--lambda", "2,2", "--engine", "both"]);
    assert_eq!(v["kw"], serde_json::json!([1, 0, 1, 0]));
    assert_eq!(v["brute"], v["kw"]);
    assert_eq!(v["agree"], true);

    let out = run_ok(&["maj", "--lambda", "5"]);
    assert_eq!(out, "a^0 = 1\na^1 = 0\na^2 = 0\na^3 = 0\na^4 = 0\n");

    let v = json(&["maj", "--lambda", "2,1"]);
    assert_eq!(v["kw"], serde_json::json!([0, 1, 1]));

    let out = run_ok(&["maj", "--lambda", "3,1", "--r", "-1", "--engine", "brute"]);
    assert_eq!(out, "a^3 = 1\n");

    for lambda in ["4,2,1", "3,3", "2^2,1^2", "5,1,1"] {
        let out = run_ok(&["maj", "--lambda", lambda, "--engine", "both"]);
        assert!(out.ends_with("engines agree\n"), "{out}");
    }
}

#[test]
fn char_examples() {
    assert_eq!(run_ok(&["char", "--lambda", "4,1", "--mu", "5"]), "-1\n");
    assert_eq!(run_ok(&["char", "--lambda", "5", "--mu", "3,2"]), "1\n");
    assert_eq!(run_ok(&["char", "--lambda", "3,2,1", "--mu", "1^6"]), "16\n");
    let out = run_ok(&["char", "--group", "alt", "--lambda", "3,1,1+", "--mu", "5+"]);
    assert_eq!(out, "(1+√5)/2\n");
    let v = json(&["char", "--group", "alt", "--lambda", "3,1,1+", "--mu", "5-"]);
    assert_eq!(v["value"], "(1-√5)/2");
    let re = v["approx"][0].as_f64().unwrap();
    assert!((re - (1.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
}

#[test]
fn lr_and_products() {
    let big = run_ok(&["lr", "--lambda", "5,4,4,1", "--alpha", "3,2,1", "--beta", "5,2,1"]);
    assert!(big.trim().parse::<u64>().unwrap() >= 1);
    assert_eq!(run_ok(&["lr", "--lambda", "4,2", "--alpha", "2,1", "--beta", "2,1"]), "1\n");
    assert_eq!(run_ok(&["lr", "--lambda", "3,2,1", "--alpha", "2,1", "--beta", "2,1"]), "2\n");

    assert_eq!(run_ok(&["schur-product", "--alpha", "1", "--beta", "1"]), "s(2) + s(1,1)\n");
    let tsv = run_ok(&["schur-product", "--alpha", "1", "--beta", "1", "--format", "tsv"]);
    assert_eq!(tsv, "2\t1\n1,1\t1\n");
    let v = json(&["schur-product", "--alpha", "2,1", "--beta", "2,1"]);
    assert_eq!(v["weight"], 6);
    let total: i64 = v["terms"].as_array().unwrap().iter().map(|t| t[1].as_i64().unwrap()).sum();
    assert_eq!(total, 8);
}

#[test]
fn verify_theorems() {
    let v = json(&["verify", "--theorem", "inv_vec_sym", "--max-n", "11"]);
    assert!(v["mismatches"].as_array().unwrap().is_empty());
    let found = v["found"].as_array().unwrap();
    assert!(found.iter().any(|f| f["lambda"] == "2^5" && f["mu"] == "5,3,2"));
    let v = json(&["verify", "--theorem", "eigen_value_sgn", "--max-n", "11"]);
    let found = v["found"].as_array().unwrap();
    assert!(found.iter().any(|f| f["lambda"] == "5,5" && f["mu"] == "5,3,2"));
    assert_eq!(code(&specht(&["verify", "--theorem", "inv_vec_sym", "--max-n", "11"])), 0);

    assert_eq!(code(&specht(&["verify", "--theorem", "klyachko", "--max-n", "10"])), 0);
    assert_eq!(code(&specht(&["verify", "--theorem", "sundaram"])), 0);
}

/// The listed minimal-polynomial pattern for `(3,3)` at a 6-cycle is wrong:
/// the missing roots are the primitive cube roots `{2,4}`, not `{1,5}`. The
/// scan reports exactly that one mismatch and exits 1.
#[test]
fn main_min_reports_the_three_three_pattern() {
    let out = specht(&["verify", "--theorem", "main_min", "--max-n", "14", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let mismatches = v["mismatches"].as_array().unwrap();
    assert_eq!(mismatches.len(), 1, "{mismatches:?}");
    assert_eq!(mismatches[0]["kind"], "pattern");
    assert_eq!(mismatches[0]["lambda"], "3,3");
    assert_eq!(mismatches[0]["mu"], "6");
    let found = v["found"].as_array().unwrap();
    let f = found.iter().find(|f| f["lambda"] == "3,3").unwrap();
    assert_eq!(f["missing"], serde_json::json!([2, 4]));

    let out = specht(&["verify", "--theorem", "main_min", "--max-n", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("result: PASS"));
}

#[test]
fn verify_lemmas() {
    let out = run_ok(&["verify", "--theorem", "lemma:base", "--p", "7"]);
    assert!(out.contains("lemma base_1 (p = 7, n = 14): verified"), "{out}");
    assert!(!out.contains("MISMATCH"));

    let v = json(&["verify", "--theorem", "lemma:base", "--p", "6"]);
    let reports = v.as_array().unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r["lemma"].as_str().unwrap()).collect();
    assert_eq!(names, ["base_3", "base_4"]);
    assert!(reports.iter().all(|r| r["n"] == 12));

    let tsv = run_ok(&["verify", "--theorem", "lemma:yang_staroletov", "--p", "4", "--q", "2", "--format", "tsv"]);
    assert!(tsv.starts_with("yang_staroletov\t4\t6\tζ^1\t"), "{tsv}");

    // The statement omits the sign eigenvalue at w_(p,2) for odd p, so this
    // instance carries one unexpected zero at (p,2).
    let out = specht(&["verify", "--theorem", "lemma:eigen_minus_one", "--p", "7", "--q", "2", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["variants"][0]["unexpected"], serde_json::json!(["7,2"]));
}

fn without_timing(mut v: Value) -> Value {
    if let Some(obj) = v.as_object_mut() {
        obj.remove("runtime_ms");
    }
    v
}

#[test]
fn output_does_not_depend_on_jobs() {
    let base = ["verify", "--theorem", "main_alt", "--max-n", "9", "--no-timing"];
    let one = specht(&[&base[..], &["--jobs", "1"]].concat());
    let four = specht(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), code(&four));
    assert_eq!(one.stdout, four.stdout);

    let args = ["verify", "--theorem", "eigen_value_sgn", "--max-n", "10", "--format", "json"];
    let a: Value = serde_json::from_slice(&specht(&[&args[..], &["--jobs", "1"]].concat()).stdout).unwrap();
    let b: Value = serde_json::from_slice(&specht(&[&args[..], &["--jobs", "3"]].concat()).stdout).unwrap();
    assert_eq!(without_timing(a), without_timing(b));

    let lemma = ["verify", "--theorem", "lemma:base", "--p", "6", "--no-timing", "--format", "tsv"];
    let a = specht(&[&lemma[..], &["--jobs", "1"]].concat());
    let b = specht(&[&lemma[..], &["--jobs", "4"]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_reports_round_trip() {
    let out = specht(&["verify", "--theorem", "neg_universal", "--max-n", "9", "--format", "json"]);
    let report: specht::spectrum::VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), serde_json::from_slice::<Value>(&out.stdout).unwrap());

    let out = specht(&["verify", "--theorem", "lemma:three_parts", "--p", "7", "--format", "json"]);
    let reports: Vec<specht::schur::LemmaReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!reports.is_empty());

    let out = specht(&["schur-product", "--alpha", "3,1", "--beta", "2", "--format", "json"]);
    let v: specht::schur::SchurVector = serde_json::from_slice(&out.stdout).unwrap();
    let a: specht::shapes::Partition = "3,1".parse().unwrap();
    let b: specht::shapes::Partition = "2".parse().unwrap();
    assert_eq!(v, specht::schur::schur_product(&a, &b));
}

#[test]
fn json_keys_are_sorted() {
    fn check(v: &Value) {
        match v {
            Value::Object(map) => {
                let keys: Vec<&String> = map.keys().collect();
                let mut sorted = keys.clone();
                sorted.sort();
                assert_eq!(keys, sorted);
                map.values().for_each(check);
            }
            Value::Array(xs) => xs.iter().for_each(check),
            _ => {}
        }
    }
    let out = specht(&["verify", "--theorem", "main", "--max-n", "6", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    check(&v);
    // Key order in the text itself, not just after parsing.
    let first = text.find("\"checked\"").unwrap();
    let later = text.find("\"theorem\"").unwrap();
    assert!(first < later);
}

#[test]
fn exit_codes() {
    // Usage and parse errors.
    assert_eq!(code(&specht(&["verify", "--theorem", "bogus"])), 2);
    assert_eq!(code(&specht(&["verify", "--theorem", "lemma:bogus", "--p", "7"])), 2);
    assert_eq!(code(&specht(&["verify", "--theorem", "lemma:base"])), 2);
    assert_eq!(code(&specht(&["verify", "--theorem", "main", "--p", "3"])), 2);
    assert_eq!(code(&specht(&["char", "--lambda", "3,x", "--mu", "4"])), 2);
    assert_eq!(code(&specht(&["char", "--lambda", "3,1+", "--mu", "4"])), 2);
    assert_eq!(code(&specht(&["minpoly", "--lambda", "2,2", "--mu", "3"])), 2);
    assert_eq!(code(&specht(&["frobnicate"])), 2);
    assert_eq!(code(&specht(&["char", "--lambda", "3"])), 2);

    // Hypothesis violations.
    assert_eq!(code(&specht(&["verify", "--theorem", "lemma:base", "--p", "4"])), 3);
    assert_eq!(code(&specht(&["char", "--group", "alt", "--lambda", "3,1", "--mu", "2,1,1"])), 3);
    assert_eq!(code(&specht(&["minpoly", "--group", "alt", "--lambda", "3,1,1", "--mu", "5+"])), 3);
    assert_eq!(code(&specht(&["verify", "--theorem", "main", "--min-n", "9", "--max-n", "3"])), 3);

    let err = String::from_utf8(specht(&["verify", "--theorem", "bogus"]).stderr).unwrap();
    assert!(err.contains("unknown theorem `bogus`"), "{err}");
}

fn with_cache(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env("SPECHT_CACHE_DIR", dir)
        .output()
        .expect("binary runs")
}

#[test]
fn cache_dir_is_invisible() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("mn-cache-v1.bin");
    let args = ["verify", "--theorem", "eigen_value_sgn", "--max-n", "9", "--no-timing"];

    let plain = specht(&args);
    let cold = with_cache(dir.path(), &args);
    assert!(file.exists());
    let size = std::fs::metadata(&file).unwrap().len();
    assert!(size > 0);
    let warm = with_cache(dir.path(), &args);
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(plain.stdout, warm.stdout);
    assert_eq!(code(&plain), code(&warm));
    assert!(warm.stderr.is_empty(), "{}", String::from_utf8_lossy(&warm.stderr));

    // A corrupt file costs a warning and a recomputation, nothing else.
    std::fs::write(&file, b"not a cache").unwrap();
    let damaged = with_cache(dir.path(), &args);
    assert_eq!(plain.stdout, damaged.stdout);
    assert!(String::from_utf8_lossy(&damaged.stderr).contains("warning"));
    let repaired = with_cache(dir.path(), &args);
    assert!(repaired.stderr.is_empty());

    // The directory is created on demand.
    let nested = dir.path().join("a").join("b");
    let out = with_cache(&nested, &["char", "--lambda", "4,2", "--mu", "3,3"]);
    assert_eq!(stdout(&out), "0\n");
    assert!(nested.join("mn-cache-v1.bin").exists());
}
