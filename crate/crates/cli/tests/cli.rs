use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn num(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("dunkl-cli-{}-{name}", std::process::id()))
}

#[test]
fn bernoulli_table_is_exact() {
    let o = dunkl(&["poly", "bernoulli", "--alpha", "0", "--max-n", "5", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    // 𝔅_2 = x² − 1/2
    for row in ["2\t0\t-1/2", "2\t1\t0", "2\t2\t1"] {
        assert!(text.lines().any(|l| l == row), "{row} missing from\n{text}");
    }
    let o = dunkl(&["poly", "bernoulli", "--alpha", "-1/2", "--max-n", "3", "--classical-check"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["params"]["alpha"], "-1/2");
    assert_eq!(v["params"]["arithmetic"], "rational");
    assert_eq!(v["result"]["classical_check"]["pass"], true);
    let o = dunkl(&["poly", "bernoulli", "--alpha", "0.25", "--max-n", "2"]);
    assert_eq!(json(&o)["params"]["arithmetic"], "real64");
}

#[test]
fn classical_check_needs_minus_half() {
    let o = dunkl(&["poly", "bernoulli", "--alpha", "0", "--max-n", "3", "--classical-check"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn aed_at_first_bessel_zero() {
    let o = dunkl(&["poly", "aed", "--alpha", "0", "--u-at-jzero", "1", "--max-n", "3"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let j = 2.404825557695773;
    let coeff = |n: usize, p: usize| {
        let c = &v["result"]["polys"][n]["coeffs"][p];
        (num(&c[0]), num(&c[1]))
    };
    // at α = 0: 𝔈_1 = x − 2i/j, 𝔈_2 = x² − 2ix/j − 2, 𝔈_3 = x³ − (4i/j)x² − 4x + ...
    let close = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12;
    assert!(close(coeff(1, 0), (0.0, -2.0 / j)));
    assert!(close(coeff(1, 1), (1.0, 0.0)));
    assert!(close(coeff(2, 0), (-2.0, 0.0)));
    assert!(close(coeff(2, 1), (0.0, -2.0 / j)));
    assert!(close(coeff(3, 2), (0.0, -4.0 / j)));
    assert!(close(coeff(3, 1), (-4.0, 0.0)));
}

#[test]
fn aed_needs_exactly_one_u() {
    assert_eq!(code(&dunkl(&["poly", "aed", "--alpha", "0", "--max-n", "3"])), 2);
    let both = dunkl(&["poly", "aed", "--alpha", "0", "--max-n", "3", "--u", "1", "--u-at-jzero", "1"]);
    assert_eq!(code(&both), 2);
    let o = dunkl(&["poly", "aed", "--alpha", "0.5", "--max-n", "2", "--u", "0.4-1.1i"]);
    assert_eq!(code(&o), 0);
    let u = &json(&o)["result"]["u"];
    assert_eq!((num(&u[0]), num(&u[1])), (0.4, -1.1));
}

#[test]
fn zero_tables() {
    let o = dunkl(&["zeros", "--alpha", "-1/2", "--count", "3"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    for (i, z) in v["result"]["zeros"].as_array().unwrap().iter().enumerate() {
        assert!((num(z) - (i + 1) as f64 * PI).abs() < 1e-13);
    }
    let o = dunkl(&["zeros", "--alpha", "0", "--count", "1", "--kind", "j"]);
    assert!((num(&json(&o)["result"]["zeros"][0]) - 2.404825557695773).abs() < 1e-14);
    let o = dunkl(&["zeros", "--alpha", "-3", "--count", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha"));
}

#[test]
fn series_reports() {
    let o = dunkl(&["series", "sigma", "--k", "1", "--alpha", "0", "--terms", "10000", "--tail"]);
    assert_eq!(code(&o), 0);
    let r = &json(&o)["result"];
    assert!(num(&r["rel_err"]) < 1e-6);
    assert!((num(&r["corrected"][0]) - 0.125).abs() < 1e-6 * 0.125);
    assert_eq!(r["closed_exact"], "1/8");

    let o = dunkl(&["series", "rho", "--k", "1", "--alpha", "0", "--tail"]);
    assert_eq!(json(&o)["result"]["closed_exact"], "-1/8");

    let o = dunkl(&["series", "eta-l", "--k", "0", "--alpha", "0", "--l", "1", "--tail"]);
    let r = json(&o)["result"].clone();
    assert!((num(&r["closed"][0]) - 1.5 / 3.831705970207512).abs() < 1e-14);
    assert!(num(&r["rel_err"]) < 1e-8);

    let o = dunkl(&["series", "eta-u", "--k", "1", "--alpha", "0.5", "--u", "0.3+0.7i", "--terms", "2000", "--tail", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.starts_with("kind\tk\talpha"));
}

#[test]
fn series_usage_and_gates() {
    assert_eq!(code(&dunkl(&["series", "eta-l", "--k", "0", "--alpha", "0"])), 2);
    assert_eq!(code(&dunkl(&["series", "sigma", "--k", "1", "--alpha", "0", "--u", "1"])), 2);
    assert_eq!(code(&dunkl(&["series", "sigma", "--k", "1", "--alpha", "abc"])), 2);
    assert_eq!(code(&dunkl(&["series", "rho", "--k", "1", "--alpha", "1"])), 3);
    assert_eq!(code(&dunkl(&["series", "sigma", "--k", "0", "--alpha", "0"])), 3);
    assert_eq!(code(&dunkl(&["series"])), 2);
}

#[test]
fn fourier_report() {
    let o = dunkl(&["fourier", "--alpha", "1/2", "--n", "3", "--jmax", "4", "--terms", "3000", "--tail", "--x", "-0.4,0.25"]);
    assert_eq!(code(&o), 0);
    let r = json(&o)["result"].clone();
    assert_eq!(r["coefficients"].as_array().unwrap().len(), 9);
    for c in r["coefficients"].as_array().unwrap() {
        assert!(num(&c["abs_err"]) < 1e-12);
    }
    for s in r["partial_sums"].as_array().unwrap() {
        assert!(num(&s["abs_err"]) < 1e-6);
    }
    assert!(num(&r["parseval"]["rel_err"]) < 1e-10);
    assert_eq!(code(&dunkl(&["fourier", "--alpha", "0", "--x", "1"])), 3);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["series", "omega-l", "--k", "1", "--alpha", "0", "--l", "2", "--terms", "3000", "--tail"];
    let a = dunkl(&args);
    let b = dunkl(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let path = scratch("series.json");
    let p = path.to_str().unwrap();
    let mut with_file: Vec<&str> = args.to_vec();
    with_file.extend(["--output", p]);
    let c = dunkl(&with_file);
    assert_eq!(code(&c), 0);
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn verify_exact_passes() {
    let o = dunkl(&["verify", "exact"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["result"]["pass"], true);
    let ids: Vec<u64> = v["result"]["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [1, 2]);
    assert_eq!(code(&dunkl(&["verify", "everything"])), 2);
    assert_eq!(code(&dunkl(&["verify", "series", "--alpha-grid", "0,x"])), 2);
}

#[test]
fn verify_all_fails_only_on_the_second_alternating_sum() {
    let path = scratch("report.json");
    let o = dunkl(&["verify", "all", "--report", path.to_str().unwrap(), "--format", "tsv"]);
    // the printed second alternating sum is wrong, so the run fails on it
    assert_eq!(code(&o), 4);
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(stderr.contains("criterion 5") && stderr.contains("rho2_printed"), "{stderr}");
    assert_eq!(stderr.lines().filter(|l| l.contains(" FAIL ")).count(), 1, "{stderr}");
    let report: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    std::fs::remove_file(path).unwrap();
    let criteria = report["result"]["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 11);
    let rel_errs = criteria
        .iter()
        .flat_map(|c| c["checks"].as_array().unwrap())
        .filter(|c| c.get("rel_err").is_some())
        .count();
    assert!(rel_errs > 50);
    let tsv = String::from_utf8(o.stdout).unwrap();
    assert!(tsv.starts_with("criterion\tcheck\tstatus"));
}

#[test]
fn verify_series_on_a_grid() {
    let o = dunkl(&["verify", "series", "--alpha-grid", "-1/2,0,1/2,2", "--terms", "4000"]);
    let v = json(&o);
    assert_eq!(v["params"]["alpha_grid"], "-1/2,0,1/2,2");
    let criteria = v["result"]["criteria"].as_array().unwrap();
    let ids: Vec<u64> = criteria.iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [3, 4, 5, 6, 7, 8, 9, 11]);
    let grid_checks = criteria[1]["checks"].as_array().unwrap();
    assert_eq!(grid_checks.len(), 4 * 5);
    let failing: Vec<&str> = criteria
        .iter()
        .flat_map(|c| c["checks"].as_array().unwrap())
        .filter(|c| c["pass"] == false && c["informational"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failing.iter().all(|n| n.starts_with("rho2_printed")), "{failing:?}");
    assert_eq!(code(&o), 4);
}
