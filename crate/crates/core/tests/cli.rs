mod common;

use common::c;
use fracterp::frac_calculus::SampledSignal;
use fracterp::frfrt::Signal;
use fracterp::io::{read_matrix_json, read_signal_csv, write_matrix_json, write_samples_csv, write_signal_csv, SignalTable};
use fracterp::operator_powers::{newton_matrix_power, ComplexMatrix, Rho};
use fracterp::dirichlet_interp::DirichletSamples;
use fracterp::{Complex64, TruncationPolicy};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn fracterp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracterp")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_matrix(dir: &TempDir, name: &str, m: &ComplexMatrix) -> PathBuf {
    let path = dir.path().join(name);
    write_matrix_json(std::fs::File::create(&path).unwrap(), m).unwrap();
    path
}

fn write_signal(dir: &TempDir, name: &str, table: &SignalTable) -> PathBuf {
    let path = dir.path().join(name);
    write_signal_csv(std::fs::File::create(&path).unwrap(), table).unwrap();
    path
}

#[test]
fn matpow_square_root_of_diagonal() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(&dir, "m.json", &ComplexMatrix::diagonal(&[c(0.8), c(1.2)]));
    let out = fracterp(&["matpow", "--input", path_str(&m), "--alpha", "0.5", "--method", "newton", "--rho", "auto"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let back: ComplexMatrix = serde_json::from_value(v["matrix"].clone()).unwrap();
    let want = ComplexMatrix::diagonal(&[c(0.894_427), c(1.095_445)]);
    assert!(back.distance(&want) < 1e-6);
    let prov = &v["provenance"];
    assert_eq!(prov["method"], "newton");
    assert_eq!(prov["converged"], true);
    assert!(prov["terms_used"].as_u64().unwrap() > 0);
    assert!(prov["tail_estimate"].as_f64().unwrap() >= 0.0);
    assert_eq!(prov["certificate"]["kind"], "disk");
}

#[test]
fn matpow_output_round_trips_bit_for_bit() {
    let dir = TempDir::new().unwrap();
    let t = ComplexMatrix::from_real_rows(&[&[1.2, 0.3], &[0.1, 0.9]]).unwrap();
    let input = write_matrix(&dir, "t.json", &t);
    let output = dir.path().join("out.json");
    let args = ["matpow", "--input", path_str(&input), "--alpha", "0.3,0.1", "--output", path_str(&output)];
    assert!(fracterp(&args).status.success());
    let v: Value = serde_json::from_slice(&std::fs::read(&output).unwrap()).unwrap();
    let got: ComplexMatrix = serde_json::from_value(v["matrix"].clone()).unwrap();
    let lib = newton_matrix_power(&t, Complex64::new(0.3, 0.1), Rho::Auto, &TruncationPolicy::default()).unwrap();
    assert_eq!(got, lib.outcome.value);

    // the matrix block alone re-parses through the file reader
    let block = dir.path().join("block.json");
    std::fs::write(&block, serde_json::to_vec(&v["matrix"]).unwrap()).unwrap();
    assert_eq!(read_matrix_json(std::fs::File::open(&block).unwrap()).unwrap(), lib.outcome.value);

    // CSV output and provenance sidecar
    let csv = dir.path().join("out.csv");
    let args = ["matpow", "--input", path_str(&input), "--alpha", "0.5", "--method", "oracle", "--format", "csv", "--output", path_str(&csv)];
    assert!(fracterp(&args).status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("row,col,re,im\n"));
    assert_eq!(text.lines().count(), 5);
    let side: Value = serde_json::from_slice(&std::fs::read(dir.path().join("out.csv.provenance.json")).unwrap()).unwrap();
    assert_eq!(side["method"], "eigen_oracle");
}

#[test]
fn runs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let t = ComplexMatrix::from_real_rows(&[&[1.2, 0.3, 0.0], &[0.1, 0.9, 0.2], &[0.0, 0.4, 1.5]]).unwrap();
    let input = write_matrix(&dir, "t.json", &t);
    let args = ["matpow", "--input", path_str(&input), "--alpha", "0.37"];
    assert_eq!(fracterp(&args).stdout, fracterp(&args).stdout);
    let args = ["zeta", "--s", "2.5,1", "--format", "csv"];
    assert_eq!(fracterp(&args).stdout, fracterp(&args).stdout);
}

#[test]
fn zeta_at_two() {
    let out = fracterp(&["zeta", "--s", "2", "--terms", "64"]);
    assert!(out.status.success());
    let v = json(&out);
    let z = v["value"][0].as_f64().unwrap();
    assert!((z - 1.644_934).abs() < 1e-6);
    assert_eq!(v["provenance"]["method"], "eta");

    let dir = TempDir::new().unwrap();
    let samples = dir.path().join("eta.csv");
    let out = fracterp(&["zeta", "--s", "1.5", "--export-samples", path_str(&samples)]);
    assert!(out.status.success());
    let table = fracterp::io::read_samples_csv(std::fs::File::open(&samples).unwrap()).unwrap();
    assert_eq!(table.len(), 64);
}

#[test]
fn frft_alpha_zero_reproduces_the_input_bytes() {
    let dir = TempDir::new().unwrap();
    let m = 40;
    let f = Signal::from_fn(m, Signal::natural_step(m), |x| Complex64::new((-x * x).exp(), 0.3 * x.sin())).unwrap();
    let input = write_signal(&dir, "f.csv", &SignalTable::from_centered(&f));
    let output = dir.path().join("g.csv");
    let out = fracterp(&["frft", "--input", path_str(&input), "--alpha", "0", "--method", "alt", "--format", "csv", "--output", path_str(&output)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(std::fs::read(&input).unwrap(), std::fs::read(&output).unwrap());

    // the alt transform reports the −1-eigenspace share; FRACTERP_LOG surfaces it
    let out = Command::new(env!("CARGO_BIN_EXE_fracterp"))
        .args(["frft", "--input", path_str(&input), "--alpha", "0.5"])
        .env("FRACTERP_LOG", "info")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(json(&out)["provenance"]["minus_one_fraction"].as_f64().unwrap() >= 0.0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("eigenspace"));

    let out = fracterp(&["frft", "--input", path_str(&input), "--phi", "0.7", "--method", "chirp"]);
    assert!(out.status.success());
}

#[test]
fn fracint_and_fracderiv() {
    let dir = TempDir::new().unwrap();
    let f = SampledSignal::from_real_fn(0.0, 1.0, 257, |x| x).unwrap();
    let input = write_signal(&dir, "x.csv", &SignalTable::from_sampled(&f));
    let output = dir.path().join("j.csv");
    let out = fracterp(&["fracint", "--input", path_str(&input), "--alpha", "0.5", "--method", "rl", "--format", "csv", "--output", path_str(&output)]);
    assert!(out.status.success());
    let table = read_signal_csv(std::fs::File::open(&output).unwrap()).unwrap();
    let gamma_2_5 = 1.329_340_388_179_137;
    for (x, v) in table.x.iter().zip(&table.values) {
        assert!((v.re - x.powf(1.5) / gamma_2_5).abs() < 1e-6);
    }
    let out = fracterp(&["fracint", "--input", path_str(&input), "--alpha", "1.5", "--terms", "100"]);
    assert!(out.status.success() || out.status.code() == Some(4));
    assert_eq!(json(&out)["provenance"]["method"], "newton");

    let out = fracterp(&["fracderiv", "--method", "trig", "--lambda", "2", "--alpha", "0.5", "--kind", "cos"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!((v["derivative"]["amplitude"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-12);

    let periodic = SampledSignal::from_real_fn(0.0, 2.0 * std::f64::consts::PI, 129, f64::sin).unwrap();
    let input = write_signal(&dir, "sin.csv", &SignalTable::from_sampled(&periodic));
    let out = fracterp(&["fracderiv", "--input", path_str(&input), "--alpha", "1", "--method", "fourier-series"]);
    assert!(out.status.success());
    let v = json(&out);
    let re = v["signal"]["re"].as_array().unwrap();
    assert!((re[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn mellin_from_a_sample_table() {
    let dir = TempDir::new().unwrap();
    let samples = DirichletSamples::from_closed_form(30, |k| {
        if k == 0 { c(1.0) } else { c((1..k).map(|j| j as f64).product::<f64>()) }
    })
    .unwrap();
    let path = dir.path().join("m.csv");
    write_samples_csv(std::fs::File::create(&path).unwrap(), &samples).unwrap();
    let out = fracterp(&["mellin", "--input", path_str(&path), "--s", "0.5"]);
    assert!(out.status.success());
    let value = json(&out)["value"][0].as_f64().unwrap();
    assert!((value - std::f64::consts::PI.sqrt()).abs() < 1e-8);
}

#[test]
fn demo_reports() {
    let out = fracterp(&["demo", "translation", "--t", "0.5"]);
    assert!(out.status.success());
    let v = json(&out);
    for key in ["t", "k", "grid", "max_on_interval", "l2_error"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["max_on_interval"].as_f64(), Some(0.0));
    let out = fracterp(&["demo", "refine", "--t", "0.5", "--k", "8"]);
    assert!(out.status.success());
    assert!(json(&out)["l2_error"].as_f64().unwrap() < 1e-10);
    let out = fracterp(&["demo", "figures", "--points", "64", "--format", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("x,re,im,series\n"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    // parse errors
    assert_eq!(fracterp(&["matpow", "--input", "nope.json", "--alpha", "0.5"]).status.code(), Some(2));
    assert_eq!(fracterp(&["zeta", "--s", "two"]).status.code(), Some(2));
    assert_eq!(fracterp(&["frobnicate"]).status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2}").unwrap();
    assert_eq!(fracterp(&["matpow", "--input", path_str(&bad), "--alpha", "0.5"]).status.code(), Some(2));
    // refused certificate
    let m = write_matrix(&dir, "r.json", &ComplexMatrix::diagonal(&[c(1.0), c(-1.0)]));
    let out = fracterp(&["matpow", "--input", path_str(&m), "--alpha", "0.5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    // not converged: the result is still written
    let output = dir.path().join("z.json");
    let out = fracterp(&["zeta", "--s", "0.5", "--method", "shifted", "--output", path_str(&output)]);
    assert_eq!(out.status.code(), Some(4));
    let v: Value = serde_json::from_slice(&std::fs::read(&output).unwrap()).unwrap();
    assert_eq!(v["provenance"]["converged"], false);
    // domain errors
    assert_eq!(fracterp(&["zeta", "--s", "1"]).status.code(), Some(5));
    assert_eq!(fracterp(&["mellin", "--input", "x", "--s", "-1"]).status.code(), Some(2));
}
