use std::path::Path;
use std::process::{Command, Output};

use affgrass_cli::payload::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn affgrass(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affgrass"))
        .args(args)
        .env("AFFGRASS_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn envelope(o: &Output) -> ReportEnvelope {
    assert!(o.status.success(), "{}", stderr(o));
    serde_json::from_str(&stdout(o)).expect("valid envelope")
}

/// Typed decode then re-encode reproduces the payload exactly.
fn round_trip<P: DeserializeOwned + Serialize>(env: &ReportEnvelope) -> P {
    let p: P = serde_json::from_value(env.payload.clone()).unwrap();
    assert_eq!(serde_json::to_value(&p).unwrap(), env.payload);
    let text = serde_json::to_string(env).unwrap();
    assert_eq!(&serde_json::from_str::<ReportEnvelope>(&text).unwrap(), env);
    p
}

#[test]
fn star_a1_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = affgrass(dir.path(), &["star", "A1", "word:0", "word:1,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "word:0 * word:1,0 = word:0,1,0\n");

    let env = envelope(&affgrass(
        dir.path(),
        &["--json", "star", "A1", "word:0", "word:1,0"],
    ));
    let p: StarPayload = round_trip(&env);
    assert_eq!(p.result.as_deref(), Some("word:0,1,0"));
    assert_eq!(p.result_length, Some(3));
}

#[test]
fn chevalley_g2_json() {
    let dir = tempfile::tempdir().unwrap();
    let env = envelope(&affgrass(dir.path(), &["chevalley", "G2", "--json"]));
    assert_eq!(env.schema_version, SCHEMA_VERSION);
    assert_eq!(env.command, "chevalley");
    assert_eq!(env.type_label, "G2");
    assert_eq!(env.convention_hash.len(), 16);
    let p: ChevalleyPayload = round_trip(&env);
    assert_eq!(p.a, Some(vec![1, 3, 2, 3, 1]));
    assert_eq!(p.c1, vec![(vec![2], 1)]);
}

#[test]
fn classify_all_smooth_column() {
    let dir = tempfile::tempdir().unwrap();
    let env = envelope(&affgrass(
        dir.path(),
        &["--json", "classify-all", "--max-rank", "4"],
    ));
    let p: ClassifyPayload = round_trip(&env);
    let labels: Vec<&str> = p.reports.iter().map(|r| r.type_label.as_str()).collect();
    assert!(labels.contains(&"E8") && labels.contains(&"E6") && labels.contains(&"A4"));
    assert!(!labels.contains(&"A5"));
    let mut not_smooth: Vec<&str> = p
        .reports
        .iter()
        .filter(|r| !r.smooth_schubert_genv)
        .map(|r| r.type_label.as_str())
        .collect();
    not_smooth.sort();
    assert_eq!(not_smooth, vec!["E8", "F4", "G2"]);

    let text = stdout(&affgrass(dir.path(), &["classify-all", "--max-rank", "2"]));
    assert!(text.lines().next().unwrap().starts_with("type"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("G2 ") && l.contains("false")));
}

#[test]
fn every_payload_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let p: EnumeratePayload = round_trip(&envelope(&affgrass(
        d,
        &["--json", "enumerate", "A2", "--max-len", "4"],
    )));
    assert_eq!(p.level_sizes, vec![1, 1, 2, 2, 3]);
    let p: PoincarePayload = round_trip(&envelope(&affgrass(
        d,
        &["--json", "poincare", "A1", "--element", "t:-1"],
    )));
    assert_eq!(p.coeffs, vec![1, 1, 1]);
    assert!(p.palindromic && p.chain);
    let p: SegmentsPayload = round_trip(&envelope(&affgrass(d, &["--json", "segments", "G2"])));
    assert_eq!(p.count, 6);
    assert!(p.routes_agree);
    let p: FactorizePayload = round_trip(&envelope(&affgrass(
        d,
        &["--json", "factorize", "A1", "--element", "word:0,1,0"],
    )));
    assert_eq!(p.factors, vec!["word:0", "word:1,0"]);
    assert!(p.refactor_ok);
    let r: affgrass_core::classify::TypeReport =
        round_trip(&envelope(&affgrass(d, &["--json", "report", "C3"])));
    assert_eq!(
        r.chain_coeffs,
        affgrass_core::ChainCoeffs::Chain(vec![2, 2, 2, 2, 2])
    );
    let v: VerifyPayload = round_trip(&envelope(&affgrass(
        d,
        &["--json", "verify", "A1", "--suite", "series,segments"],
    )));
    assert!(v.passed);
    assert_eq!(v.suites, vec!["series", "segments"]);
}

#[test]
fn cache_on_off_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--json", "enumerate", "C2", "--max-len", "8"];
    let cold = stdout(&affgrass(dir.path(), &args));
    assert!(
        std::fs::read_dir(dir.path()).unwrap().count() > 0,
        "cache written"
    );
    let warm = stdout(&affgrass(dir.path(), &args));
    let mut off_args = vec!["--no-cache"];
    off_args.extend_from_slice(&args);
    let empty = tempfile::tempdir().unwrap();
    let off = stdout(&affgrass(empty.path(), &off_args));
    assert_eq!(cold, warm);
    assert_eq!(cold, off);
    assert_eq!(
        std::fs::read_dir(empty.path()).unwrap().count(),
        0,
        "--no-cache writes nothing"
    );
}

#[test]
fn corrupt_cache_recovers() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate", "G2", "--max-len", "7"];
    let first = stdout(&affgrass(dir.path(), &args));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let o = affgrass(dir.path(), &args);
    assert!(o.status.success());
    assert_eq!(stdout(&o), first);
    assert!(stderr(&o).contains("corrupt"));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--json", "verify", "G2", "--suite", "star", "--seed", "17"];
    assert_eq!(
        stdout(&affgrass(dir.path(), &args)),
        stdout(&affgrass(dir.path(), &args))
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    let o = affgrass(d, &["star", "A1", "word:0,zz", "word:0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`zz`"));

    let o = affgrass(d, &["report", "E9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E requires rank 6, 7 or 8"));

    let o = affgrass(d, &["report", "X3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = affgrass(d, &["poincare", "A2", "--element", "word:1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = affgrass(d, &["verify", "A2", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`bogus`"));

    let o = affgrass(d, &["star"]);
    assert_eq!(o.status.code(), Some(2));

    let o = affgrass(d, &["enumerate", "A2", "--max-len", "40"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--enum-bound"));

    let o = affgrass(
        d,
        &[
            "--elem-bound",
            "3",
            "poincare",
            "G2",
            "--element",
            "t:-1,-2",
        ],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--elem-bound"));

    let o = affgrass(
        d,
        &["--enum-bound", "40", "enumerate", "A1", "--max-len", "40"],
    );
    assert_eq!(o.status.code(), Some(0));
}
