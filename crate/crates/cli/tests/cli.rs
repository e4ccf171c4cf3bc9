use std::process::{Command, Output as ProcOutput};

use lescop_cli::error::ErrorEnvelope;
use lescop_cli::output::{Envelope, Output};

fn lescop(args: &[&str]) -> ProcOutput {
    Command::new(env!("CARGO_BIN_EXE_lescop")).args(args).output().expect("binary runs")
}

fn stdout(o: &ProcOutput) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn envelope(args: &[&str]) -> (Envelope, String, i32) {
    let o = lescop(args);
    let text = stdout(&o);
    let env: Envelope = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    (env, text, o.status.code().unwrap())
}

fn error(args: &[&str]) -> (ErrorEnvelope, i32) {
    let o = lescop(args);
    let env: ErrorEnvelope = serde_json::from_str(&stdout(&o)).unwrap();
    (env, o.status.code().unwrap())
}

#[test]
fn borromean_surgery_is_one() {
    let (env, _, code) = envelope(&["lescop", "--input", "borromean0.json", "--json"]);
    assert_eq!(code, 0);
    let Output::Lescop(items) = env.output else { panic!() };
    assert_eq!(items[0].lambda.to_string(), "1");
    assert!(items[0].audit);
}

#[test]
fn emitted_json_round_trips() {
    let jobs: [&[&str]; 8] = [
        &["conway", "--input", "trefoil"],
        &["linkmat", "--input", "hopf+"],
        &["lescop", "--input", "t33_p3"],
        &["build-periodic", "--input", "trefoil_p3"],
        &["verify", "lemma51", "--input", "t33_p3"],
        &["verify", "thm1", "--input", "t55_p5"],
        &["report", "--input", "borromean0", "--modulus", "3,5"],
        &["calibrate"],
    ];
    for job in jobs {
        let mut args = job.to_vec();
        args.push("--json");
        let (env, text, _) = envelope(&args);
        assert_eq!(env.schema, "lescop-cli/1");
        let again = serde_json::to_string_pretty(&env).unwrap();
        assert_eq!(again.trim_end(), text.trim_end(), "{job:?}");
    }
}

#[test]
fn corpus_runs_are_deterministic() {
    let run = |seed: &str| stdout(&lescop(&["verify", "thm1", "--input", "hs_corpus_p3", "--seed", seed, "--json"]));
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
}

#[test]
fn exit_codes() {
    // a1 of the (3,3) torus link is 1, so the mod 3 statement fails
    let (env, _, code) = envelope(&["verify", "thm2", "--input", "t33_p3", "--json"]);
    assert_eq!(code, 1);
    let Output::Verify(v) = env.output else { panic!() };
    assert_eq!(v.verdicts[0].residue, vec![(0, 1)]);

    let (_, _, code) = envelope(&["verify", "thm2", "--input", "t55_p5", "--json"]);
    assert_eq!(code, 0);

    let (err, code) = error(&["verify", "thm2", "--input", "trefoil_p3.json", "--json"]);
    assert_eq!((err.error.kind.as_str(), code), ("hypothesis", 2));
    assert!(!err.error.witnesses.is_empty());

    let (err, code) = error(&["lescop", "--input", "nope", "--json"]);
    assert_eq!(code, 2);
    assert!(err.error.detail.contains("borromean0"));

    let (err, code) = error(&["verify", "thm2", "--input", "t33_p3", "--modulus", "9", "--json"]);
    assert_eq!((err.error.kind.as_str(), code), ("input", 2));

    let (err, code) = error(&["lescop", "--input", "borromean0", "--max-components", "2", "--json"]);
    assert_eq!((err.error.kind.as_str(), code), ("budget", 3));

    let (err, code) = error(&["verify", "cor1", "--input", "borromean0", "--json"]);
    assert_eq!((err.error.kind.as_str(), code), ("usage", 2));
}

#[test]
fn modulus_rebuilds_presentation() {
    let (env, _, code) = envelope(&["build-periodic", "--input", "t33_p3", "--modulus", "5", "--json"]);
    assert_eq!(code, 0);
    let Output::BuildPeriodic(items) = env.output else { panic!() };
    assert_eq!(items[0].p, 5);
    assert!(!items[0].strongly_periodic);
    assert!(items[0].characterizations_agree);
}

#[test]
fn saved_conventions_are_reusable() {
    let (_, text, _) = envelope(&["calibrate", "--json"]);
    let path = std::env::temp_dir().join(format!("lescop-conventions-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let with = envelope(&["lescop", "--input", "torus33", "--json", "--conventions", path.to_str().unwrap()]).1;
    let without = envelope(&["lescop", "--input", "torus33", "--json"]).1;
    std::fs::remove_file(&path).unwrap();
    assert_eq!(with, without);
}

#[test]
fn inline_inputs() {
    let (env, _, _) = envelope(&["conway", "--input", r#"{"kind":"link","braid":"2: 1 1 1 1"}"#, "--json"]);
    let Output::Conway(items) = env.output else { panic!() };
    assert_eq!(items[0].polynomial, "2z + z^3");

    let (env, _, code) = envelope(&[
        "verify",
        "cor1",
        "--input",
        r#"{"kind":"link","braid":"1:","framings":[0]}"#,
        "--modulus",
        "5",
        "--json",
    ]);
    assert_eq!(code, 1);
    let Output::Verify(v) = env.output else { panic!() };
    assert_eq!(v.statement, "cor1");
}

#[test]
fn fixture_listing() {
    let o = lescop(&["fixtures", "--json"]);
    let map: serde_json::Map<String, serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    for name in ["unknot+1", "unknot-1", "unknot0", "hopf+", "hopf-", "trefoil", "figure-eight", "borromean0", "t33_p3", "t55_p5", "hs_corpus_p3"] {
        assert!(map.contains_key(name), "{name}");
    }
}
