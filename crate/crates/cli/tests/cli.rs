use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn core_file(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core").join(rel)
}

fn fjl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fjl")).args(args).env_remove("FJL_SEED").output().expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fjl-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn eval_prints_the_justified_value() {
    let model = core_file("models/justified-box.json");
    let o = fjl(&["eval", "--model", model.to_str().unwrap(), "--world", "w0", "--formula", "t:p"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3/5");
}

#[test]
fn eval_reports_unknown_worlds_as_usage_errors() {
    let model = core_file("models/justified-box.json");
    let o = fjl(&["eval", "--model", model.to_str().unwrap(), "--world", "w9", "--formula", "p"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_proof_accepts_a_shipped_proof() {
    let proof = core_file("golden/rplj-06-lower-one-iff-exact-one.proof");
    let o = fjl(&["check-proof", "--logic", "RPLJ", "--cs", "total", proof.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("accepted"));
}

#[test]
fn check_proof_rejects_a_tampered_proof() {
    let text = std::fs::read_to_string(core_file("golden/bl-06-exchange.proof")).unwrap();
    let tampered = text.replacen("AX BL1", "AX BL2", 1);
    let path = scratch("tampered").join("exchange.proof");
    std::fs::write(&path, tampered).unwrap();
    let o = fjl(&["check-proof", "--logic", "BL", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("rejected: step"), "{}", stdout(&o));
}

#[test]
fn gj_soundness_suite_passes() {
    let o = fjl(&["suite", "soundness", "--logic", "GJ", "--seeds", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("pass soundness: 100 cases, 0 failures"));
}

#[test]
fn suite_reports_are_json_and_seeded_by_the_environment() {
    let run = |seed: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_fjl"))
            .args(["--json", "suite", "milnikel", "--seeds", "5"])
            .env("FJL_SEED", seed)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        (v[0]["suite"].clone(), v[0]["cases"].clone(), v[0]["failures"].clone())
    };
    assert_eq!(run("9"), run("9"));
    assert_eq!(run("9").1, serde_json::json!(5));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(fjl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fjl(&["suite", "nope"]).status.code(), Some(2));
    assert_eq!(fjl(&["parse", "p", "--logic", "XJ"]).status.code(), Some(2));
    assert_eq!(fjl(&["check-proof", "/nonexistent/proof.txt"]).status.code(), Some(2));
}

#[test]
fn parse_failures_are_check_failures() {
    let o = fjl(&["parse", "p ->"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fjl(&["parse", "--logic", "LJ", "#1/2 -> p"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fjl(&["--json", "parse", "~p"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["expanded"], "p -> #0");
}

#[test]
fn validate_model_flags_inadmissible_evidence() {
    let model = core_file("models/reflexive-pair.json");
    let m = model.to_str().unwrap();
    let ok = fjl(&["validate-model", "--model", m, "--logic", "GJ", "--formula", "s:(p -> q) -> (t:p -> s.t:q)"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let wrong_tnorm = fjl(&["validate-model", "--model", m, "--logic", "LJ"]);
    assert_eq!(wrong_tnorm.status.code(), Some(1));
}

#[test]
fn check_cs_reports_closure_violations() {
    let dir = scratch("cs");
    let good = dir.join("good.cs");
    std::fs::write(&good, "c1:((p & q) -> p)\nc2:c1:((p & q) -> p)\n").unwrap();
    let bad = dir.join("bad.cs");
    std::fs::write(&bad, "c2:c1:((p & q) -> p)\n").unwrap();
    assert_eq!(fjl(&["check-cs", "--logic", "LJ", good.to_str().unwrap()]).status.code(), Some(0));
    let o = fjl(&["check-cs", "--logic", "LJ", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("closure"));
}

#[test]
fn internalize_output_rechecks() {
    let proof = core_file("golden/bl-02-weakening.proof");
    let out = scratch("lift").join("lifted.proof");
    let o = fjl(&["internalize", "--logic", "LJ", proof.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let check = fjl(&["check-proof", "--logic", "LJ", out.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
    assert!(stdout(&check).contains("p -> q -> p"));
    let finite = fjl(&["internalize", "--logic", "LJ", "--cs", "empty", proof.to_str().unwrap()]);
    assert_eq!(finite.status.code(), Some(1));
}

#[test]
fn degree_writes_witnesses() {
    let dir = scratch("degree");
    let o =
        fjl(&["--json", "degree", "--theory", "#1/2 -> p", "--formula", "p", "--witness-dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["lower"].as_str(), v["upper"].as_str()), (Some("1/2"), Some("1/2")));
    let proof = v["lower_witness_file"].as_str().unwrap();
    let check = fjl(&["check-proof", proof]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
    let model = v["upper_witness_file"].as_str().unwrap();
    let e = fjl(&["eval", "--model", model, "--formula", "#1/2 -> p"]);
    assert!(stdout(&e).lines().all(|l| l.ends_with(": 1")), "{}", stdout(&e));
}

#[test]
fn countermodel_for_factivity_without_reflexivity() {
    let out = scratch("cm").join("cm.json");
    let o = fjl(&["countermodel", "--logic", "LJ", "--formula", "t:p -> p", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let e = fjl(&["eval", "--model", out.to_str().unwrap(), "--formula", "t:p -> p"]);
    assert!(stdout(&e).lines().any(|l| !l.ends_with(": 1")), "{}", stdout(&e));
    let none = fjl(&["countermodel", "--logic", "LJ+jT", "--formula", "t:p -> p", "--trials", "200"]);
    assert_eq!(none.status.code(), Some(1));
}

#[test]
fn golden_check_matches_the_shipped_files() {
    let dir = core_file("golden");
    let o = fjl(&["golden", "--check", "--dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
