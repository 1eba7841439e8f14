//! End-to-end checks of the command surface and exit codes:
//! 0 = success / physical verdict, 1 = violation found, 2 = input error.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(label: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(format!("{label}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_obsalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn pipeline_exit_codes() {
    let pauli = corpus("pauli");
    let out = run(&["pipeline", pauli.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("QM-like"));

    for label in [
        "poisson3",
        "v2",
        "m2c-indefinite",
        "m2r-jordan",
        "bad-poisson",
    ] {
        let out = run(&["pipeline", corpus(label).to_str().unwrap()]);
        assert_eq!(code(&out), 1, "{label}");
    }

    let out = run(&["pipeline", "no-such-file.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn pipeline_json_is_schema_versioned_and_seed_stable() {
    let pauli = corpus("pauli");
    let a = run(&["pipeline", pauli.to_str().unwrap(), "--json", "--seed", "3"]);
    let b = run(&["pipeline", pauli.to_str().unwrap(), "--json", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout, "same seed, same bytes");
    let value: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["seed"], 3);
}

#[test]
fn classify_exit_codes() {
    assert_eq!(
        code(&run(&["classify", corpus("pauli").to_str().unwrap()])),
        0
    );
    assert_eq!(
        code(&run(&["classify", corpus("poisson3").to_str().unwrap()])),
        0
    );
    // abelian-tagged documents are not classified into a case
    assert_eq!(
        code(&run(&["classify", corpus("bad-poisson").to_str().unwrap()])),
        1
    );
    // associative documents are an input error here
    assert_eq!(code(&run(&["classify", corpus("v2").to_str().unwrap()])), 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        code(&run(&["verify", corpus("pauli").to_str().unwrap()])),
        0
    );
    assert_eq!(
        code(&run(&["verify", corpus("bad-poisson").to_str().unwrap()])),
        1
    );
    assert_eq!(code(&run(&["verify", corpus("v2").to_str().unwrap()])), 0);
}

#[test]
fn compose_and_report_flow() {
    let dir = std::env::temp_dir().join("obsalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("pp.json");
    let out = run(&[
        "compose",
        corpus("pauli").to_str().unwrap(),
        corpus("pauli").to_str().unwrap(),
        "--mu",
        "1/4",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["classify", out_path.to_str().unwrap()])), 0);

    // mismatched invariants are a physics violation, not an input error
    let out = run(&[
        "compose",
        corpus("pauli").to_str().unwrap(),
        corpus("m2r-jordan").to_str().unwrap(),
        "--mu",
        "1/4",
    ]);
    assert_eq!(code(&out), 1);

    // report merges pipeline outputs
    let r1 = dir.join("pauli-report.json");
    let out = run(&["pipeline", corpus("pauli").to_str().unwrap(), "--json"]);
    std::fs::write(&r1, &out.stdout).unwrap();
    let merged = run(&["report", r1.to_str().unwrap()]);
    assert_eq!(code(&merged), 0);
    assert!(String::from_utf8_lossy(&merged.stdout).contains("pauli | qm-like"));
}

#[test]
fn decompose_and_spectrum_and_rigidity() {
    assert_eq!(
        code(&run(&[
            "decompose",
            corpus("c-plus-m2").to_str().unwrap(),
            "--star"
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "decompose",
            corpus("dual-numbers").to_str().unwrap()
        ])),
        1
    );

    let out = run(&[
        "spectrum",
        corpus("pauli").to_str().unwrap(),
        "--element",
        "0,0,0,1",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("x^2 - 1"));
    let out = run(&[
        "spectrum",
        corpus("poisson3").to_str().unwrap(),
        "--element",
        "0,1,0",
    ]);
    assert_eq!(code(&out), 1);
    let out = run(&[
        "spectrum",
        corpus("pauli").to_str().unwrap(),
        "--element",
        "1,2",
    ]);
    assert_eq!(code(&out), 2);

    assert_eq!(
        code(&run(&["rigidity", corpus("c-plus-m2").to_str().unwrap()])),
        0
    );
    assert_eq!(
        code(&run(&[
            "rigidity",
            corpus("dual-numbers").to_str().unwrap()
        ])),
        1
    );
}
