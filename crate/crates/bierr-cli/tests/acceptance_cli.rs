//! Command-line half of the decision-properties acceptance check: the
//! error bounds have no defaults, so omitting them is a usage error.

use std::process::Command;

#[test]
fn acceptance_8_cli_requires_explicit_bounds() {
    let missing_both = Command::new(env!("CARGO_BIN_EXE_bierr"))
        .args([
            "decide",
            "--null",
            "normal:mu=0,sigma=1",
            "--alt",
            "normal:mu=6,sigma=1",
            "--observed",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(missing_both.status.code(), Some(2), "usage error expected");

    let missing_beta = Command::new(env!("CARGO_BIN_EXE_bierr"))
        .args([
            "decide",
            "--null",
            "normal:mu=0,sigma=1",
            "--alt",
            "normal:mu=6,sigma=1",
            "--observed",
            "4",
            "--alpha-max",
            "0.05",
        ])
        .output()
        .unwrap();
    assert_eq!(missing_beta.status.code(), Some(2));
    let text = String::from_utf8_lossy(&missing_beta.stderr).into_owned();
    assert!(text.contains("--beta-max"), "{text}");

    println!("ACCEPTANCE 8 (CLI no-default bounds): PASS");
}
