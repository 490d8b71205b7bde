//! Structured reports compared against stored golden files. Set
//! `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pronormal"))
        .args(args)
        .args(["--format", "structured"])
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn check(name: &str, args: &[&str]) {
    let (stdout, code) = run(args);
    assert_eq!(code, 0, "{name} exited with {code}");
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(stdout, expected, "{name} differs from its golden file");
}

#[test]
fn verify_table1() {
    check("verify-table1", &["verify", "table1"]);
}

#[test]
fn verify_table2_m11() {
    check("verify-table2-m11", &["verify", "table2-m11"]);
}

#[test]
fn verify_table3() {
    check("verify-table3", &["verify", "table3"]);
}

#[test]
fn verify_sylow_normalizers() {
    check("verify-lemma12", &["verify", "lemma12"]);
}

#[test]
fn verify_reduction_lemmas() {
    check("verify-lemmas", &["verify", "lemmas"]);
}

#[test]
fn verify_theorem() {
    check("verify-theorem", &["verify", "theorem"]);
}

#[test]
fn hall_sym7() {
    check("hall-sym7", &["hall", "sym:7", "--pi", "2,3"]);
}

#[test]
fn hall_psl2_11_exhaustive() {
    check(
        "hall-psl2-11",
        &["hall", "psl2:11", "--pi", "2,3", "--mode", "exhaustive"],
    );
}

#[test]
fn hall_dih12() {
    check("hall-dih12", &["hall", "dih:12", "--pi", "2"]);
}

#[test]
fn pronormal_alt4_involution() {
    check(
        "pronormal-alt4",
        &[
            "pronormal",
            "alt:4",
            "--subgroup",
            "gens:(0 1)(2 3)",
            "--method",
            "definition",
        ],
    );
}

#[test]
fn pronormal_m11_hall() {
    check(
        "pronormal-m11",
        &["pronormal", "m11", "--subgroup", "hall:2,3", "--method", "reduced"],
    );
}

#[test]
fn pronormal_sym5_sylow() {
    check("pronormal-sym5", &["pronormal", "sym:5", "--subgroup", "sylow:2"]);
}
