//! Byte-for-byte comparison against tests/golden. Set UPDATE_GOLDEN=1 to rewrite.

mod common;

use std::path::PathBuf;

use common::{code, run, run_stdin};

const CASES: &[(&str, &[&str])] = &[
    ("construct_s_ab_6_4", &["construct", "s-ab", "--a", "6", "--b", "4"]),
    ("orbit_ring_7", &["orbit-ring", "--n", "7", "--generators", "2"]),
    ("orbit_ring_13_table", &["orbit-ring", "--n", "13", "--generators", "3", "--format", "table"]),
    ("categorify_r_m_4_q", &["categorify", "r-m", "--m", "4", "--field", "Q"]),
    ("categorify_r_pr_3_3_q", &["categorify", "r-pr", "--p", "3", "--r", "3", "--field", "Q"]),
    ("categorify_s_k_5", &["categorify", "s-k", "--k", "5"]),
    ("categorify_s_ab_6_4", &["categorify", "s-ab", "--a", "6", "--b", "4"]),
    ("min_field_7", &["min-field", "--n", "7"]),
    ("min_field_7_table", &["min-field", "--n", "7", "--format", "table"]),
    ("real_form_5", &["real-form", "--p", "5"]),
    ("forms_real_nontrivial", &["forms", "--field", "real", "--omega", "nontrivial"]),
    ("cohomology_z2z2_deg3", &["cohomology", "--group", "2,2", "--module", "2", "--degree", "3"]),
    ("cocycle_class_5_1_2", &["cocycle-class", "--n", "5", "--a", "1", "--s", "2"]),
    ("hilbert_real", &["hilbert", "--a", "-1", "--b", "-1", "--place", "real"]),
    ("ramified_m1_m1", &["ramified", "--a", "-1", "--b", "-1"]),
    ("br_n_q_2", &["br-n", "--field", "Q", "--n", "2"]),
];

const BATCH_INPUT: &str = r#"["categorify","s-k","--k","5"]
{"argv":["hilbert","--a","-1","--b","-1","--place","real"]}
["min-field","--n","0"]
["cohomology","--group","40","--module","40","--degree","3"]
["categorify","t-k","--k","2"]
"#;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn compare(name: &str, actual: &[u8]) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(
        expected == actual,
        "{name} differs from golden file\n--- expected\n{}\n--- actual\n{}",
        String::from_utf8_lossy(&expected),
        String::from_utf8_lossy(actual)
    );
}

#[test]
fn single_commands() {
    for (name, args) in CASES {
        let out = run(args);
        assert_eq!(code(&out), 0, "{name}");
        let ext = if args.contains(&"table") { "txt" } else { "json" };
        compare(&format!("{name}.{ext}"), &out.stdout);
    }
}

#[test]
fn batch() {
    let out = run_stdin(&["batch"], BATCH_INPUT);
    assert_eq!(code(&out), 0);
    compare("batch.jsonl", &out.stdout);
}

#[test]
fn repeated_runs_identical() {
    for (_, args) in CASES {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
