//! Subprocess integration tests for the sl2q binary: exit codes, output
//! formats, environment fallbacks, and byte stability of emitted documents.

use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sl2q"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("failed to run sl2q");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).to_string(),
        String::from_utf8_lossy(&output.stderr).to_string(),
    )
}

#[test]
fn help_and_version() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["info", "enumerate", "distinguish", "classify-dim", "reproduce-paper"] {
        assert!(stdout.contains(sub), "help must list {sub}");
    }
}

#[test]
fn info_markdown_matches_reference_row() {
    let (code, stdout, _) = run(&["info", "B6", "[5,2^4]"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("(2,1,0,0,0,1)"), "{stdout}");
    assert!(stdout.contains("Dynkin index: 12"), "{stdout}");
    assert!(stdout.contains("quite even: no"), "{stdout}");
    assert!(stdout.contains("p=3: ((x-2)^3)"), "{stdout}");
}

#[test]
fn info_json_has_the_three_sections_and_round_trips() {
    let (code, stdout, _) = run(&["--format", "json", "info", "E6", "A2"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(value.get("space").is_some());
    assert!(value.get("homotopy").is_some());
    assert!(value.get("ktheory").is_some());
    assert_eq!(value["homotopy"]["quite_even"], serde_json::json!(true));
    // round trip: reparse and reserialise identically
    let again = serde_json::to_string_pretty(&value).unwrap();
    let twice: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(value, twice);
}

#[test]
fn trivial_class_report() {
    let (code, stdout, _) = run(&["info", "B6", "[1^13]"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Dynkin index: 0"), "{stdout}");
    assert!(stdout.contains("pi3: Z"), "{stdout}");
}

#[test]
fn usage_and_data_errors_exit_2() {
    let (code, _, stderr) = run(&["info", "Q9", "[2]"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"), "{stderr}");
    let (code, _, _) = run(&["info", "B6", "[5,2^3]"]); // wrong size
    assert_eq!(code, 2);
    let (code, _, _) = run(&["info", "E6", "Z9"]); // unknown label
    assert_eq!(code, 2);
    let (code, _, _) = run(&["classify-dim", "1"]); // no group of dimension 4
    assert_eq!(code, 2);
    let (code, _, _) = run(&["--prime-bound", "1", "info", "B6", "[3,1^10]"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["--format", "yaml", "enumerate", "G2"]);
    assert_eq!(code, 2);
}

#[test]
fn undetermined_verdicts_exit_0() {
    let (code, stdout, _) = run(&[
        "distinguish",
        "B6",
        "[5,2^2,1^4]",
        "B6",
        "[4^2,2^2,1]",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("undetermined"), "{stdout}");
}

#[test]
fn classify_dim_75_with_small_prime_bound() {
    let (code, stdout, _) = run(&["--prime-bound", "5", "classify-dim", "75"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("spaces: 93"), "{stdout}");
    assert!(stdout.contains("undetermined pairs (3)"), "{stdout}");
}

#[test]
fn enumerate_counts_by_group() {
    let (code, stdout, _) = run(&["--format", "csv", "enumerate", "C6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 40); // header + 39
    let (_, with_trivial, _) = run(&["--format", "csv", "enumerate", "C6", "--include-trivial"]);
    assert_eq!(with_trivial.lines().count(), 41);
}

#[test]
fn data_dir_and_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{"group":"G2","classes":[{"label":"A1","diagram":[0,1],"index":1}]}"#;
    std::fs::write(dir.path().join("g2.json"), doc).unwrap();
    let dir_str = dir.path().to_str().unwrap();

    let (code, stdout, _) = run(&["--format", "csv", "--data-dir", dir_str, "enumerate", "G2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2, "{stdout}"); // header + the single class

    let (code, stdout, _) =
        run_with_env(&["--format", "csv", "enumerate", "G2"], &[("ORBIT_DATA_DIR", dir_str)]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2, "{stdout}");

    // a directory without the requested table is a data error
    let (code, _, _) = run(&["--data-dir", dir_str, "enumerate", "F4"]);
    assert_eq!(code, 2);

    // the bundled tables remain the default
    let (_, stdout, _) = run(&["--format", "csv", "enumerate", "G2"]);
    assert_eq!(stdout.lines().count(), 5);
}

#[test]
fn reproduce_paper_documents_are_byte_stable() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let (code, _, stderr) = run(&[
            "reproduce-paper",
            "--out-dir",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{stderr}");
    }
    let names = ["b6_orbits.md", "c6_orbits.md", "iu_mod_p.md", "d4.md"];
    for name in names {
        let a = std::fs::read(dir_a.path().join(name)).unwrap();
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "{name} must be byte-identical across runs");
    }
    let rows = |p: &Path| -> usize {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| l.starts_with("| ") && !l.starts_with("| partition"))
            .count()
    };
    assert_eq!(rows(&dir_a.path().join("b6_orbits.md")), 15);
    assert_eq!(rows(&dir_a.path().join("c6_orbits.md")), 4);
    assert_eq!(rows(&dir_a.path().join("iu_mod_p.md")), 10);
    assert_eq!(rows(&dir_a.path().join("d4.md")), 6);
    let iu = std::fs::read_to_string(dir_a.path().join("iu_mod_p.md")).unwrap();
    assert!(iu.contains("no suitable p found"), "{iu}");
    assert!(iu.contains("((x-2)^3)"), "{iu}");
}

#[test]
fn very_even_suffix_parsing() {
    let (code, _, _) = run(&["info", "D4", "[4^2]"]);
    assert_eq!(code, 2); // ambiguous without a suffix
    let (code, stdout, _) = run(&["info", "D4", "[4^2] I"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[4^2] I"), "{stdout}");
    let (code, _, _) = run(&["distinguish", "D4", "[4^2] I", "D4", "[4^2] II"]);
    assert_eq!(code, 0);
}
