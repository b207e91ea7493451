use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const HURWITZ_N7: [&str; 16] = [
    "0000000", "0000001", "0000010", "0000011", "0000100", "0000101", "0000110", "0000111",
    "0001000", "0010000", "0100000", "0111000", "1000000", "1011000", "1101000", "1110000",
];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_set(dir: &Path, name: &str, n: u32, elements: &[&str]) -> String {
    let path = dir.join(name);
    let quoted: Vec<String> = elements.iter().map(|e| format!("\"{e}\"")).collect();
    fs::write(
        &path,
        format!("{{\"n\":{n},\"elements\":[{}]}}", quoted.join(",")),
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn hurwitz_set_verifies_in_every_mode() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_set(dir.path(), "h.json", 7, &HURWITZ_N7);
    let out = run(&[
        "verify",
        "--n",
        "7",
        "--algebra",
        "p:4",
        "--A",
        &a,
        "--mode",
        "all",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    for method in ["criterion", "criterion-alt", "symbolic", "numeric"] {
        let line = text
            .lines()
            .find(|l| l.split_whitespace().next() == Some(method))
            .unwrap();
        assert!(line.contains("holds"), "{line}");
    }
    assert!(text.contains("[16,128,128]"));
}

#[test]
fn corrupted_set_is_falsified_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut corrupted = HURWITZ_N7;
    corrupted[15] = "1111111";
    let a = write_set(dir.path(), "h.json", 7, &corrupted);
    for mode in ["criterion", "symbolic", "numeric", "all"] {
        let out = run(&["verify", "--n", "7", "--A", &a, "--mode", mode]);
        assert_eq!(code(&out), 1, "mode {mode}");
        assert!(
            stdout(&out).contains("fails"),
            "mode {mode}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.json");
    let out = run(&["verify", "--A", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let bad = write_set(dir.path(), "bad.json", 3, &["000", "01x"]);
    let out = run(&["verify", "--A", &bad]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("elements[1]") && err.contains("character 3"),
        "{err}"
    );

    let short = write_set(dir.path(), "short.json", 3, &["00"]);
    assert_eq!(code(&run(&["verify", "--A", &short])), 2);

    let a = write_set(dir.path(), "a.json", 3, &["000"]);
    assert_eq!(code(&run(&["verify", "--n", "4", "--A", &a])), 2);
    assert_eq!(code(&run(&["verify", "--A", &a, "--algebra", "q"])), 2);
    assert_eq!(code(&run(&["verify", "--A", &a, "--mode", "fast"])), 2);
    assert_eq!(
        code(&run(&[
            "identity", "--family", "lmgo", "--n", "5", "--l", "2"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "identity", "--family", "lmgo", "--n", "5", "--l", "4", "--k", "2"
        ])),
        2
    );
}

#[test]
fn perturbation_file_is_applied() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_set(dir.path(), "a.json", 2, &["00", "01"]);
    let b = write_set(dir.path(), "b.json", 2, &["00", "01"]);
    assert_eq!(
        code(&run(&["verify", "--algebra", "cl", "--A", &a, "--B", &b])),
        0
    );
    // flipping a single sign of the 2-square identity breaks it
    let p = dir.path().join("p.json");
    fs::write(&p, r#"[{"row":"01","delta":["01"]}]"#).unwrap();
    let out = run(&[
        "verify",
        "--algebra",
        "cl",
        "--A",
        &a,
        "--B",
        &b,
        "--perturb",
        p.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
}

#[test]
fn hurwitz_radon_latex_has_eight_lines_of_eight_terms() {
    let out = run(&[
        "identity",
        "--family",
        "hurwitz-radon",
        "--n",
        "3",
        "--format",
        "latex",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("c_")).collect();
    assert_eq!(lines.len(), 8);
    for line in lines {
        assert_eq!(line.matches("a_{").count(), 8, "{line}");
        assert_eq!(line.matches("b_{").count(), 8, "{line}");
    }
}

#[test]
fn yuzvinsky_json_carries_its_triple() {
    let out = run(&[
        "identity",
        "--family",
        "yuzvinsky",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["triple"], serde_json::json!([10, 10, 16]));
    assert_eq!(v["n"], 4);
}

#[test]
fn lmgo_identity_size() {
    let out = run(&[
        "identity", "--family", "lmgo", "--n", "5", "--l", "2", "--k", "4",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("[10,16,28]"), "{}", stdout(&out));
}

#[test]
fn emitted_identities_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["--family", "hurwitz-radon", "--n", "4"],
        &["--family", "yuzvinsky", "--n", "5"],
        &["--family", "lmgo-dual", "--n", "6", "--l", "1", "--k", "3"],
        &["--family", "addition", "--n", "8", "--k", "1"],
        &["--family", "special-n4", "--s", "5"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let path = dir.path().join(format!("id{i}.json"));
        let path = path.to_str().unwrap();
        let mut args = vec!["identity", "--format", "json", "--out", path];
        args.extend_from_slice(case);
        assert_eq!(code(&run(&args)), 0, "{case:?}");
        let out = run(&["verify", "--identity", path, "--mode", "all"]);
        assert_eq!(code(&out), 0, "{case:?}: {}", stdout(&out));
    }
}

#[test]
fn tampered_identity_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    let path = path.to_str().unwrap();
    assert_eq!(
        code(&run(&[
            "identity",
            "--family",
            "hurwitz-radon",
            "--n",
            "3",
            "--format",
            "json",
            "--out",
            path
        ])),
        0
    );
    let text = fs::read_to_string(path).unwrap();
    let tampered = text.replacen("\"sign\":-1", "\"sign\":1", 1);
    assert_ne!(tampered, text);
    fs::write(path, tampered).unwrap();
    let out = run(&["verify", "--identity", path, "--mode", "symbolic"]);
    assert_eq!(code(&out), 1, "{}", stdout(&out));
}

#[test]
fn json_emission_is_byte_stable() {
    let args = [
        "identity", "--family", "lmgo", "--n", "6", "--l", "4", "--k", "5", "--format", "json",
    ];
    let first = stdout(&run(&args));
    let mut threaded = vec!["--jobs", "3"];
    threaded.extend_from_slice(&args);
    assert_eq!(stdout(&run(&args)), first);
    assert_eq!(stdout(&run(&threaded)), first);
}

#[test]
fn triple_sweeps_match_closed_forms() {
    let out = run(&["triples", "--family", "yuzvinsky", "--n-range", "4..10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("6 rows, 0 failed"), "{text}");
    assert!(text.contains("[18,186,256]"));

    let out = run(&["triples", "--family", "addition", "--n-range", "8..8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("addition")).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[2].contains("[18,74,186]"));

    let out = run(&[
        "triples",
        "--family",
        "special-n7",
        "--n-range",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["label"] == "special-n7 l=2 k=6 subtraction")
        .unwrap();
    assert_eq!(row["realized"], serde_json::json!([16, 24, 98]));
    assert_eq!(row["closed_form"], serde_json::json!([16, 24, 98]));
}

#[test]
fn search_finds_pairs_and_reports_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let out = run(&[
        "search",
        "--n",
        "4",
        "--target",
        "9,7,15",
        "--out-A",
        a.to_str().unwrap(),
        "--out-B",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["triple"], serde_json::json!([9, 7, 15]));
    let verify = run(&[
        "verify",
        "--n",
        "4",
        "--A",
        a.to_str().unwrap(),
        "--B",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code(&verify), 0);

    assert_eq!(code(&run(&["search", "--n", "4", "--target", "9"])), 0);
    assert_eq!(
        code(&run(&[
            "search",
            "--n",
            "4",
            "--algebra",
            "o",
            "--target",
            "9"
        ])),
        1
    );
    assert_eq!(code(&run(&["search", "--n", "4", "--target", "9,9"])), 2);
    let shuffled = run(&[
        "search",
        "--n",
        "3",
        "--target",
        "4,3,7",
        "--shuffle",
        "--seed",
        "5",
    ]);
    assert_eq!(code(&shuffled), 0);
}
