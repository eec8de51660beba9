use std::process::{Command, Output};

fn necklaces(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_necklaces"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn count_binary_text() {
    let out = necklaces(&["count", "-n", "6", "-d", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("N        4\n"), "{text}");
    assert!(
        text.contains("rhs      4 = L(5,3) + L(5,2) = 2 + 2\n"),
        "{text}"
    );
    assert!(text.contains("gap      0\n"), "{text}");
}

#[test]
fn count_jsonl_is_one_record() {
    let out = necklaces(&["count", "--content", "2,1,1", "--format", "jsonl"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let record: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(record["necklaces"], "3");
    assert_eq!(record["lyndon"], "3");
    assert_eq!(record["rhs"], "4");
    assert_eq!(record["gap"], "1");
}

#[test]
fn count_with_missing_symbol_has_no_bound() {
    let out = necklaces(&["count", "--content", "2,2,0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("undefined"));
}

#[test]
fn count_large_values_are_exact() {
    let out = necklaces(&["count", "-n", "200", "-d", "100", "--format", "jsonl"]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let n: String = record["necklaces"].as_str().unwrap().to_owned();
    assert!(n.len() > 50, "{n}");
}

#[test]
fn enumerate_marks_stability() {
    let out = necklaces(&["enumerate", "-n", "6", "-d", "3", "--format", "jsonl"]);
    assert!(out.status.success());
    let records: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let summary: Vec<(String, bool)> = records
        .iter()
        .map(|r| {
            (
                r["word"].as_str().unwrap().to_owned(),
                r["stable"].as_bool().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        summary,
        [
            ("000111".to_owned(), true),
            ("001011".to_owned(), true),
            ("001101".to_owned(), false),
            ("010101".to_owned(), false),
        ]
    );
}

#[test]
fn enumerate_kinds() {
    let lyndon = necklaces(&["enumerate", "--content", "2,3", "--kind", "lyndon"]);
    assert_eq!(stdout(&lyndon), "00111\n01011\n");
    let pre = necklaces(&["enumerate", "-n", "4", "-d", "2", "--kind", "prenecklace"]);
    assert_eq!(stdout(&pre), "0011\n0101\n0110\n");
}

#[test]
fn enumerate_respects_length_cap() {
    let out = necklaces(&["enumerate", "-n", "30", "-d", "15", "--max-len", "20"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--max-len"));
}

#[test]
fn map_reports_decomposition_and_image() {
    let out = necklaces(&["map", "01120112"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "p       4",
        "j       1",
        "i       3",
        "z       1",
        "x       2",
        "branch  z<i",
        "image   0112211",
    ] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }
    let json = necklaces(&["map", "001001", "--format", "jsonl"]);
    let record: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(record["image"], "00101");
    assert_eq!(record["branch"], "z=i");
}

#[test]
fn map_rejects_stable_and_non_necklace_input() {
    let stable = necklaces(&["map", "0011"]);
    assert_eq!(stable.status.code(), Some(2));
    assert!(stderr(&stable).contains("stable"), "{}", stderr(&stable));
    let rotated = necklaces(&["map", "1010"]);
    assert_eq!(rotated.status.code(), Some(2));
    assert!(
        stderr(&rotated).contains("necklace"),
        "{}",
        stderr(&rotated)
    );
    let bad = necklaces(&["map", "01x"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        ["verify", "bound", "--max-n", "30"],
        ["verify", "injectivity", "--max-n", "10"],
        ["verify", "equality", "--max-n", "20"],
        ["verify", "witnesses", "--max-n", "12"],
        ["verify", "oracle", "--max-n", "10"],
    ] {
        let out = necklaces(&args);
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).contains(": pass ("), "{}", stdout(&out));
    }
}

#[test]
fn verify_jsonl_report() {
    let out = necklaces(&[
        "verify",
        "injectivity",
        "--k",
        "3",
        "--max-n",
        "8",
        "--format",
        "jsonl",
    ]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["failures"], serde_json::json!([]));
    assert!(record["instances"].as_u64().unwrap() > 0);
}

#[test]
fn verify_enforces_oracle_cap() {
    let out = necklaces(&["verify", "oracle", "--max-n", "9", "--oracle-cap", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn table_tsv() {
    let out = necklaces(&["table", "--max-n", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n\td\tN\tL(n-1,d)\tL(n-1,d-1)\tgap\tequality")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), (2..=9).map(|n| n - 1).sum::<usize>());
    let row = |n: &str, d: &str| {
        rows.iter()
            .find(|r| r[0] == n && r[1] == d)
            .unwrap()
            .clone()
    };
    assert_eq!(row("2", "1"), ["2", "1", "1", "1", "1", "1", "false"]);
    assert_eq!(row("6", "3"), ["6", "3", "4", "2", "2", "0", "true"]);
    assert_eq!(row("8", "3")[6], "false");
    for r in &rows {
        assert_eq!(r[5] == "0", r[6] == "true", "{r:?}");
    }
}

#[test]
fn table_jsonl() {
    let out = necklaces(&["table", "--max-n", "4", "--format", "jsonl"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 6);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(necklaces(&["count"]).status.code(), Some(2));
    assert_eq!(necklaces(&["count", "-n", "5"]).status.code(), Some(2));
    assert_eq!(
        necklaces(&["count", "-n", "5", "-d", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        necklaces(&["count", "--content", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(necklaces(&["verify", "nonsense"]).status.code(), Some(2));
}
