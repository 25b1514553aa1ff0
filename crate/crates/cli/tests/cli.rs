use std::process::{Command, Output};

fn bipass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipass"))
        .args(args)
        .output()
        .expect("failed to run bipass")
}

fn stdout(args: &[&str]) -> String {
    let out = bipass(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn value_pretty_and_json() {
    assert_eq!(stdout(&["value", "bwww"]), "2.^*+*\n");
    assert_eq!(
        stdout(&["value", "bwww", "--json"]),
        "{\"value\":\"2.^*+*\",\"delta\":2,\"aw\":2,\"outcome\":\"L\"}\n"
    );
    assert_eq!(
        stdout(&["value", "bbww", "--pretty", "false"]),
        "{*,{0|*}|*,{*|0}}\n"
    );
    assert_eq!(stdout(&["value", "bw+bw"]), "0\n");
}

#[test]
fn compare_and_outcome() {
    assert_eq!(stdout(&["compare", "bww", "bbw"]), "Greater\n");
    assert_eq!(stdout(&["compare", "bbw", "bww"]), "Less\n");
    assert_eq!(stdout(&["compare", "bwbw", "bw"]), "Equivalent\n");
    assert_eq!(stdout(&["compare", "bbww", "0"]), "Fuzzy\n");
    assert_eq!(stdout(&["outcome", "bbww+bw"]), "N\n");
    assert_eq!(stdout(&["outcome", "bww+bww+bww+bbbbw"]), "P\n");
}

#[test]
fn atomic_weight() {
    assert_eq!(stdout(&["aw", "bbwww"]), "1\n");
    assert_eq!(stdout(&["aw", "bbbw+bww"]), "-1\n");
    assert_eq!(
        stdout(&["aw", "bwww", "--json"]),
        "{\"aw\":2,\"delta\":2}\n"
    );
}

#[test]
fn misere() {
    assert_eq!(stdout(&["misere", "bwww"]), "L\n");
    assert_eq!(stdout(&["misere", "bww"]), "N\n");
    assert_eq!(stdout(&["misere", "0"]), "N\n");
}

#[test]
fn ferrers_both_ways() {
    assert_eq!(stdout(&["ferrers", "bwwwbw"]), "4,1\n");
    assert_eq!(stdout(&["ferrers", "--from", "4,1"]), "bwwwbw\n");
    assert_eq!(bipass(&["ferrers"]).status.code(), Some(2));
    assert_eq!(bipass(&["ferrers", "--from", "1,2"]).status.code(), Some(2));
}

#[test]
fn verification_commands_pass() {
    for args in [
        &["table1"][..],
        &["family", "--max-len", "10", "--converse-len", "8"],
        &[
            "search-star2",
            "--max-stones",
            "7",
            "--max-len",
            "8",
            "--jobs",
            "2",
        ],
        &["misere-two-ahead", "--max-stones", "7"],
    ] {
        let out = bipass(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("PASS") && !text.contains("FAIL"), "{text}");
    }
}

#[test]
fn census_output() {
    let text = stdout(&["census", "--max-len", "7"]);
    assert_eq!(text.lines().count(), 63);
    assert_eq!(
        text.lines().next().unwrap(),
        r#"{"strip":"bw","length":2,"delta":0,"outcome":"N","value":"*","aw":0}"#
    );
    assert_eq!(stdout(&["census", "--max-len", "7", "--jobs", "3"]), text);

    let dir = std::env::temp_dir().join(format!("bipass-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.jsonl");
    stdout(&["census", "--max-len", "5", "--out", path.to_str().unwrap()]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 15);
    assert!(written
        .contains(r#"{"strip":"bwwbw","length":5,"delta":1,"outcome":"L","value":"^","aw":1}"#));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bipass(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bipass(&["value", "bxw"]).status.code(), Some(2));
    assert_eq!(bipass(&["value", "bw++bw"]).status.code(), Some(2));
    assert_eq!(
        bipass(&["census", "--max-len", "ten"]).status.code(),
        Some(2)
    );
    assert_eq!(bipass(&["compare", "bw"]).status.code(), Some(2));
    assert_eq!(
        bipass(&["value", "bw", "--jobs", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table1"][..],
        &["value", "bbwww+bwbw"],
        &["census", "--max-len", "6"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
