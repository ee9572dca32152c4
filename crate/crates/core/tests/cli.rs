use std::io::Cursor;
use std::process::Command;

use avoiders::cli::{run, EXIT_CAP, EXIT_DOMAIN, EXIT_OK, EXIT_PARSE};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Outcome {
    cli_with_stdin(args, "")
}

fn cli_with_stdin(args: &[&str], input: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut stdin = Cursor::new(input.as_bytes().to_vec());
    let argv = std::iter::once("avoiders").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err, &mut stdin);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn map_examples() {
    let o = cli(&["map", "4 3 1 2 7 6 5 8 10 9"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "3/4/6/5 7/1 2 8 10/9 11\n");
    assert_eq!(cli(&["map", "1 2 3"]).stdout, "1 2 3 4\n");

    let o = cli(&["map", "3 2 4 1"]);
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stderr.contains("32-41 at positions (1, 2, 3, 4)"), "{}", o.stderr);
}

#[test]
fn map_show_steps() {
    let o = cli(&["map", "--show-steps", "4 3 1 2 7 6 5 8 10 9"]);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], "step1: [4][3][1 2 7][6][5 8 10][9 11]");
    assert_eq!(lines[1], "step2: [(4)][3][_1 _2 (7)][6][_5 _8 (10)][9 11]");
    assert_eq!(lines[2], "step3: [(4)][3][b1 b2 (7)][6][b5 r8 (10)][9 11]");
    assert_eq!(lines[3], "step4: [1 2 4][3][5 7][6][8 10][9 11]");
    assert_eq!(lines[4], "step5: 3/1 2 4/6/5 7/8 10/9 11");
    assert_eq!(lines[5], "tweak: 3/4/6/5 7/1 2 8 10/9 11");
    assert_eq!(lines[6], "3/4/6/5 7/1 2 8 10/9 11");

    let o = cli(&["--json", "map", "--show-steps", "2 1"]);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["output"], "2/1 3");
    assert_eq!(v["steps"]["step4"], "[2][1 3]");
    assert!(v["steps"].get("tweak").is_none());
}

#[test]
fn unmap_examples() {
    let o = cli(&["unmap", "5/7 8/1 4 9/3 6 12/13 14 16/2 10 15 17/11 18"]);
    assert_eq!(o.stdout, "2 9 5 1 4 10 12 7 8 3 6 15 17 13 14 16 11\n");
    assert_eq!(cli(&["unmap", "1 2 3 4"]).stdout, "1 2 3\n");
    let o = cli(&["unmap", "1/2"]);
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stderr.contains("decomposable (components: 1 | 2)"), "{}", o.stderr);
}

#[test]
fn parse_errors() {
    assert_eq!(cli(&["map", "1 1 2"]).code, EXIT_PARSE);
    assert_eq!(cli(&["unmap", "1 2/2"]).code, EXIT_PARSE);
    assert_eq!(cli(&["enumerate", "nonsense", "3"]).code, EXIT_PARSE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_PARSE);
}

#[test]
fn check_reports_all_methods() {
    let o = cli(&["check", "1 3 8 5 2 6 9 7 4"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("1 3 8 5 2 6 9 7 4: avoider: yes (all three methods)"), "{}", o.stdout);
    let o = cli(&["--json", "check", "3 2 4 1"]);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["avoider"], false);
    assert_eq!(v["methods"]["characterization"], false);
    assert_eq!(v["witnesses"][0]["pattern"], "32-41");
    assert_eq!(v["witnesses"][0]["positions"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn enumerate_counts_and_listing() {
    assert_eq!(cli(&["enumerate", "indecomposable", "5", "--count-only"]).stdout, "22\n");
    assert_eq!(cli(&["enumerate", "avoiders", "4", "--count-only"]).stdout, "22\n");
    assert_eq!(cli(&["enumerate", "avoiders-ending-1", "4", "--count-only"]).stdout, "5\n");
    assert_eq!(cli(&["enumerate", "partitions", "3"]).stdout, "1 2 3\n1 2/3\n2/1 3\n1/2 3\n1/2/3\n");
    assert_eq!(cli(&["enumerate", "avoiders", "11", "--count-only"]).code, EXIT_CAP);
    let o = cli(&["--json", "enumerate", "partitions", "5", "--count-only"]);
    assert_eq!(o.stdout.trim(), r#"{"class":"partitions","count":52,"n":5}"#);
}

#[test]
fn bell_commands() {
    assert_eq!(cli(&["bell", "to-partition", "2 7 3 9 5 6 8 4 1"]).stdout, "3/2 6/4 5 7/1 8\n");
    assert_eq!(cli(&["bell", "to-avoider", "3/2 6/4 5 7/1 8"]).stdout, "2 7 3 9 5 6 8 4 1\n");
    assert_eq!(cli(&["bell", "to-partition", "1 2"]).code, EXIT_DOMAIN);
}

#[test]
fn stats_table() {
    let o = cli(&["stats", "3"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.ends_with("off-diagonal: 0\n"), "{}", o.stdout);
    let o = cli(&["--json", "stats", "3"]);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["cells"], serde_json::json!([[1, 0, 0], [0, 4, 0], [0, 0, 1]]));
}

#[test]
fn verify_text_and_expected_file() {
    let o = cli(&["verify", "4"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(o.stdout.contains("all checks passed"));

    let dir = tempdir();
    let path = dir.join("expected.txt");
    std::fs::write(&path, "avoiders\n1\n2\n6\n23\n").unwrap();
    let o = cli(&["verify", "4", "--key-value", "--expected", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_DOMAIN);
    assert!(o.stdout.contains("check.expected_avoiders=fail"));
    assert!(o.stdout.contains("check.expected_avoiders.counterexample=size 4: expected 23, computed 22"));
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("avoiders-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn batch_mode_from_stdin() {
    let o = cli_with_stdin(&["map"], "1 2\n\n2 1\n3 2 4 1\n1 3 2\n");
    assert_eq!(o.stdout, "1 2 3\n2/1 3\n1 3/2 4\n");
    assert_eq!(o.code, EXIT_DOMAIN);
    let o = cli_with_stdin(&["unmap", "-"], "1 2 3\n2/1 3\n");
    assert_eq!(o.stdout, "1 2\n2 1\n");
}

#[test]
fn map_unmap_roundtrip() {
    for p in avoiders::enumeration::generate_permutations(5).filter(|p| p.is_avoider()) {
        let text = p.to_string();
        let mapped = cli(&["map", &text]).stdout;
        let back = cli(&["unmap", mapped.trim()]).stdout;
        assert_eq!(back.trim(), text);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_avoiders");
    let ok = Command::new(bin).args(["map", "2 1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "2/1 3\n");
    let bad = Command::new(bin).args(["map", "3 2 4 1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_DOMAIN));
    let capped = Command::new(bin)
        .args(["enumerate", "avoiders", "4", "--count-only"])
        .env("AVOIDERS_MAX_PERMUTATION_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_CAP));
}
