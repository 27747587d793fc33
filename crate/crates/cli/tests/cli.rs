//! End-to-end tests of the `homspace` binary: golden table output, exit
//! codes, and format round-trips.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homspace"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table3_golden() {
    let out = run(&["--format", "table", "table", "3"]);
    assert!(out.status.success());
    let expected = "\
algebra  dim   t=1  t=2  t=3  t=4  t=5  t=6  t=7  t=8
E6       78    22   24   54   60   70   72   -    -
E7       133   54   76   78   108  114  124  126  -
E8       248   114  168  190  192  222  228  238  240
F4       52    30   36   46   48   -    -    -    -
G2       14    10   12   -    -    -    -    -    -
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_output_is_byte_stable() {
    for args in [
        vec!["--format", "table", "table", "1", "--max-rank", "6"],
        vec!["--format", "table", "table", "2", "--max-rank", "8"],
        vec!["--format", "csv", "table", "3"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn table2_rank7_cell() {
    let out = run(&["--format", "table", "table", "2", "--max-rank", "7"]);
    assert!(stdout(&out).contains("7     133 / E7"));
}

#[test]
fn table1_a_row_at_rank_2() {
    let out = run(&["--format", "table", "table", "1", "--max-rank", "2"]);
    let a_row = stdout(&out)
        .lines()
        .find(|l| l.starts_with("A "))
        .unwrap()
        .to_string();
    assert!(a_row.ends_with("3 8"), "{a_row}");
}

#[test]
fn table_env_rank_cap() {
    let out = run_env(
        &["--format", "table", "table", "1"],
        "HOMSPACE_MAX_RANK",
        "2",
    );
    assert!(stdout(&out).contains("l=2"));
    assert!(!stdout(&out).contains("l=3"));
}

#[test]
fn unknown_table_is_usage_error() {
    let out = run(&["table", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flag_complete_flag_variety() {
    let out = run(&["--format", "json", "flag", "A3", "--parabolic", ""]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim_X"], 6);
    assert_eq!(v["picard_rank"], 3);
    assert_eq!(v["linear_bound_slack"], "0");
}

#[test]
fn flag_projective_line_and_point() {
    let out = run(&["--format", "json", "flag", "A1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["dim_X"].as_u64(), v["picard_rank"].as_u64()), (Some(1), Some(1)));

    let out = run(&["--format", "json", "flag", "E6", "--parabolic", "1,2,3,4,5,6"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["dim_X"].as_u64(), v["picard_rank"].as_u64()), (Some(0), Some(0)));
}

#[test]
fn flag_usage_errors_name_the_token() {
    let out = run(&["flag", "H4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("H4"));

    let out = run(&["flag", "A3", "--parabolic", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`x`"));

    let out = run(&["flag", "A3", "--parabolic", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_projective_a_sweep() {
    let out = run(&["--format", "json", "verify", "--projective", "--type", "A", "--max-rank", "8"]);
    assert!(out.status.success());
    // Σ_{l=1..8} (2^l − 1) = 502 instances, three rows each
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 502 * 3);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true);
    }
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("failed=0"), "{summary}");
    assert!(summary.contains("min_slack[thm_proj_linear]=0"), "{summary}");
}

#[test]
fn verify_affine_exceptional() {
    let out = run(&["--format", "csv", "verify", "--affine", "--exceptional"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "instance_id,dim_X,picard_bound,inequality,lhs,rhs,passed,slack"
    );
    // 27 floor cells, four inequality rows each
    assert_eq!(lines.count(), 27 * 4);
}

#[test]
fn verify_rank_cap_violation_is_usage_error() {
    let out = run(&["verify", "--projective", "--type", "D", "--max-rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank >= 3"));
}

#[test]
fn verify_product_sweeps() {
    let out = run(&["--format", "json", "verify", "--product", "A1,A1,A1"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["inequality"].as_str().map(|s| s.starts_with("cor")), Some(true));
    }
}

#[test]
fn verify_json_roundtrips_report_schema() {
    let out = run(&["--format", "json", "verify", "--affine", "--type", "G2"]);
    for line in stdout(&out).lines() {
        let report: homspace_core::report::VerificationReport =
            serde_json::from_str(line).unwrap();
        assert!(report.passed);
        assert_eq!(report.slack, report.rhs - report.lhs);
    }
}

#[test]
fn verdict_lines() {
    let out = run(&["--format", "table", "verdict", "--dim", "3", "--rho", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "excluded\n");

    let out = run(&["--format", "table", "verdict", "--dim", "5", "--rho", "5"]);
    assert_eq!(stdout(&out), "not-excluded\n");

    let out = run(&["--format", "table", "verdict", "--dim", "14", "--rho", "2"]);
    assert_eq!(stdout(&out), "not-excluded\n");

    let out = run(&["verdict", "--dim", "0", "--rho", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_subcommand_is_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}
