//! End-to-end checks of the binary: output determinism, JSON round trips,
//! and the documented exit codes.

use std::process::Command;

fn ratsign(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ratsign"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn alternations_csv_ends_with_the_table() {
    let out = ratsign(&["alternations", "--max", "12", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    assert_eq!(last, "12,2702765,9600567");
}

#[test]
fn bwgraphs_reports_the_worked_example() {
    let out = ratsign(&[
        "bwgraphs", "--white", "3,2,1,1", "--black", "3,2,2", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["s_white"], 2);
    assert_eq!(doc["s_black"], 2);
    assert_eq!(doc["count"], 8);
}

#[test]
fn json_outputs_round_trip_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["alternations", "--max", "8", "--format", "json"],
        &["series", "--which", "u", "--order", "9", "--format", "json"],
        &[
            "bwgraphs", "--white", "3,2,1,1", "--black", "3,2,2", "--list", "--format", "json",
        ],
        &[
            "profiles",
            "--lambda",
            "3,2,1,1;3,2,2",
            "--parity",
            "even",
            "--format",
            "json",
        ],
    ];
    for args in cases {
        let out = ratsign(args);
        assert!(out.status.success(), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let line = text.trim_end();
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(
            serde_json::to_string(&value).unwrap(),
            line,
            "round trip changed bytes for {args:?}"
        );
    }
}

#[test]
fn deterministic_output() {
    let args = [
        "snumbers", "--empty", "--parity", "odd", "--max-m", "25", "--json",
    ];
    let a = ratsign(&args);
    let b = ratsign(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn snumbers_small_values() {
    let out = ratsign(&[
        "snumbers", "--empty", "--parity", "odd", "--max-m", "5", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows, vec!["m,S", "1,0", "3,-2", "5,26"]);
}

#[test]
fn fb_descriptor_file() {
    let dir = std::env::temp_dir().join("ratsign-fb-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("descriptor.json");
    std::fs::write(
        &path,
        r#"{"type":"C","parity":"odd","sp":1,"upper_counts":[0],"labels":[]}"#,
    )
    .unwrap();
    let out = ratsign(&["fb", "--descriptor", path.to_str().unwrap(), "--max-m", "5"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["epsilon"], 1);
    // The empty-profile odd descriptor assembles to u: S(5) = 26.
    assert_eq!(doc["values"][5][1], "26");
}

#[test]
fn usage_errors_exit_2() {
    let cases: [&[&str]; 4] = [
        &["bwgraphs", "--white", "1,2", "--black", "3"],
        &["bwgraphs", "--white", "3", "--black", "2"],
        &["snumbers", "--parity", "odd"],
        &[
            "profiles", "--lambda", "2,1", "--parity", "odd", "--report", "nonsense",
        ],
    ];
    for args in cases {
        let out = ratsign(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    // Unknown flags are clap usage errors, also exit 2.
    let out = ratsign(&["alternations", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariance_subcommand_passes_small_degree() {
    let out = ratsign(&["bwgraphs", "--verify-invariance", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.ends_with("ok")));
}
