use std::process::{Command, Output};

use serde_json::Value;

fn wprm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wprm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &[
            "table",
            "--q",
            "4",
            "--weights",
            "3,4,5",
            "--dmax",
            "30",
            "--format",
            "json",
        ][..],
        &["genmat", "--q", "5", "--weights", "2,3", "--d", "12"][..],
        &[
            "check",
            "--budget",
            "3",
            "--fields",
            "3,4",
            "--samples",
            "200",
            "--format",
            "json",
        ][..],
    ] {
        let first = wprm(args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, wprm(args).stdout, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let base = ["table", "--q", "4", "--weights", "3,4,5", "--dmax", "30"];
    let one = wprm(&[&base[..], &["--threads", "1"]].concat());
    let four = wprm(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn csv_and_json_tables_agree() {
    let args = ["table", "--q", "5", "--weights", "1,2,3", "--dmax", "8"];
    let csv_out = wprm(&[&args[..], &["--format", "csv"]].concat());
    let json_out = wprm(&[&args[..], &["--format", "json"]].concat());
    let mut reader = csv::Reader::from_reader(csv_out.stdout.as_slice());
    let from_csv: Vec<(u64, u64, Option<u64>)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (
                r[0].parse().unwrap(),
                r[1].parse().unwrap(),
                r[2].parse().ok(),
            )
        })
        .collect();
    let json: Value = serde_json::from_slice(&json_out.stdout).unwrap();
    let from_json: Vec<(u64, u64, Option<u64>)> = json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["d"].as_u64().unwrap(),
                r["dimension"].as_u64().unwrap(),
                r["min_distance"].as_u64(),
            )
        })
        .collect();
    assert_eq!(from_csv.len(), 9);
    assert_eq!(from_csv, from_json);
    assert_eq!(json["length"], 16);
}

#[test]
fn binary_field_table() {
    let out = wprm(&[
        "table",
        "--q",
        "2",
        "--weights",
        "2,3",
        "--dmax",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "d,dim,delta\n0,1,1\n1,0,-\n2,1,1\n3,1,1\n4,1,1\n5,1,1\n"
    );
}

#[test]
fn zero_codes_have_null_distance_in_json() {
    let out = wprm(&[
        "table",
        "--q",
        "4",
        "--weights",
        "3,4,5",
        "--dmax",
        "2",
        "--format",
        "json",
    ]);
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["rows"][1]["min_distance"], Value::Null);
    assert_eq!(json["rows"][0]["min_distance"], 9);
}

#[test]
fn hilbert_report() {
    let out = wprm(&[
        "hilbert",
        "--q",
        "4",
        "--weights",
        "3,4,5",
        "--expand",
        "31",
        "--format",
        "json",
    ]);
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["regularity"], 31);
    assert_eq!(json["regularity_closed_form"], 31);
    assert_eq!(json["a_invariant"], 30);
    assert_eq!(json["denominator"], serde_json::json!([3, 4, 5]));
    assert_eq!(json["numerator"][5], serde_json::json!([42, 1]));
    assert_eq!(json["expansion"][27], 7);
    assert_eq!(json["expansion"][31], 9);
    let pretty = stdout(&wprm(&["hilbert", "--q", "4", "--weights", "3,4,5"]));
    assert!(pretty.contains("1 - t^24 - t^27 - t^30 + t^39 + t^42"));
}

#[test]
fn semigroup_report() {
    let out = wprm(&["semigroup", "--weights", "3,4,5", "--format", "json"]);
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["gaps"], serde_json::json!([1, 2]));
    assert_eq!(json["frobenius"], 2);
    let orderings = json["orderings"].as_array().unwrap();
    assert_eq!(orderings.len(), 6);
    assert!(orderings.iter().all(|o| o["satisfied"] == false));
    assert_eq!(json["generators"], Value::Null);

    let pretty = stdout(&wprm(&["semigroup", "--weights", "2,3"]));
    assert!(pretty.contains("generator:  t2^2 - t1^3"), "{pretty}");
}

#[test]
fn genmat_has_identity_block() {
    let out = wprm(&[
        "genmat",
        "--q",
        "4",
        "--weights",
        "3,4,5",
        "--d",
        "15",
        "--format",
        "json",
    ]);
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["dimension"], 4);
    let matrix = json["matrix"].as_array().unwrap();
    for (i, row) in matrix.iter().enumerate() {
        for j in 0..4 {
            let expected = if i == j { "a^0" } else { "0" };
            assert_eq!(row[j], expected);
        }
    }
    let mut perm: Vec<u64> = json["permutation"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    perm.sort();
    assert_eq!(perm, (0..9).collect::<Vec<_>>());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| wprm(args).status.code();
    assert_eq!(
        code(&["table", "--q", "6", "--weights", "2,3", "--dmax", "3"]),
        Some(1)
    );
    assert_eq!(
        code(&["table", "--q", "4", "--weights", "2,4", "--dmax", "3"]),
        Some(1)
    );
    assert_eq!(
        code(&["table", "--q", "4", "--weights", "0,1", "--dmax", "3"]),
        Some(1)
    );
    assert_eq!(
        code(&["table", "--q", "4", "--weights", "3,4,5", "--dmax", "-1"]),
        Some(1)
    );
    assert_eq!(
        code(&["genmat", "--q", "4", "--weights", "3,4,5", "--d", "1"]),
        Some(1)
    );
    assert_eq!(code(&["bogus"]), Some(1));
    assert_eq!(
        code(&["table", "--q", "65536", "--weights", "1,1,1", "--dmax", "1"]),
        Some(2)
    );
    assert_eq!(
        code(&["check", "--budget", "2", "--fields", "3", "--samples", "50"]),
        Some(0)
    );
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn guard_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wprm"))
        .args(["table", "--q", "4", "--weights", "3,4,5", "--dmax", "30"])
        .env("WPRM_GUARD_LIMIT", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard limit 1000"));
}
