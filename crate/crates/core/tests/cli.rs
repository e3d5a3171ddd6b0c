use std::process::{Command, Output};

fn flagvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagvar"))
        .args(args)
        .env_remove("FLAGVAR_GUARD")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn describe_g2() {
    let o = flagvar(&["describe", "--type", "G", "--rank", "2", "--crossed", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dim 5"), "{text}");
    assert!(text.contains("omega 10,5"), "{text}");
}

#[test]
fn describe_json_is_parseable() {
    let o = flagvar(&[
        "describe",
        "--type",
        "B",
        "--rank",
        "3",
        "--crossed",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["omega"], serde_json::json!([3, 6, 9]));
    assert_eq!(v["flag"]["crossed"], serde_json::json!([[3]]));
}

#[test]
fn submodules_a1() {
    let o = flagvar(&[
        "submodules",
        "--type",
        "A",
        "--rank",
        "1",
        "--crossed",
        "1",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["submodule_count"], 2);
    let text = stdout(&flagvar(&[
        "submodules",
        "--type",
        "A",
        "--rank",
        "1",
        "--crossed",
        "1",
    ]));
    assert!(text.contains("2 submodules"), "{text}");
}

#[test]
fn submodules_csv_rows() {
    let o = flagvar(&[
        "submodules",
        "--type",
        "G",
        "--rank",
        "2",
        "--crossed",
        "1",
        "--format",
        "csv",
    ]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().any(|r| &r[3] == "4/5" && &r[2] == "8,4"));
}

#[test]
fn crossed_all_is_borel() {
    let o = flagvar(&[
        "submodules",
        "--type",
        "A",
        "--rank",
        "2",
        "--crossed",
        "all",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["submodule_count"], 5);
}

#[test]
fn product_factors() {
    let o = flagvar(&[
        "submodules",
        "--factor",
        "G:2:1",
        "--factor",
        "C:3:2",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["label"], "G2{1}xC3{2}");
    assert_eq!(v["submodule_count"], 12);
}

#[test]
fn descriptor_option() {
    let o = flagvar(&[
        "describe",
        "--descriptor",
        r#"{"factors":[{"series":"B","rank":3}],"crossed":[[3]]}"#,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("dim 6"));
}

#[test]
fn verify_passes() {
    let o = flagvar(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.starts_with("all ") && text.trim_end().ends_with("expectations passed"),
        "{text}"
    );
}

#[test]
fn growth_default_and_explicit() {
    let o = flagvar(&["growth", "--type", "G", "--rank", "2", "--crossed", "1"]);
    assert!(stdout(&o).contains("growth (2,3,5)"));
    let o = flagvar(&[
        "growth",
        "--type",
        "G",
        "--rank",
        "2",
        "--crossed",
        "1",
        "--root",
        "1,0",
        "--root",
        "1,1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["growth"], serde_json::json!([2, 3, 5]));
    let o = flagvar(&[
        "growth",
        "--type",
        "G",
        "--rank",
        "2",
        "--crossed",
        "1",
        "--root",
        "0,1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--root"));
}

#[test]
fn drops_with_rational_circles() {
    let o = flagvar(&[
        "drops",
        "--type",
        "G",
        "--rank",
        "2",
        "--crossed",
        "all",
        "--rational",
        "1",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lattice"]["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["circle_drop"]["label"], "G2{2}");
    let text = stdout(&flagvar(&[
        "drops",
        "--type",
        "B",
        "--rank",
        "3",
        "--crossed",
        "3",
    ]));
    assert!(text.contains("rigid: yes"), "{text}");
}

#[test]
fn classify_formats() {
    let o = flagvar(&[
        "classify",
        "--max-rank",
        "2",
        "--crossing",
        "borel",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = o
        .stdout
        .split(|&c| c == b'\n')
        .filter(|l| !l.is_empty())
        .map(|l| serde_json::from_slice(l).unwrap())
        .collect();
    let labels: Vec<&str> = lines.iter().map(|v| v["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["A1{1}", "A2{1,2}", "B2{1,2}", "G2{1,2}"]);
    assert!(lines.iter().all(|v| v["schema_version"] == 1));
    let o = flagvar(&[
        "classify",
        "--max-rank",
        "2",
        "--crossing",
        "maximal",
        "--series",
        "G",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3, "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for (args, needle) in [
        (
            vec!["describe", "--type", "Q", "--rank", "2", "--crossed", "1"],
            "--type",
        ),
        (
            vec!["describe", "--type", "E", "--rank", "5", "--crossed", "1"],
            "--rank",
        ),
        (
            vec!["describe", "--type", "A", "--rank", "3", "--crossed", "4"],
            "--crossed",
        ),
        (vec!["describe", "--type", "A", "--rank", "3"], "--crossed"),
        (vec!["describe", "--factor", "A:x:1"], "--factor"),
        (vec!["frobnicate"], "frobnicate"),
    ] {
        let o = flagvar(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn guard_overflow_exit_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_flagvar"))
        .args([
            "submodules",
            "--type",
            "A",
            "--rank",
            "3",
            "--crossed",
            "all",
        ])
        .env("FLAGVAR_GUARD", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("guard"));
    let o = Command::new(env!("CARGO_BIN_EXE_flagvar"))
        .args(["verify"])
        .env("FLAGVAR_GUARD", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
