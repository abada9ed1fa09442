use std::process::{Command, Output};

use ccbch_cli::{run, GenpolyRecord};
use ccbch_core::table::{full_table, TableRow};
use ccbch_core::make_frame;

fn ccbch(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("ccbch").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ccbch"));
    cmd.args(args).env_remove("CCBCH_FIELD_CAP");
    if let Some(c) = cap {
        cmd.env("CCBCH_FIELD_CAP", c);
    }
    cmd.output().unwrap()
}

#[test]
fn params_rows() {
    let (code, out, _) = ccbch(&["params", "--q", "5", "--m", "2", "--delta", "19"]);
    assert_eq!(code, 0);
    let row: TableRow = serde_json::from_str(&out).unwrap();
    assert_eq!(row.quantum_label(), "[[104,40,≥19]]_5");

    let (code, out, _) = ccbch(&["params", "--q", "2", "--m", "4", "--delta", "7", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().contains(",85,53,7,"));

    let (_, out, _) = ccbch(&["params", "--q", "2", "--m", "4", "--delta", "7", "--format", "markdown"]);
    assert!(out.contains("[[85,53,≥7]]_2"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = ccbch(&["params", "--q", "2", "--m", "3", "--delta", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("m = 3 must be even"), "{err}");

    for args in [
        &["params", "--q", "6", "--m", "2", "--delta", "3"][..],
        &["params", "--q", "5", "--m", "2", "--delta", "20"],
        &["params", "--q", "5", "--m", "2", "--delta", "1"],
        &["params", "--q", "5", "--m", "2"],
        &["table", "--q", "5", "--m", "2", "--delta-min", "9", "--delta-max", "4"],
        &["table", "--q", "5", "--m", "2", "--format", "xml"],
        &["genpoly", "--q", "2", "--m", "2", "--delta", "3", "--format", "csv"],
        &["verify", "--q", "2", "--m", "2", "--format", "markdown"],
        &["verify", "--q", "2", "--m", "2", "--level", "exhaustive"],
        &["frobnicate"],
    ] {
        let (code, _, err) = ccbch(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn table_round_trips_and_is_deterministic() {
    let args = ["table", "--q", "9", "--m", "2"];
    let (code, first, _) = ccbch(&args);
    assert_eq!(code, 0);
    let (_, second, _) = ccbch(&args);
    assert_eq!(first, second);
    let rows: Vec<TableRow> = serde_json::from_str(&first).unwrap();
    assert_eq!(rows.len(), 66);
    assert_eq!(rows.last().unwrap().quantum_label(), "[[656,408,≥67]]_9");
    assert_eq!(rows, full_table(&make_frame(9, 2).unwrap()).unwrap());
}

#[test]
fn table_ranges_and_out_file() {
    let (_, out, _) = ccbch(&["table", "--q", "8", "--m", "2"]);
    let rows: Vec<TableRow> = serde_json::from_str(&out).unwrap();
    assert!(rows.iter().any(|r| r.quantum_label() == "[[455,265,≥52]]_8"));

    let (_, out, _) = ccbch(&["table", "--q", "7", "--m", "4", "--delta-min", "1503", "--delta-max", "1503"]);
    let rows: Vec<TableRow> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].quantum_label(), "[[720600,708840,≥1503]]_7");

    let path = std::env::temp_dir().join(format!("ccbch-table-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = ccbch(&["table", "--q", "3", "--m", "2", "--format", "csv", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 1 + 5);

    let (code, _, err) = ccbch(&["table", "--q", "3", "--m", "2", "--out", "/nonexistent-dir/t.json"]);
    assert_eq!(code, 1);
    assert!(err.contains("io error"));
}

#[test]
fn verify_levels() {
    let (code, out, _) = ccbch(&["verify", "--q", "5", "--m", "2", "--level", "formulas"]);
    assert_eq!(code, 0);
    assert!(out.contains("18 rows"));
    assert!(out.contains("boundary: delta=20 dual_containing=false"));
    assert!(out.ends_with("result: PASS\n"));

    let (code, out, _) = ccbch(&["verify", "--q", "2", "--m", "2", "--level", "mindist", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    let last = v["mindist"].as_array().unwrap().last().unwrap();
    assert_eq!(last["delta"], 3);
    assert_eq!(last["exhaustive"]["kind"], "exact");
    assert_eq!(last["exhaustive"]["value"], 3);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);

    let (code, _, _) = ccbch(&["verify", "--q", "2", "--m", "2", "--level", "mindist", "--budget", "10"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_reports_capacity_and_still_runs_formulas() {
    let (code, out, err) = ccbch(&["verify", "--q", "3", "--m", "4", "--level", "matrix"]);
    assert_eq!(code, 2);
    assert!(out.contains("formulas: 59 rows"));
    assert!(out.contains("result: PASS"));
    assert!(err.contains("capacity exceeded"));
}

#[test]
fn genpoly_records() {
    let (code, out, _) = ccbch(&["genpoly", "--q", "2", "--m", "2", "--delta", "3"]);
    assert_eq!(code, 0);
    let g: GenpolyRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(g.degree, 2);
    assert_eq!(g.coefficients.len(), 3);
    assert_eq!(g.coefficients[2].log, Some(0));
    assert_eq!(g.tower.order, 16);
    assert_eq!(g.subfield.order, 4);
    assert!(g.remainder_zero && g.dual_containing);

    let (_, out, _) = ccbch(&["genpoly", "--q", "3", "--m", "2", "--delta", "4"]);
    let g: GenpolyRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(g.degree, 4);
    assert_eq!(g.eta.log, Some(2));
}

#[test]
fn field_cap_env() {
    let args = ["genpoly", "--q", "7", "--m", "4", "--delta", "3"];
    let small = binary(&args, Some("1000000"));
    assert_eq!(small.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&small.stderr).contains("capacity exceeded"));

    let default = binary(&args, None);
    assert_eq!(default.status.code(), Some(0));
    let g: GenpolyRecord = serde_json::from_slice(&default.stdout).unwrap();
    assert_eq!(g.tower.order, 5_764_801);
    assert!(g.remainder_zero);

    let bad = binary(&args, Some("lots"));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn binary_exit_codes() {
    assert_eq!(binary(&["params", "--q", "5", "--m", "2", "--delta", "19"], None).status.code(), Some(0));
    assert_eq!(binary(&["params", "--q", "2", "--m", "3", "--delta", "5"], None).status.code(), Some(2));
    assert_eq!(binary(&[], None).status.code(), Some(2));
    assert_eq!(binary(&["--help"], None).status.code(), Some(0));
}
