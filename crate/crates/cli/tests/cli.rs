use std::path::Path;
use std::process::{Command, Output};

fn hopfmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfmod"))
        .args(args)
        .env_remove("HOPFMOD_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn projective_regular_is_true() {
    let o = hopfmod(&["projective", "regular@kleinfour"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn complexity_of_trivial_klein_four() {
    let o = hopfmod(&["complexity", "k@kleinfour", "--steps", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 (exact, difference-table)\n");
}

#[test]
fn klein_four_scenario_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("klein-four.report.json");
    let o = hopfmod(&["scenario", "run", "klein-four", "--out", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("[pass] (c) N⊗M projective: expected false, computed false"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["id"], "klein-four");
}

#[test]
fn scenario_list_names_all_ids() {
    let o = hopfmod(&["scenario", "list"]);
    let out = stdout(&o);
    for id in ["klein-four", "tensor-power-3", "swap-quantum", "positive-cases"] {
        assert!(out.contains(id));
    }
    assert!(out.contains("counterexample -> klein-four"));
}

#[test]
fn input_errors_exit_two_without_backtrace() {
    let o = hopfmod(&["iso", "M", "X"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error: undefined reference \"X\"\n");

    let o = hopfmod(&["scenario", "run", "no-such"]);
    assert_eq!(o.status.code(), Some(2));

    let o = hopfmod(&["variety-report", "k@kleinfour"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!stderr(&o).contains("panicked"));

    let o = hopfmod(&["projective"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_workspace_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.workspace.json");
    std::fs::write(
        &path,
        "{\"version\":1,\n \"algebras\":{\"L\":{\"group\":[2],\"field\":{\"quaternion\":2}}}}",
    )
    .unwrap();
    let o = hopfmod(&["--workspace", path.to_str().unwrap(), "validate", "L"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("quaternion"), "{err}");
}

#[test]
fn non_module_action_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.workspace.json");
    // the same matrix has order 2, so it is a Z/2-module but not a Z/3-module
    std::fs::write(
        &path,
        r#"{"version":1,"modules":{"V":{"algebra":"z2","actions":{"g":[["1","1"],["0","1"]]}}}}"#,
    )
    .unwrap();
    let ok = hopfmod(&["--workspace", path.to_str().unwrap(), "module", "check", "V"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    std::fs::write(
        &path,
        r#"{"version":1,"modules":{"V":{"algebra":{"group":[3],"field":{"prime":2}},"actions":{"g":[["1","1"],["0","1"]]}}}}"#,
    )
    .unwrap();
    let bad = hopfmod(&["--workspace", path.to_str().unwrap(), "module", "check", "V"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(stderr(&bad), "error: not a module: product fails at (g, g^2)\n");
}

#[test]
fn tensor_out_extends_the_workspace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.workspace.json");
    let bundled = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../workspaces/klein-four.workspace.json");
    std::fs::copy(bundled, &path).unwrap();
    let ws = path.to_str().unwrap();
    let o = hopfmod(&["--workspace", ws, "tensor", "N", "M", "--out", "P"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = hopfmod(&["--workspace", ws, "projective", "P"]);
    assert_eq!(stdout(&o), "false\n");
    let o = hopfmod(&["--workspace", ws, "tensor", "N", "M", "--out", "P"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_modes_parse() {
    for args in [
        &["--json", "projective", "M"][..],
        &["--json", "complexity", "k@kleinfour"],
        &["--json", "resolve", "U", "--steps", "4"],
        &["--json", "rankvar", "U", "--ext", "2"],
        &["--json", "rankvar", "U", "--membership"],
        &["--json", "variety-report", "NM"],
        &["--json", "iso", "U", "U"],
        &["--json", "dual", "M"],
        &["--json", "validate", "quantum3"],
        &["--json", "module", "check", "MN"],
        &["--json", "scenario", "list"],
        &["--json", "tensor", "M", "N"],
    ] {
        let o = hopfmod(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let _: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn iso_json_carries_a_witness() {
    let o = hopfmod(&["--json", "iso", "U", "U"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "isomorphic");
    assert_eq!(v["witness"]["matrix"].as_array().unwrap().len(), 2);
}

#[test]
fn export_formats() {
    let o = hopfmod(&["export", "k@kleinfour", "--format", "csv", "--steps", "3"]);
    assert_eq!(
        stdout(&o),
        "j,dim_P,dim_Omega,mult_chi0_0\n0,4,1,1\n1,8,3,2\n2,12,5,3\n"
    );
    let o = hopfmod(&["export", "U", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["actions"]["g1"], serde_json::json!([["0", "1"], ["1", "0"]]));
}

#[test]
fn seed_sources_and_determinism() {
    let a = hopfmod(&["--json", "scenario", "run", "tensor-power-2"]);
    let b = hopfmod(&["--json", "scenario", "run", "tensor-power-2"]);
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_hopfmod"))
        .args(["iso", "U", "U"])
        .env("HOPFMOD_SEED", "abc")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let o = hopfmod(&["--seed", "7", "iso", "U", "hU"]);
    assert_eq!(o.status.code(), Some(0));
}
