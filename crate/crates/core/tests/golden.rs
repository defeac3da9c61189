use std::path::{Path, PathBuf};

use hopfmod::scenarios::{run_scenario, SCENARIO_IDS};
use hopfmod::workspace::{load_workspace, Workspace, WorkspaceFile};

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// Compares against the stored file, rewriting it when `HOPFMOD_BLESS` is set.
fn check_golden(path: &Path, actual: &str) {
    if std::env::var_os("HOPFMOD_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(
        expected == actual,
        "{} differs from the computed output",
        path.display()
    );
}

#[test]
fn bundled_workspace_round_trips() {
    let path = repo_root().join("workspaces/klein-four.workspace.json");
    let w = WorkspaceFile::klein_four();
    check_golden(&path, &w.to_json());
    let loaded = load_workspace(&path).unwrap();
    assert_eq!(loaded, w);
    let ws = Workspace::new(loaded);
    assert_eq!(ws.module("NM").unwrap().dim(), 4);
}

#[test]
fn scenario_reports_match_goldens() {
    let dir = repo_root().join("crates/core/tests/golden");
    for id in SCENARIO_IDS {
        let r = run_scenario(id).unwrap();
        assert!(r.passed, "{}", r.render_text());
        check_golden(&dir.join(format!("{id}.report.json")), &(r.to_json() + "\n"));
    }
}
