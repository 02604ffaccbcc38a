use std::fs;
use std::process::{Command, Output};

fn cliffcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_on_clifford_and_reports_brandt() {
    let out = cliffcone(&["verify", "--fixture", "cl5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().all(|l| !l.contains(" FAIL ")), "{text}");
    assert!(text.contains("theorem6"));

    let out = cliffcone(&["verify", "--fixture", "b2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = |name: &str| {
        text.lines()
            .find(|l| l.starts_with(name))
            .unwrap()
            .to_owned()
    };
    assert!(row("theorem6").contains("N-A") && row("theorem6").contains("surj=false"));
    assert!(row("prop4").contains("|TL| = 7"));
    assert!(row("homomorphism").contains("PASS"));
}

#[test]
fn cones_lists_principal_cones() {
    let out = cliffcone(&["cones", "--fixture", "c2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("2 cones\n"), "{text}");
    assert_eq!(text.matches("principal rho^").count(), 2);
}

#[test]
fn bad_structure_map_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // Z2 -> Z3 sending the generator to 1 is not a homomorphism
    fs::write(
        &path,
        r#"{"semilattice": [[0,1],[1,1]], "groups": [[[0,1],[1,0]], [[0,1,2],[1,2,0],[2,0,1]]],
           "homs": [{"from": 0, "to": 1, "map": [0, 1]}]}"#,
    )
    .unwrap();
    let out = cliffcone(&["build", "--slg", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("BadHom at $.homs[0]"), "{err}");
}

#[test]
fn malformed_table_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.table");
    fs::write(&path, "2\n0 1\n1 2\n").unwrap();
    let out = cliffcone(&["build", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(cliffcone(&["build", "--fixture", "nope"]).status.code() == Some(2));
    assert!(cliffcone(&["build"]).status.code() == Some(2));
}

#[test]
fn tiny_budget_exits_with_budget_code() {
    let out = cliffcone(&["cones", "--fixture", "s3", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("Budget"));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        let out = cliffcone(&[
            "verify",
            "--fixture",
            "slg-s3-z2",
            "--format",
            "json,text",
            "--out",
            d.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    for f in ["report.txt", "report.json"] {
        assert_eq!(
            fs::read(a.join(f)).unwrap(),
            fs::read(b.join(f)).unwrap(),
            "{f}"
        );
    }
}

#[test]
fn built_table_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("built");
    let out = cliffcone(&[
        "build",
        "--fixture",
        "diamond",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let table = out_dir.join("semigroup.table");
    let original = fs::read_to_string(out_dir.join("summary.txt")).unwrap();
    let again = cliffcone(&["build", "--table", table.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert!(stdout(&again).ends_with(&original));
}

#[test]
fn category_exports_dot() {
    let out = cliffcone(&[
        "category",
        "--fixture",
        "c2",
        "--side",
        "left",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"), "{text}");
    assert!(text.contains("style=dashed"));
}
