use std::process::{Command, Output};

use statespace::{format_real, ScenarioKind};

fn statespace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_statespace"))
        .args(args)
        .output()
        .expect("spawn statespace")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn writes_csv_to_stdout_by_default() {
    let out = statespace(&["--scenario", "group-demo", "--n", "64"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# scenario: group-demo"));
    let meta: Vec<_> = text.lines().filter(|l| l.starts_with('#')).collect();
    assert_eq!(meta.len(), 13);
    assert!(meta.contains(&"# n: 64"));
    assert!(meta.contains(&"# nx: 64"));
    assert!(
        meta.contains(&format!("# step: {}", format_real(std::f64::consts::PI / 32.0)).as_str())
    );
    let body: Vec<_> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "M1,M2,M_group,product_error");
    assert_eq!(body.len(), 10);
    for row in &body[1..] {
        let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 4);
        assert!(fields[3] <= 1e-12 * fields[0] * fields[1]);
    }
}

#[test]
fn writes_to_file_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");
    for path in [&first, &second] {
        let out = statespace(&[
            "--scenario",
            "interference",
            "--n",
            "128",
            "--d",
            "3",
            "--b",
            "0.25",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let a = std::fs::read(&first).unwrap();
    assert_eq!(a, std::fs::read(&second).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("# d: 3\n"));
    assert!(text.contains("# b: 0.25\n"));
    assert!(!text.contains('\r'));
}

#[test]
fn every_scenario_runs() {
    for kind in ScenarioKind::ALL {
        let out = statespace(&["--scenario", kind.name(), "--n", "64", "--np", "32"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{kind}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(stdout(&out).starts_with(&format!("# scenario: {kind}\n")));
    }
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["--scenario", "bogus"][..],
        &[][..],
        &["--scenario", "uncertainty", "--nope"][..],
        &["--scenario", "uncertainty", "--sigma", "abc"][..],
        &["--scenario", "uncertainty", "--sigma", "-1"][..],
        &["--scenario", "interference", "--nx", "100"][..],
    ] {
        let out = statespace(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_output_exits_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = statespace(&[
        "--scenario",
        "uncertainty",
        "--n",
        "64",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn help_exits_cleanly() {
    let out = statespace(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("--scenario"));
}
