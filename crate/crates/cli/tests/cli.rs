use std::path::PathBuf;
use std::process::{Command, Output};

fn raag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("raag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn compare_verdicts() {
    let cases = [
        ("path:6", "dynkinD:6", ["equal", "equal", "DIFFERENT"]),
        ("cycle:6", "ycycle:6", ["equal", "DIFFERENT", "DIFFERENT"]),
        ("triforce6", "grid6", ["equal", "equal", "DIFFERENT"]),
        ("grid6", "grid6", ["equal", "equal", "equal"]),
    ];
    for (a, b, want) in cases {
        let o = raag(&["compare", a, b]);
        assert!(o.status.success());
        let words: Vec<String> = stdout(&o)
            .lines()
            .map(|l| l.rsplit(' ').next().unwrap().to_string())
            .collect();
        assert_eq!(words, want, "{a} vs {b}");
    }
}

#[test]
fn selftest_passes() {
    let o = raag(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn invariants_report_is_canonical_json() {
    let o = raag(&["invariants", "triforce6", "--kmax", "4", "--q", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let report = raag::io::InvariantReport::from_canonical_str(&text).unwrap();
    assert_eq!(report.to_canonical_string(), text);
    let s: Vec<String> = report
        .clique_polynomial
        .iter()
        .map(|x| x.to_string())
        .collect();
    assert_eq!(s, ["1", "6", "9", "4"]);
    assert_eq!(report.provenance.kmax, 4);
    assert_eq!(report.provenance.q, Some(1));

    // deterministic across runs
    let again = raag(&["invariants", "triforce6", "--kmax", "4", "--q", "1"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn file_inputs() {
    let edges = scratch("p3.txt", "# a path\na b c\na b\nb c\n");
    let json = scratch(
        "p3.json",
        r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#,
    );
    let o = raag(&["compare", edges.to_str().unwrap(), json.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("DIFFERENT"));
    let o = raag(&["--format", "dsl", "resonance", "path:3"]);
    assert!(stdout(&o).contains("{1 3}"));
}

#[test]
fn bns_output() {
    let o = raag(&["bns", "cycle:4", "--chi", "1=1,3=1"]);
    assert_eq!(
        stdout(&o),
        "in sigma1: false\nin R1: true\nkernel finitely generated: false\n"
    );
    let o = raag(&["bns", "path:3", "--chi", "1=1/2,2=1,3=1"]);
    assert_eq!(stdout(&o), "in sigma1: true\nin R1: false\n");
}

#[test]
fn rescale_output() {
    let o = raag(&[
        "rescale",
        "triforce6",
        "--q",
        "2",
        "--kmax",
        "2",
        "--dmax",
        "8",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("rank pi_4: 6\nrank pi_8: 6\n"));
    assert!(text.contains("loop space series: 1 0 0 0 6 0 0 0 27\n"));
    assert!(text.contains("formal and coformal: true\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(raag(&["invariants", "blob:3"]).status.code(), Some(1));
    assert_eq!(
        raag(&["bns", "path:3", "--chi", "1=0"]).status.code(),
        Some(1)
    );
    assert_eq!(raag(&["nonsense"]).status.code(), Some(1));
    let bad = scratch("loop.txt", "1 2\n1 1\n");
    assert_eq!(
        raag(&["resonance", bad.to_str().unwrap()]).status.code(),
        Some(1)
    );
    assert_eq!(raag(&["invariants", "path:30"]).status.code(), Some(2));
    assert_eq!(
        raag(&["--guard", "3", "compare", "path:4", "path:4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        raag(&["--guard", "4", "resonance", "path:4"]).status.code(),
        Some(0)
    );
}
