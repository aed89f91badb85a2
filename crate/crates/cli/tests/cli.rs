use std::process::Command;

fn tn2(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tn2"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn bracket_examples() {
    for (x, y, want) in [
        ("L[2]", "L[-2]", "4*L[0] + 1/2*C"),
        ("G[0]", "G[0]", "2*L[0] - 1/12*C"),
        ("G[1]", "G[-1/2]", "-3/2*T[1/2]"),
        ("G+[1/2]", "G-[-1/2]", "2*Lu[0] + J[0]"),
    ] {
        let (out, _, code) = tn2(&["bracket", x, y]);
        assert_eq!((out.trim(), code), (want, 0), "[{x},{y}]");
    }
}

#[test]
fn mixed_bases_are_rejected() {
    let (_, err, code) = tn2(&["bracket", "L[1]", "Lu[1]"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(tn2(&["bracket", "L[1", "L[2]"]).2, 2);
    assert_eq!(tn2(&["reduce", "{0:1}"]).2, 2);
    assert_eq!(tn2(&["verify", "no-such-suite"]).2, 2);
    assert_eq!(tn2(&["act", "L[1]", "--spec", "does/not/exist.cfg"]).2, 2);
}

#[test]
fn annihilator_exit_codes_track_conclusiveness() {
    let (out, _, code) = tn2(&["annihilator", "--max-weight", "1", "--max-length", "2"]);
    assert_eq!(code, 3, "{out}");
    let (out, _, code) = tn2(&["annihilator", "--max-weight", "2", "--max-length", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("dimension\t2"), "{out}");
}

#[test]
fn reduce_prints_a_trace_ending_in_m() {
    let (out, _, code) = tn2(&["reduce", "{1:1}"]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("terminal\t") && last.contains("w{}⊗v0"), "{out}");
}

#[test]
fn failing_suite_exits_1() {
    let (out, _, code) = tn2(&["verify", "deg-lemma", "--max-weight", "2", "--max-length", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("fail="), "{out}");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("enum.tsv");
    let (out, _, code) = tn2(&["enumerate", "--max-weight", "1", "--output", path.to_str().unwrap()]);
    assert_eq!((out.as_str(), code), ("", 0));
    let text = std::fs::read_to_string(path).unwrap();
    let (direct, _, _) = tn2(&["enumerate", "--max-weight", "1"]);
    assert_eq!(text, direct);
    assert!(text.starts_with("index\tweight\tlength\n") && text.lines().count() > 2, "{text}");
}

#[test]
fn every_demo_runs() {
    for name in ["whittaker", "generalized", "highorder", "b-t0"] {
        let (out, err, code) = tn2(&["demo", name]);
        assert_eq!(code, 0, "{name}: {err}");
        assert!(out.starts_with("config\n"));
    }
    assert_eq!(tn2(&["demo", "nope"]).2, 2);
}
