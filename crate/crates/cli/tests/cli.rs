use std::process::{Command, Output};

fn slicebr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slicebr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ideal_dimensions() {
    let o = slicebr(&["ideal-dim", "heis:3", "--family", "J3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4");
    let o = slicebr(&["ideal-dim", "cyclic:1", "--family", "j1"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn bad_input_exits_with_2() {
    for args in [
        &["group", "bogus:1"][..],
        &["ideal-dim", "cyclic:2", "--family", "J9"],
        &["mul", "cyclic:4", "T=g2;S=g1", "T=g1;S=1"],
        &["minimal-groups", "--family", "J3", "--prime", "3", "--bound", "81"],
        &["closure", "--seed", "cyclic:6:[g1],[1]", "--prime", "3", "--bound", "27"],
    ] {
        let o = slicebr(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn multiplication_in_c2() {
    let o = slicebr(&["mul", "cyclic:2", "T=g1;S=1", "T=g1;S=1"]);
    assert_eq!(stdout(&o).trim(), "2/1*(T=g1|S=1)");
}

#[test]
fn marks_as_json() {
    let o = slicebr(&["--format", "json", "marks", "cyclic:2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["marks"], serde_json::json!([[2, 2, 1], [0, 2, 1], [0, 0, 1]]));
}

#[test]
fn deflation_constants_print_as_fractions() {
    let o = slicebr(&["mconst", "cyclic:3", "1", "g1"]);
    assert!(stdout(&o).contains("m = 0/1"), "{}", stdout(&o));
}

#[test]
fn minimal_groups_of_j3() {
    let o = slicebr(&["minimal-groups", "--family", "J3", "--prime", "3", "--bound", "27"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn broken_family_fails_check() {
    let o = slicebr(&["check-family", "--family", "SCyclic", "--prime", "2", "--bound", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = slicebr(&["check-family", "--family", "J3", "--prime", "2", "--bound", "8"]);
    assert!(o.status.success());
}

#[test]
fn closure_of_a_j3_generator_is_j3() {
    let o = slicebr(&["closure", "--seed", "elab:3^3:[g1,g2,g3],[g1,g2]", "--prime", "3", "--bound", "27"]);
    assert!(stdout(&o).contains("matches: J3"), "{}", stdout(&o));
}

#[test]
fn verify_single_criterion() {
    let o = slicebr(&["verify", "--only", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
}
