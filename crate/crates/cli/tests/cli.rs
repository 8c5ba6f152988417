use std::process::{Command, Output};

fn pinc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinc"))
        .args(args)
        .env_remove("NO_COLOR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = pinc(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn decide_rp2_squared() {
    let v = json(&["decide", "RP(2)*RP(2)"]);
    assert_eq!(v["pin_c"], false);
    assert_eq!(v["orientable"], false);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["lipschitz"]["status"], "not_applicable");
}

#[test]
fn lipschitz_witness_without_pin_c() {
    let v = json(&["decide", "RP(2) * RP(2) * S(1)"]);
    assert_eq!(v["pin_c"], false);
    assert_eq!(v["lipschitz"]["status"], "yes");
    assert_eq!(v["lipschitz"]["witness"]["bundle"], "l(a1) ⊕ l(a2)");
}

#[test]
fn text_output_has_no_color_when_piped() {
    let out = pinc(&["decide", "S(3) * RP(3)"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\u{1b}'));
    assert!(text.contains("pin^c"));
}

#[test]
fn syntax_error_points_at_offset() {
    let out = pinc(&["decide", "RP(2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("offset 4"), "{err}");
    assert!(err.contains("  RP(2\n      ^"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(pinc(&["wu", "M(5)"]).status.code(), Some(2));
    assert_eq!(pinc(&["decide", "M(3)"]).status.code(), Some(1));
    assert_eq!(pinc(&["decide", "RP(2)*RP(2)*T(3)", "--max-pairs", "4"]).status.code(), Some(2));
    assert_eq!(pinc(&["nonsense"]).status.code(), Some(1));
    assert_eq!(pinc(&["--help"]).status.code(), Some(0));
    assert_eq!(pinc(&["catalog", "export", "S(1)*S(1)"]).status.code(), Some(1));
}

#[test]
fn classes_and_wu() {
    let v = json(&["classes", "RP(3)"]);
    assert!(v.is_object());
    let out = pinc(&["wu", "RP(4)"]);
    assert!(out.status.success());
    assert!(!out.stdout.is_empty());
}

#[test]
fn catalog_export_then_check() {
    let out = pinc(&["catalog", "export", "K"]);
    assert!(out.status.success());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.toml");
    std::fs::write(&path, &out.stdout).unwrap();
    let v = json(&["catalog", "check", path.to_str().unwrap()]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["dimension"], 2);

    std::fs::write(&path, "format_version = 1\nname = \"broken\"\n").unwrap();
    assert_eq!(pinc(&["catalog", "check", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_passes() {
    let out = pinc(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8(out.stdout).unwrap().contains("8 of 8 criteria passed"));
}
