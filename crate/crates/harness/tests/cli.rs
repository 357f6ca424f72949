use std::path::PathBuf;
use std::process::{Command, Output};

use grpd_harness::workspace::Workspace;
use serde_json::Value;

fn grpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn fixture_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("grpd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json_of(path: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn snail_of_the_doubling_fixture() {
    let out = scratch("snail.json");
    let o = grpd(&["snail", "z2_to_z4", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1,2,4,2,1,1"), "{text}");
    assert!(text.contains("exact at 4/4 nodes"), "{text}");
    let summary = json_of(&out);
    assert_eq!(summary["terms"], serde_json::json!([1, 2, 4, 2, 1, 1]));
    assert_eq!(summary["exact_nodes"], 4);
}

#[test]
fn classify_the_reduction_fixture() {
    let o = grpd(&["classify", "z4_mod2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let flag = |name: &str| {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .and_then(|l| l.split_whitespace().nth(1))
            .unwrap_or_else(|| panic!("{name} missing from {text}"))
            .to_string()
    };
    assert_eq!(flag("fibration"), "✓");
    assert_eq!(flag("split-epi"), "✓");
    assert_eq!(flag("discrete"), "✗");
}

#[test]
fn workspace_file_and_fixture_name_agree() {
    let by_name = grpd(&["hkernel", "z2_to_z4"]);
    let by_file = grpd(&["--workspace", &fixture_path("z2_to_z4.json"), "hkernel", "F"]);
    assert_eq!(stdout(&by_name), stdout(&by_file));
    assert!(stdout(&by_name).contains("(4, 8)"));
}

#[test]
fn snake_needs_a_fibration() {
    let o = grpd(&["snake", "z2_to_z4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = grpd(&["snake", "z4_mod2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2,4,2,1,1,1"));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(grpd(&["snail", "missing"]).status.code(), Some(2));
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{ \"category\": ").unwrap();
    let o = grpd(&["--workspace", bad.to_str().unwrap(), "validate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    let o = grpd(&["--workspace", &fixture_path("z4_mod2.json"), "--category", "fpvect", "validate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn broken_associativity_is_reported() {
    let text = std::fs::read_to_string(fixture_path("z2_to_z4.json")).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    // Z/4 with 1·1 = 3 instead of 2
    doc["groupoids"]["F.dst"]["m"][5] = 3.into();
    let path = scratch("assoc.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = grpd(&["--workspace", path.to_str().unwrap(), "validate"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("F.dst"), "{err}");
}

#[test]
fn ladders_of_replacement_squares() {
    for name in ["z2_to_z4", "z4_mod2"] {
        let o = grpd(&["ladder", name]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("J·L isomorphism ✓"));
    }
}

#[test]
fn ladder_from_five_named_entities() {
    // the identity square on the doubling functor, with the identity 2-cell
    let Workspace::PtSets(mut e) = Workspace::load(fixture_path("z2_to_z4.json")).unwrap() else {
        panic!("pointed sets")
    };
    let f = e.functor("F").unwrap().clone();
    let id_a = grpd_core::InternalFunctor::identity(&f.src);
    let id_b = grpd_core::InternalFunctor::identity(&f.dst);
    e.add_functor("IdA", &id_a);
    e.add_functor("IdB", &id_b);
    e.add_transformation("phi", &grpd_core::NatTransformation::identity(&f));
    let path = scratch("square.json");
    Workspace::from(e).save(&path).unwrap();
    let o = grpd(&["--workspace", path.to_str().unwrap(), "ladder", "F", "F", "IdA", "IdB", "phi"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verticals isomorphisms ✓"));
}

#[test]
fn theorem_suite_is_deterministic() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    let args = |out: &PathBuf| {
        vec![
            "check-theorems".to_string(),
            "--trials".into(),
            "12".into(),
            "--seed".into(),
            "7".into(),
            "--max-objects".into(),
            "4".into(),
            "--json".into(),
            out.display().to_string(),
        ]
    };
    for out in [&a, &b] {
        let args = args(out);
        let o = grpd(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(json_of(&a)["passed"], true);
}

#[test]
fn linear_theorem_suite() {
    let o = grpd(&["check-theorems", "--category", "fpvect", "--modulus", "3", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("snail-exact"));
}
